#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden_xi.hpp"
#include "tazrp/zrp.hpp"

namespace tazrp_test {

struct GoldenSector {
  std::vector<int> m;
  int L = 0;
  std::vector<tazrp::Int> weights;  // full steady state, by sector rank
};

// Expand each xi block of the table into the full steady state
// P = sum_j C^j xi over the canonical sector enumeration.
inline std::vector<GoldenSector> golden_steady_states() {
  using namespace tazrp;
  std::vector<GoldenSector> out;
  std::istringstream in(kGoldenXiTable);
  std::string line;
  std::vector<Rat> acc;
  GoldenSector cur;
  int n = 0;
  auto flush = [&]() {
    if (cur.L == 0) return;
    cur.weights.clear();
    for (const Rat& w : acc) {
      if (denominator(w) != 1)
        throw std::runtime_error("golden table: non-integer steady weight");
      cur.weights.push_back(numerator(w));
    }
    out.push_back(cur);
    cur = {};
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("xi ", 0) == 0) {
      flush();
      std::string mpart, lpart;
      std::istringstream h(line.substr(3));
      h >> mpart >> lpart;
      cur.m.clear();
      for (size_t p = 2; p < mpart.size(); ++p)
        if (mpart[p] != ',') cur.m.push_back(mpart[p] - '0');
      cur.L = std::stoi(lpart.substr(2));
      n = static_cast<int>(cur.m.size());
      acc.assign(static_cast<size_t>(
                     sector_size(MultiplicityArray(cur.m), cur.L)),
                 Rat(0));
      continue;
    }
    std::istringstream e(line);
    std::string coeff_text, config_text;
    e >> coeff_text >> config_text;
    Rat coeff;
    if (auto slash = coeff_text.find('/'); slash != std::string::npos)
      coeff = Rat(Int(coeff_text.substr(0, slash)),
                  Int(coeff_text.substr(slash + 1)));
    else
      coeff = Rat(Int(coeff_text));
    Configuration c = parse_configuration(config_text, n);
    for (int j = 0; j < cur.L; ++j) {
      acc[static_cast<size_t>(rank_configuration(c))] += coeff;
      c = cyclic_shift(c);
    }
  }
  flush();
  return out;
}

}  // namespace tazrp_test
