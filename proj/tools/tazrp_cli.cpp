// tazrp: exact steady states of the multispecies TAZRP and its n-line
// process, by four independent methods, plus verification suites and a
// Gillespie sampler.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "tazrp/matrix_product.hpp"
#include "tazrp/multiline.hpp"
#include "tazrp/projection.hpp"
#include "tazrp/simulate.hpp"
#include "tazrp/verify.hpp"
#include "tazrp/zrp.hpp"

using json = nlohmann::ordered_json;
using namespace tazrp;

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> v;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    v.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return v;
}

json steady_to_json(const MultiplicityArray& m, int L, const SteadyState& s) {
  json out;
  out["L"] = L;
  out["m"] = m.m;
  out["normalization"] = s.normalization.str();
  json probs = json::array();
  auto space = enumerate_sector(m, L);
  for (size_t i = 0; i < space.size(); ++i) {
    json p;
    p["config"] = to_text(space[i]);
    p["value"] = s.weights[i].str();
    probs.push_back(p);
  }
  out["probabilities"] = probs;
  return out;
}

void print_steady(const MultiplicityArray& m, int L, const SteadyState& s,
                  const std::string& format) {
  if (format == "json") {
    std::cout << steady_to_json(m, L, s).dump(2) << "\n";
    return;
  }
  auto space = enumerate_sector(m, L);
  if (format == "tsv") {
    std::cout << "config\tvalue\n";
    for (size_t i = 0; i < space.size(); ++i)
      std::cout << to_text(space[i]) << "\t" << s.weights[i] << "\n";
    return;
  }
  std::string mtag;
  for (size_t a = 0; a < m.m.size(); ++a)
    mtag += (a ? "," : "") + std::to_string(m.m[a]);
  std::cout << "# sector m=" << mtag << " L=" << L
            << "  normalization=" << s.normalization << "\n";
  for (size_t i = 0; i < space.size(); ++i)
    std::cout << to_text(space[i]) << " " << s.weights[i] << "\n";
}

MultilineState parse_state_arg(const std::string& text) {
  if (!text.empty() && text[0] == '[') {
    json rows = json::parse(text);
    std::string joined;
    for (const auto& row : rows) {  // matrix literal lists the top row first
      std::vector<int> e;
      for (const auto& v : row) e.push_back(v.get<int>());
      if (!joined.empty()) joined += '/';
      joined += to_text(Composition(e));
    }
    return parse_multiline(joined);
  }
  return parse_multiline(text);
}

int emit(const CheckResult& r) {
  for (const auto& l : r.lines) std::cout << l << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multispecies TAZRP steady-state toolkit"};
  app.require_subcommand(1);

  // steady
  std::string m_text, method = "kernel", format = "text";
  int L = 0, cutoff = -1, threads = 0;
  long max_states = 200000;
  bool all_methods = false;
  auto* steady = app.add_subcommand("steady", "steady state of a sector");
  steady->add_option("--m", m_text, "multiplicities, e.g. 1,2,1")->required();
  steady->add_option("--L", L, "number of sites")->required();
  steady->add_option("--method", method)
      ->check(CLI::IsMember({"kernel", "count", "ctm", "mp"}));
  steady->add_flag("--all-methods", all_methods,
                   "run all four methods and require exact agreement");
  steady->add_option("--cutoff", cutoff, "Fock cutoff for --method mp");
  steady->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  steady->add_option("--max-states", max_states, "state-count guard");
  steady->add_option("--threads", threads, "threads for --method count");

  // r
  std::string rx, ry;
  auto* rcmd = app.add_subcommand("r", "apply the combinatorial R");
  rcmd->add_option("x", rx)->required();
  rcmd->add_option("y", ry)->required();

  // project
  std::string state_text;
  bool show_rows = false, show_debug = false;
  auto* project = app.add_subcommand("project", "project an n-line state");
  project
      ->add_option("state", state_text, "rows top-first, e.g. 001/210/202/114")
      ->required();
  project->add_flag("--rows", show_rows, "also print every projected row");
  project->add_flag("--debug", show_debug, "print the R-chain by-products");

  // verify
  std::string suite;
  std::string weights_text = "4,3,2";
  int vL = 3, lmax = 5, mmax = 3, Lmax = 4;
  std::uint64_t events = 1000000, burn_in = 10000, seed = 20250512;
  double tv_bound = 0.02;
  auto* verify = app.add_subcommand("verify", "run a named invariant suite");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"yang-baxter", "ny-pl", "bijection-ts",
                             "uniform-lp", "intertwining", "four-way",
                             "simulation"}));
  verify->add_option("--m", m_text, "sector multiplicities");
  verify->add_option("--L", vL, "number of sites");
  verify->add_option("--weights", weights_text, "yang-baxter weights l,m,k");
  verify->add_option("--lmax", lmax);
  verify->add_option("--mmax", mmax);
  verify->add_option("--Lmax", Lmax);
  verify->add_option("--events", events);
  verify->add_option("--burn-in", burn_in);
  verify->add_option("--seed", seed);
  verify->add_option("--tv-bound", tv_bound);

  // simulate
  std::string process = "tazrp";
  bool with_tv = false;
  auto* sim = app.add_subcommand("simulate", "Gillespie sampler");
  sim->add_option("--process", process)->check(CLI::IsMember({"tazrp", "lp"}));
  sim->add_option("--m", m_text)->required();
  sim->add_option("--L", L)->required();
  sim->add_option("--events", events);
  sim->add_option("--burn-in", burn_in);
  sim->add_option("--seed", seed);
  sim->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  sim->add_flag("--tv", with_tv, "report TV distance to the exact target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (steady->parsed()) {
      MultiplicityArray m(parse_ints(m_text));
      if (all_methods) {
        SteadyState kernel = steady_state_kernel(m, L, max_states);
        SteadyState count = steady_state_by_counting(m, L, threads);
        SteadyState ctm = steady_state_ctm(m, L);
        SteadyState mp = steady_state_mp(m, L, cutoff);
        if (!(kernel.weights == count.weights &&
              kernel.weights == ctm.weights && kernel.weights == mp.weights)) {
          std::cerr << "method disagreement:\n";
          auto space = enumerate_sector(m, L);
          for (size_t i = 0; i < space.size(); ++i)
            if (!(kernel.weights[i] == count.weights[i] &&
                  kernel.weights[i] == ctm.weights[i] &&
                  kernel.weights[i] == mp.weights[i]))
              std::cerr << "  " << to_text(space[i])
                        << " kernel=" << kernel.weights[i]
                        << " count=" << count.weights[i]
                        << " ctm=" << ctm.weights[i] << " mp=" << mp.weights[i]
                        << "\n";
          return 1;
        }
        print_steady(m, L, kernel, format);
        return 0;
      }
      SteadyState s =
          method == "kernel"  ? steady_state_kernel(m, L, max_states)
          : method == "count" ? steady_state_by_counting(m, L, threads)
          : method == "ctm"   ? steady_state_ctm(m, L)
                              : steady_state_mp(m, L, cutoff);
      print_steady(m, L, s, format);
      return 0;
    }

    if (rcmd->parsed()) {
      Composition x = parse_composition(rx), y = parse_composition(ry);
      RResult r = apply_r(x, y);
      std::cout << to_text(r.y_prime) << " / " << to_text(r.x_prime) << "\n";
      if (x.weight() > y.weight()) {
        RResult ny = apply_r_ny(x, y);
        std::cout << "ny: " << to_text(ny.y_prime) << " / "
                  << to_text(ny.x_prime) << "\n";
      }
      RResult pl = apply_r_pl(x, y);
      std::cout << "pl: " << to_text(pl.y_prime) << " / "
                << to_text(pl.x_prime) << "\n";
      return 0;
    }

    if (project->parsed()) {
      MultilineState x = parse_state_arg(state_text);
      std::cout << to_text(pi(x)) << "\n";
      if (show_rows)
        for (int a = 1; a <= x.n(); ++a)
          std::cout << "pi^" << a << " = " << to_text(pi_a(x, a)) << "\n";
      if (show_debug)
        for (int a = 2; a <= x.n(); ++a) {
          auto [row, us] = pi_a_with_intermediates(x, a);
          std::cout << "pi^" << a << " by-products:";
          for (size_t b = 0; b < us.size(); ++b)
            std::cout << " u^" << b + 1 << "=" << to_text(us[b]);
          std::cout << "\n";
        }
      return 0;
    }

    if (verify->parsed()) {
      if (suite == "yang-baxter") {
        std::vector<int> ws = parse_ints(weights_text);
        return emit(check_yang_baxter(ws.at(0), ws.at(1), ws.at(2), vL));
      }
      if (suite == "ny-pl") return emit(check_r_algorithms(lmax, mmax, Lmax));
      MultiplicityArray m(parse_ints(m_text.empty() ? "1,1" : m_text));
      if (suite == "bijection-ts") return emit(check_bijection_ts(m, vL));
      if (suite == "uniform-lp") return emit(check_uniform_lp(m, vL));
      if (suite == "intertwining") return emit(check_intertwining(m, vL));
      if (suite == "four-way") return emit(check_four_way(m, vL));
      return emit(check_simulation(m, vL, events, burn_in, seed, tv_bound));
    }

    if (sim->parsed()) {
      MultiplicityArray m(parse_ints(m_text));
      SimulationResult r = process == "tazrp"
                               ? simulate_tazrp(m, L, events, burn_in, seed)
                               : simulate_lp(m, L, events, burn_in, seed);
      std::vector<std::string> labels;
      if (process == "tazrp")
        for (const auto& c : enumerate_sector(m, L))
          labels.push_back(to_text(c));
      else
        for (const auto& x : enumerate_B(m, L)) labels.push_back(to_text(x));
      if (format == "json") {
        json out;
        out["process"] = process;
        out["L"] = L;
        out["m"] = m.m;
        out["events"] = r.events;
        out["total_time"] = r.total_time;
        json probs = json::array();
        for (size_t i = 0; i < labels.size(); ++i) {
          json p;
          p["config"] = labels[i];
          p["weight"] = static_cast<double>(r.occupation.weights[i]);
          probs.push_back(p);
        }
        out["occupation"] = probs;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "config\tweight\n";
        for (size_t i = 0; i < labels.size(); ++i)
          std::cout << labels[i] << "\t"
                    << static_cast<double>(r.occupation.weights[i]) << "\n";
      }
      if (with_tv) {
        Distribution target;
        if (process == "tazrp") {
          SteadyState exact = steady_state_kernel(m, L);
          target.normalization = exact.normalization;
          for (const Int& w : exact.weights) target.weights.emplace_back(w);
        } else {
          target.normalization = count_B(m, L);
          target.weights.assign(static_cast<size_t>(count_B(m, L)), Rat(1));
        }
        std::cout << "tv_distance "
                  << static_cast<double>(tv_distance(r.occupation, target))
                  << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
