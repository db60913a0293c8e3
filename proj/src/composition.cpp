#include "tazrp/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tazrp {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Composition::Composition(std::vector<int> e) : entries(std::move(e)) {
  if (entries.empty()) throw std::invalid_argument("composition needs L >= 1");
  for (int v : entries)
    if (v < 0) throw std::invalid_argument("negative composition entry");
}

int Composition::weight() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

int Composition::at(long i) const {
  long L = length();
  long r = i % L;
  if (r < 0) r += L;
  return entries[static_cast<size_t>(r)];
}

Int composition_count(int weight, int length) {
  return binomial(length - 1 + weight, weight);
}

namespace {

void emit_rec(std::vector<int>& cur, int pos, int rest,
              std::vector<Composition>& out) {
  int L = static_cast<int>(cur.size());
  if (pos == L - 1) {
    cur[pos] = rest;
    out.emplace_back(cur);
    return;
  }
  for (int v = rest; v >= 0; --v) {
    cur[pos] = v;
    emit_rec(cur, pos + 1, rest - v, out);
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int weight, int length) {
  if (weight < 0 || length < 1)
    throw std::invalid_argument("enumerate_compositions: bad parameters");
  std::vector<Composition> out;
  out.reserve(static_cast<size_t>(composition_count(weight, length)));
  std::vector<int> cur(length, 0);
  emit_rec(cur, 0, weight, out);
  return out;
}

Int rank_composition(const Composition& c) {
  int L = c.length();
  int rest = c.weight();
  Int r = 0;
  for (int i = 0; i < L - 1; ++i) {
    // compositions whose i-th entry exceeds c_i precede c
    for (int v = rest; v > c.entries[i]; --v)
      r += composition_count(rest - v, L - 1 - i);
    rest -= c.entries[i];
  }
  return r;
}

Composition unrank_composition(Int index, int weight, int length) {
  if (index < 0 || index >= composition_count(weight, length))
    throw std::out_of_range("unrank_composition: index out of range");
  std::vector<int> e(length, 0);
  int rest = weight;
  for (int i = 0; i < length - 1; ++i) {
    for (int v = rest;; --v) {
      Int cnt = composition_count(rest - v, length - 1 - i);
      if (index < cnt) {
        e[i] = v;
        rest -= v;
        break;
      }
      index -= cnt;
    }
  }
  e[length - 1] = rest;
  return Composition(e);
}

bool dominance_ge(const Composition& u, const Composition& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("dominance_ge: length mismatch");
  for (int i = 0; i < u.length(); ++i)
    if (u.entries[i] < v.entries[i]) return false;
  return true;
}

std::string to_text(const Composition& c) {
  bool digits = std::all_of(c.entries.begin(), c.entries.end(),
                            [](int v) { return v <= 9; });
  std::string s;
  for (int i = 0; i < c.length(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(c.entries[i]);
  }
  return s;
}

Composition parse_composition(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty composition text");
  std::vector<int> e;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      e.push_back(std::stoi(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("bad composition text: " + text);
      e.push_back(ch - '0');
    }
  }
  return Composition(e);
}

MultiplicityArray::MultiplicityArray(std::vector<int> mult) : m(std::move(mult)) {
  if (m.empty()) throw std::invalid_argument("empty multiplicity array");
  for (int v : m)
    if (v < 1)
      throw std::invalid_argument("non-basic sector: every m_a must be >= 1");
  ell.resize(m.size());
  int tail = 0;
  for (int a = static_cast<int>(m.size()) - 1; a >= 0; --a) {
    tail += m[a];
    ell[a] = tail;
  }
}

Int count_B(const MultiplicityArray& m, int L) {
  Int r = 1;
  for (int ell_a : m.ell) r *= binomial(L - 1 + ell_a, ell_a);
  return r;
}

}  // namespace tazrp
