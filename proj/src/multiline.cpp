#include "tazrp/multiline.hpp"

#include <stdexcept>

#include "tazrp/kernel.hpp"

namespace tazrp {

MultilineState::MultilineState(std::vector<Composition> r) : rows(std::move(r)) {
  if (rows.empty()) throw std::invalid_argument("multiline state needs n >= 1");
  for (const auto& row : rows)
    if (row.length() != rows[0].length())
      throw std::invalid_argument("rows must share the same length");
  for (int a = 0; a + 1 < n(); ++a)
    if (rows[a].weight() <= rows[a + 1].weight())
      throw std::invalid_argument("row weights must strictly decrease upward");
}

int MultilineState::x(int a, long i) const {
  if (a < 1 || a > n()) return 0;  // x^0 = x^{n+1} = 0
  return rows[a - 1].at(i);
}

namespace {

inline int pos_part(int v) { return v > 0 ? v : 0; }

}  // namespace

std::vector<TriplePointer> set_A(const MultilineState& x) {
  std::vector<TriplePointer> out;
  for (int i = 0; i < x.L(); ++i)
    for (int a = 1; a <= x.n(); ++a) {
      const int cap = pos_part(x.x(a, i + 1) - x.x(a - 1, i));
      for (int k = 1; k <= cap; ++k) out.push_back({i, a, k});
    }
  return out;
}

std::vector<TriplePointer> set_B(const MultilineState& x) {
  std::vector<TriplePointer> out;
  for (int i = 0; i < x.L(); ++i)
    for (int a = 1; a <= x.n(); ++a) {
      const int cap = pos_part(x.x(a, i) - x.x(a + 1, i + 1));
      for (int k = 1; k <= cap; ++k) out.push_back({i, a, k});
    }
  return out;
}

bool in_set_A(const MultilineState& x, const TriplePointer& p) {
  if (p.i < 0 || p.i >= x.L() || p.a < 1 || p.a > x.n() || p.k < 1) return false;
  return p.k <= pos_part(x.x(p.a, p.i + 1) - x.x(p.a - 1, p.i));
}

bool in_set_B(const MultilineState& x, const TriplePointer& p) {
  if (p.i < 0 || p.i >= x.L() || p.a < 1 || p.a > x.n() || p.k < 1) return false;
  return p.k <= pos_part(x.x(p.a, p.i) - x.x(p.a + 1, p.i + 1));
}

std::pair<TriplePointer, MultilineState> map_T(const MultilineState& x,
                                               const TriplePointer& p) {
  if (x.L() < 2) throw std::invalid_argument("map_T requires L >= 2");
  if (!in_set_A(x, p)) throw std::invalid_argument("map_T: pointer not in A_x");
  const int i = p.i, a = p.a, k = p.k;
  const int ip1 = (i + 1) % x.L();
  // smallest c >= a with x^c_i >= x^{c+1}_{i+1}; exists because x^{n+1} = 0
  int c = a;
  while (x.x(c, i) < x.x(c + 1, i + 1)) ++c;
  MultilineState y = x;
  y.rows[a - 1].entries[i] = x.x(a, i) + k;
  y.rows[a - 1].entries[ip1] = x.x(a, i + 1) - k;
  for (int b = a + 1; b <= c; ++b) {
    y.rows[b - 1].entries[i] = x.x(b, i) + x.x(b, i + 1) - x.x(b - 1, i);
    y.rows[b - 1].entries[ip1] = x.x(b - 1, i);
  }
  const int l = (c == a) ? k : x.x(c, i + 1) - x.x(c - 1, i);
  return {{i, c, l}, std::move(y)};
}

std::pair<MultilineState, TriplePointer> map_S(const TriplePointer& q,
                                               const MultilineState& x) {
  if (x.L() < 2) throw std::invalid_argument("map_S requires L >= 2");
  if (!in_set_B(x, q)) throw std::invalid_argument("map_S: pointer not in B_x");
  const int i = q.i, a = q.a, k = q.k;
  const int ip1 = (i + 1) % x.L();
  // largest chain d..a with x^b_i > x^{b+1}_{i+1}; stops because x^0 = 0
  int d = a;
  while (d > 1 && x.x(d - 1, i) > x.x(d, i + 1)) --d;
  MultilineState y = x;
  y.rows[a - 1].entries[i] = x.x(a, i) - k;
  y.rows[a - 1].entries[ip1] = x.x(a, i + 1) + k;
  for (int b = d; b <= a - 1; ++b) {
    y.rows[b - 1].entries[i] = x.x(b + 1, i + 1);
    y.rows[b - 1].entries[ip1] = x.x(b, i) + x.x(b, i + 1) - x.x(b + 1, i + 1);
  }
  const int mm = (d == a) ? k : x.x(d, i) - x.x(d + 1, i + 1);
  return {std::move(y), {i, d, mm}};
}

MultilineState evolve(const MultilineState& x, int i, int a, int k) {
  TriplePointer p{i, a, k};
  if (x.L() < 2 || !in_set_A(x, p)) return x;
  return map_T(x, p).second;
}

std::vector<MultilineState> enumerate_B(const MultiplicityArray& m, int L) {
  const int n = m.n();
  std::vector<std::vector<Composition>> per_row;
  per_row.reserve(n);
  for (int a = 1; a <= n; ++a)
    per_row.push_back(enumerate_compositions(m.ell_of(a), L));
  std::vector<MultilineState> out;
  out.reserve(static_cast<size_t>(count_B(m, L)));
  std::vector<size_t> idx(n, 0);
  while (true) {
    std::vector<Composition> rows;
    rows.reserve(n);
    for (int a = 0; a < n; ++a) rows.push_back(per_row[a][idx[a]]);
    out.emplace_back(std::move(rows));
    int a = n - 1;
    while (a >= 0 && ++idx[a] == per_row[a].size()) idx[a--] = 0;
    if (a < 0) break;
  }
  return out;
}

Int rank_multiline(const MultilineState& x) {
  Int r = 0;
  for (int a = 0; a < x.n(); ++a) {
    r = r * composition_count(x.rows[a].weight(), x.L()) +
        rank_composition(x.rows[a]);
  }
  return r;
}

MultilineState unrank_multiline(Int index, const MultiplicityArray& m, int L) {
  const int n = m.n();
  std::vector<Composition> rows(n, Composition(std::vector<int>(L, 0)));
  for (int a = n - 1; a >= 0; --a) {
    Int radix = composition_count(m.ell_of(a + 1), L);
    Int q = index / radix;
    rows[a] = unrank_composition(index - q * radix, m.ell_of(a + 1), L);
    index = q;
  }
  return MultilineState(std::move(rows));
}

SparseIntMat build_h_lp(const MultiplicityArray& m, int L, long max_states) {
  const Int size = count_B(m, L);
  if (size > max_states)
    throw std::runtime_error("B(m) exceeds the state guard (" +
                             std::to_string(max_states) + "); raise max_states");
  const long N = static_cast<long>(size);
  std::vector<MultilineState> space = enumerate_B(m, L);
  SparseIntMat h(N, N);
  for (long col = 0; col < N; ++col) {
    const MultilineState& x = space[col];
    for (const TriplePointer& p : set_A(x)) {
      MultilineState y = (L >= 2) ? map_T(x, p).second : x;
      h.add(static_cast<long>(rank_multiline(y)), col, 1);
      h.add(col, col, -1);
    }
  }
  return h;
}

bool verify_uniform(const MultiplicityArray& m, int L, long max_states) {
  SparseIntMat h = build_h_lp(m, L, max_states);
  std::vector<std::vector<Int>> basis = integer_kernel(h.to_dense());
  if (basis.size() != 1) return false;
  for (const Int& v : basis[0])
    if (v != 1) return false;
  return true;
}

std::string to_text(const MultilineState& x) {
  std::string out;
  for (int a = x.n(); a >= 1; --a) {
    if (a < x.n()) out += '/';
    out += to_text(x.rows[a - 1]);
  }
  return out;
}

MultilineState parse_multiline(const std::string& text) {
  std::vector<Composition> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find('/', pos);
    if (next == std::string::npos) next = text.size();
    rows.push_back(parse_composition(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  std::reverse(rows.begin(), rows.end());  // text lists x^n first
  return MultilineState(std::move(rows));
}

std::string to_text(const TriplePointer& p) {
  return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.a) + "," +
         std::to_string(p.k) + ")";
}

}  // namespace tazrp
