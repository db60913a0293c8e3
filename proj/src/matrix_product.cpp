#include "tazrp/matrix_product.hpp"

#include <map>
#include <stdexcept>

#include "tazrp/multiline.hpp"
#include "tazrp/projection.hpp"

namespace tazrp {

namespace {

struct MonoOp {
  int plus;
  bool kflag;
  int minus;
};

// tensor index helpers on the truncated Fock product: factor 0 is the
// slowest digit
struct Staircase {
  int n;
  int cutoff;
  int factors;
  std::vector<int> s;  // s[a-1] = sigma^a + ... + sigma^n

  int factor_index(int a, int b) const {
    // column-major: b = n..2 outer, a = 1..b-1 inner
    int idx = 0;
    for (int bb = n; bb > b; --bb) idx += bb - 1;
    return idx + (a - 1);
  }
};

// Enumerate staircase configurations row by row; at each leaf add the
// Kronecker product of the per-vertex monomials into `out`.
void dfs_vertices(const Staircase& st, int a, int b, std::vector<int>& hcarry,
                  std::vector<int>& vcarry, std::vector<MonoOp>& ops,
                  SparseIntMat& out) {
  const int n = st.n, C = st.cutoff;
  if (a == n) {
    // leaf: per-factor valid (input, output) pairs, then their product
    std::vector<std::vector<std::pair<int, int>>> choices(st.factors);
    for (int f = 0; f < st.factors; ++f) {
      const MonoOp& op = ops[f];
      if (op.kflag) {
        if (op.minus <= C && op.plus <= C)
          choices[f].emplace_back(op.minus, op.plus);
      } else {
        for (int w = op.minus; w <= C && w - op.minus + op.plus <= C; ++w)
          choices[f].emplace_back(w, w - op.minus + op.plus);
      }
      if (choices[f].empty()) return;
    }
    std::vector<size_t> pick(st.factors, 0);
    while (true) {
      long col = 0, row = 0;
      for (int f = 0; f < st.factors; ++f) {
        const auto& [w, wp] = choices[f][pick[f]];
        col = col * (C + 1) + w;
        row = row * (C + 1) + wp;
      }
      out.add(row, col, 1);
      int f = st.factors - 1;
      while (f >= 0 && ++pick[f] == choices[f].size()) pick[f--] = 0;
      if (f < 0) break;
    }
    return;
  }
  const int left_in = (b == a + 1) ? st.s[a - 1] : hcarry[a - 1];
  const int lo_j = (a == 1) ? 0 : vcarry[b - 1];
  const int hi_j = (a == 1) ? C : vcarry[b - 1];
  for (int j = lo_j; j <= hi_j; ++j) {
    const int lo_t = (b == a + 1) ? st.s[b - 1] : 0;
    const int hi_t = (b == a + 1) ? st.s[b - 1] : C;
    for (int t = lo_t; t <= hi_t; ++t) {
      const int right_out = left_in + j - t;
      if (right_out < j || right_out > C) continue;  // theta(a >= j) + cap
      ops[st.factor_index(a, b)] = {j, right_out > j, t};
      const int ha = hcarry[a - 1], vb = vcarry[b - 1];
      hcarry[a - 1] = right_out;
      vcarry[b - 1] = t;
      if (b == n)
        dfs_vertices(st, a + 1, a + 2, hcarry, vcarry, ops, out);
      else
        dfs_vertices(st, a, b + 1, hcarry, vcarry, ops, out);
      hcarry[a - 1] = ha;
      vcarry[b - 1] = vb;
    }
  }
}

}  // namespace

FockOperator x_sigma(const LocalState& sigma, int cutoff) {
  const int n = sigma.n();
  if (n < 2) throw std::invalid_argument("x_sigma requires n >= 2");
  if (cutoff < 0) throw std::invalid_argument("x_sigma: negative cutoff");
  Staircase st;
  st.n = n;
  st.cutoff = cutoff;
  st.factors = n * (n - 1) / 2;
  st.s.resize(n);
  int tail = 0;
  for (int a = n; a >= 1; --a) {
    tail += sigma.mult[a - 1];
    st.s[a - 1] = tail;
  }
  long dim = 1;
  for (int f = 0; f < st.factors; ++f) dim *= cutoff + 1;
  SparseIntMat mat(dim, dim);
  std::vector<int> hcarry(n, 0), vcarry(n + 1, 0);
  std::vector<MonoOp> ops(st.factors);
  dfs_vertices(st, 1, 2, hcarry, vcarry, ops, mat);
  return {cutoff, st.factors, std::move(mat)};
}

namespace {

Int mp_trace(const Configuration& c, int cutoff,
             std::map<LocalState, FockOperator>& cache) {
  SparseIntMat prod;
  bool started = false;
  for (int i = 0; i < c.L(); ++i) {
    auto it = cache.find(c.sites[i]);
    if (it == cache.end())
      it = cache.emplace(c.sites[i], x_sigma(c.sites[i], cutoff)).first;
    if (!started) {
      prod = it->second.mat;
      started = true;
    } else {
      prod = prod.multiply(it->second.mat);
    }
  }
  return prod.trace();
}

}  // namespace

Int steady_prob_mp(const Configuration& c, int cutoff, bool check_stability) {
  if (c.n() == 1) return 1;  // no Fock factors; the 1-TAZRP state is uniform
  MultiplicityArray m(c.species_totals());
  const int def = m.ell1();
  const int C = cutoff < 0 ? def : cutoff;
  if (C < def)
    throw std::invalid_argument("steady_prob_mp: cutoff below ell_1");
  std::map<LocalState, FockOperator> cache;
  Int v = mp_trace(c, C, cache);
  if (check_stability) {
    std::map<LocalState, FockOperator> cache2;
    Int v2 = mp_trace(c, C + 1, cache2);
    if (v != v2)
      throw std::runtime_error("steady_prob_mp: value unstable under C+1");
  }
  return v;
}

SteadyState steady_state_mp(const MultiplicityArray& m, int L, int cutoff,
                            bool check_stability) {
  const int def = m.ell1();
  const int C = cutoff < 0 ? def : cutoff;
  if (C < def)
    throw std::invalid_argument("steady_state_mp: cutoff below ell_1");
  std::vector<Configuration> space = enumerate_sector(m, L);
  std::vector<Int> weights;
  weights.reserve(space.size());
  std::map<LocalState, FockOperator> cache, cache2;
  for (const auto& c : space) {
    if (m.n() == 1) {
      weights.emplace_back(1);
      continue;
    }
    Int v = mp_trace(c, C, cache);
    if (check_stability && v != mp_trace(c, C + 1, cache2))
      throw std::runtime_error("steady_state_mp: value unstable under C+1");
    weights.push_back(std::move(v));
  }
  return {std::move(weights), count_B(m, L)};
}

Int steady_prob_ctm(const Configuration& c) {
  MultiplicityArray m(c.species_totals());
  const int n = m.n(), L = c.L();
  std::vector<Composition> boundary;
  boundary.reserve(n);
  for (int a = 1; a <= n; ++a) boundary.push_back(phi_row(c, a));
  Int count = 0;
  for (const MultilineState& x : enumerate_B(m, L)) {
    // evaluate the staircase: columns enter from the bottom, rows exit right;
    // the value carried at the turn of line b is pi^b(x)
    if (x.rows[0] != boundary[0]) continue;
    std::vector<Composition> h{x.rows[0]};
    bool match = true;
    for (int b = 2; b <= n && match; ++b) {
      Composition v = x.rows[b - 1];
      for (int r = 1; r <= b - 1; ++r) {
        RResult res = apply_r(h[r - 1], v);
        h[r - 1] = res.x_prime;
        v = res.y_prime;
      }
      if (v != boundary[b - 1]) match = false;
      h.push_back(v);
    }
    if (match) ++count;
  }
  return count;
}

SteadyState steady_state_ctm(const MultiplicityArray& m, int L) {
  std::vector<Configuration> space = enumerate_sector(m, L);
  std::vector<Int> weights;
  weights.reserve(space.size());
  for (const auto& c : space) weights.push_back(steady_prob_ctm(c));
  return {std::move(weights), count_B(m, L)};
}

Int r_element_mp(const Composition& a, const Composition& b,
                 const Composition& i, const Composition& j) {
  if (a.length() != b.length() || a.length() != i.length() ||
      a.length() != j.length())
    throw std::invalid_argument("r_element_mp: length mismatch");
  if (a.weight() != i.weight() || b.weight() != j.weight() ||
      i.weight() <= j.weight())
    throw std::invalid_argument("r_element_mp: requires weights ell > m");
  OscillatorElement prod = OscillatorElement::one();
  for (int r = 0; r < a.length(); ++r) {
    prod = prod * rhat(a.entries[r], b.entries[r], i.entries[r], j.entries[r]);
    if (prod.is_zero()) return 0;
  }
  return osc_trace(prod);
}

Int r_element_fixed_point(const Composition& a, const Composition& b,
                          const Composition& i, const Composition& j) {
  const int L = a.length();
  if (b.length() != L || i.length() != L || j.length() != L)
    throw std::invalid_argument("r_element_fixed_point: length mismatch");
  if (a.weight() != i.weight() || b.weight() != j.weight() ||
      i.weight() <= j.weight())
    throw std::invalid_argument("r_element_fixed_point: requires ell > m");
  // c_{r-1} = j_r + (c_r - i_r)_+ from c_L = 0 gives the unique fixed point
  auto propagate = [&](int cl) {
    std::vector<int> c(L + 1);
    c[L] = cl;
    for (int r = L; r >= 1; --r) {
      int d = c[r] - i.entries[r - 1];
      c[r - 1] = j.entries[r - 1] + (d > 0 ? d : 0);
    }
    return c;
  };
  const int w = propagate(0)[0];
  std::vector<int> c = propagate(w);
  if (c[0] != w) return 0;  // cannot happen for ell > m
  for (int r = 1; r <= L; ++r) {
    const int ir = i.entries[r - 1], jr = j.entries[r - 1];
    const int d = ir - c[r];
    if (a.entries[r - 1] != jr + (d > 0 ? d : 0)) return 0;
    if (b.entries[r - 1] != (ir < c[r] ? ir : c[r])) return 0;
  }
  return 1;
}

}  // namespace tazrp
