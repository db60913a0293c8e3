#include "tazrp/verify.hpp"

#include <algorithm>

#include "tazrp/combinatorial_r.hpp"
#include "tazrp/distribution.hpp"
#include "tazrp/matrix_product.hpp"
#include "tazrp/multiline.hpp"
#include "tazrp/projection.hpp"
#include "tazrp/simulate.hpp"
#include "tazrp/zrp.hpp"

namespace tazrp {

namespace {

std::string mtag(const MultiplicityArray& m) {
  std::string out;
  for (size_t a = 0; a < m.m.size(); ++a) {
    if (a) out += ',';
    out += std::to_string(m.m[a]);
  }
  return out;
}

}  // namespace

void CheckResult::record(bool pass, const std::string& what) {
  ok = ok && pass;
  lines.push_back((pass ? "PASS " : "FAIL ") + what);
}

CheckResult check_yang_baxter(int l, int m, int k, int L) {
  CheckResult res;
  long tested = 0, failed = 0;
  for (const auto& x : enumerate_compositions(l, L))
    for (const auto& y : enumerate_compositions(m, L))
      for (const auto& z : enumerate_compositions(k, L)) {
        ++tested;
        if (!yang_baxter_check(x, y, z)) ++failed;
      }
  res.record(failed == 0, "yang-baxter (" + std::to_string(l) + "," +
                              std::to_string(m) + "," + std::to_string(k) +
                              ") L=" + std::to_string(L) + ": " +
                              std::to_string(tested) + " triples, " +
                              std::to_string(failed) + " failures");
  return res;
}

CheckResult check_r_algorithms(int lmax, int mmax, int Lmax) {
  CheckResult res;
  long pairs = 0, ny_pl_fail = 0, inv_fail = 0, dom_fail = 0;
  for (int L = 1; L <= Lmax; ++L)
    for (int l = 1; l <= lmax; ++l)
      for (int m = 0; m < l && m <= mmax; ++m)
        for (const auto& x : enumerate_compositions(l, L))
          for (const auto& y : enumerate_compositions(m, L)) {
            ++pairs;
            RResult ny = apply_r_ny(x, y);
            RResult pl = apply_r_pl(x, y);
            if (!(ny == pl)) ++ny_pl_fail;
            // inverse: R_{m,l} after R_{l,m} restores the pair
            RResult back = apply_r(ny.y_prime, ny.x_prime);
            if (back.y_prime != x || back.x_prime != y) ++inv_fail;
            if (!dominance_ge(x, ny.y_prime) || !dominance_ge(ny.x_prime, y))
              ++dom_fail;
          }
  res.record(ny_pl_fail == 0, "NY = piecewise-linear on " +
                                  std::to_string(pairs) + " pairs, " +
                                  std::to_string(ny_pl_fail) + " failures");
  res.record(inv_fail == 0,
             "R o R = id, " + std::to_string(inv_fail) + " failures");
  res.record(dom_fail == 0, "dominance x >= y', x' >= y, " +
                                std::to_string(dom_fail) + " failures");
  return res;
}

CheckResult check_bijection_ts(const MultiplicityArray& m, int L) {
  CheckResult res;
  const std::string tag = " B(" + mtag(m) +
                          ") L=" + std::to_string(L);
  long ab_fail = 0, st_fail = 0, ts_fail = 0, states = 0;
  for (const MultilineState& x : enumerate_B(m, L)) {
    ++states;
    std::vector<TriplePointer> a = set_A(x), b = set_B(x);
    if (a.size() != b.size()) ++ab_fail;
    for (const TriplePointer& p : a) {
      auto [q, y] = map_T(x, p);
      if (!in_set_B(y, q)) {
        ++st_fail;
        continue;
      }
      auto [x2, p2] = map_S(q, y);
      if (!(x2 == x) || !(p2 == p)) ++st_fail;
    }
    for (const TriplePointer& q : b) {
      auto [y, p] = map_S(q, x);
      if (!in_set_A(y, p)) {
        ++ts_fail;
        continue;
      }
      auto [q2, x2] = map_T(y, p);
      if (!(x2 == x) || !(q2 == q)) ++ts_fail;
    }
  }
  res.record(ab_fail == 0, "|A_x| = |B_x| on " + std::to_string(states) +
                               " states" + tag);
  res.record(st_fail == 0, "S o T = id" + tag);
  res.record(ts_fail == 0, "T o S = id" + tag);
  return res;
}

CheckResult check_uniform_lp(const MultiplicityArray& m, int L) {
  CheckResult res;
  res.record(verify_uniform(m, L), "H_LP kernel = span of all-ones, B(" +
                                       mtag(m) +
                                       ") L=" + std::to_string(L));
  return res;
}

CheckResult check_intertwining(const MultiplicityArray& m, int L) {
  CheckResult res;
  res.record(intertwining_check(m, L),
             "pi H_LP = H_TAZRP pi, m=" + mtag(m) +
                 " L=" + std::to_string(L));
  return res;
}

CheckResult check_four_way(const MultiplicityArray& m, int L) {
  CheckResult res;
  const std::string tag =
      "m=" + mtag(m) + " L=" + std::to_string(L);
  SteadyState kernel = steady_state_kernel(m, L);
  SteadyState count = steady_state_by_counting(m, L);
  SteadyState ctm = steady_state_ctm(m, L);
  // steady_state_mp already asserts stability at C+1 (criterion: cutoff)
  SteadyState mp = steady_state_mp(m, L, -1, true);
  res.record(kernel.weights == count.weights, "kernel = counting, " + tag);
  res.record(kernel.weights == ctm.weights, "kernel = crystal CTM, " + tag);
  res.record(kernel.weights == mp.weights,
             "kernel = matrix product (stable at C+1), " + tag);
  const Int cond = condensation_probability(m, L);
  const Int maxw =
      *std::max_element(kernel.weights.begin(), kernel.weights.end());
  std::vector<LocalState> sites(L, LocalState(std::vector<int>(m.n(), 0)));
  sites[L - 1] = LocalState(m.m);
  const Configuration condensed((std::vector<LocalState>(sites)));
  const Int at_cond =
      kernel.weights[static_cast<long>(rank_configuration(condensed))];
  res.record(maxw == cond && at_cond == cond,
             "condensation formula = sector maximum, " + tag);
  return res;
}

CheckResult check_simulation(const MultiplicityArray& m, int L,
                             std::uint64_t events, std::uint64_t burn_in,
                             std::uint64_t seed, double tv_bound) {
  CheckResult res;
  const std::string tag =
      "m=" + mtag(m) + " L=" + std::to_string(L);
  SteadyState exact = steady_state_kernel(m, L);
  Distribution exact_d;
  exact_d.normalization = exact.normalization;
  for (const Int& w : exact.weights) exact_d.weights.emplace_back(w);

  SimulationResult sim = simulate_tazrp(m, L, events, burn_in, seed);
  Rat tv = tv_distance(sim.occupation, exact_d);
  res.record(tv < Rat(tv_bound),
             "TAZRP trajectory TV = " +
                 std::to_string(static_cast<double>(tv)) + " < " +
                 std::to_string(tv_bound) + ", " + tag);

  Distribution uniform;
  uniform.normalization = count_B(m, L);
  uniform.weights.assign(static_cast<size_t>(count_B(m, L)), Rat(1));
  SimulationResult lp = simulate_lp(m, L, events, burn_in, seed);
  Rat tv2 = tv_distance(lp.occupation, uniform);
  res.record(tv2 < Rat(tv_bound),
             "line-process trajectory TV = " +
                 std::to_string(static_cast<double>(tv2)) + " < " +
                 std::to_string(tv_bound) + ", " + tag);
  return res;
}

}  // namespace tazrp
