#pragma once

#include <string>
#include <vector>

#include "tazrp/composition.hpp"

namespace tazrp {

struct CheckResult {
  bool ok = true;
  std::vector<std::string> lines;  // one line per sub-check, "PASS ..."/"FAIL ..."

  void record(bool pass, const std::string& what);
};

// Yang-Baxter on every triple of B_l (x) B_m (x) B_k at the given L.
CheckResult check_yang_baxter(int l, int m, int k, int L);

// NY rule == piecewise-linear formula on every pair of B_l (x) B_m for
// l <= lmax, m <= mmax, l > m, L <= Lmax; also R o R = id on the same grid
// (both weight orders).
CheckResult check_r_algorithms(int lmax, int mmax, int Lmax);

// |A_x| = |B_x|, S o T = id and T o S = id over all of B(m).
CheckResult check_bijection_ts(const MultiplicityArray& m, int L);

// kernel of H_LP is spanned by the all-ones vector
CheckResult check_uniform_lp(const MultiplicityArray& m, int L);

// pi H_LP = H_TAZRP pi exactly
CheckResult check_intertwining(const MultiplicityArray& m, int L);

// kernel = counting = crystal CTM = matrix product, exact equality per
// configuration; also checks the condensation formula against the sector
// maximum and the cutoff stability at C = ell_1 + 1.
CheckResult check_four_way(const MultiplicityArray& m, int L);

// seeded trajectories land within the given TV distance of the exact steady
// states (TAZRP against the kernel, LP against uniform)
CheckResult check_simulation(const MultiplicityArray& m, int L,
                             std::uint64_t events, std::uint64_t burn_in,
                             std::uint64_t seed, double tv_bound);

}  // namespace tazrp
