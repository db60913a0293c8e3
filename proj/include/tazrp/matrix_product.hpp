#pragma once

#include "tazrp/combinatorial_r.hpp"
#include "tazrp/oscillator.hpp"
#include "tazrp/sparse.hpp"
#include "tazrp/zrp.hpp"

namespace tazrp {

// Corner transfer matrix of the oscillator-valued vertex model, realized on
// the truncated Fock space tensor product.
struct FockOperator {
  int cutoff;   // per-factor truncation C; basis |0>..|C|
  int factors;  // n(n-1)/2
  SparseIntMat mat;  // side (C+1)^factors
};

// X_sigma: the staircase configuration sum with the diagonal boundary fixed
// to the partial sums sigma^a + ... + sigma^n and free bottom/right edges,
// every vertex weighted by rhat.  Vertices (row a, column b), 1 <= a < b <= n,
// map to tensor factors in column-major order: b = n..2, a = 1..b-1.
// Requires n >= 2.
FockOperator x_sigma(const LocalState& sigma, int cutoff);

// P(sigma_1,...,sigma_L) = Tr(X_{sigma_1} ... X_{sigma_L}).
// cutoff < 0 selects the default C = ell_1 (total particle number); when
// check_stability is set the value is recomputed at C+1 and a mismatch
// throws.  For n = 1 the trace formula degenerates and the value is 1.
Int steady_prob_mp(const Configuration& c, int cutoff = -1,
                   bool check_stability = true);

// Full sector by the matrix product formula, sharing X_sigma across sites.
SteadyState steady_state_mp(const MultiplicityArray& m, int L, int cutoff = -1,
                            bool check_stability = true);

// Crystal corner-transfer-matrix formula: the number of x in B(m) whose
// staircase diagram has diagonal boundary phi^1(sigma),...,phi^n(sigma),
// i.e. pi^a(x) = phi^a(sigma) for all a.
Int steady_prob_ctm(const Configuration& c);
SteadyState steady_state_ctm(const MultiplicityArray& m, int L);

// Matrix product form of the combinatorial R for weight(i) > weight(j):
// R^{a,b}_{i,j} = Tr(Rhat^{a_1,b_1}_{i_1,j_1} ... Rhat^{a_L,b_L}_{i_L,j_L}),
// evaluated symbolically in the oscillator algebra.
Int r_element_mp(const Composition& a, const Composition& b,
                 const Composition& i, const Composition& j);

// Same element by the fixed-point shortcut: propagate
// c_{r-1} = j_r + (c_r - i_r)_+ cyclically; w = f(0) is the unique fixed
// point, then check the remaining vertex constraints.
Int r_element_fixed_point(const Composition& a, const Composition& b,
                          const Composition& i, const Composition& j);

}  // namespace tazrp
