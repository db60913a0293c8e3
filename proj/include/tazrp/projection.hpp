#pragma once

#include <vector>

#include "tazrp/multiline.hpp"
#include "tazrp/zrp.hpp"

namespace tazrp {

// phi: S(m) -> B_+(m), phi^a(sigma)_i = sigma^a_i + ... + sigma^n_i.
MultilineState phi(const Configuration& c);
Composition phi_row(const Configuration& c, int a);

// Inverse of phi: sigma^a_i = x^a_i - x^{a+1}_i; requires the dominance
// chain x^1 >= ... >= x^n (throws otherwise).
Configuration phi_inverse(const MultilineState& x);

// pi^a(x): x^1 for a = 1; for a >= 2 the left output of R^1...R^{a-1}
// applied to x^1 (x) ... (x) x^a.  Depends only on the leftmost a rows.
Composition pi_a(const MultilineState& x, int a);
// same, also returning the by-products u^1,...,u^{a-1} of the R chain
std::pair<Composition, std::vector<Composition>> pi_a_with_intermediates(
    const MultilineState& x, int a);
// all rows pi^1(x), ..., pi^n(x)
std::vector<Composition> pi_rows(const MultilineState& x);

// The projection pi = phi^{-1} o (pi^1 (x) ... (x) pi^n).
Configuration pi(const MultilineState& x);

// Queueing algorithm for pi: for a = n..1, each dot of row a walks down via
// NY pairing to an unused dot of the row below until it captures a dot of
// row 1, which becomes a species-a particle; all dots on the walk are erased.
Configuration pi_queue(const MultilineState& x);

// TAZRP embedding rule Phi_{k, bottom}: promote the species of `prev` by 1,
// let those particles capture dots of `bottom` by the NY rule processed for
// species a = k, k-1, ..., 2 (larger species first); uncaptured dots become
// species 1.
Configuration embed(const Configuration& prev, const Composition& bottom);

// pi as the composition Phi_{n,x^1} o ... o Phi_{2,x^{n-1}} (x^n).
Configuration pi_embed(const MultilineState& x);

// Exact matrix identity pi H_LP = H_TAZRP pi over the canonical enumerations.
bool intertwining_check(const MultiplicityArray& m, int L,
                        long max_states = 200000);

// P(sigma) = #{x in B(m) | pi(x) = sigma}; total is count_B(m).
// `threads` <= 0 reads TAZRP_THREADS (default 1).
SteadyState steady_state_by_counting(const MultiplicityArray& m, int L,
                                     int threads = 0);

}  // namespace tazrp
