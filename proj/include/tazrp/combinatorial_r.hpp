#pragma once

#include <utility>
#include <vector>

#include "tazrp/composition.hpp"

namespace tazrp {

// The combinatorial R is a bijection B_ell (x) B_m -> B_m (x) B_ell,
// x (x) y |-> y' (x) x'.  All functions return the pair (y', x') in that
// order.
struct RResult {
  Composition y_prime;  // in B_m
  Composition x_prime;  // in B_ell

  bool operator==(const RResult&) const = default;
};

// Dot-pairing rule: each dot of y grabs the rightmost unpaired dot of x
// strictly to its left (cyclically, a full wrap ending at its own box);
// the unpaired dots of x move up.  Only stated for ell > m.
RResult apply_r_ny(const Composition& x, const Composition& y);

// Piecewise-linear formula
//   x'_i = x_i + Q_i - Q_{i-1},  y'_i = y_i + Q_{i-1} - Q_i,
//   Q_i = min_{1<=k<=L} ( sum_{j=1}^{k-1} x_{i+j} + sum_{j=k+1}^{L} y_{i+j} )
// with cyclic indices; valid for any pair of weights.
RResult apply_r_pl(const Composition& x, const Composition& y);

// Dispatch: identity for equal weights, NY rule for ell > m, piecewise-linear
// formula for ell < m.
RResult apply_r(const Composition& x, const Composition& y);

// 0/1 matrix element: 1 iff R(i (x) j) = b (x) a.
int r_element(const Composition& a, const Composition& b, const Composition& i,
              const Composition& j);

// (R(x)1)(1(x)R)(R(x)1) = (1(x)R)(R(x)1)(1(x)R) on x (x) y (x) z
bool yang_baxter_check(const Composition& x, const Composition& y,
                       const Composition& z);

// NY pairing with an explicit processing order of y's dots (one entry per
// dot: the site it sits on).  Used to property-test order independence.
RResult apply_r_ny_ordered(const Composition& x, const Composition& y,
                           const std::vector<int>& dot_order);

}  // namespace tazrp
