#pragma once

#include <vector>

#include "tazrp/ints.hpp"

namespace tazrp {

// Exact weights over an enumerated state space (the canonical order of
// whichever space the caller fixed), together with the exact total they are
// normalized to.  Steady states carry integer weights summing to #B(m);
// empirical measures carry dyadic rationals summing to 1.
struct Distribution {
  std::vector<Rat> weights;
  Int normalization = 1;

  // throws unless all weights are >= 0 and sum exactly to normalization
  void validate() const;
};

// half the L1 distance after normalizing both sides to total 1; requires
// equal space sizes
Rat tv_distance(const Distribution& a, const Distribution& b);

}  // namespace tazrp
