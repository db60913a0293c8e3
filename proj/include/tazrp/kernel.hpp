#pragma once

#include <vector>

#include "tazrp/ints.hpp"

namespace tazrp {

// Exact right null space of an integer matrix.
//
// Forward elimination is fraction-free (Bareiss), so every intermediate
// entry is an integer; the kernel basis is then recovered by exact rational
// back-substitution and returned as primitive integer vectors (gcd 1, first
// nonzero entry positive).  One basis vector per free column, in column
// order.
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> a);

}  // namespace tazrp
