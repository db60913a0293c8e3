#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tazrp {

// Counts of crystal elements grow combinatorially, so everything that counts
// or weighs states is arbitrary precision.  Entry values themselves stay
// machine ints.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int binomial(long n, long k);

}  // namespace tazrp
