#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tazrp/ints.hpp"

namespace tazrp {

// A composition of a nonnegative weight into L >= 1 nonnegative parts: an
// element of the crystal B_ell on a periodic chain of L sites.
struct Composition {
  std::vector<int> entries;

  Composition() = default;
  explicit Composition(std::vector<int> e);

  int length() const { return static_cast<int>(entries.size()); }
  int weight() const;
  // cyclic access; any integer index is reduced mod L
  int at(long i) const;

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
};

// number of compositions of `weight` into `length` parts:
// binomial(length-1+weight, weight)
Int composition_count(int weight, int length);

// All compositions of `weight` into `length` parts in reverse-lexicographic
// order: entry vectors in decreasing lexicographic order, so
// (w,0,...,0) comes first and (0,...,0,w) last.
std::vector<Composition> enumerate_compositions(int weight, int length);

// position of c in enumerate_compositions(c.weight(), c.length())
Int rank_composition(const Composition& c);
Composition unrank_composition(Int index, int weight, int length);

// u >= v componentwise (u - v has no negative entry); weights may differ
bool dominance_ge(const Composition& u, const Composition& v);

// Compact text: digit string when every entry <= 9 ("0121"), else
// comma-separated ("10,0,2").
std::string to_text(const Composition& c);
Composition parse_composition(const std::string& text);

// Sector multiplicities m_1..m_n, all >= 1 (basic sector), with the derived
// tail sums ell_a = m_a + ... + m_n, strictly decreasing in a.
struct MultiplicityArray {
  std::vector<int> m;
  std::vector<int> ell;

  explicit MultiplicityArray(std::vector<int> mult);

  int n() const { return static_cast<int>(m.size()); }
  // ell_a for a in [1,n]
  int ell_of(int a) const { return ell[a - 1]; }
  int ell1() const { return ell[0]; }

  bool operator==(const MultiplicityArray&) const = default;
};

// #B(m) = prod_{a=1}^n binomial(L-1+ell_a, ell_a)
Int count_B(const MultiplicityArray& m, int L);

}  // namespace tazrp
