#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tazrp/composition.hpp"
#include "tazrp/sparse.hpp"

namespace tazrp {

// An n-line state x^1 (x) ... (x) x^n in B(m).  rows[a-1] holds x^a, so the
// storage is bottom-up; the tableau/text form prints row n first.  The
// boundary convention x^0 = x^{n+1} = 0 is built into x().
struct MultilineState {
  std::vector<Composition> rows;

  MultilineState() = default;
  explicit MultilineState(std::vector<Composition> r);

  int n() const { return static_cast<int>(rows.size()); }
  int L() const { return rows.empty() ? 0 : rows[0].length(); }
  // x^a_i with a in [0, n+1] (boundary rows are zero) and cyclic site i
  int x(int a, long i) const;

  bool operator==(const MultilineState&) const = default;
  auto operator<=>(const MultilineState&) const = default;
};

// (i, a, k): site i (0-based, cyclic), row a in [1,n], dot index k >= 1.
// to_text prints the site 1-based.
struct TriplePointer {
  int i;
  int a;
  int k;

  bool operator==(const TriplePointer&) const = default;
  auto operator<=>(const TriplePointer&) const = default;
};

// A_x: pointers with 1 <= k <= (x^a_{i+1} - x^{a-1}_i)_+
// B_x: pointers with 1 <= k <= (x^a_i - x^{a+1}_{i+1})_+
// Both sorted by (i, a, k).
std::vector<TriplePointer> set_A(const MultilineState& x);
std::vector<TriplePointer> set_B(const MultilineState& x);
bool in_set_A(const MultilineState& x, const TriplePointer& p);
bool in_set_B(const MultilineState& x, const TriplePointer& p);

// The bijection T: (x, p in A_x) -> (q in B_y, y).  Dots move one slot to
// the left within columns i, i+1 of rows a..c.  Requires L >= 2.
std::pair<TriplePointer, MultilineState> map_T(const MultilineState& x,
                                               const TriplePointer& p);

// The inverse bijection S: (q in B_x, x) -> (y, p in A_y).  Requires L >= 2.
std::pair<MultilineState, TriplePointer> map_S(const TriplePointer& q,
                                               const MultilineState& x);

// T^k_{i,a}: the y of map_T when (i,a,k) is in A_x, else x unchanged.
MultilineState evolve(const MultilineState& x, int i, int a, int k);

// Canonical order on B(m): lexicographic by (rank of x^1, ..., rank of x^n).
std::vector<MultilineState> enumerate_B(const MultiplicityArray& m, int L);
Int rank_multiline(const MultilineState& x);
MultilineState unrank_multiline(Int index, const MultiplicityArray& m, int L);

// H_LP = sum_{i,a,k} (T^k_{i,a} - 1) over the canonical enumeration;
// diagonal entries are -|A_x|.
SparseIntMat build_h_lp(const MultiplicityArray& m, int L,
                        long max_states = 200000);

// true iff the kernel of H_LP is one-dimensional and spanned by the
// all-ones vector
bool verify_uniform(const MultiplicityArray& m, int L,
                    long max_states = 200000);

// rows joined by "/", top row (a = n) first: "001/210/202/114"
std::string to_text(const MultilineState& x);
MultilineState parse_multiline(const std::string& text);
std::string to_text(const TriplePointer& p);

}  // namespace tazrp
