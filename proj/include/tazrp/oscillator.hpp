#pragma once

#include <compare>
#include <map>
#include <string>

#include "tazrp/ints.hpp"
#include "tazrp/sparse.hpp"

namespace tazrp {

// Basis monomial of the q=0-oscillator algebra: (a+)^plus k^kflag (a-)^minus.
// kflag = false covers 1, (a+)^r and (a-)^r; kflag = true covers
// (a+)^s k (a-)^t.  Higher powers of k collapse since k^2 = k.
struct OscMonomial {
  int plus = 0;
  bool kflag = false;
  int minus = 0;

  bool operator==(const OscMonomial&) const = default;
  auto operator<=>(const OscMonomial&) const = default;

  static OscMonomial id() { return {0, false, 0}; }
  static OscMonomial raise(int r) { return {r, false, 0}; }
  static OscMonomial lower(int r) { return {0, false, r}; }
  static OscMonomial pkm(int s, int t) { return {s, true, t}; }
};

// Exact integer combination of basis monomials, kept in normal form under
// the relations k^2 = k, k a+ = 0, a- k = 0, a- a+ = 1, a+ a- = 1 - k.
class OscillatorElement {
 public:
  OscillatorElement() = default;
  explicit OscillatorElement(const OscMonomial& m, Int coeff = 1);

  static OscillatorElement zero() { return {}; }
  static OscillatorElement one() { return OscillatorElement(OscMonomial::id()); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<OscMonomial, Int>& terms() const { return terms_; }
  Int coeff(const OscMonomial& m) const;

  OscillatorElement& operator+=(const OscillatorElement& other);
  OscillatorElement operator+(const OscillatorElement& other) const;
  OscillatorElement operator*(const OscillatorElement& other) const;
  bool operator==(const OscillatorElement&) const = default;

  void add_term(const OscMonomial& m, const Int& coeff);

  std::string to_text() const;

 private:
  std::map<OscMonomial, Int> terms_;
};

OscillatorElement osc_mul(const OscillatorElement& a, const OscillatorElement& b);

// Tr(X) = sum_m <m|X|m>; defined only on A_0^fin (zero identity component),
// throws otherwise.  Tr((a+)^s k (a-)^t) = delta_{s,t}, shifts are traceless.
Int osc_trace(const OscillatorElement& e);

// <c| X |m> on the Fock space, exact
Int fock_element(const OscillatorElement& e, int c, int m);

// Vertex weight of the q=0-oscillator valued vertex model:
//   Rhat^{a,b}_{i,j} = delta^{a+b}_{i+j} theta(a >= j) (a+)^j k^{theta(a>j)} (a-)^b
OscillatorElement rhat(int a, int b, int i, int j);

// Matrix of X on the Fock space truncated to {|0>,...,|C>}; states pushed
// above the cutoff are dropped.
SparseIntMat truncate(const OscillatorElement& e, int cutoff);

}  // namespace tazrp
