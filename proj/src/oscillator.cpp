#include "tazrp/oscillator.hpp"

#include <stdexcept>

namespace tazrp {

namespace {

// (a+)^p (a-)^q rewritten over the basis: the pure shift minus the rank-one
// terms it kills, e.g. a+ a- = 1 - k.  Only needed when both powers are
// positive.
void expand_plus_minus(int p, int q, const Int& coeff, OscillatorElement& out);

}  // namespace

OscillatorElement::OscillatorElement(const OscMonomial& m, Int coeff) {
  add_term(m, coeff);
}

Int OscillatorElement::coeff(const OscMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void OscillatorElement::add_term(const OscMonomial& m, const Int& coeff) {
  if (coeff == 0) return;
  if (!m.kflag && m.plus > 0 && m.minus > 0) {
    // keep the normal form invariant
    expand_plus_minus(m.plus, m.minus, coeff, *this);
    return;
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

OscillatorElement& OscillatorElement::operator+=(const OscillatorElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

OscillatorElement OscillatorElement::operator+(const OscillatorElement& other) const {
  OscillatorElement out = *this;
  out += other;
  return out;
}

namespace {

void expand_plus_minus(int p, int q, const Int& coeff, OscillatorElement& out) {
  if (p >= q)
    out.add_term({p - q, false, 0}, coeff);
  else
    out.add_term({0, false, q - p}, coeff);
  const int lo = p < q ? p : q;
  for (int t = 0; t < lo; ++t)
    out.add_term({t + (p > q ? p - q : 0), true, t + (q > p ? q - p : 0)},
                 -coeff);
}

OscillatorElement mono_mul(const OscMonomial& m1, const OscMonomial& m2,
                           const Int& coeff) {
  // collapse the middle (a-)^{m1.minus} (a+)^{m2.plus} via a- a+ = 1
  const int up = m2.plus > m1.minus ? m2.plus - m1.minus : 0;
  const int down = m1.minus > m2.plus ? m1.minus - m2.plus : 0;
  if (m1.kflag && up > 0) return OscillatorElement::zero();   // k a+ = 0
  if (m2.kflag && down > 0) return OscillatorElement::zero();  // a- k = 0
  const int p = m1.plus + up;
  const int q = down + m2.minus;
  OscillatorElement out;
  out.add_term({p, m1.kflag || m2.kflag, q}, coeff);
  return out;
}

}  // namespace

OscillatorElement OscillatorElement::operator*(const OscillatorElement& other) const {
  OscillatorElement out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out += mono_mul(m1, m2, c1 * c2);
  return out;
}

OscillatorElement osc_mul(const OscillatorElement& a, const OscillatorElement& b) {
  return a * b;
}

Int osc_trace(const OscillatorElement& e) {
  if (e.coeff(OscMonomial::id()) != 0)
    throw std::domain_error("osc_trace: identity component diverges");
  Int t = 0;
  for (const auto& [m, c] : e.terms())
    if (m.kflag && m.plus == m.minus) t += c;
  return t;
}

Int fock_element(const OscillatorElement& e, int c, int m) {
  Int v = 0;
  for (const auto& [mono, coeff] : e.terms()) {
    if (m < mono.minus) continue;
    if (mono.kflag && m != mono.minus) continue;
    if (c == m - mono.minus + mono.plus) v += coeff;
  }
  return v;
}

OscillatorElement rhat(int a, int b, int i, int j) {
  if (a < 0 || b < 0 || i < 0 || j < 0)
    throw std::invalid_argument("rhat: labels must be nonnegative");
  if (a + b != i + j || a < j) return OscillatorElement::zero();
  OscillatorElement out;
  out.add_term({j, a > j, b}, 1);
  return out;
}

SparseIntMat truncate(const OscillatorElement& e, int cutoff) {
  SparseIntMat mat(cutoff + 1, cutoff + 1);
  for (const auto& [mono, coeff] : e.terms()) {
    for (int m = mono.minus; m <= cutoff; ++m) {
      if (mono.kflag && m != mono.minus) break;
      const int c = m - mono.minus + mono.plus;
      if (c <= cutoff) mat.add(c, m, coeff);
    }
  }
  return mat;
}

std::string OscillatorElement::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (m.plus) mono += "(a+)^" + std::to_string(m.plus) + " ";
    if (m.kflag) mono += "k ";
    if (m.minus) mono += "(a-)^" + std::to_string(m.minus) + " ";
    if (mono.empty()) mono = "1 ";
    out += c.str() + " * " + mono;
  }
  return out;
}

}  // namespace tazrp
