#include "tazrp/combinatorial_r.hpp"

#include <limits>
#include <stdexcept>

namespace tazrp {

namespace {

void check_lengths(const Composition& x, const Composition& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("combinatorial R: length mismatch");
}

// One NY pairing pass.  `order` lists the site of each y-dot in processing
// order; pairing greedily takes the rightmost available x-dot strictly left,
// wrapping around the ring (the wrap may end in the dot's own box).
RResult ny_pairing(const Composition& x, const Composition& y,
                   const std::vector<int>& order) {
  const int L = x.length();
  std::vector<int> avail = x.entries;
  std::vector<int> paired(L, 0);
  for (int s : order) {
    int hit = -1;
    for (int step = 1; step <= L; ++step) {
      int j = s - step;
      j %= L;
      if (j < 0) j += L;
      if (avail[j] > 0) {
        hit = j;
        break;
      }
    }
    if (hit < 0) throw std::logic_error("NY pairing failed: not enough dots in x");
    --avail[hit];
    ++paired[hit];
  }
  std::vector<int> yp(L), xp(L);
  for (int i = 0; i < L; ++i) {
    yp[i] = paired[i];
    xp[i] = y.entries[i] + x.entries[i] - paired[i];
  }
  return {Composition(yp), Composition(xp)};
}

std::vector<int> left_to_right_order(const Composition& y) {
  std::vector<int> order;
  order.reserve(y.weight());
  for (int i = 0; i < y.length(); ++i)
    for (int d = 0; d < y.entries[i]; ++d) order.push_back(i);
  return order;
}

}  // namespace

RResult apply_r_ny(const Composition& x, const Composition& y) {
  check_lengths(x, y);
  if (x.weight() <= y.weight())
    throw std::invalid_argument("apply_r_ny: NY rule requires ell > m");
  return ny_pairing(x, y, left_to_right_order(y));
}

RResult apply_r_ny_ordered(const Composition& x, const Composition& y,
                           const std::vector<int>& dot_order) {
  check_lengths(x, y);
  if (x.weight() <= y.weight())
    throw std::invalid_argument("apply_r_ny: NY rule requires ell > m");
  return ny_pairing(x, y, dot_order);
}

RResult apply_r_pl(const Composition& x, const Composition& y) {
  check_lengths(x, y);
  const int L = x.length();
  std::vector<long> q(L);
  for (int i = 0; i < L; ++i) {
    long best = std::numeric_limits<long>::max();
    for (int k = 1; k <= L; ++k) {
      long s = 0;
      for (int j = 1; j <= k - 1; ++j) s += x.at(i + j);
      for (int j = k + 1; j <= L; ++j) s += y.at(i + j);
      if (s < best) best = s;
    }
    q[i] = best;
  }
  std::vector<int> xp(L), yp(L);
  for (int i = 0; i < L; ++i) {
    long qm = q[(i - 1 + L) % L];
    xp[i] = static_cast<int>(x.entries[i] + q[i] - qm);
    yp[i] = static_cast<int>(y.entries[i] + qm - q[i]);
  }
  return {Composition(yp), Composition(xp)};
}

RResult apply_r(const Composition& x, const Composition& y) {
  check_lengths(x, y);
  const int l = x.weight(), m = y.weight();
  if (l == m) return {x, y};  // R_{l,l} is the identity
  if (l > m) return apply_r_ny(x, y);
  return apply_r_pl(x, y);
}

int r_element(const Composition& a, const Composition& b, const Composition& i,
              const Composition& j) {
  check_lengths(a, b);
  check_lengths(i, j);
  check_lengths(a, i);
  if (a.weight() != i.weight() || b.weight() != j.weight()) return 0;
  // weight conservation: zero unless a + b = i + j componentwise
  for (int s = 0; s < a.length(); ++s)
    if (a.entries[s] + b.entries[s] != i.entries[s] + j.entries[s]) return 0;
  RResult r = apply_r(i, j);
  return (r.y_prime == b && r.x_prime == a) ? 1 : 0;
}

bool yang_baxter_check(const Composition& x, const Composition& y,
                       const Composition& z) {
  check_lengths(x, y);
  check_lengths(y, z);
  // (R x 1)(1 x R)(R x 1)
  RResult r1 = apply_r(x, y);
  RResult r2 = apply_r(r1.x_prime, z);
  RResult r3 = apply_r(r1.y_prime, r2.y_prime);
  // (1 x R)(R x 1)(1 x R)
  RResult s1 = apply_r(y, z);
  RResult s2 = apply_r(x, s1.y_prime);
  RResult s3 = apply_r(s2.x_prime, s1.x_prime);
  return r3.y_prime == s2.y_prime && r3.x_prime == s3.y_prime &&
         r2.x_prime == s3.x_prime;
}

}  // namespace tazrp
