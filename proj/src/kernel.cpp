#include "tazrp/kernel.hpp"

#include <utility>

namespace tazrp {

std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> a) {
  const long n = static_cast<long>(a.size());
  const long m = n == 0 ? 0 : static_cast<long>(a[0].size());

  std::vector<std::pair<long, long>> pivots;  // (row, col) in echelon order
  Int prev = 1;
  long rank = 0;
  for (long col = 0; col < m && rank < n; ++col) {
    long pr = -1;
    for (long r = rank; r < n; ++r)
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    const Int p = a[rank][col];
    for (long r = rank + 1; r < n; ++r) {
      // Bareiss update: stays integral, divisions are exact
      const Int f = a[r][col];
      for (long j = col; j < m; ++j) a[r][j] = (p * a[r][j] - f * a[rank][j]) / prev;
    }
    prev = p;
    pivots.emplace_back(rank, col);
    ++rank;
  }

  std::vector<bool> is_pivot_col(m, false);
  for (auto& [r, c] : pivots) is_pivot_col[c] = true;

  std::vector<std::vector<Int>> basis;
  for (long f = 0; f < m; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Rat> x(m, Rat(0));
    x[f] = 1;
    for (long r = rank - 1; r >= 0; --r) {
      const long pc = pivots[r].second;
      Rat s = 0;
      for (long j = pc + 1; j < m; ++j)
        if (x[j] != 0 && a[r][j] != 0) s += Rat(a[r][j]) * x[j];
      x[pc] = -s / Rat(a[r][pc]);
    }
    // clear denominators, reduce to a primitive vector
    Int lcm = 1;
    for (const Rat& v : x) {
      Int den = denominator(v);
      lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<Int> vi(m);
    Int g = 0;
    for (long j = 0; j < m; ++j) {
      vi[j] = numerator(x[j]) * (lcm / denominator(x[j]));
      g = gcd(g, vi[j]);
    }
    if (g > 1)
      for (auto& v : vi) v /= g;
    for (long j = 0; j < m; ++j) {
      if (vi[j] == 0) continue;
      if (vi[j] < 0)
        for (auto& v : vi) v = -v;
      break;
    }
    basis.push_back(std::move(vi));
  }
  return basis;
}

}  // namespace tazrp
