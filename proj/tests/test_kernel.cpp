#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tazrp/kernel.hpp"

using namespace tazrp;

namespace {

// independent rank oracle: plain Gaussian elimination over exact rationals
long rational_rank(std::vector<std::vector<Rat>> a) {
  const long n = static_cast<long>(a.size());
  const long m = n ? static_cast<long>(a[0].size()) : 0;
  long rank = 0;
  for (long c = 0; c < m && rank < n; ++c) {
    long pr = -1;
    for (long r = rank; r < n; ++r)
      if (a[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    for (long r = 0; r < n; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (long j = c; j < m; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool is_zero_product(const std::vector<std::vector<Int>>& a,
                     const std::vector<Int>& v) {
  for (const auto& row : a) {
    Int s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small known kernels") {
  std::vector<std::vector<Int>> a = {{1, 1}, {1, 1}};
  auto basis = integer_kernel(a);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Int>{1, -1});

  std::vector<std::vector<Int>> zero(3, std::vector<Int>(3, 0));
  CHECK(integer_kernel(zero).size() == 3);

  std::vector<std::vector<Int>> full = {{2, 0}, {0, 3}};
  CHECK(integer_kernel(full).empty());
}

TEST_CASE("random matrices agree with the rational elimination oracle") {
  std::mt19937 rng(20240331);
  std::uniform_int_distribution<int> dim(1, 7), val(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const long n = dim(rng), m = dim(rng);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(m));
    std::vector<std::vector<Rat>> ar(n, std::vector<Rat>(m));
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < m; ++c) {
        int v = val(rng);
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) v = 0;
        a[r][c] = v;
        ar[r][c] = v;
      }
    auto basis = integer_kernel(a);
    CHECK(Int(basis.size()) == m - rational_rank(ar));
    for (const auto& v : basis) {
      CHECK(is_zero_product(a, v));
      Int g = 0;
      bool nonzero = false;
      for (const Int& x : v) {
        g = gcd(g, x);
        nonzero = nonzero || x != 0;
      }
      CHECK(nonzero);
      CHECK(g == 1);
    }
  }
}
