#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tazrp/matrix_product.hpp"
#include "tazrp/projection.hpp"

using namespace tazrp;

namespace {

SparseIntMat kron(const SparseIntMat& a, const SparseIntMat& b) {
  SparseIntMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long ra = 0; ra < a.rows(); ++ra)
    for (const auto& [ca, va] : a.row(ra))
      for (long rb = 0; rb < b.rows(); ++rb)
        for (const auto& [cb, vb] : b.row(rb))
          out.add(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
  return out;
}

OscMonomial pkm_or_shift(int plus, int kpow, int minus) {
  return {plus, kpow > 0, minus};
}

}  // namespace

TEST_CASE("two-species corner transfer matrix in closed form") {
  // sum_j (a+)^j k^{s1} (a-)^{s2}, every edge label (including the free right
  // edge j + s1) capped by the cutoff
  const int C = 4;
  for (int s1 = 0; s1 <= 2; ++s1)
    for (int s2 = 0; s2 <= 2; ++s2) {
      FockOperator x = x_sigma(LocalState({s1, s2}), C);
      CHECK(x.factors == 1);
      OscillatorElement expect;
      for (int j = 0; j + s1 <= C; ++j)
        expect.add_term(pkm_or_shift(j, s1, s2), 1);
      CHECK(x.mat == truncate(expect, C));
    }
}

TEST_CASE("three-species corner transfer matrix in closed form") {
  const int C = 3;
  for (auto [s1, s2, s3] :
       std::vector<std::array<int, 3>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                       {0, 1, 1}, {1, 1, 0}, {2, 1, 1}}) {
    FockOperator x = x_sigma(LocalState({s1, s2, s3}), C);
    CHECK(x.factors == 3);
    SparseIntMat expect((C + 1) * (C + 1) * (C + 1),
                        (C + 1) * (C + 1) * (C + 1));
    // summation range from the staircase, all edge labels capped by C:
    // bottom edges i, j, the internal edge k <= s1 + i, and the free right
    // edges s1+i, s1+i+j-k, s2+k
    for (int i = 0; i + s1 <= C; ++i)
      for (int j = 0; j <= C; ++j)
        for (int k = 0; k <= s1 + i && k <= C; ++k) {
          if (s1 + i + j - k > C || s2 + k > C) continue;
          // (bottom right) (x) (top right) (x) (bottom left)
          SparseIntMat f1 =
              truncate(OscillatorElement(pkm_or_shift(j, s1 + i - k, k)), C);
          SparseIntMat f2 =
              truncate(OscillatorElement(pkm_or_shift(k, s2, s3)), C);
          SparseIntMat f3 =
              truncate(OscillatorElement(pkm_or_shift(i, s1, s2 + s3)), C);
          SparseIntMat term = kron(kron(f1, f2), f3);
          for (long r = 0; r < term.rows(); ++r)
            for (const auto& [c, v] : term.row(r)) expect.add(r, c, v);
        }
    CHECK(x.mat == expect);
  }
}

TEST_CASE("matrix product traces reproduce the L=4 two-species table") {
  CHECK(steady_prob_mp(parse_configuration("-|-|-|12", 2)) == 4);
  CHECK(steady_prob_mp(parse_configuration("-|-|1|2", 2)) == 3);
  CHECK(steady_prob_mp(parse_configuration("-|1|-|2", 2)) == 2);
  CHECK(steady_prob_mp(parse_configuration("-|-|2|1", 2)) == 1);
}

TEST_CASE("matrix product value for the three-species example") {
  CHECK(steady_prob_mp(parse_configuration("1|2|23", 3)) == 5);
}

TEST_CASE("sector totals and cutoff behaviour") {
  MultiplicityArray m({1, 1});
  SteadyState mp = steady_state_mp(m, 3);
  Int total = 0;
  for (const Int& w : mp.weights) total += w;
  CHECK(total == count_B(m, 3));

  // explicit stability: the default cutoff ell_1 already saturates the value
  Configuration c = parse_configuration("1|2|23", 3);
  const int ell1 = 4;
  CHECK(steady_prob_mp(c, ell1, false) == steady_prob_mp(c, ell1 + 1, false));
  CHECK_THROWS(steady_prob_mp(c, ell1 - 1));

  // single species: the formula degenerates to the uniform value 1
  CHECK(steady_prob_mp(parse_configuration("mult:2,0,1")) == 1);
}

TEST_CASE("crystal corner transfer matrix sum") {
  CHECK(steady_prob_ctm(parse_configuration("1|2|23", 3)) == 5);

  MultiplicityArray m121({1, 2, 1});
  CHECK(steady_prob_ctm(parse_configuration("-|-|1223", 3)) ==
        condensation_probability(m121, 3));

  MultiplicityArray m11({1, 1});
  SteadyState ctm = steady_state_ctm(m11, 3);
  SteadyState mp = steady_state_mp(m11, 3);
  SteadyState kernel = steady_state_kernel(m11, 3);
  CHECK(ctm.weights == mp.weights);
  CHECK(ctm.weights == kernel.weights);
}

TEST_CASE("factorized R matrix elements") {
  auto c = [](const char* t) { return parse_composition(t); };
  CHECK(r_element_mp(c("1201"), c("0021"), c("0121"), c("1101")) == 1);
  CHECK(r_element_mp(c("1111"), c("0111"), c("0121"), c("1101")) == 0);
  CHECK(r_element_fixed_point(c("1201"), c("0021"), c("0121"), c("1101")) == 1);
  CHECK(r_element_fixed_point(c("1111"), c("0111"), c("0121"), c("1101")) == 0);
  CHECK_THROWS(r_element_mp(c("10"), c("01"), c("10"), c("01")));  // ell = m

  // exhaustive agreement with the bijection on B_3 (x) B_1, L = 3
  for (const auto& i : enumerate_compositions(3, 3))
    for (const auto& j : enumerate_compositions(1, 3))
      for (const auto& a : enumerate_compositions(3, 3))
        for (const auto& b : enumerate_compositions(1, 3)) {
          const int expected = r_element(a, b, i, j);
          CHECK(r_element_mp(a, b, i, j) == expected);
          CHECK(r_element_fixed_point(a, b, i, j) == expected);
        }
}

TEST_CASE("four species: six-factor staircase against the kernel") {
  MultiplicityArray m({1, 1, 1, 1});
  SteadyState kernel = steady_state_kernel(m, 2);
  SteadyState mp = steady_state_mp(m, 2, -1, false);
  CHECK(kernel.weights == mp.weights);
  Configuration c = parse_configuration("12|34", 4);
  CHECK(steady_prob_mp(c, -1, false) == steady_prob_ctm(c));
}
