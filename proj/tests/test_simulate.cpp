#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tazrp/projection.hpp"
#include "tazrp/simulate.hpp"

using namespace tazrp;

TEST_CASE("counter rng is a pure function of seed and counter") {
  CounterRng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    auto va = a.next();
    CHECK(va == b.next());
    CHECK(va != c.next());
  }
  CounterRng d(7);
  for (int i = 0; i < 1000; ++i) {
    double u = d.uniform01();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    CHECK(d.bounded(6) < 6);
  }
}

TEST_CASE("enabled move counts") {
  Configuration c = parse_configuration("3|3|1124", 4);
  CHECK(enabled_move_count(c) == 6);
  CHECK(enabled_moves(c).size() == 6);
  CHECK(enabled_move_count(parse_multiline("001/210/202/114")) == 7);
  // all particles on one site: exactly ell_1 moves, all from the feeding site
  auto condensed = enabled_moves(parse_configuration("-|-|1233", 3));
  REQUIRE(condensed.size() == 4);
  for (const auto& [i, k] : condensed) CHECK(i == 1);  // site 2 pulls from 3
}

TEST_CASE("total variation distance") {
  Distribution d1{{Rat(2), Rat(1), Rat(1), Rat(2)}, 6};
  d1.validate();
  CHECK(tv_distance(d1, d1) == 0);

  Distribution u{{Rat(1), Rat(1), Rat(1), Rat(1)}, 4};
  CHECK(tv_distance(u, d1) == Rat(1, 6));

  Distribution a{{Rat(1), Rat(0)}, 1}, b{{Rat(0), Rat(1)}, 1};
  CHECK(tv_distance(a, b) == 1);
  CHECK_THROWS(tv_distance(a, d1));
  Distribution bad{{Rat(1), Rat(1)}, 3};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("trajectories are reproducible and exactly normalized") {
  MultiplicityArray m({1, 1});
  SimulationResult r1 = simulate_tazrp(m, 2, 20000, 100, 1234);
  SimulationResult r2 = simulate_tazrp(m, 2, 20000, 100, 1234);
  CHECK(r1.occupation.weights == r2.occupation.weights);
  r1.occupation.validate();  // dyadic weights sum exactly to 1

  SimulationResult r3 = simulate_tazrp(m, 2, 20000, 100, 99);
  CHECK(r1.occupation.weights != r3.occupation.weights);
}

TEST_CASE("long runs converge to the exact steady states") {
  MultiplicityArray m({1, 1});
  SteadyState exact = steady_state_kernel(m, 2);
  Distribution target;
  target.normalization = exact.normalization;
  for (const Int& w : exact.weights) target.weights.emplace_back(w);
  SimulationResult sim = simulate_tazrp(m, 2, 1000000, 1000, 20240601);
  CHECK(tv_distance(sim.occupation, target) < Rat(1, 100));

  Distribution uniform;
  uniform.normalization = count_B(m, 2);
  uniform.weights.assign(6, Rat(1));
  SimulationResult lp = simulate_lp(m, 2, 1000000, 1000, 20240601);
  CHECK(tv_distance(lp.occupation, uniform) < Rat(1, 100));
}

TEST_CASE("single-site chain is a fixed point") {
  MultiplicityArray m({1, 1});
  SimulationResult r = simulate_tazrp(m, 1, 1000, 10, 5);
  REQUIRE(r.occupation.weights.size() == 1);
  CHECK(r.occupation.weights[0] == 1);
}
