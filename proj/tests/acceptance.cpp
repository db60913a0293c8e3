// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "golden_util.hpp"
#include "tazrp/matrix_product.hpp"
#include "tazrp/multiline.hpp"
#include "tazrp/projection.hpp"
#include "tazrp/simulate.hpp"
#include "tazrp/verify.hpp"
#include "tazrp/zrp.hpp"

using namespace tazrp;

namespace {

int failures = 0;

std::string mtag(const std::vector<int>& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

void report(int criterion, bool ok, const std::string& what, double secs) {
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), secs);
  if (!ok) ++failures;
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<std::pair<std::vector<int>, int>> criterion_sectors() {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (const auto& g : tazrp_test::golden_steady_states())
    out.emplace_back(g.m, g.L);
  return out;
}

}  // namespace

int main() {
  // 1. golden tables: exact integer match of every reference steady state
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    int sectors = 0;
    for (const auto& g : tazrp_test::golden_steady_states()) {
      ++sectors;
      SteadyState s = steady_state_kernel(MultiplicityArray(g.m), g.L);
      if (s.weights != g.weights) {
        ok = false;
        std::printf("  mismatch in sector m=%s L=%d\n",
                    mtag(g.m).c_str(), g.L);
      }
    }
    report(1, ok,
           "kernel reproduces all " + std::to_string(sectors) +
               " reference steady-state tables exactly",
           elapsed(t0));
  }

  // 2. four-way agreement: kernel = counting = crystal CTM = matrix product
  // 5. cutoff stability at C = ell_1 + 1 (asserted inside steady_state_mp and
  //    rechecked explicitly below)
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true, stable = true;
    auto sectors = criterion_sectors();
    sectors.push_back({{1, 1}, 5});
    for (const auto& [mv, L] : sectors) {
      MultiplicityArray m(mv);
      SteadyState kernel = steady_state_kernel(m, L);
      SteadyState count = steady_state_by_counting(m, L);
      SteadyState ctm = steady_state_ctm(m, L);
      SteadyState mp = steady_state_mp(m, L, -1, false);
      SteadyState mp1 = steady_state_mp(m, L, m.ell1() + 1, false);
      if (!(kernel.weights == count.weights && kernel.weights == ctm.weights &&
            kernel.weights == mp.weights)) {
        ok = false;
        std::printf("  four-way mismatch in sector m=%s L=%d\n",
                    mtag(mv).c_str(), L);
      }
      if (mp.weights != mp1.weights) {
        stable = false;
        std::printf("  cutoff instability in sector m=%s L=%d\n",
                    mtag(mv).c_str(), L);
      }
    }
    double dt = elapsed(t0);
    report(2, ok,
           "kernel = counting = CTM = matrix product on " +
               std::to_string(sectors.size()) + " sectors",
           dt);
    report(5, stable, "matrix product values stable at C = ell_1 + 1", dt);
  }

  // 3. reference point values
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) {
        ok = false;
        std::printf("  point value failed: %s\n", what);
      }
    };
    MultiplicityArray m121({1, 2, 1});
    Configuration c123 = parse_configuration("1|2|23", 3);
    expect(steady_state_by_counting(m121, 3)
                   .weights[static_cast<long>(rank_configuration(c123))] == 5,
           "P(1,2,23) = 5 by counting");
    expect(steady_prob_ctm(c123) == 5, "P(1,2,23) = 5 by crystal CTM");
    expect(steady_prob_mp(c123) == 5, "P(1,2,23) = 5 by matrix product");
    expect(steady_prob_mp(parse_configuration("-|-|-|12", 2)) == 4 &&
               steady_prob_mp(parse_configuration("-|-|1|2", 2)) == 3 &&
               steady_prob_mp(parse_configuration("-|1|-|2", 2)) == 2 &&
               steady_prob_mp(parse_configuration("-|-|2|1", 2)) == 1,
           "matrix product traces 4,3,2,1 in S(1,1), L=4");
    auto cp = [](const char* t) { return parse_composition(t); };
    expect(r_element_mp(cp("1201"), cp("0021"), cp("0121"), cp("1101")) == 1 &&
               r_element_mp(cp("1111"), cp("0111"), cp("0121"), cp("1101")) ==
                   0,
           "factorized R trace values 1 and 0");
    MultilineState x = parse_multiline("001/210/202/114");
    expect(to_text(pi(x)) == "3|3|1124", "pi(114 202 210 001) = (3,3,1124)");
    RResult r = apply_r_ny(cp("03221"), cp("20210"));
    expect(r.x_prime == cp("21320") && r.y_prime == cp("02111"),
           "NY rule worked example");
    auto px = [](std::initializer_list<std::array<int, 3>> l) {
      std::vector<TriplePointer> v;
      for (auto& t : l) v.push_back({t[0] - 1, t[1], t[2]});
      return v;
    };
    expect(set_A(x) == px({{1, 1, 1},
                           {2, 1, 1},
                           {2, 1, 2},
                           {2, 1, 3},
                           {2, 1, 4},
                           {2, 2, 1},
                           {3, 1, 1}}) &&
               set_B(x) == px({{1, 1, 1},
                               {1, 2, 1},
                               {1, 3, 1},
                               {1, 3, 2},
                               {3, 1, 1},
                               {3, 1, 2},
                               {3, 4, 1}}),
           "pointer sets A_x, B_x");
    struct Img {
      std::array<int, 3> p, q;
      const char* y;
    };
    const Img images[] = {
        {{1, 1, 1}, {1, 1, 1}, "001/210/202/204"},
        {{2, 1, 1}, {2, 2, 1}, "001/210/211/123"},
        {{2, 1, 2}, {2, 2, 1}, "001/210/211/132"},
        {{2, 1, 3}, {2, 2, 1}, "001/210/211/141"},
        {{2, 1, 4}, {2, 2, 1}, "001/210/211/150"},
        {{2, 2, 1}, {2, 2, 1}, "001/210/211/114"},
        {{3, 1, 1}, {3, 1, 1}, "001/210/202/015"},
    };
    for (const Img& im : images) {
      auto [q, y] = map_T(x, {im.p[0] - 1, im.p[1], im.p[2]});
      expect(q == TriplePointer{im.q[0] - 1, im.q[1], im.q[2]} &&
                 to_text(y) == im.y,
             "map T image");
    }
    report(3, ok, "reference point-values", elapsed(t0));
  }

  // 4. invariant suites
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto note = [&](const CheckResult& r) {
      if (!r.ok) {
        ok = false;
        for (const auto& l : r.lines) std::printf("  %s\n", l.c_str());
      }
    };
    note(check_yang_baxter(4, 3, 2, 3));
    note(check_r_algorithms(5, 3, 4));
    for (const auto& [mv, L] : criterion_sectors())
      note(check_bijection_ts(MultiplicityArray(mv), L));
    note(check_bijection_ts(MultiplicityArray({2, 1, 2}), 3));
    note(check_bijection_ts(MultiplicityArray({2, 1, 2, 1}), 2));
    for (const auto& mv :
         std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}})
      for (int L = 2; L <= 3; ++L) {
        note(check_uniform_lp(MultiplicityArray(mv), L));
        note(check_intertwining(MultiplicityArray(mv), L));
      }
    // condensation formula against the sector maximum
    for (const auto& [mv, L] : criterion_sectors()) {
      MultiplicityArray m(mv);
      SteadyState s = steady_state_kernel(m, L);
      Int best = 0;
      for (const Int& w : s.weights)
        if (w > best) best = w;
      std::vector<LocalState> sites(L, LocalState(std::vector<int>(m.n(), 0)));
      sites[L - 1] = LocalState(m.m);
      Int at = s.weights[static_cast<long>(
          rank_configuration(Configuration(sites)))];
      if (best != condensation_probability(m, L) || at != best) {
        ok = false;
        std::printf("  condensation mismatch m=%s L=%d\n",
                    mtag(mv).c_str(), L);
      }
    }
    report(4, ok,
           "Yang-Baxter, NY=PL, R o R = id, T/S bijections, uniform LP "
           "kernel, intertwining, condensation",
           elapsed(t0));
  }

  // 6. simulation consistency
  {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = check_simulation(MultiplicityArray({1, 1}), 3, 1000000,
                                     10000, 20250512, 0.02);
    for (const auto& l : r.lines) std::printf("  %s\n", l.c_str());
    report(6, r.ok,
           "seeded 1e6-event trajectories within TV 0.02 of the exact steady "
           "states",
           elapsed(t0));
  }

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS"
                                    : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
