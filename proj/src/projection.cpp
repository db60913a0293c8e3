#include "tazrp/projection.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "tazrp/combinatorial_r.hpp"

namespace tazrp {

Composition phi_row(const Configuration& c, int a) {
  std::vector<int> row(c.L());
  for (int i = 0; i < c.L(); ++i) {
    int s = 0;
    for (int b = a; b <= c.n(); ++b) s += c.sites[i].mult[b - 1];
    row[i] = s;
  }
  return Composition(row);
}

MultilineState phi(const Configuration& c) {
  std::vector<Composition> rows;
  rows.reserve(c.n());
  for (int a = 1; a <= c.n(); ++a) rows.push_back(phi_row(c, a));
  return MultilineState(std::move(rows));
}

Configuration phi_inverse(const MultilineState& x) {
  const int n = x.n(), L = x.L();
  for (int a = 1; a < n; ++a)
    if (!dominance_ge(x.rows[a - 1], x.rows[a]))
      throw std::invalid_argument("phi_inverse: state not in B_+(m)");
  std::vector<LocalState> sites;
  sites.reserve(L);
  for (int i = 0; i < L; ++i) {
    std::vector<int> mult(n);
    for (int a = 1; a <= n; ++a) mult[a - 1] = x.x(a, i) - x.x(a + 1, i);
    sites.emplace_back(std::move(mult));
  }
  return Configuration(std::move(sites));
}

std::pair<Composition, std::vector<Composition>> pi_a_with_intermediates(
    const MultilineState& x, int a) {
  if (a < 1 || a > x.n()) throw std::invalid_argument("pi_a: row out of range");
  Composition z = x.rows[a - 1];
  std::vector<Composition> us(a > 1 ? a - 1 : 0,
                              Composition(std::vector<int>(x.L(), 0)));
  for (int b = a - 1; b >= 1; --b) {
    RResult r = apply_r(x.rows[b - 1], z);
    z = r.y_prime;
    us[b - 1] = r.x_prime;  // u^b
  }
  return {std::move(z), std::move(us)};
}

Composition pi_a(const MultilineState& x, int a) {
  return pi_a_with_intermediates(x, a).first;
}

std::vector<Composition> pi_rows(const MultilineState& x) {
  std::vector<Composition> rows;
  rows.reserve(x.n());
  for (int a = 1; a <= x.n(); ++a) rows.push_back(pi_a(x, a));
  return rows;
}

Configuration pi(const MultilineState& x) {
  return phi_inverse(MultilineState(pi_rows(x)));
}

namespace {

// rightmost available dot strictly left of `site`, wrapping once around the
// ring (the wrap may end at `site` itself)
int grab_left(const std::vector<int>& avail, int site, int L) {
  for (int step = 1; step <= L; ++step) {
    int j = site - step;
    j %= L;
    if (j < 0) j += L;
    if (avail[j] > 0) return j;
  }
  return -1;
}

}  // namespace

Configuration pi_queue(const MultilineState& x) {
  const int n = x.n(), L = x.L();
  std::vector<std::vector<int>> dots(n);
  for (int a = 0; a < n; ++a) dots[a] = x.rows[a].entries;
  std::vector<std::vector<int>> species_at(L);  // captured particles per site
  for (int a = n; a >= 2; --a) {
    // each remaining dot of row a walks down to row 1, consuming one dot per
    // row on the way
    const std::vector<int> sources = dots[a - 1];
    dots[a - 1].assign(L, 0);
    for (int s = 0; s < L; ++s) {
      for (int d = 0; d < sources[s]; ++d) {
        int site = s;
        for (int b = a - 1; b >= 1; --b) {
          int hit = grab_left(dots[b - 1], site, L);
          if (hit < 0) throw std::logic_error("pi_queue: walk found no dot");
          --dots[b - 1][hit];
          site = hit;
        }
        species_at[site].push_back(a);
      }
    }
  }
  for (int s = 0; s < L; ++s)
    for (int d = 0; d < dots[0][s]; ++d) species_at[s].push_back(1);
  std::vector<LocalState> sites;
  sites.reserve(L);
  for (int s = 0; s < L; ++s)
    sites.push_back(LocalState::from_multiset(species_at[s], n));
  return Configuration(std::move(sites));
}

Configuration embed(const Configuration& prev, const Composition& bottom) {
  const int L = bottom.length();
  if (prev.L() != L) throw std::invalid_argument("embed: length mismatch");
  const int k = prev.n() + 1;
  int particles = 0;
  for (const auto& s : prev.sites) particles += s.total();
  if (particles > bottom.weight())
    throw std::invalid_argument("embed: bottom row has too few dots");
  std::vector<int> avail = bottom.entries;
  std::vector<std::vector<int>> species_at(L);
  // promoted species a = k..2 capture dots, larger species first
  for (int a = k; a >= 2; --a) {
    for (int s = 0; s < L; ++s) {
      const int cnt = prev.sites[s].mult[a - 2];  // species a-1 before promotion
      for (int d = 0; d < cnt; ++d) {
        int hit = grab_left(avail, s, L);
        if (hit < 0) throw std::logic_error("embed: pairing found no dot");
        --avail[hit];
        species_at[hit].push_back(a);
      }
    }
  }
  for (int s = 0; s < L; ++s)
    for (int d = 0; d < avail[s]; ++d) species_at[s].push_back(1);
  std::vector<LocalState> sites;
  sites.reserve(L);
  for (int s = 0; s < L; ++s)
    sites.push_back(LocalState::from_multiset(species_at[s], k));
  return Configuration(std::move(sites));
}

Configuration pi_embed(const MultilineState& x) {
  const int n = x.n(), L = x.L();
  // x^n read as a 1-TAZRP state
  std::vector<LocalState> sites;
  sites.reserve(L);
  for (int i = 0; i < L; ++i)
    sites.push_back(LocalState(std::vector<int>{x.rows[n - 1].entries[i]}));
  Configuration cur(std::move(sites));
  for (int a = n - 1; a >= 1; --a) cur = embed(cur, x.rows[a - 1]);
  return cur;
}

bool intertwining_check(const MultiplicityArray& m, int L, long max_states) {
  SparseIntMat h_lp = build_h_lp(m, L, max_states);
  SparseIntMat h_t = build_h_tazrp(m, L, max_states);
  const long nb = h_lp.rows(), ns = h_t.rows();
  SparseIntMat proj(ns, nb);
  std::vector<MultilineState> space = enumerate_B(m, L);
  for (long c = 0; c < nb; ++c)
    proj.add(static_cast<long>(rank_configuration(pi(space[c]))), c, 1);
  return proj.multiply(h_lp) == h_t.multiply(proj);
}

SteadyState steady_state_by_counting(const MultiplicityArray& m, int L,
                                     int threads) {
  if (threads <= 0) {
    threads = 1;
    if (const char* env = std::getenv("TAZRP_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) threads = v;
    }
  }
  std::vector<MultilineState> space = enumerate_B(m, L);
  const long ns = static_cast<long>(sector_size(m, L));
  const long nb = static_cast<long>(space.size());
  std::vector<std::vector<long>> partial(
      threads, std::vector<long>(ns, 0));
  auto work = [&](int t) {
    for (long idx = t; idx < nb; idx += threads)
      ++partial[t][static_cast<long>(rank_configuration(pi(space[idx])))];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Int> weights(ns, Int(0));
  for (int t = 0; t < threads; ++t)
    for (long s = 0; s < ns; ++s) weights[s] += partial[t][s];
  return {std::move(weights), count_B(m, L)};
}

}  // namespace tazrp
