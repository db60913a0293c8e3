#include "tazrp/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace tazrp {

std::uint64_t CounterRng::next() {
  std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform01() {
  // (0,1]: zero would give an infinite holding time
  return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
}

std::uint64_t CounterRng::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded: n must be positive");
  const std::uint64_t limit = n * (~0ULL / n);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

std::vector<std::pair<int, int>> enabled_moves(const Configuration& c) {
  std::vector<std::pair<int, int>> moves;
  const int L = c.L();
  for (int i = 0; i < L; ++i)
    for (int k = 1; k <= c.sites[(i + 1) % L].total(); ++k)
      moves.emplace_back(i, k);
  return moves;
}

std::uint64_t enabled_move_count(const Configuration& c) {
  std::uint64_t n = 0;
  for (const auto& s : c.sites) n += s.total();
  return n;
}

std::uint64_t enabled_move_count(const MultilineState& x) {
  return set_A(x).size();
}

namespace {

template <typename State, typename MoveCount, typename Step, typename Rank>
SimulationResult run_gillespie(State state, long space_size,
                               std::uint64_t events, std::uint64_t burn_in,
                               std::uint64_t seed, MoveCount move_count,
                               Step step, Rank rank) {
  CounterRng rng(seed);
  std::vector<Rat> occupation(space_size, Rat(0));
  double total = 0.0;
  long idx = static_cast<long>(rank(state));
  for (std::uint64_t e = 0; e < events; ++e) {
    const std::uint64_t moves = move_count(state);
    if (moves == 0)
      throw std::runtime_error("simulate: absorbing state encountered");
    const double dt = -std::log(rng.uniform01()) / static_cast<double>(moves);
    if (e >= burn_in) {
      occupation[idx] += Rat(dt);  // doubles are dyadic, so this is exact
      total += dt;
    }
    const std::uint64_t pick = rng.bounded(moves);
    state = step(state, pick);
    idx = static_cast<long>(rank(state));
  }
  Distribution d;
  d.normalization = 1;
  Rat sum = 0;
  for (const Rat& w : occupation) sum += w;
  d.weights.resize(space_size);
  for (long i = 0; i < space_size; ++i)
    d.weights[i] = sum == 0 ? Rat(0) : occupation[i] / sum;
  SimulationResult r;
  r.occupation = std::move(d);
  r.events = events;
  r.total_time = total;
  return r;
}

}  // namespace

SimulationResult simulate_tazrp(const MultiplicityArray& m, int L,
                                std::uint64_t events, std::uint64_t burn_in,
                                std::uint64_t seed,
                                std::optional<Configuration> initial) {
  Configuration state =
      initial ? *initial : unrank_configuration(0, m, L);
  const long size = static_cast<long>(sector_size(m, L));
  auto move_count = [](const Configuration& c) { return enabled_move_count(c); };
  auto step = [L](const Configuration& c, std::uint64_t pick) {
    // moves enumerate as (i, k): site i pulls the k smallest of site i+1
    for (int i = 0; i < L; ++i) {
      const std::uint64_t r = c.sites[(i + 1) % L].total();
      if (pick < r) return apply_tau(c, i, static_cast<int>(pick) + 1);
      pick -= r;
    }
    throw std::logic_error("simulate: move index out of range");
  };
  auto rank = [](const Configuration& c) { return rank_configuration(c); };
  return run_gillespie(std::move(state), size, events, burn_in, seed,
                       move_count, step, rank);
}

SimulationResult simulate_lp(const MultiplicityArray& m, int L,
                             std::uint64_t events, std::uint64_t burn_in,
                             std::uint64_t seed,
                             std::optional<MultilineState> initial) {
  MultilineState state = initial ? *initial : unrank_multiline(0, m, L);
  const long size = static_cast<long>(count_B(m, L));
  auto move_count = [](const MultilineState& x) {
    return enabled_move_count(x);
  };
  auto step = [L](const MultilineState& x, std::uint64_t pick) {
    std::vector<TriplePointer> moves = set_A(x);
    const TriplePointer& p = moves[pick];
    return L >= 2 ? map_T(x, p).second : x;
  };
  auto rank = [](const MultilineState& x) { return rank_multiline(x); };
  return run_gillespie(std::move(state), size, events, burn_in, seed,
                       move_count, step, rank);
}

}  // namespace tazrp
