#pragma once

#include <cstdint>
#include <optional>

#include "tazrp/distribution.hpp"
#include "tazrp/multiline.hpp"
#include "tazrp/zrp.hpp"

namespace tazrp {

// Counter-based generator: output(i) = mix64(seed + (i+1) * 0x9E3779B97F4A7C15)
// where mix64 is the SplitMix64 finalizer.  The whole trajectory is a pure
// function of (seed, draw index), so runs are bit-reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next();
  // uniform in (0, 1], 53-bit resolution
  double uniform01();
  // unbiased uniform draw from [0, n) by rejection
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct SimulationResult {
  Distribution occupation;  // time-weighted, normalized to 1, canonical order
  std::uint64_t events = 0;
  double total_time = 0.0;  // time accumulated after burn-in
};

// Gillespie run: exponential holding time with rate = #enabled moves, then a
// uniformly chosen move.  Holding times are measured after `burn_in` events.
// The default initial state is rank 0 of the canonical enumeration.
SimulationResult simulate_tazrp(const MultiplicityArray& m, int L,
                                std::uint64_t events, std::uint64_t burn_in,
                                std::uint64_t seed,
                                std::optional<Configuration> initial = {});

SimulationResult simulate_lp(const MultiplicityArray& m, int L,
                             std::uint64_t events, std::uint64_t burn_in,
                             std::uint64_t seed,
                             std::optional<MultilineState> initial = {});

// TAZRP moves: all (i, k) with 1 <= k <= |sigma_{i+1}|, site 0-based.  The
// line-process moves are set_A(x).
std::vector<std::pair<int, int>> enabled_moves(const Configuration& c);
std::uint64_t enabled_move_count(const Configuration& c);
std::uint64_t enabled_move_count(const MultilineState& x);

}  // namespace tazrp
