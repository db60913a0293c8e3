#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tazrp/composition.hpp"
#include "tazrp/sparse.hpp"

namespace tazrp {

// Local state of one site: multiplicity vector (sigma^1,...,sigma^n), i.e.
// sigma^a particles of species a.  Interconverts with the sorted multiset of
// species it represents.
struct LocalState {
  std::vector<int> mult;

  LocalState() = default;
  explicit LocalState(std::vector<int> m);

  int n() const { return static_cast<int>(mult.size()); }
  int total() const;  // |sigma|
  std::vector<int> multiset() const;
  static LocalState from_multiset(const std::vector<int>& species, int n);

  bool operator==(const LocalState&) const = default;
  auto operator<=>(const LocalState&) const = default;
};

struct Configuration {
  std::vector<LocalState> sites;

  Configuration() = default;
  explicit Configuration(std::vector<LocalState> s);

  int L() const { return static_cast<int>(sites.size()); }
  int n() const { return sites.empty() ? 0 : sites[0].n(); }
  // per-species totals (the sector multiplicity this configuration lies in)
  std::vector<int> species_totals() const;

  bool operator==(const Configuration&) const = default;
};

// All (gamma, delta) with (alpha, beta) > (gamma, delta): for k in [1,|beta|]
// the k smallest particles of beta merge into alpha, in order of k.
std::vector<std::pair<LocalState, LocalState>> local_transitions(
    const LocalState& alpha, const LocalState& beta);

// tau^k_i: the k smallest particles of site i+1 hop to site i (cyclic);
// identity when k exceeds the occupancy of site i+1.  Site index 0-based.
Configuration apply_tau(const Configuration& c, int i, int k);

// (sigma_1,...,sigma_L) -> (sigma_L, sigma_1,...,sigma_{L-1})
Configuration cyclic_shift(const Configuration& c);

// #S(m) = prod_a binomial(L+m_a-1, m_a)
Int sector_size(const MultiplicityArray& m, int L);

// Canonical order: the per-species occupation vectors are compositions of
// m_a into L parts; configurations are ordered lexicographically by
// (rank of species-1 row, ..., rank of species-n row).
std::vector<Configuration> enumerate_sector(const MultiplicityArray& m, int L);
Int rank_configuration(const Configuration& c);
Configuration unrank_configuration(Int index, const MultiplicityArray& m, int L);

// Markov matrix H = sum_i sum_k (tau^k_i - 1) over the canonical sector
// enumeration, acting on column probability vectors.  Off-diagonal entries
// accumulate over all (i,k) producing the same move; the diagonal entry of
// every column is -sum_i |sigma_i|.
SparseIntMat build_h_tazrp(const MultiplicityArray& m, int L,
                           long max_states = 200000);

struct SteadyState {
  std::vector<Int> weights;  // by sector rank; positive integers
  Int normalization;         // == count_B(m, L) == sum of weights
};

// Exact kernel of build_h_tazrp, scaled so the weights sum to #B(m).
// Aborts (throws) if the kernel dimension is not 1 or a weight fails to be
// a positive integer.
SteadyState steady_state_kernel(const MultiplicityArray& m, int L,
                                long max_states = 200000);

// P(empty,...,empty,all) = prod_{a=2}^n binomial(L-1+ell_a, ell_a)
Int condensation_probability(const MultiplicityArray& m, int L);

// Text forms.  Multiset form: sites joined by "|", empty site "-", species
// digits ascending ("3|3|1124"); comma-separated when n > 9.  Multiplicity
// form: "mult:" prefix, sites joined by ",", each site a digit string
// ("mult:0010,0010,2101"); '.'-separated when a multiplicity exceeds 9.
std::string to_text(const LocalState& s);
std::string to_text(const Configuration& c);
std::string to_mult_text(const Configuration& c);
// n = 0 infers the species count (max species present; exact for basic
// sectors, where every species occurs).
Configuration parse_configuration(const std::string& text, int n = 0);

}  // namespace tazrp
