#include "tazrp/zrp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tazrp/kernel.hpp"

namespace tazrp {

LocalState::LocalState(std::vector<int> m) : mult(std::move(m)) {
  for (int v : mult)
    if (v < 0) throw std::invalid_argument("negative multiplicity");
}

int LocalState::total() const {
  return std::accumulate(mult.begin(), mult.end(), 0);
}

std::vector<int> LocalState::multiset() const {
  std::vector<int> out;
  out.reserve(total());
  for (int a = 0; a < n(); ++a)
    for (int c = 0; c < mult[a]; ++c) out.push_back(a + 1);
  return out;
}

LocalState LocalState::from_multiset(const std::vector<int>& species, int n) {
  std::vector<int> m(n, 0);
  for (int a : species) {
    if (a < 1 || a > n) throw std::invalid_argument("species out of range");
    ++m[a - 1];
  }
  return LocalState(m);
}

Configuration::Configuration(std::vector<LocalState> s) : sites(std::move(s)) {
  if (sites.empty()) throw std::invalid_argument("configuration needs L >= 1");
  for (const auto& st : sites)
    if (st.n() != sites[0].n())
      throw std::invalid_argument("inconsistent species count across sites");
}

std::vector<int> Configuration::species_totals() const {
  std::vector<int> tot(n(), 0);
  for (const auto& s : sites)
    for (int a = 0; a < n(); ++a) tot[a] += s.mult[a];
  return tot;
}

std::vector<std::pair<LocalState, LocalState>> local_transitions(
    const LocalState& alpha, const LocalState& beta) {
  std::vector<std::pair<LocalState, LocalState>> out;
  const std::vector<int> b = beta.multiset();
  const int r = static_cast<int>(b.size());
  for (int k = 1; k <= r; ++k) {
    LocalState gamma = alpha;
    LocalState delta = beta;
    for (int j = 0; j < k; ++j) {
      ++gamma.mult[b[j] - 1];
      --delta.mult[b[j] - 1];
    }
    out.emplace_back(std::move(gamma), std::move(delta));
  }
  return out;
}

Configuration apply_tau(const Configuration& c, int i, int k) {
  if (k < 1) throw std::invalid_argument("apply_tau: k must be >= 1");
  const int L = c.L();
  int src = (i + 1) % L;
  if (src < 0) src += L;
  int dst = (src - 1 + L) % L;
  if (k > c.sites[src].total()) return c;  // tau^k_i = 1 for k > |beta|
  Configuration out = c;
  const std::vector<int> b = c.sites[src].multiset();
  for (int j = 0; j < k; ++j) {
    --out.sites[src].mult[b[j] - 1];
    ++out.sites[dst].mult[b[j] - 1];
  }
  return out;
}

Configuration cyclic_shift(const Configuration& c) {
  std::vector<LocalState> s;
  s.reserve(c.L());
  s.push_back(c.sites.back());
  for (int i = 0; i + 1 < c.L(); ++i) s.push_back(c.sites[i]);
  return Configuration(std::move(s));
}

Int sector_size(const MultiplicityArray& m, int L) {
  Int r = 1;
  for (int ma : m.m) r *= binomial(L + ma - 1, ma);
  return r;
}

namespace {

// species-a occupation row of a configuration, as a composition of m_a
Composition species_row(const Configuration& c, int a) {
  std::vector<int> row(c.L());
  for (int i = 0; i < c.L(); ++i) row[i] = c.sites[i].mult[a - 1];
  return Composition(row);
}

Configuration from_rows(const std::vector<Composition>& rows, int L) {
  const int n = static_cast<int>(rows.size());
  std::vector<LocalState> sites;
  sites.reserve(L);
  for (int i = 0; i < L; ++i) {
    std::vector<int> m(n);
    for (int a = 0; a < n; ++a) m[a] = rows[a].entries[i];
    sites.emplace_back(std::move(m));
  }
  return Configuration(std::move(sites));
}

}  // namespace

std::vector<Configuration> enumerate_sector(const MultiplicityArray& m, int L) {
  const int n = m.n();
  std::vector<std::vector<Composition>> per_species;
  per_species.reserve(n);
  for (int a = 0; a < n; ++a)
    per_species.push_back(enumerate_compositions(m.m[a], L));
  std::vector<Configuration> out;
  out.reserve(static_cast<size_t>(sector_size(m, L)));
  std::vector<size_t> idx(n, 0);
  while (true) {
    std::vector<Composition> rows;
    rows.reserve(n);
    for (int a = 0; a < n; ++a) rows.push_back(per_species[a][idx[a]]);
    out.push_back(from_rows(rows, L));
    int a = n - 1;
    while (a >= 0 && ++idx[a] == per_species[a].size()) idx[a--] = 0;
    if (a < 0) break;
  }
  return out;
}

Int rank_configuration(const Configuration& c) {
  Int r = 0;
  for (int a = 1; a <= c.n(); ++a) {
    Composition row = species_row(c, a);
    r = r * composition_count(row.weight(), c.L()) + rank_composition(row);
  }
  return r;
}

Configuration unrank_configuration(Int index, const MultiplicityArray& m,
                                   int L) {
  const int n = m.n();
  std::vector<Int> radix(n);
  for (int a = 0; a < n; ++a) radix[a] = composition_count(m.m[a], L);
  std::vector<Composition> rows(n, Composition(std::vector<int>(L, 0)));
  for (int a = n - 1; a >= 0; --a) {
    Int q = index / radix[a];
    rows[a] = unrank_composition(index - q * radix[a], m.m[a], L);
    index = q;
  }
  return from_rows(rows, L);
}

SparseIntMat build_h_tazrp(const MultiplicityArray& m, int L, long max_states) {
  const Int size = sector_size(m, L);
  if (size > max_states)
    throw std::runtime_error("sector exceeds the state guard (" +
                             std::to_string(max_states) + "); raise max_states");
  const long N = static_cast<long>(size);
  std::vector<Configuration> space = enumerate_sector(m, L);
  SparseIntMat h(N, N);
  for (long col = 0; col < N; ++col) {
    const Configuration& c = space[col];
    for (int i = 0; i < L; ++i) {
      const int r = c.sites[(i + 1) % L].total();
      for (int k = 1; k <= r; ++k) {
        Configuration img = apply_tau(c, i, k);
        h.add(static_cast<long>(rank_configuration(img)), col, 1);
        h.add(col, col, -1);
      }
    }
  }
  return h;
}

SteadyState steady_state_kernel(const MultiplicityArray& m, int L,
                                long max_states) {
  SparseIntMat h = build_h_tazrp(m, L, max_states);
  std::vector<std::vector<Int>> basis = integer_kernel(h.to_dense());
  if (basis.size() != 1)
    throw std::runtime_error("steady state kernel dimension is " +
                             std::to_string(basis.size()) + ", expected 1");
  std::vector<Int>& v = basis[0];
  Int total = 0;
  for (const Int& w : v) {
    if (w <= 0) throw std::runtime_error("kernel vector is not positive");
    total += w;
  }
  const Int target = count_B(m, L);
  if (target % total != 0)
    throw std::runtime_error("steady state weights are not integral");
  const Int scale = target / total;
  for (Int& w : v) w *= scale;
  return {std::move(v), target};
}

Int condensation_probability(const MultiplicityArray& m, int L) {
  Int r = 1;
  for (int a = 2; a <= m.n(); ++a) r *= binomial(L - 1 + m.ell_of(a), m.ell_of(a));
  return r;
}

std::string to_text(const LocalState& s) {
  if (s.total() == 0) return "-";
  std::vector<int> ms = s.multiset();
  std::string out;
  const bool digits = s.n() <= 9;
  for (size_t j = 0; j < ms.size(); ++j) {
    if (!digits && j > 0) out += ',';
    out += std::to_string(ms[j]);
  }
  return out;
}

std::string to_text(const Configuration& c) {
  std::string out;
  for (int i = 0; i < c.L(); ++i) {
    if (i > 0) out += '|';
    out += to_text(c.sites[i]);
  }
  return out;
}

std::string to_mult_text(const Configuration& c) {
  std::string out = "mult:";
  bool digits = true;
  for (const auto& s : c.sites)
    for (int v : s.mult)
      if (v > 9) digits = false;
  for (int i = 0; i < c.L(); ++i) {
    if (i > 0) out += ',';
    for (int a = 0; a < c.n(); ++a) {
      if (!digits && a > 0) out += '.';
      out += std::to_string(c.sites[i].mult[a]);
    }
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::vector<int> parse_multiset_site(const std::string& t) {
  std::vector<int> species;
  if (t == "-" || t.empty()) return species;
  if (t.find(',') != std::string::npos) {
    for (const auto& part : split(t, ',')) species.push_back(std::stoi(part));
  } else {
    for (char ch : t) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("bad multiset site: " + t);
      species.push_back(ch - '0');
    }
  }
  return species;
}

}  // namespace

Configuration parse_configuration(const std::string& text, int n) {
  if (text.rfind("mult:", 0) == 0) {
    std::vector<std::string> groups = split(text.substr(5), ',');
    std::vector<LocalState> sites;
    for (const auto& g : groups) {
      std::vector<int> m;
      if (g.find('.') != std::string::npos) {
        for (const auto& part : split(g, '.')) m.push_back(std::stoi(part));
      } else {
        for (char ch : g) {
          if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad multiplicity site: " + g);
          m.push_back(ch - '0');
        }
      }
      sites.emplace_back(std::move(m));
    }
    return Configuration(std::move(sites));
  }
  std::vector<std::string> groups = split(text, '|');
  std::vector<std::vector<int>> multisets;
  int max_species = 0;
  for (const auto& g : groups) {
    multisets.push_back(parse_multiset_site(g));
    for (int a : multisets.back()) max_species = std::max(max_species, a);
  }
  if (n == 0) n = max_species;
  if (n < max_species)
    throw std::invalid_argument("species exceed the declared n");
  std::vector<LocalState> sites;
  sites.reserve(multisets.size());
  for (const auto& ms : multisets)
    sites.push_back(LocalState::from_multiset(ms, n));
  return Configuration(std::move(sites));
}

}  // namespace tazrp
