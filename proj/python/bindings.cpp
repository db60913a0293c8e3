#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tazrp/combinatorial_r.hpp"
#include "tazrp/matrix_product.hpp"
#include "tazrp/multiline.hpp"
#include "tazrp/projection.hpp"
#include "tazrp/simulate.hpp"
#include "tazrp/zrp.hpp"

namespace py = pybind11;
using namespace tazrp;

namespace {

py::object to_pyint(const Int& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict steady_dict(const MultiplicityArray& m, int L, const SteadyState& s) {
  py::dict out;
  auto space = enumerate_sector(m, L);
  for (size_t i = 0; i < space.size(); ++i)
    out[py::str(to_text(space[i]))] = to_pyint(s.weights[i]);
  return out;
}

py::dict run_steady(const std::vector<int>& m, int L,
                    const std::string& method, int cutoff) {
  MultiplicityArray ma(m);
  SteadyState s = method == "kernel"  ? steady_state_kernel(ma, L)
                  : method == "count" ? steady_state_by_counting(ma, L)
                  : method == "ctm"   ? steady_state_ctm(ma, L)
                  : method == "mp"
                      ? steady_state_mp(ma, L, cutoff)
                      : throw std::invalid_argument("unknown method " + method);
  return steady_dict(ma, L, s);
}

}  // namespace

PYBIND11_MODULE(_tazrp, mod) {
  mod.doc() = "exact multispecies TAZRP steady-state toolkit";

  mod.def(
      "compositions",
      [](int weight, int length) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_compositions(weight, length))
          out.push_back(to_text(c));
        return out;
      },
      py::arg("weight"), py::arg("length"),
      "all compositions in reverse-lexicographic order, as text");

  mod.def(
      "count_states",
      [](const std::vector<int>& m, int L) {
        MultiplicityArray ma(m);
        return py::make_tuple(to_pyint(sector_size(ma, L)),
                              to_pyint(count_B(ma, L)));
      },
      py::arg("m"), py::arg("L"),
      "(#S(m), #B(m)) for the sector and its n-line space");

  mod.def(
      "apply_r",
      [](const std::string& x, const std::string& y) {
        RResult r = apply_r(parse_composition(x), parse_composition(y));
        return py::make_tuple(to_text(r.y_prime), to_text(r.x_prime));
      },
      py::arg("x"), py::arg("y"),
      "combinatorial R: x (x) y -> (y', x')");

  mod.def(
      "yang_baxter",
      [](const std::string& x, const std::string& y, const std::string& z) {
        return yang_baxter_check(parse_composition(x), parse_composition(y),
                                 parse_composition(z));
      },
      py::arg("x"), py::arg("y"), py::arg("z"));

  mod.def(
      "project",
      [](const std::string& state) {
        return to_text(pi(parse_multiline(state)));
      },
      py::arg("state"), "projection to a TAZRP configuration");

  mod.def(
      "project_rows",
      [](const std::string& state) {
        std::vector<std::string> out;
        for (const auto& row : pi_rows(parse_multiline(state)))
          out.push_back(to_text(row));
        return out;
      },
      py::arg("state"));

  mod.def("steady", &run_steady, py::arg("m"), py::arg("L"),
          py::arg("method") = "kernel", py::arg("cutoff") = -1,
          "steady state as {configuration: integer weight}");

  mod.def(
      "steady_prob",
      [](const std::string& config, const std::string& method, int cutoff) {
        Configuration c = parse_configuration(config);
        if (method == "mp") return to_pyint(steady_prob_mp(c, cutoff));
        if (method == "ctm") return to_pyint(steady_prob_ctm(c));
        throw std::invalid_argument("method must be mp or ctm");
      },
      py::arg("config"), py::arg("method") = "mp", py::arg("cutoff") = -1);

  mod.def(
      "condensation",
      [](const std::vector<int>& m, int L) {
        return to_pyint(condensation_probability(MultiplicityArray(m), L));
      },
      py::arg("m"), py::arg("L"));

  mod.def(
      "tau",
      [](const std::string& config, int i, int k) {
        return to_text(apply_tau(parse_configuration(config), i - 1, k));
      },
      py::arg("config"), py::arg("i"), py::arg("k"),
      "tau^k_i with 1-based site index");

  mod.def(
      "simulate",
      [](const std::vector<int>& m, int L, const std::string& process,
         std::uint64_t events, std::uint64_t burn_in, std::uint64_t seed) {
        MultiplicityArray ma(m);
        py::dict out;
        if (process == "tazrp") {
          SimulationResult r = simulate_tazrp(ma, L, events, burn_in, seed);
          auto space = enumerate_sector(ma, L);
          for (size_t i = 0; i < space.size(); ++i)
            out[py::str(to_text(space[i]))] =
                static_cast<double>(r.occupation.weights[i]);
        } else {
          SimulationResult r = simulate_lp(ma, L, events, burn_in, seed);
          auto space = enumerate_B(ma, L);
          for (size_t i = 0; i < space.size(); ++i)
            out[py::str(to_text(space[i]))] =
                static_cast<double>(r.occupation.weights[i]);
        }
        return out;
      },
      py::arg("m"), py::arg("L"), py::arg("process") = "tazrp",
      py::arg("events") = 100000, py::arg("burn_in") = 1000,
      py::arg("seed") = 1,
      "time-weighted empirical distribution of a seeded trajectory");
}
