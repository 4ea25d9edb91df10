// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/family.hpp"
#include "rainbow/instances.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verifier.hpp"

namespace py = pybind11;

namespace rainbow {
namespace {

using Picks = std::vector<std::optional<ElementId>>;

std::vector<std::vector<ElementId>> SetsOf(const Family& f) {
  std::vector<std::vector<ElementId>> out;
  for (const auto& s : f.sets) out.emplace_back(s.begin(), s.end());
  return out;
}

RainbowSet FromPicks(const Picks& picks) {
  RainbowSet r;
  r.picks = picks;
  return r;
}

py::dict ReportDict(const SolveReport& r) {
  py::dict d;
  d["picks"] = r.rainbow.picks;
  d["size"] = r.size();
  d["n"] = r.n;
  d["initial_size"] = r.initial_size;
  d["augmentations"] = r.augmentations;
  d["cap_lengths"] = r.cap_lengths;
  d["bound_ok"] = check_bound(r.size(), r.n);
  d["claims_checked"] = r.claims.total();
  return d;
}

}  // namespace
}  // namespace rainbow

PYBIND11_MODULE(_core, m) {
  using namespace rainbow;
  m.doc() = "Rainbow independent sets in the intersection of two matroids.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<GenerationError>(m, "GenerationError",
                                          PyExc_RuntimeError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<ContractError>(m, "ContractError",
                                        PyExc_AssertionError);

  py::class_<Family>(m, "Family")
      .def_property_readonly("n", &Family::size)
      .def_property_readonly("sets", &SetsOf)
      .def_property_readonly("ground_size",
                             [](const Family& f) { return f.m.ground_size(); })
      .def_property_readonly(
          "classes",
          [](const Family& f) {
            return py::make_tuple(
                std::string(class_name(f.m.matroid_class())),
                std::string(class_name(f.n.matroid_class())));
          })
      .def("__len__", &Family::size)
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("__repr__", [](const Family& f) {
        return "<Family n=" + std::to_string(f.size()) + ">";
      });

  py::class_<InstanceFile>(m, "Instance")
      .def_readonly("family", &InstanceFile::family)
      .def_readonly("seed", &InstanceFile::seed)
      .def_readonly("generator", &InstanceFile::generator);

  m.def("generator_names", &generator_names);
  m.def(
      "generate",
      [](const std::string& generator, std::size_t n, std::uint64_t seed) {
        return generate_instance(generator, n, seed);
      },
      py::arg("generator"), py::arg("n"), py::arg("seed"));
  m.def("parse", [](const std::string& text) { return parse_instance(text); },
        py::arg("text"));
  m.def("serialize", &serialize, py::arg("instance"));

  m.def(
      "latin_family",
      [](const std::vector<std::vector<std::uint32_t>>& cells) {
        return latin_to_family(LatinSquare{cells.size(), cells});
      },
      py::arg("cells"), "Family of a Latin square; colors are rows.");
  m.def(
      "cyclic_latin",
      [](std::size_t n) { return cyclic_latin(n).cells; }, py::arg("n"));

  m.def(
      "solve",
      [](const Family& f, bool check_claims) {
        SolveOptions opts;
        opts.check_claims = check_claims;
        return ReportDict(solve(f, opts));
      },
      py::arg("family"), py::arg("check_claims") = false);

  m.def("check_bound", &check_bound, py::arg("t"), py::arg("n"));
  m.def("bound_floor", &bound_floor, py::arg("n"));
  m.def(
      "check_rainbow",
      [](const Picks& picks, const Family& f) {
        return check_rainbow(FromPicks(picks), f);
      },
      py::arg("picks"), py::arg("family"));
  m.def(
      "brute_force_max",
      [](const Family& f, std::size_t limit) {
        auto r = brute_force_max(f, limit);
        return py::make_tuple(r.size, r.witness.picks);
      },
      py::arg("family"), py::arg("limit") = kDefaultBruteLimit);
  m.def(
      "verify",
      [](const Family& f, std::size_t brute_limit) {
        auto r = verify_family(f, brute_limit);
        py::dict d;
        d["n"] = r.n;
        d["solver_size"] = r.solver_size;
        d["optimum"] = r.optimum;
        d["bound_ok"] = r.bound_ok;
        d["valid"] = r.valid;
        d["conjecture_gap"] = r.conjecture_gap;
        return d;
      },
      py::arg("family"), py::arg("brute_limit") = kDefaultBruteLimit);
  m.def(
      "property_suite",
      [](std::uint64_t seed, std::size_t trials) {
        py::list out;
        for (const auto& r : property_suite(seed, trials).results) {
          py::dict d;
          d["name"] = r.name;
          d["trials"] = r.trials;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("seed"), py::arg("trials"));
}
