// SPDX-License-Identifier: MIT
/**
 * @file pymodule.cpp
 * @brief Python bindings for the headline operations: exact cone counts and
 *        codimensions, dimension tables, inequality sweeps, coloring
 *        numbers, and component indexing.
 *
 * The surface is deliberately plain: functions take ints and strings and
 * return ints, dicts, and lists, so no C++ class crosses the boundary.
 * Exact integers stay exact — counts are converted through their decimal
 * form into Python's arbitrary-precision int, never through a double.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "isocone/bigint.hpp"
#include "isocone/bounds.hpp"
#include "isocone/chow.hpp"
#include "isocone/cone.hpp"
#include "isocone/forms.hpp"
#include "isocone/goodconfig.hpp"
#include "isocone/groups.hpp"

namespace py = pybind11;

namespace {

using namespace isocone;

py::object py_bigint(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(big_str(value));
}

FormKind parse_form_kind(const std::string& kind) {
  if (kind == "symmetric") return FormKind::symmetric;
  if (kind == "alternating") return FormKind::alternating;
  throw std::invalid_argument("unknown form kind: " + kind);
}

GroupKind parse_group_kind(const std::string& kind) {
  if (kind == "symplectic") return GroupKind::symplectic;
  if (kind == "orthogonal") return GroupKind::orthogonal;
  if (kind == "unitary") return GroupKind::unitary;
  throw std::invalid_argument("unknown group kind: " + kind);
}

BilinearSpace split_space(const std::string& kind, int h, int q) {
  const Field f = Field::prime(q);
  return parse_form_kind(kind) == FormKind::symmetric ? BilinearSpace::split_symmetric(f, h)
                                                      : BilinearSpace::split_alternating(f, h);
}

Budget resolve_budget(const std::optional<long long>& budget) {
  if (!budget.has_value()) return budget_from_env();
  if (*budget <= 0) throw std::invalid_argument("budget must be positive");
  return Budget{*budget};
}

py::dict report_dict(const CountReport& rep) {
  py::dict out;
  out["model"] = rep.model;
  out["kind"] = rep.form_kind;
  out["h"] = rep.h;
  out["m"] = rep.m;
  out["q"] = rep.q;
  out["ambient"] = rep.ambient;
  out["status"] = rep.status;
  out["cone_points"] = py_bigint(rep.cone_points);
  out["dim"] = rep.dim;
  out["codim"] = rep.codim;
  out["bound"] = rep.bound;
  out["bound_satisfied"] = rep.bound_satisfied;
  return out;
}

}  // namespace

PYBIND11_MODULE(_isocone, module) {
  module.doc() =
      "Exact isotropic-cone counts, dimension formulas, and inequality sweeps "
      "over small finite fields";

  // ------------------------------------------------------------------ cone
  module.def(
      "cone_count",
      [](const std::string& kind, int h, int m, int q) {
        const ConeInstance inst(split_space(kind, h, q), m);
        return py_bigint(count_cone_stratified(inst));
      },
      py::arg("kind"), py::arg("h"), py::arg("m"), py::arg("q"),
      "Exact number of m-tuples with totally isotropic span in the split "
      "(kind, h) space over F_q, by the stratified closed form.");

  module.def(
      "cone_report",
      [](const std::string& kind, int h, int m, int q, const std::optional<long long>& budget,
         int shards) {
        const ConeInstance inst(split_space(kind, h, q), m);
        return report_dict(cone_report(inst, resolve_budget(budget), shards));
      },
      py::arg("kind"), py::arg("h"), py::arg("m"), py::arg("q"), py::arg("budget") = py::none(),
      py::arg("shards") = 1,
      "Closed-form count with brute cross-check (status 'ok') or budget "
      "refusal (status 'skipped-budget'), plus dimensions and the bound.");

  module.def(
      "biorth_report",
      [](const std::string& kind, int h, int m, int q, const std::optional<long long>& budget) {
        const BiorthInstance inst(split_space(kind, h, q), m);
        return report_dict(biorth_report(inst, resolve_budget(budget)));
      },
      py::arg("kind"), py::arg("h"), py::arg("m"), py::arg("q"), py::arg("budget") = py::none(),
      "Same report for the biorthogonal pair model.");

  module.def(
      "cone_codim",
      [](const std::string& kind, int h, int m, int q) {
        return cone_codim(ConeInstance(split_space(kind, h, q), m));
      },
      py::arg("kind"), py::arg("h"), py::arg("m"), py::arg("q"),
      "Measured codimension of the tuple cone.");

  module.def("cone_bound", &cone_bound, py::arg("m"), py::arg("h"),
             "min over 0 <= k <= min(m, h) of (h-k)(m-k) + k(k+1)/2.");
  module.def("delta_mhk", &delta_mhk, py::arg("m"), py::arg("h"), py::arg("k"),
             "The codimension summand (h-k)(m-k) + k(k+1)/2.");
  module.def("biorth_codim_formula", &biorth_codim_formula, py::arg("h"), py::arg("m"),
             "min over k of (m-k)h + k^2, the pair-model codimension.");
  module.def("exercise_bound", &exercise_bound, py::arg("m"), py::arg("s"), py::arg("t"),
             py::arg("dK"), "min over k of (m-k)^2 + k(s + t + dK*m).");

  // ---------------------------------------------------------------- groups
  module.def(
      "borel_unipotent_dim",
      [](const std::string& kind, int n, int d) {
        return borel_unipotent_dim(GroupShape(parse_group_kind(kind), n, d));
      },
      py::arg("kind"), py::arg("n"), py::arg("d") = 1,
      "u_n: dimension of the unipotent radical of a Borel, scaled by d.");

  module.def(
      "parabolic_dims",
      [](const std::string& kind, int n, int m) {
        const ParabolicDims dims = parabolic_dims(ParabolicShape(parse_group_kind(kind), n, m));
        py::dict out;
        out["center_full"] = dims.dim_center_full;
        out["hom_half"] = dims.dim_hom_half;
        out["center_fixed"] =
            dims.dim_center_fixed ? py::cast(*dims.dim_center_fixed) : py::none();
        out["hom_fixed"] = dims.dim_hom_fixed ? py::cast(*dims.dim_hom_fixed) : py::none();
        out["unipotent_fixed"] =
            dims.dim_unipotent_fixed ? py::cast(*dims.dim_unipotent_fixed) : py::none();
        out["unipotent_full"] = dims.dim_unipotent_full;
        out["convention_dependent"] = dims.fixed_dims_convention_dependent;
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("m"),
      "Block dimensions of the (m, n-2m, m) parabolic; convention-dependent "
      "entries are None for the unitary kind.");

  // ---------------------------------------------------------------- bounds
  module.def(
      "h2_Z",
      [](const std::string& kind, long long v2, bool resonant) {
        return h2_Z(parse_group_kind(kind), v2, resonant);
      },
      py::arg("kind"), py::arg("v2"), py::arg("resonant") = true,
      "dim H^2 of the center block from the resonance table.");

  module.def(
      "check_all",
      []() {
        py::list out;
        for (const InequalityReport& rep : check_all()) {
          py::dict entry;
          entry["id"] = rep.id;
          entry["ranges"] = rep.ranges;
          entry["cases_checked"] = rep.cases_checked;
          entry["counterexamples"] = rep.counterexamples;
          entry["asserted"] = rep.asserted;
          entry["pass"] = rep.pass();
          out.append(entry);
        }
        return out;
      },
      "Run every inequality sweep; returns one dict per sweep.");

  // ------------------------------------------------------------ goodconfig
  module.def(
      "coloring_number",
      [](int k, long long q, long subsets, long trials, unsigned long long seed) {
        ColoringOptions options;
        options.sampled_subsets = subsets;
        options.trials_per_subset = trials;
        options.seed = seed;
        const ColoringResult res = coloring_number(k, q, options);
        py::dict out;
        out["k"] = res.k;
        out["q"] = res.q;
        out["bound"] = res.bound;
        out["number"] = res.number;
        out["found_free_at_bound"] = res.found_free_at_bound;
        out["free_subset"] = res.free_subset;
        out["any_free_above_bound"] = res.any_free_above_bound;
        out["above_bound_exhaustive"] = res.above_bound_exhaustive;
        out["trials_run"] = res.trials_run;
        return out;
      },
      py::arg("k"), py::arg("q"), py::arg("subsets") = ColoringOptions{}.sampled_subsets,
      py::arg("trials") = ColoringOptions{}.trials_per_subset,
      py::arg("seed") = ColoringOptions{}.seed,
      "Largest verified free subset of the corrected Gram system (k <= 3).");

  // ------------------------------------------------------------------ chow
  module.def(
      "chow_count",
      [](const std::string& group, long long x1, long long base) {
        return py_bigint(count_components(make_family(group), x1, base));
      },
      py::arg("group"), py::arg("x1"), py::arg("base"),
      "x1^r * base: number of top-dimensional components.");

  module.def(
      "chow_components",
      [](const std::string& group, long long x1, long long base) {
        const FamilyShape shape = make_family(group);
        py::list out;
        for (const ComponentIndex& idx : enumerate_components(shape, x1, base)) {
          py::dict entry;
          py::list coords;
          for (const Coord& c : idx.coords) {
            if (c.is_inf()) {
              coords.append(py::str("inf"));
            } else {
              coords.append(py::cast(c.label()));
            }
          }
          entry["family"] = chow_family_name(shape.family);
          entry["n"] = shape.n;
          entry["r"] = shape.r;
          entry["base"] = chow_base_name(shape.base);
          entry["code"] = encode_component(shape, x1, base, idx);
          entry["coords"] = coords;
          entry["base_component"] = idx.base_component;
          out.append(entry);
        }
        return out;
      },
      py::arg("group"), py::arg("x1"), py::arg("base"),
      "All component indices in code order; infinity coordinates render as "
      "the string 'inf'.");
}
