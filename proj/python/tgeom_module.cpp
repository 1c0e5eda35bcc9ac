#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tgeom/cli.hpp"
#include "tgeom/equivalence.hpp"
#include "tgeom/error.hpp"
#include "tgeom/linear_ops.hpp"
#include "tgeom/oracle.hpp"
#include "tgeom/sigma_space.hpp"
#include "tgeom/table_io.hpp"
#include "tgeom/vector_algebra.hpp"

namespace py = pybind11;
using namespace tgeom;

namespace {

// Vectors cross the boundary as (origin, end) label tuples.
using PyVector = std::pair<std::string, std::string>;

Vector from_py(const PyVector& v) { return {PointId(v.first), PointId(v.second)}; }
PyVector to_py(const Vector& v) { return {v.origin.label(), v.end.label()}; }

std::vector<PyVector> to_py(const std::vector<Vector>& vs) {
  std::vector<PyVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_py(v));
  return out;
}

std::vector<SigmaEntry> entries_from_py(
    const std::vector<std::tuple<std::string, std::string, double>>& rows) {
  std::vector<SigmaEntry> out;
  for (const auto& [from, to, value] : rows) out.push_back({from, to, value});
  return out;
}

std::optional<std::string> case_name(const std::optional<CaseId>& id) {
  if (!id) return std::nullopt;
  return std::string(to_string(*id));
}

py::dict solve_to_dict(const CombinationResult& r) {
  py::dict d;
  d["solutions"] = to_py(r.solutions);
  d["guaranteed"] = case_name(r.guaranteed);
  d["method"] = std::string(to_string(r.method));
  return d;
}

}  // namespace

PYBIND11_MODULE(_tgeom, m) {
  m.doc() = "World-function geometry on finite point sets";

  // Library errors surface as TgeomError with a `code` attribute.
  static py::handle error_type =
      py::exception<Error>(m, "TgeomError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<SigmaSpace>(m, "SigmaSpace")
      .def_property_readonly("points",
                             [](const SigmaSpace& s) {
                               std::vector<std::string> labels;
                               for (const auto& p : s.points()) labels.push_back(p.label());
                               return labels;
                             })
      .def_property_readonly("tolerance", &SigmaSpace::tolerance)
      .def_property_readonly("dimension", &SigmaSpace::dimension)
      .def_property_readonly("backing",
                             [](const SigmaSpace& s) {
                               return s.backing() == Backing::kTable ? "table" : "coordinates";
                             })
      .def("__len__", &SigmaSpace::size)
      .def("sigma",
           [](const SigmaSpace& s, const std::string& p, const std::string& q) {
             return s.sigma(PointId(p), PointId(q));
           })
      .def("matrix",
           [](const SigmaSpace& s) {
             std::vector<std::vector<double>> rows(s.size());
             for (std::size_t i = 0; i < s.size(); ++i)
               for (std::size_t j = 0; j < s.size(); ++j) rows[i].push_back(s.sigma(i, j));
             return rows;
           })
      .def("coordinates",
           [](const SigmaSpace& s, const std::string& p) {
             const auto c = s.coordinates(s.index_of(PointId(p)));
             return std::vector<double>(c.begin(), c.end());
           })
      .def("with_tolerance", &SigmaSpace::with_tolerance)
      .def("to_table", &SigmaSpace::to_table);

  m.def("build_finite_table",
        [](const std::vector<std::string>& labels,
           const std::vector<std::tuple<std::string, std::string, double>>& entries,
           double tolerance) { return build_finite_table(labels, entries_from_py(entries), tolerance); },
        py::arg("labels"), py::arg("entries"), py::arg("tolerance") = SigmaSpace::kDefaultTolerance);
  m.def("euclidean_sigma", [](const std::vector<double>& x, const std::vector<double>& y) {
    return euclidean_sigma(x, y);
  });
  m.def("build_grid_space",
        [](std::size_t dim, std::size_t size, const std::vector<std::vector<int>>& deleted,
           double tolerance) {
          GridSpec spec{dim, size, {}};
          for (const auto& p : deleted) spec.deleted.insert(p);
          return build_grid_space(spec, tolerance);
        },
        py::arg("dim"), py::arg("size"), py::arg("deleted") = std::vector<std::vector<int>>{},
        py::arg("tolerance") = SigmaSpace::kDefaultTolerance);
  m.def("is_symmetric", &is_symmetric);
  m.def("perturb_table",
        [](const SigmaSpace& s,
           const std::vector<std::tuple<std::string, std::string, double>>& deltas) {
          return perturb_table(s, entries_from_py(deltas));
        });

  m.def("scalar_product", [](const SigmaSpace& s, const PyVector& v, const PyVector& w) {
    return scalar_product(s, from_py(v), from_py(w));
  });
  m.def("norm_squared",
        [](const SigmaSpace& s, const PyVector& v) { return norm_squared(s, from_py(v)); });
  m.def("verify_identities",
        [](const SigmaSpace& s, std::size_t max_points) {
          const IdentityReport report = verify_identities(s, max_points);
          py::list violations;
          for (const auto& v : report.violations) {
            std::vector<std::string> labels;
            for (std::size_t i : v.points) labels.push_back(s.point(i).label());
            violations.append(py::make_tuple(std::string(to_string(v.identity)), labels,
                                             v.lhs, v.rhs));
          }
          py::dict d;
          d["checked"] = report.checked;
          d["symmetry_checked"] = report.symmetry_checked;
          d["violations"] = violations;
          return d;
        },
        py::arg("space"), py::arg("max_points") = kDefaultIdentityLimit);

  m.def("equivalent", [](const SigmaSpace& s, const PyVector& v, const PyVector& w) {
    const EquivalenceWitness witness = equivalent(s, from_py(v), from_py(w));
    py::object counterexample = py::none();
    if (witness.counterexample) {
      const auto& c = *witness.counterexample;
      py::dict d;
      d["q0"] = c.q0.label();
      d["q1"] = c.q1.label();
      d["slot"] = c.slot == ProbeSlot::kFirst ? "first" : "second";
      d["lhs"] = c.lhs;
      d["rhs"] = c.rhs;
      counterexample = d;
    }
    return py::make_tuple(witness.equivalent, counterexample);
  });
  m.def("equivalence_classes", [](const SigmaSpace& s) {
    const Partition p = equivalence_classes(s);
    std::vector<std::vector<PyVector>> classes;
    for (const auto& cls : p.classes) classes.push_back(to_py(cls));
    return py::make_tuple(classes, p.closure_applied);
  });

  m.def("negate", [](const PyVector& v) { return to_py(negate(from_py(v))); });
  m.def("chain_sum", [](const PyVector& v, const PyVector& w) {
    return to_py(chain_sum(from_py(v), from_py(w)));
  });
  m.def("guaranteed_case",
        [](const SigmaSpace& s, double alpha, double beta, const PyVector& v, const PyVector& w) {
          return case_name(guaranteed_case(s, {alpha, beta}, from_py(v), from_py(w)));
        });
  m.def("construct_guaranteed",
        [](const SigmaSpace& s, double alpha, double beta, const PyVector& v, const PyVector& w) {
          return to_py(construct_guaranteed(s, {alpha, beta}, from_py(v), from_py(w)));
        });
  m.def("solve_combination",
        [](const SigmaSpace& s, double alpha, double beta, const PyVector& v, const PyVector& w,
           std::size_t limit, bool force) {
          return solve_to_dict(
              solve_combination(s, {alpha, beta}, from_py(v), from_py(w), {limit, force}));
        },
        py::arg("space"), py::arg("alpha"), py::arg("beta"), py::arg("v"), py::arg("w"),
        py::arg("limit") = kDefaultSearchLimit, py::arg("force") = false);
  m.def("survey_linearity",
        [](const SigmaSpace& s, const std::vector<std::pair<double, double>>& coefficients,
           bool chained, std::optional<std::vector<std::string>> restrict_to, std::size_t limit,
           bool force) {
          std::vector<Coefficients> cs;
          for (const auto& [a, b] : coefficients) cs.push_back({a, b});
          SurveyOptions options;
          options.search = {limit, force};
          options.scope = chained ? PairScope::kChained : PairScope::kAll;
          if (restrict_to) {
            std::vector<PointId> keep;
            for (const auto& label : *restrict_to) keep.emplace_back(label);
            options.restrict_to = std::move(keep);
          }
          py::list rows;
          for (const auto& row : survey_linearity(s, cs, options).rows) {
            py::dict d;
            d["alpha"] = row.coefficients.alpha;
            d["beta"] = row.coefficients.beta;
            d["total"] = row.total;
            d["solvable"] = row.solvable;
            d["guaranteed"] = row.guaranteed;
            d["unsolvable"] = row.unsolvable;
            rows.append(d);
          }
          return rows;
        },
        py::arg("space"), py::arg("coefficients"), py::arg("chained") = false,
        py::arg("restrict_to") = py::none(), py::arg("limit") = kDefaultSearchLimit,
        py::arg("force") = false);

  m.def("read_sigma_table",
        [](const std::string& text) { return read_sigma_table(std::string_view(text)); });
  m.def("write_sigma_table", [](const SigmaSpace& s) { return write_sigma_table(s); });

  auto oracle_mod = m.def_submodule("oracle", "Naive reference implementations");
  oracle_mod.def("brute_force_solve", [](const SigmaSpace& s, double alpha, double beta,
                                         const PyVector& v, const PyVector& w) {
    return to_py(oracle::brute_force_solve(s, {alpha, beta}, from_py(v), from_py(w)));
  });
  oracle_mod.def("brute_force_equivalent",
                 [](const SigmaSpace& s, const PyVector& v, const PyVector& w) {
                   return oracle::brute_force_equivalent(s, from_py(v), from_py(w));
                 });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
