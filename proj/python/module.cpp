// Python bindings for the exact polytope toolkit. Exact rationals cross
// the boundary as fractions.Fraction (never floats), so results stay
// exact on the Python side too.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minklat/io.hpp"

namespace py = pybind11;
using namespace minklat;

namespace {

py::object fraction_type() {
  static py::object t = py::module_::import("fractions").attr("Fraction");
  return t;
}

py::object to_fraction(const Rational& r) { return fraction_type()(rat_str(r)); }

py::object to_py_int(const Int& n) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(n.str());
}

Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj))
    throw py::type_error("floats are not exact; pass int, str or Fraction");
  return rat_parse(py::str(obj).cast<std::string>());
}

RatVector to_vector(const py::handle& seq) {
  auto items = py::cast<py::sequence>(seq);
  RatVector v(static_cast<int>(py::len(items)));
  for (int i = 0; i < v.dim(); ++i) v[i] = to_rational(items[i]);
  return v;
}

std::vector<RatVector> to_points(const py::sequence& rows) {
  std::vector<RatVector> pts;
  for (const auto& row : rows) pts.push_back(to_vector(row));
  return pts;
}

RatMatrix to_matrix_columns(const py::sequence& cols) {
  std::vector<RatVector> c;
  for (const auto& col : cols) c.push_back(to_vector(col));
  return RatMatrix::from_columns(c);
}

py::list vector_out(const RatVector& v) {
  py::list row;
  for (int i = 0; i < v.dim(); ++i) row.append(to_fraction(v[i]));
  return row;
}

py::list points_out(const std::vector<RatVector>& pts) {
  py::list out;
  for (const auto& p : pts) out.append(vector_out(p));
  return out;
}

py::dict report_out(const CheckReport& r) {
  py::dict d;
  d["check_id"] = r.check_id;
  d["body"] = r.body;
  d["lattice"] = r.lattice;
  d["holds"] = r.holds;
  d["equality"] = r.equality;
  d["strict_expected"] = r.strict_expected;
  d["probe"] = r.probe;
  d["notes"] = r.notes;
  auto side = [](const CheckValue& v) -> py::object {
    if (v.exact) return to_fraction(v.rational);
    return py::float_(v.value);
  };
  d["lhs"] = side(r.lhs);
  d["rhs"] = side(r.rhs);
  return d;
}

Lattice default_lattice(const std::optional<Lattice>& l, int dim) {
  return l ? *l : Lattice::standard(dim);
}

}  // namespace

PYBIND11_MODULE(minklat, m) {
  m.doc() =
      "Exact geometry-of-numbers toolkit: rational polytopes, successive "
      "minima, Ehrhart data, and inequality checks.";

  py::class_<Polytope>(m, "Polytope")
      .def_property_readonly("dim", &Polytope::dim)
      .def_property_readonly(
          "vertices", [](const Polytope& p) { return points_out(p.vertices()); })
      .def_property_readonly("facets",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& f : p.facets()) {
                                 py::list a;
                                 for (int i = 0; i < f.normal.dim(); ++i)
                                   a.append(to_py_int(numerator(f.normal[i])));
                                 out.append(py::make_tuple(
                                     a, to_fraction(f.offset)));
                               }
                               return out;
                             })
      .def("volume", [](const Polytope& p) { return to_fraction(p.volume()); })
      .def("centroid",
           [](const Polytope& p) { return vector_out(p.centroid()); })
      .def("surface_area",
           [](const Polytope& p) {
             auto s = p.surface_area();
             return py::make_tuple(s.value, s.rel_error);
           })
      .def("gauge",
           [](const Polytope& p, const py::sequence& x) {
             return to_fraction(p.gauge(to_vector(x)));
           })
      .def("contains_point",
           [](const Polytope& p, const py::sequence& x, bool strict) {
             return p.contains_point(to_vector(x), strict);
           },
           py::arg("x"), py::arg("strict") = false)
      .def("contains", &Polytope::contains)
      .def("scaled",
           [](const Polytope& p, const py::handle& s) {
             return p.scaled(to_rational(s));
           })
      .def("translated",
           [](const Polytope& p, const py::sequence& t) {
             return p.translated(to_vector(t));
           })
      .def("affine_image",
           [](const Polytope& p, const py::sequence& cols, const py::sequence& t) {
             return p.affine_image(to_matrix_columns(cols).transposed(),
                                   to_vector(t));
           },
           py::arg("rows"), py::arg("t"),
           "rows: matrix given row by row")
      .def("difference_body", &Polytope::difference_body)
      .def("polar_body", &Polytope::polar_body)
      .def("is_symmetric", &Polytope::is_symmetric)
      .def("is_lattice", &Polytope::is_lattice)
      .def("is_simplex", &Polytope::is_simplex)
      .def("__repr__", [](const Polytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " vertices=" +
               std::to_string(p.vertices().size()) + " facets=" +
               std::to_string(p.facets().size()) + ">";
      });

  py::class_<Lattice>(m, "Lattice")
      .def_property_readonly("dim", &Lattice::dim)
      .def("determinant",
           [](const Lattice& l) { return to_fraction(l.determinant()); })
      .def("polar", &Lattice::polar)
      .def("__repr__", [](const Lattice& l) {
        return "<Lattice dim=" + std::to_string(l.dim()) + " det=" +
               rat_str(l.determinant()) + ">";
      });

  m.def("hull",
        [](const py::sequence& points) { return Polytope::hull(to_points(points)); },
        py::arg("points"), "convex hull of rational points");
  m.def("make_body",
        [](const std::string& spec) { return make(parse_body_spec(spec)); },
        py::arg("spec"), "named body from a spec string such as 'T:2'");
  m.def("standard_lattice", &Lattice::standard, py::arg("dim"));
  m.def("lattice",
        [](const py::sequence& cols) { return Lattice(to_matrix_columns(cols)); },
        py::arg("columns"), "lattice generated by the given basis columns");
  m.def("symmetral", &symmetral, py::arg("simplex"), py::arg("apex_index") = 0);
  m.def("is_reflexive", &is_reflexive, py::arg("p"));
  m.def("random_body",
        [](const std::string& kind, int n, int vertex_count, int coord_bound,
           std::uint64_t seed) {
          return random_body(parse_random_kind(kind), n, vertex_count,
                             coord_bound, seed);
        },
        py::arg("kind"), py::arg("dim"), py::arg("vertex_count"),
        py::arg("coord_bound"), py::arg("seed"));

  m.def("successive_minima",
        [](const Polytope& k, const std::optional<Lattice>& l) {
          auto sm = successive_minima(k, default_lattice(l, k.dim()));
          py::list values;
          for (const auto& v : sm.values) values.append(to_fraction(v));
          return py::make_tuple(values, points_out(sm.witnesses));
        },
        py::arg("body"), py::arg("lattice") = std::nullopt,
        "returns (values, witnesses)");
  m.def("enumerate_points",
        [](const Polytope& p, const std::optional<Lattice>& l) {
          return points_out(enumerate_points(p, default_lattice(l, p.dim())));
        },
        py::arg("body"), py::arg("lattice") = std::nullopt);
  m.def("count_points",
        [](const Polytope& p, const std::optional<Lattice>& l) {
          return to_py_int(count_points(p, default_lattice(l, p.dim())));
        },
        py::arg("body"), py::arg("lattice") = std::nullopt);
  m.def("ehrhart_polynomial",
        [](const Polytope& p) {
          py::list coeffs;
          for (const auto& c : ehrhart_polynomial(p).coeffs)
            coeffs.append(to_fraction(c));
          return coeffs;
        },
        py::arg("body"), "coefficients, lowest degree first");
  m.def("lattice_surface_area",
        [](const Polytope& p) { return to_fraction(lattice_surface_area(p)); },
        py::arg("body"));
  m.def("root_sum",
        [](const Polytope& p) { return to_fraction(root_sum(p)); },
        py::arg("body"));

  m.def("check_ids", [] {
    py::list out;
    for (const auto& c : check_catalog()) out.append(c.id);
    return out;
  });
  m.def("run_check",
        [](const std::string& id, const Polytope& p,
           const std::optional<Lattice>& l, double tolerance) {
          CheckOptions opts;
          opts.tolerance = tolerance;
          return report_out(run_check(id, p, default_lattice(l, p.dim()), opts));
        },
        py::arg("check_id"), py::arg("body"), py::arg("lattice") = std::nullopt,
        py::arg("tolerance") = 1e-9);
  m.def("sign_sum_bound",
        [](const py::sequence& rows, const py::sequence& alpha, double tol) {
          RatMatrix z = to_matrix_columns(rows).transposed();  // rows in
          auto r = sign_sum_bound(z, to_vector(alpha), tol);
          py::dict d;
          d["value"] = r.value.exact ? to_fraction(r.value.rational)
                                     : py::cast(r.value.value);
          d["bound"] = to_fraction(r.bound);
          d["holds"] = r.holds;
          d["equality"] = r.equality;
          return d;
        },
        py::arg("matrix_rows"), py::arg("alpha"), py::arg("tolerance") = 1e-9);
  m.def("gruenbaum_ratio",
        [](const Polytope& p, const py::sequence& a) {
          auto g = gruenbaum_ratio(p, to_vector(a));
          py::dict d;
          d["ratio"] = to_fraction(g.ratio);
          d["bound"] = to_fraction(g.bound);
          d["holds"] = g.holds;
          d["equality"] = g.equality;
          return d;
        },
        py::arg("body"), py::arg("direction"));
  m.def("fuzz",
        [](const std::string& kind, int dim, int count, std::uint64_t seed,
           const std::vector<std::string>& checks, double tolerance) {
          FuzzConfig cfg;
          cfg.kinds = {parse_random_kind(kind)};
          cfg.dims = {dim};
          cfg.count = count;
          cfg.seed = seed;
          cfg.check_ids = checks;
          cfg.tolerance = tolerance;
          FuzzResult res = fuzz_campaign(cfg);
          py::dict d;
          d["bodies"] = res.summary.bodies;
          d["reports"] = res.summary.reports;
          d["skipped"] = res.summary.skipped;
          d["violations"] = res.summary.violations;
          py::list reports;
          for (const auto& r : res.reports) reports.append(report_out(r));
          d["details"] = reports;
          return d;
        },
        py::arg("kind"), py::arg("dim"), py::arg("count"), py::arg("seed"),
        py::arg("checks") = std::vector<std::string>{},
        py::arg("tolerance") = 1e-9);
}
