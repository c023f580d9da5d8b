#include "minklat/io.hpp"

#include <cstdio>
#include <sstream>

namespace minklat {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (int i = 0; i < v.dim(); ++i) row.push_back(rat_str(v[i]));
    verts.push_back(std::move(row));
  }
  return json{{"dim", p.dim()}, {"vertices", verts}};
}

namespace {

Rational rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

}  // namespace

Polytope polytope_from_json(const json& j) {
  if (!j.contains("dim")) throw std::invalid_argument("polytope JSON: missing dim");
  int n = j.at("dim").get<int>();
  if (j.contains("vertices")) {
    std::vector<RatVector> pts;
    for (const auto& row : j.at("vertices")) {
      RatVector v(n);
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("polytope JSON: vertex arity mismatch");
      for (int i = 0; i < n; ++i) v[i] = rat_from_json(row[i]);
      pts.push_back(std::move(v));
    }
    return Polytope::hull(pts);
  }
  if (j.contains("facets")) {
    std::vector<std::pair<RatVector, Rational>> hs;
    for (const auto& f : j.at("facets")) {
      RatVector a(n);
      const auto& arr = f.at("a");
      if (static_cast<int>(arr.size()) != n)
        throw std::invalid_argument("polytope JSON: facet arity mismatch");
      for (int i = 0; i < n; ++i) a[i] = rat_from_json(arr[i]);
      hs.emplace_back(std::move(a), rat_from_json(f.at("b")));
    }
    return Polytope::from_facets(n, hs);
  }
  throw std::invalid_argument("polytope JSON: need vertices or facets");
}

nlohmann::json lattice_to_json(const Lattice& l) {
  if (l.is_standard()) return json{{"basis", "identity"}, {"dim", l.dim()}};
  json cols = json::array();
  for (int jcol = 0; jcol < l.dim(); ++jcol) {
    json col = json::array();
    for (int i = 0; i < l.dim(); ++i) col.push_back(rat_str(l.basis()(i, jcol)));
    cols.push_back(std::move(col));
  }
  return json{{"basis", cols}};
}

Lattice lattice_from_json(const json& j) {
  const auto& b = j.at("basis");
  if (b.is_string()) {
    if (b.get<std::string>() != "identity")
      throw std::invalid_argument("lattice JSON: unknown basis keyword");
    return Lattice::standard(j.at("dim").get<int>());
  }
  int n = static_cast<int>(b.size());
  RatMatrix m(n, n);
  for (int jcol = 0; jcol < n; ++jcol) {
    if (static_cast<int>(b[jcol].size()) != n)
      throw std::invalid_argument("lattice JSON: basis not square");
    for (int i = 0; i < n; ++i) m(i, jcol) = rat_from_json(b[jcol][i]);
  }
  return Lattice(m);
}

nlohmann::json ehrhart_to_json(const EhrhartPolynomial& e) {
  json coeffs = json::array();
  for (const auto& c : e.coeffs) coeffs.push_back(rat_str(c));
  return json{{"coeffs", coeffs}};
}

EhrhartPolynomial ehrhart_from_json(const json& j) {
  EhrhartPolynomial e;
  for (const auto& c : j.at("coeffs")) e.coeffs.push_back(rat_from_json(c));
  return e;
}

namespace {

json value_to_json(const CheckValue& v) {
  if (v.exact) return json{{"exact", true}, {"value", rat_str(v.rational)}};
  return json{{"exact", false}, {"value", v.value}, {"tol", v.tol}};
}

}  // namespace

nlohmann::json report_to_json(const CheckReport& r) {
  json j{{"check_id", r.check_id}, {"body", r.body},   {"lattice", r.lattice},
         {"lhs", value_to_json(r.lhs)}, {"rhs", value_to_json(r.rhs)},
         {"holds", r.holds},        {"equality", r.equality},
         {"strict_expected", r.strict_expected}, {"probe", r.probe}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.witnesses) {
    json vals = json::array(), wits = json::array();
    for (const auto& v : r.witnesses->values) vals.push_back(rat_str(v));
    for (const auto& w : r.witnesses->witnesses) {
      json row = json::array();
      for (int i = 0; i < w.dim(); ++i) row.push_back(rat_str(w[i]));
      wits.push_back(std::move(row));
    }
    j["witnesses"] = json{{"values", vals}, {"vectors", wits}};
  }
  return j;
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<CheckReport>& rs) {
  std::ostringstream os;
  os << "check_id,body,lhs,rhs,holds,equality,notes\n";
  for (const auto& r : rs) {
    os << csv_escape(r.check_id) << "," << csv_escape(r.body) << ","
       << csv_escape(r.lhs.str()) << "," << csv_escape(r.rhs.str()) << ","
       << (r.holds ? "true" : "false") << ","
       << (r.equality ? "true" : "false") << "," << csv_escape(r.notes) << "\n";
  }
  return os.str();
}

std::string report_line(const CheckReport& r) {
  std::ostringstream os;
  if (r.notes.rfind("skipped:", 0) == 0) {
    os << "skip " << r.check_id << "  " << r.body << "  -- " << r.notes;
    return os.str();
  }
  os << (r.holds ? "ok  " : "FAIL") << " " << r.check_id << "  " << r.body
     << "  lhs=" << r.lhs.str() << "  rhs=" << r.rhs.str();
  if (!r.lhs.exact || !r.rhs.exact) os << "  (tol=" << format_double(r.lhs.tol ? r.lhs.tol : r.rhs.tol) << ")";
  if (r.equality) os << "  [equality]";
  if (!r.notes.empty()) os << "  -- " << r.notes;
  return os.str();
}

}  // namespace minklat
