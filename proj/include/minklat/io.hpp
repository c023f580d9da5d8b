// Serialization: polytope / lattice / Ehrhart JSON formats and
// CheckReport JSON + CSV. Rationals travel as canonical "p/q" strings.

#pragma once

#include <json.hpp>

#include "minklat/checks.hpp"

namespace minklat {

nlohmann::json polytope_to_json(const Polytope& p);
/// Accepts {"dim": n, "vertices": [["p/q", ...], ...]} or
/// {"dim": n, "facets": [{"a": [ints], "b": "p/q"}, ...]}; either form is
/// canonicalized on load.
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json lattice_to_json(const Lattice& l);
/// {"basis": [[...], ...]} column-major, or {"basis": "identity", "dim": n}.
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json ehrhart_to_json(const EhrhartPolynomial& e);
EhrhartPolynomial ehrhart_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CheckReport& r);
nlohmann::json reports_to_json(const std::vector<CheckReport>& rs);
/// Columns: check_id, body, lhs, rhs, holds, equality, notes.
std::string reports_to_csv(const std::vector<CheckReport>& rs);
std::string report_line(const CheckReport& r);  // one-line text form

std::string format_double(double v);  // 12 significant digits

}  // namespace minklat
