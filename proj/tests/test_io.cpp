#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minklat/io.hpp"

using namespace minklat;
using nlohmann::json;

namespace {

Rational q(const std::string& s) { return rat_parse(s); }

Polytope body(const std::string& spec) { return make(parse_body_spec(spec)); }

}  // namespace

TEST_CASE("polytope json round trip is byte identical") {
  for (const char* spec : {"T:2", "cross:3", "Pell:3:2", "sym-cross:1,1/2"}) {
    Polytope p = body(spec);
    std::string first = polytope_to_json(p).dump();
    Polytope q0 = polytope_from_json(json::parse(first));
    CHECK(polytope_to_json(q0).dump() == first);
  }
}

TEST_CASE("polytope json accepts the facet form") {
  json j = {{"dim", 2},
            {"facets", json::array({
                           {{"a", {1, 0}}, {"b", "1"}},
                           {{"a", {-1, 0}}, {"b", "1"}},
                           {{"a", {0, 1}}, {"b", "1"}},
                           {{"a", {0, -1}}, {"b", "1"}},
                           {{"a", {1, 1}}, {"b", "5"}},  // redundant
                       })}};
  Polytope p = polytope_from_json(j);
  CHECK(p.vertices() == body("cube:2").vertices());
  CHECK(p.facets().size() == 4);  // redundant halfspace dropped

  CHECK_THROWS_AS(polytope_from_json(json{{"dim", 2}}), std::invalid_argument);
  json bad = {{"dim", 2}, {"vertices", json::array({json::array({"1"})})}};
  CHECK_THROWS_AS(polytope_from_json(bad), std::invalid_argument);
}

TEST_CASE("lattice json") {
  Lattice z3 = Lattice::standard(3);
  json j = lattice_to_json(z3);
  CHECK(j["basis"] == "identity");
  CHECK(lattice_from_json(j).is_standard());

  Lattice d(RatMatrix::diagonal({q("2"), q("1/3")}));
  Lattice back = lattice_from_json(lattice_to_json(d));
  CHECK(back.basis() == d.basis());
  CHECK(lattice_to_json(back).dump() == lattice_to_json(d).dump());
}

TEST_CASE("ehrhart json lists coefficients lowest degree first") {
  auto e = ehrhart_polynomial(body("cube:2"));
  json j = ehrhart_to_json(e);
  CHECK(j["coeffs"] == json::array({"1", "4", "4"}));
  CHECK(ehrhart_from_json(j).coeffs == e.coeffs);
}

TEST_CASE("report serialization") {
  auto r = run_check("hsw-sym", body("cube:2"), Lattice::standard(2),
                     {.body_label = "cube:2"});
  json j = report_to_json(r);
  CHECK(j["check_id"] == "hsw-sym");
  CHECK(j["body"] == "cube:2");
  CHECK(j["lattice"] == "Z^2");
  CHECK(j["lhs"]["exact"] == true);
  CHECK(j["lhs"]["value"] == "1");
  CHECK(j["holds"] == true);
  CHECK(j["equality"] == true);
  CHECK(j.contains("witnesses"));

  std::string csv = reports_to_csv({r});
  CHECK(csv.find("check_id,body,lhs,rhs,holds,equality,notes") == 0);
  CHECK(csv.find("hsw-sym,cube:2,1,1,true,true,") != std::string::npos);

  std::string line = report_line(r);
  CHECK(line.find("ok") == 0);
  CHECK(line.find("[equality]") != std::string::npos);
}

TEST_CASE("float values carry the tolerance") {
  auto r = run_check("surf-lower", body("cube:2"), Lattice::standard(2));
  json j = report_to_json(r);
  CHECK(j["lhs"]["exact"] == false);
  CHECK(j["lhs"]["tol"] == 1e-9);
  CHECK(format_double(r.rhs.value) == "8");
  CHECK(format_double(2.0 / 3.0) == "0.666666666667");
}
