#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "minklat/gallery.hpp"
#include "minklat/minima.hpp"

using namespace minklat;

namespace {

Rational q(const std::string& s) { return rat_parse(s); }

// Independent oracle: gauge-sort every lattice point of a box that
// provably covers lambda_n K, then scan for rank growth. Shares only the
// gauge with the implementation; the search strategy is exhaustive.
std::vector<Rational> box_search_minima(const Polytope& k, int box) {
  const int n = k.dim();
  std::vector<std::pair<Rational, RatVector>> pts;
  std::vector<Int> x(n);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      RatVector v(n);
      for (int i = 0; i < n; ++i) v[i] = Rational(x[i]);
      if (!v.is_zero()) pts.emplace_back(k.gauge(v), v);
      return;
    }
    for (Int t = -box; t <= box; ++t) {
      x[j] = t;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(pts.begin(), pts.end());
  std::vector<Rational> values;
  std::vector<RatVector> chosen;
  for (auto& [g, z] : pts) {
    chosen.push_back(z);
    if (rank(RatMatrix::from_rows(chosen)) == static_cast<int>(chosen.size())) {
      values.push_back(g);
      if (static_cast<int>(values.size()) == n) break;
    } else {
      chosen.pop_back();
    }
  }
  // The box is large enough iff lambda_n K fits inside it.
  Rational coord_max = 0;
  for (const auto& v : k.vertices())
    for (int i = 0; i < n; ++i) coord_max = std::max(coord_max, Rational(abs(v[i])));
  REQUIRE(values.back() * coord_max <= box);
  return values;
}

}  // namespace

TEST_CASE("minima of the cube") {
  for (int n = 2; n <= 4; ++n) {
    auto sm = successive_minima(make(parse_body_spec("cube:" + std::to_string(n))),
                                Lattice::standard(n));
    for (const auto& v : sm.values) CHECK(v == 1);
  }
}

TEST_CASE("minima of the anisotropic equality simplex") {
  // conv{3 e1, 2 e2, -(3 e1 + 2 e2)}: lambda = (1/3, 1/2)
  Polytope k = make(parse_body_spec("eq:2:3,2"));
  auto sm = successive_minima(k, Lattice::standard(2));
  CHECK(sm.values == std::vector<Rational>{q("1/3"), q("1/2")});
  // witness validity
  for (size_t i = 0; i < sm.values.size(); ++i)
    CHECK(k.gauge(sm.witnesses[i]) == sm.values[i]);
  CHECK(det(RatMatrix::from_columns(sm.witnesses)) != 0);
}

TEST_CASE("minima of K_l are all one") {
  for (int l : {1, 2, 5}) {
    Polytope k = make(parse_body_spec("Kell:3:" + std::to_string(l)));
    auto sm = successive_minima(k, Lattice::standard(3));
    for (const auto& v : sm.values) CHECK(v == 1);
  }
}

TEST_CASE("minima of P_l^n") {
  for (int l : {2, 3}) {
    Polytope k = make(parse_body_spec("Pell:3:" + std::to_string(l)));
    auto sm = successive_minima(k, Lattice::standard(3));
    CHECK(sm.values ==
          std::vector<Rational>{Rational(1, l), Rational(1), Rational(1)});
  }
}

TEST_CASE("minima of P_mu") {
  // lambda_i = 2/mu for i < n, lambda_n = 2
  Polytope k = make(parse_body_spec("Pmu:3:4"));
  auto sm = successive_minima(k, Lattice::standard(3));
  CHECK(sm.values == std::vector<Rational>{q("1/2"), q("1/2"), q("2")});
}

TEST_CASE("homogeneity and unimodular invariance") {
  Polytope k = make(parse_body_spec("Kell:2:3"));
  Lattice z2 = Lattice::standard(2);
  auto base = successive_minima(k, z2);

  for (const Rational& t : {q("2"), q("1/3"), q("5/2")}) {
    auto scaled = successive_minima(k.scaled(t), z2);
    for (size_t i = 0; i < base.values.size(); ++i)
      CHECK(scaled.values[i] == base.values[i] / t);
  }

  RatMatrix u(2, 2);  // unimodular
  u(0, 0) = 2; u(0, 1) = 1;
  u(1, 0) = 1; u(1, 1) = 1;
  REQUIRE(abs(det(u)) == 1);
  auto moved = successive_minima(k.affine_image(u, RatVector(2)), z2);
  CHECK(moved.values == base.values);

  // the same invariance through a transformed lattice object, and for a
  // general invertible map: lambda_i(AK, A Lambda) = lambda_i(K, Lambda)
  RatMatrix a(2, 2);
  a(0, 0) = q("3/2"); a(0, 1) = q("1");
  a(1, 0) = q("0");   a(1, 1) = q("-2");
  auto both = successive_minima(k.affine_image(a, RatVector(2)), Lattice(a));
  CHECK(both.values == base.values);
}

TEST_CASE("monotonicity on nested bodies") {
  std::mt19937_64 gen(19);
  for (int iter = 0; iter < 10; ++iter) {
    Polytope inner = random_body(RandomKind::kSymmetric, 2, 4, 4, gen());
    Polytope outer = inner.scaled(Rational(1 + static_cast<int>(gen() % 3)));
    auto mi = successive_minima(inner, Lattice::standard(2));
    auto mo = successive_minima(outer, Lattice::standard(2));
    for (size_t i = 0; i < mi.values.size(); ++i)
      CHECK(mo.values[i] <= mi.values[i]);
  }
}

TEST_CASE("oracle equivalence on random bodies") {
  std::mt19937_64 gen(23);
  Lattice z2 = Lattice::standard(2);
  for (int iter = 0; iter < 30; ++iter) {
    RandomKind kind = iter % 2 ? RandomKind::kSymmetric : RandomKind::kCentered;
    Polytope k = random_body(kind, 2, 5, 4, gen());
    auto sm = successive_minima(k, z2);
    CHECK(sm.values == box_search_minima(k, 64));
    for (size_t i = 0; i < sm.values.size(); ++i)
      CHECK(k.gauge(sm.witnesses[i]) == sm.values[i]);
  }
}

TEST_CASE("non-standard lattice") {
  // lambda_i(C_n, 2 Z^n) = 2
  Lattice twice(RatMatrix::diagonal({q("2"), q("2")}));
  auto sm = successive_minima(make(parse_body_spec("cube:2")), twice);
  CHECK(sm.values == std::vector<Rational>{q("2"), q("2")});
}

TEST_CASE("origin must be interior") {
  Polytope s = make(parse_body_spec("S:2"));  // 0 is a vertex
  CHECK_THROWS_AS(successive_minima(s, Lattice::standard(2)),
                  std::invalid_argument);
}
