#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minklat/polytope.hpp"

using namespace minklat;

namespace {

Rational q(const std::string& s) { return rat_parse(s); }

RatVector v2(const std::string& a, const std::string& b) {
  return RatVector{q(a), q(b)};
}

RatVector unit(int n, int i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

Polytope cube(int n) {
  std::vector<std::pair<RatVector, Rational>> hs;
  for (int i = 0; i < n; ++i) {
    hs.emplace_back(unit(n, i), Rational(1));
    hs.emplace_back(-unit(n, i), Rational(1));
  }
  return Polytope::from_facets(n, hs);
}

Polytope cross(int n) {
  std::vector<RatVector> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(unit(n, i));
    pts.push_back(-unit(n, i));
  }
  return Polytope::hull(pts);
}

Polytope simplex(int n) {  // S_n
  std::vector<RatVector> pts{RatVector(n)};
  for (int i = 0; i < n; ++i) pts.push_back(unit(n, i));
  return Polytope::hull(pts);
}

Polytope tsimplex(int n) {  // T_n = -1 + (n+1) S_n
  RatVector ones(n);
  for (int i = 0; i < n; ++i) ones[i] = 1;
  std::vector<RatVector> pts{-ones};
  for (int i = 0; i < n; ++i) pts.push_back(-ones + Rational(n + 1) * unit(n, i));
  return Polytope::hull(pts);
}

bool has_facet(const Polytope& p, const RatVector& a, const Rational& b) {
  for (const auto& f : p.facets())
    if (f.normal == a && f.offset == b) return true;
  return false;
}

Polytope random_int_hull(std::mt19937_64& gen, int n, int count, int bound) {
  for (;;) {
    std::vector<RatVector> pts;
    for (int k = 0; k < count; ++k) {
      RatVector v(n);
      for (int i = 0; i < n; ++i)
        v[i] = static_cast<int>(gen() % (2 * bound + 1)) - bound;
      pts.push_back(std::move(v));
    }
    try {
      return Polytope::hull(pts);
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

TEST_CASE("hull of the 2-cross-polytope") {
  Polytope p = cross(2);
  CHECK(p.vertices().size() == 4);
  REQUIRE(p.facets().size() == 4);
  CHECK(has_facet(p, v2("1", "1"), 1));
  CHECK(has_facet(p, v2("1", "-1"), 1));
  CHECK(has_facet(p, v2("-1", "1"), 1));
  CHECK(has_facet(p, v2("-1", "-1"), 1));
}

TEST_CASE("hull of T_2") {
  Polytope t = tsimplex(2);
  REQUIRE(t.vertices().size() == 3);
  CHECK(t.vertices()[0] == v2("-1", "-1"));
  CHECK(t.vertices()[1] == v2("-1", "2"));
  CHECK(t.vertices()[2] == v2("2", "-1"));
  REQUIRE(t.facets().size() == 3);
  CHECK(has_facet(t, v2("-1", "0"), 1));
  CHECK(has_facet(t, v2("0", "-1"), 1));
  CHECK(has_facet(t, v2("1", "1"), 1));
}

TEST_CASE("degenerate hulls are rejected") {
  CHECK_THROWS_AS(Polytope::hull({v2("0", "0"), v2("1", "1"), v2("2", "2")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Polytope::hull({v2("0", "0"), v2("1", "0")}),
                  std::invalid_argument);
  // dimension cap
  std::vector<RatVector> pts;
  RatVector origin(7);
  pts.push_back(origin);
  for (int i = 0; i < 7; ++i) pts.push_back(unit(7, i));
  CHECK_THROWS_AS(Polytope::hull(pts), std::invalid_argument);
}

TEST_CASE("non-extreme and duplicate points are dropped") {
  Polytope p = Polytope::hull({v2("0", "0"), v2("0", "0"), v2("2", "0"),
                               v2("0", "2"), v2("2", "2"), v2("1", "1")});
  CHECK(p.vertices().size() == 4);
}

TEST_CASE("volume examples") {
  CHECK(cube(2).volume() == 4);
  CHECK(tsimplex(2).volume() == q("9/2"));
  CHECK(simplex(3).volume() == q("1/6"));
  CHECK(cube(3).volume() == 8);
  CHECK(cross(3).volume() == q("4/3"));
  CHECK(tsimplex(3).volume() == q("32/3"));  // (n+1)^n / n!
}

TEST_CASE("centroid examples") {
  CHECK(cube(2).centroid().is_zero());
  CHECK(tsimplex(3).centroid().is_zero());
  CHECK(simplex(2).centroid() == v2("1/3", "1/3"));  // vertex average
}

TEST_CASE("affine images") {
  Polytope c = cross(2);
  CHECK(c.affine_image(RatMatrix::identity(2), RatVector(2)).vertices() ==
        c.vertices());

  // diag(1, 1/2) C_2* = conv{+-e_1, +-e_2/2}
  Polytope img =
      c.affine_image(RatMatrix::diagonal({q("1"), q("1/2")}), RatVector(2));
  Polytope expect = Polytope::hull(
      {v2("1", "0"), v2("-1", "0"), v2("0", "1/2"), v2("0", "-1/2")});
  CHECK(img.vertices() == expect.vertices());

  Polytope s2 = simplex(2);
  Polytope moved = s2.translated(-s2.centroid());
  CHECK(moved.centroid().is_zero());

  RatMatrix singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 2;
  singular(1, 0) = 2; singular(1, 1) = 4;
  CHECK_THROWS_AS(c.affine_image(singular, RatVector(2)), std::invalid_argument);
}

TEST_CASE("volume transforms with |det A|") {
  std::mt19937_64 gen(5);
  for (int iter = 0; iter < 12; ++iter) {
    int n = 2 + static_cast<int>(gen() % 2);
    Polytope p = random_int_hull(gen, n, n + 3, 3);
    RatMatrix a(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          a(i, j) = static_cast<int>(gen() % 5) - 2;
    } while (det(a) == 0);
    RatVector t(n);
    for (int i = 0; i < n; ++i)
      t[i] = q(std::to_string(static_cast<int>(gen() % 5) - 2) + "/3");
    Polytope img = p.affine_image(a, t);
    CHECK(img.volume() == abs(det(a)) * p.volume());
    CHECK(img.centroid() == a.apply(p.centroid()) + t);
  }
}

TEST_CASE("difference body") {
  // DK of a symmetric body is 2K
  Polytope c = cube(2);
  CHECK(c.difference_body().vertices() == c.scaled(2).vertices());

  // D S_2 is the hexagon conv{+-e1, +-e2, +-(e1-e2)} with volume 3
  Polytope d = simplex(2).difference_body();
  CHECK(d.volume() == 3);
  CHECK(d.is_symmetric());
  CHECK(d.vertices().size() == 6);

  std::mt19937_64 gen(9);
  for (int iter = 0; iter < 10; ++iter) {
    int n = 2 + static_cast<int>(gen() % 2);
    Polytope p = random_int_hull(gen, n, n + 3, 4);
    Polytope dp = p.difference_body();
    CHECK(dp.is_symmetric());
    // Brunn-Minkowski consequence: vol(DP) >= 2^n vol(P)
    CHECK(dp.volume() >= Rational(Int(1) << n) * p.volume());
  }
}

TEST_CASE("intersection") {
  Polytope t = tsimplex(2);
  Polytope hexagon = intersect(t, t.negated());
  CHECK(hexagon.volume() == 3);
  CHECK(hexagon.vertices().size() == 6);

  Polytope c = cube(2);
  CHECK(intersect(c, c).vertices() == c.vertices());
  CHECK(intersect(c, c).facets().size() == c.facets().size());

  Polytope far = c.translated(v2("10", "0"));
  CHECK_THROWS_AS(intersect(c, far), std::invalid_argument);
  Polytope touching = c.translated(v2("2", "0"));  // shares an edge only
  CHECK_THROWS_AS(intersect(c, touching), std::invalid_argument);
}

TEST_CASE("clip") {
  Polytope t = tsimplex(2);
  Polytope chopped = clip(t, v2("1", "1"), 0);
  CHECK(chopped.volume() == 2);  // shoelace on {(-1,-1),(1,-1),(-1,1)}
  CHECK(chopped.vertices() ==
        std::vector<RatVector>{v2("-1", "-1"), v2("-1", "1"), v2("1", "-1")});

  Polytope half = clip(cube(2), unit(2, 0), 0);  // [-1,0] x [-1,1]
  CHECK(half.volume() == 2);

  CHECK(clip(cube(2), unit(2, 0), 5).vertices() == cube(2).vertices());
  CHECK_THROWS_AS(clip(cube(2), unit(2, 0), q("-5")), std::invalid_argument);
}

TEST_CASE("gauge") {
  CHECK(cube(3).gauge(RatVector(3)) == 0);
  CHECK(tsimplex(2).gauge(unit(2, 0)) == 1);
  CHECK(cross(2).gauge(v2("1", "1")) == 2);  // l1 norm
  CHECK(cube(2).gauge(v2("1/2", "-1/4")) == q("1/2"));
  Polytope shifted = cube(2).translated(v2("5", "5"));
  CHECK_THROWS_AS(shifted.gauge(unit(2, 0)), std::invalid_argument);
}

TEST_CASE("gauge is positively homogeneous") {
  std::mt19937_64 gen(21);
  Polytope p = random_int_hull(gen, 3, 8, 4);
  p = p.translated(-p.centroid());
  for (int iter = 0; iter < 20; ++iter) {
    RatVector x(3);
    for (int i = 0; i < 3; ++i)
      x[i] = q(std::to_string(static_cast<int>(gen() % 15) - 7) + "/2");
    Rational t(1 + static_cast<int>(gen() % 6), 1 + static_cast<int>(gen() % 4));
    CHECK(p.gauge(t * x) == t * p.gauge(x));
  }
}

TEST_CASE("containment") {
  CHECK(cube(2).contains(cross(2)));
  CHECK(!cross(2).contains(cube(2)));
  CHECK(cube(2).contains(cube(2)));
}

TEST_CASE("dual description consistency") {
  // Rebuilding from the facet system alone must reproduce the vertex set.
  std::mt19937_64 gen(31);
  for (int iter = 0; iter < 10; ++iter) {
    int n = 2 + static_cast<int>(gen() % 2);
    Polytope p = random_int_hull(gen, n, n + 4, 4);
    std::vector<std::pair<RatVector, Rational>> hs;
    for (const auto& f : p.facets()) hs.emplace_back(f.normal, f.offset);
    Polytope r = Polytope::from_facets(n, hs);
    CHECK(r.vertices() == p.vertices());
    for (const auto& f : p.facets()) {
      CHECK(static_cast<int>(f.vertices.size()) >= n);
      CHECK(primitive(f.normal, true) == f.normal);
    }
  }
}

TEST_CASE("surface area") {
  CHECK(cube(2).surface_area().value == doctest::Approx(8).epsilon(1e-12));
  // conv{+-e1, +-e2/2}: perimeter 2 sqrt(5)
  Polytope narrow = Polytope::hull(
      {v2("1", "0"), v2("-1", "0"), v2("0", "1/2"), v2("0", "-1/2")});
  CHECK(narrow.surface_area().value ==
        doctest::Approx(2 * std::sqrt(5.0)).epsilon(1e-12));
  // P_mu for n = 3, mu = 4: F = 2 mu^{n-2} (n-1+mu) = 48
  std::vector<std::pair<RatVector, Rational>> hs;
  for (int i = 0; i < 3; ++i) {
    RatVector e = unit(3, i);
    Rational hw = i < 2 ? q("2") : q("1/2");
    hs.emplace_back(e, hw);
    hs.emplace_back(-e, hw);
  }
  Polytope pmu = Polytope::from_facets(3, hs);
  CHECK(pmu.surface_area().value == doctest::Approx(48).epsilon(1e-12));
  CHECK(pmu.surface_area().rel_error <= 1e-12);
}

TEST_CASE("scaled cross-polytope facet volumes match the closed form") {
  // Each facet of diag(mu) C_n* has (n-1)-volume
  // sqrt(sigma_{n-1}(mu_1^2, ...)) / (n-1)!; squared, this is exact.
  std::vector<Rational> mu{q("1"), q("1/2"), q("1/3")};
  std::vector<RatVector> pts;
  for (int i = 0; i < 3; ++i) {
    pts.push_back(mu[i] * unit(3, i));
    pts.push_back(-mu[i] * unit(3, i));
  }
  Polytope p = Polytope::hull(pts);
  REQUIRE(p.facets().size() == 8);
  // sigma_2(1, 1/4, 1/9) = 1/4 + 1/9 + 1/36 = 7/18
  Rational expect_sq = q("7/18") / Rational(4);  // (sqrt(sig)/2!)^2
  for (int f = 0; f < 8; ++f) {
    Rational relvol = p.facet_relative_volume(f);
    Rational gram =
        gram_prefix_dets(integer_kernel_basis(p.facets()[f].normal)).back();
    CHECK(relvol * relvol * gram == expect_sq);
  }
}

TEST_CASE("polar body") {
  CHECK(cube(3).polar_body().vertices() == cross(3).vertices());
  CHECK(cross(3).polar_body().vertices() == cube(3).vertices());
  std::mt19937_64 gen(17);
  for (int iter = 0; iter < 8; ++iter) {
    int n = 2 + static_cast<int>(gen() % 2);
    Polytope p = random_int_hull(gen, n, n + 3, 3);
    p = p.translated(-p.centroid());
    Polytope pp = p.polar_body().polar_body();
    CHECK(pp.vertices() == p.vertices());
  }
  Polytope off = cube(2).translated(v2("5", "0"));
  CHECK_THROWS_AS(off.polar_body(), std::invalid_argument);
}

TEST_CASE("centered-body inclusions") {
  // For centroid at the origin: DP inside (n+1)P and P inside -nP.
  std::mt19937_64 gen(47);
  for (int iter = 0; iter < 10; ++iter) {
    int n = 2 + static_cast<int>(gen() % 2);
    Polytope p = random_int_hull(gen, n, n + 3, 4);
    p = p.translated(-p.centroid());
    CHECK(p.scaled(Rational(n + 1)).contains(p.difference_body()));
    CHECK(p.negated().scaled(Rational(n)).contains(p));
  }
}

TEST_CASE("higher-dimensional volumes and the 1-d base case") {
  CHECK(cube(4).volume() == 16);
  CHECK(cross(4).volume() == q("2/3"));
  CHECK(cube(5).volume() == 32);
  Polytope seg = Polytope::hull({RatVector{q("-3/2")}, RatVector{q("2")}});
  CHECK(seg.volume() == q("7/2"));
  CHECK(seg.centroid() == RatVector{q("1/4")});
}
