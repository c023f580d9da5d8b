#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minklat/lattice.hpp"

using namespace minklat;

namespace {

Rational q(const std::string& s) { return rat_parse(s); }

RatVector unit(int n, int i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

Polytope cube(int n, const Rational& r = Rational(1)) {
  std::vector<std::pair<RatVector, Rational>> hs;
  for (int i = 0; i < n; ++i) {
    hs.emplace_back(unit(n, i), r);
    hs.emplace_back(-unit(n, i), r);
  }
  return Polytope::from_facets(n, hs);
}

Polytope simplex(int n, const Rational& scale = Rational(1)) {
  std::vector<RatVector> pts{RatVector(n)};
  for (int i = 0; i < n; ++i) pts.push_back(scale * unit(n, i));
  return Polytope::hull(pts);
}

Polytope tsimplex(int n) {
  RatVector ones(n);
  for (int i = 0; i < n; ++i) ones[i] = 1;
  std::vector<RatVector> pts{-ones};
  for (int i = 0; i < n; ++i) pts.push_back(-ones + Rational(n + 1) * unit(n, i));
  return Polytope::hull(pts);
}

}  // namespace

TEST_CASE("polar lattice") {
  Lattice z3 = Lattice::standard(3);
  CHECK(z3.polar().basis() == RatMatrix::identity(3));

  Lattice d(RatMatrix::diagonal({q("2"), q("3")}));
  CHECK(d.polar().basis() == RatMatrix::diagonal({q("1/2"), q("1/3")}));
  CHECK(d.polar().determinant() * d.determinant() == 1);

  std::mt19937_64 gen(3);
  for (int iter = 0; iter < 12; ++iter) {
    int n = 2 + static_cast<int>(gen() % 3);
    RatMatrix b(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          b(i, j) = Rational(static_cast<int>(gen() % 9) - 4,
                             1 + static_cast<int>(gen() % 3));
    } while (det(b) == 0);
    Lattice l(b);
    CHECK(l.polar().determinant() * l.determinant() == 1);
    // polar(polar(L)) = L as a point set: the basis here is B itself
    CHECK(l.polar().polar().basis() == l.basis());
  }
}

TEST_CASE("enumerate_points examples") {
  Lattice z2 = Lattice::standard(2);

  auto pts = enumerate_points(simplex(2, 2), z2);  // 2 S_2
  std::vector<RatVector> expect{
      RatVector{q("0"), q("0")}, RatVector{q("0"), q("1")},
      RatVector{q("0"), q("2")}, RatVector{q("1"), q("0")},
      RatVector{q("1"), q("1")}, RatVector{q("2"), q("0")}};
  CHECK(pts == expect);

  CHECK(enumerate_points(cube(2), z2).size() == 9);

  // int(T_n) cap Z^n = {0}
  for (int n = 2; n <= 4; ++n) {
    auto inner = enumerate_interior_points(tsimplex(n), Lattice::standard(n));
    REQUIRE(inner.size() == 1);
    CHECK(inner[0].is_zero());
  }
}

TEST_CASE("enumeration counts match closed forms") {
  for (int n = 2; n <= 4; ++n) {
    Lattice zn = Lattice::standard(n);
    Int prev = 0;
    for (int k = 1; k <= 3; ++k) {
      Int c = count_points(cube(n, Rational(k)), zn);
      Int expect = 1;
      for (int i = 0; i < n; ++i) expect *= 2 * k + 1;
      CHECK(c == expect);  // (2k+1)^n
      CHECK(c > prev);     // monotone in k
      prev = c;
    }
    for (int k = 1; k <= 3; ++k)
      CHECK(count_points(simplex(n, Rational(k)), zn) == binomial(k + n, n));
  }
}

TEST_CASE("enumeration on a non-standard lattice") {
  // diag(1/2, 1/3) Z^2 inside the unit cube: 5 x 7 grid points
  Lattice l(RatMatrix::diagonal({q("1/2"), q("1/3")}));
  auto pts = enumerate_points(cube(2), l);
  CHECK(pts.size() == 35);
  for (const auto& p : pts) {
    CHECK(rat_is_integer(p[0] * 2));
    CHECK(rat_is_integer(p[1] * 3));
  }
  // skewed basis: columns (1,0), (1/2,1/2): {(x,y) : 2y in Z, x-y in Z};
  // 9 points on integer rows plus 2 on each half-integer row
  RatMatrix b(2, 2);
  b(0, 0) = 1; b(0, 1) = q("1/2");
  b(1, 0) = 0; b(1, 1) = q("1/2");
  CHECK(enumerate_points(cube(2), Lattice(b)).size() == 13);
}

TEST_CASE("enumeration budget") {
  EnumerationOptions opts;
  opts.budget = 10;
  CHECK_THROWS_AS(enumerate_points(cube(3, Rational(5)), Lattice::standard(3), opts),
                  BudgetExceeded);
}

TEST_CASE("facet lattice") {
  auto e3 = facet_lattice(unit(3, 2));
  CHECK(e3.gram_det == 1);
  CHECK(e3.basis.cols() == 2);

  auto diag = facet_lattice(RatVector{q("1"), q("1")});
  CHECK(diag.gram_det == 2);
  // basis must be orthogonal to the normal
  CHECK(RatVector{q("1"), q("1")}.dot(diag.basis.col(0)) == 0);

  // normal (1, l, ..., l): gram det 1 + (n-1) l^2
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l <= 3; ++l) {
      RatVector a(n);
      a[0] = 1;
      for (int i = 1; i < n; ++i) a[i] = l;
      CHECK(facet_lattice(a).gram_det == 1 + (n - 1) * l * l);
    }
  }

  CHECK_THROWS_AS(facet_lattice(RatVector{q("2"), q("4")}), std::invalid_argument);
}

TEST_CASE("facet lattice gram det equals |a|^2 on hull facets") {
  std::mt19937_64 gen(77);
  for (int iter = 0; iter < 6; ++iter) {
    int n = 2 + static_cast<int>(gen() % 2);
    std::vector<RatVector> pts;
    for (int k = 0; k < n + 4; ++k) {
      RatVector v(n);
      for (int i = 0; i < n; ++i)
        v[i] = static_cast<int>(gen() % 9) - 4;
      pts.push_back(std::move(v));
    }
    try {
      Polytope p = Polytope::hull(pts);
      for (const auto& f : p.facets())
        CHECK(Rational(facet_lattice(f.normal).gram_det) == f.normal.norm_sq());
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
}

TEST_CASE("minimal determinants, certified cases") {
  auto zn = minimal_determinants(Lattice::standard(4), Rational(4));
  for (int i = 0; i < 4; ++i) {
    CHECK(zn.exact[i]);
    CHECK(zn.exact_values[i] == 1);
  }
  CHECK(zn.d_min == doctest::Approx(1.0));
  CHECK(zn.d_min_exact);

  auto d = minimal_determinants(Lattice(RatMatrix::diagonal({q("1"), q("2")})),
                                Rational(2));
  CHECK(d.exact_values[0] == 1);
  CHECK(d.exact_values[1] == 2);
}

TEST_CASE("minimal determinants, heuristic enumeration") {
  // Basis columns (2,0), (1,2): shortest vector (2,0) has length 2 and
  // D_2 = det = 4.
  RatMatrix b(2, 2);
  b(0, 0) = 2; b(0, 1) = 1;
  b(1, 0) = 0; b(1, 1) = 2;
  Lattice l(b);
  auto md = minimal_determinants(l, Rational(2));
  CHECK(!md.exact[0]);
  CHECK(md.values[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(md.values[1] == doctest::Approx(4.0).epsilon(1e-9));

  // D_{n-1}(L) = D_1(L*) det(L): polar shortest is (0,1/2), length 1/2.
  auto pd = minimal_determinants(l.polar(), Rational(2));
  CHECK(md.values[0] ==
        doctest::Approx(pd.values[0] * rat_double(l.determinant())).epsilon(1e-9));

  // a radius factor too small to see n independent vectors is an error
  CHECK_THROWS_AS(minimal_determinants(l, rat_parse("1/100")),
                  std::invalid_argument);
}
