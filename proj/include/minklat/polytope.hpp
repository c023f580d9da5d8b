// Full-dimensional rational polytopes carrying both descriptions: the
// vertex list and the irredundant facet system <a_j, x> <= b_j with
// primitive integer outward normals. Instances are canonical (vertices and
// facets sorted) and immutable; all operations are pure.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minklat/linalg.hpp"

namespace minklat {

/// Hard cap on the ambient dimension: the exact double-description and
/// enumeration machinery is exponential, and everything checked here lives
/// in dimension <= 5.
inline constexpr int kMaxDim = 6;

struct Facet {
  RatVector normal;           // primitive integer, outward
  Rational offset;            // <normal, x> <= offset
  std::vector<int> vertices;  // indices of incident vertices, ascending
};

class Polytope {
 public:
  /// Convex hull. The points must affinely span R^n; otherwise throws
  /// std::invalid_argument (degenerate input).
  static Polytope hull(const std::vector<RatVector>& points);

  /// Polytope from halfspaces <a, x> <= b. Redundant halfspaces are
  /// dropped; throws if the solution set is empty, unbounded, or not
  /// full-dimensional.
  static Polytope from_facets(
      int dim, const std::vector<std::pair<RatVector, Rational>>& halfspaces);

  int dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  Rational volume() const;
  RatVector centroid() const;

  /// Image A P + t for invertible A; normals become A^{-T} a_j,
  /// re-primitivized with orientation kept.
  Polytope affine_image(const RatMatrix& a, const RatVector& t) const;
  Polytope translated(const RatVector& t) const;
  Polytope scaled(const Rational& s) const;  // s > 0
  Polytope negated() const;                  // -P

  /// Difference body P - P (o-symmetric).
  Polytope difference_body() const;

  /// Polar body {y : <y, x> <= 1 for all x in P}; needs interior origin.
  Polytope polar_body() const;

  /// Gauge of x: min {t >= 0 : x in t P}. Needs interior origin.
  Rational gauge(const RatVector& x) const;

  bool contains_point(const RatVector& x, bool strict = false) const;
  /// True iff Q subseteq P (exact vertex-vs-facet test).
  bool contains(const Polytope& q) const;

  bool is_symmetric() const;       // P = -P
  bool is_lattice() const;         // all vertices integral
  bool is_simplex() const;
  bool has_interior_origin() const;

  /// Fan triangulation from the lexicographically smallest vertex over
  /// recursively triangulated facets; each simplex is a (dim+1)-tuple of
  /// vertex indices.
  std::vector<std::vector<int>> triangulate() const;

  /// (n-1)-volume of facet f measured in coordinates of an integer basis
  /// of {z in Z^n : <a_f, z> = 0}. This is vol_{n-1}(F) / det(aff_0(F) cap
  /// Z^n), an exact rational.
  Rational facet_relative_volume(int f) const;

  /// Facet f as a full-dimensional polytope in R^{n-1} (kernel-basis
  /// coordinates).
  Polytope facet_polytope(int f) const;

  struct Approx {
    double value;
    double rel_error;
  };
  /// Surface area: sum over facets of relvol * sqrt(gram det). The square
  /// roots are the single inexact step; the stated relative error bound is
  /// well under 1e-12 at this scale.
  Approx surface_area() const;

  /// Coordinate-wise integer bounding box [lo_i, hi_i] containing P.
  std::vector<std::pair<Int, Int>> integer_bounding_box() const;

 private:
  Polytope() = default;
  static Polytope assemble(int dim, std::vector<RatVector> vertices,
                           std::vector<std::pair<RatVector, Rational>> facets);
  Polytope facet_polytope_mapped(int f, std::vector<int>* vertex_map) const;

  int dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
};

/// Intersection; throws if not full-dimensional.
Polytope intersect(const Polytope& p, const Polytope& q);

/// P cap {x : <a, x> <= b}; throws if the result is empty or degenerate.
Polytope clip(const Polytope& p, const RatVector& a, const Rational& b);

namespace detail {
/// Extreme rays of the pointed cone {x in R^d : <c, x> <= 0 for every row
/// c}, by the double description method. Rows are integer vectors; rays
/// come back as primitive integer vectors, sorted. Throws if the cone is
/// not pointed (rank < d), which callers report as degenerate input.
std::vector<std::vector<Int>> cone_extreme_rays(
    const std::vector<std::vector<Int>>& rows, int d);
}  // namespace detail

}  // namespace minklat
