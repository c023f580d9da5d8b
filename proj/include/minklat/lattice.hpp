// Full-rank lattices Lambda = B Z^n, lattice point enumeration inside
// polytopes, facet sublattices of Z^n, and (heuristic) minimal sublattice
// determinants.

#pragma once

#include <vector>

#include "minklat/polytope.hpp"

namespace minklat {

class Lattice {
 public:
  static Lattice standard(int n);
  /// Columns of basis generate the lattice; throws on singular basis.
  explicit Lattice(RatMatrix basis);

  int dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const Rational& determinant() const { return det_; }
  bool is_standard() const { return standard_; }

  /// Polar lattice {x : <x, y> in Z for all y}; basis B^{-T}.
  Lattice polar() const;

 private:
  RatMatrix basis_;
  Rational det_;
  bool standard_ = false;
};

struct EnumerationOptions {
  // Number of lattice points visited (including projection prefixes)
  // before giving up.
  long long budget = 50'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All points of L inside P, each once, sorted lexicographically.
std::vector<RatVector> enumerate_points(const Polytope& p, const Lattice& l,
                                        const EnumerationOptions& opts = {});

/// Points of L strictly inside P.
std::vector<RatVector> enumerate_interior_points(
    const Polytope& p, const Lattice& l, const EnumerationOptions& opts = {});

/// #(P cap L) without materializing the points.
Int count_points(const Polytope& p, const Lattice& l,
                 const EnumerationOptions& opts = {});

struct FacetLatticeInfo {
  RatMatrix basis;  // n x (n-1) integer basis of {z in Z^n : <a, z> = 0}
  Int gram_det;     // det(basis^T basis) = |a|^2
};

/// Lattice of the hyperplane through 0 with primitive integer normal a.
/// Cross-checks gram_det == |a|^2 (the determinant identity for facet
/// sublattices) and throws std::logic_error if that fails.
FacetLatticeInfo facet_lattice(const RatVector& primitive_normal);

struct MinimalDeterminants {
  std::vector<double> values;          // D_1 .. D_n
  std::vector<Rational> exact_values;  // meaningful where exact[i]
  std::vector<bool> exact;             // certified by a closed form
  double d_min = 0;                    // min_i D_i^(1/i)
  bool d_min_exact = false;
};

/// Candidate minimal determinants D_i(L) from Gram determinants over
/// subsets of all lattice vectors of norm <= radius_factor * (shortest
/// basis-vector length). Certified exact only for diagonal bases (the
/// coordinate sublattices are provably optimal there); heuristic
/// otherwise, as the flags record.
MinimalDeterminants minimal_determinants(const Lattice& l,
                                         const Rational& radius_factor);

}  // namespace minklat
