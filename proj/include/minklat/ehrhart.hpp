// Ehrhart polynomials of lattice polytopes, exact lattice surface area of
// rational polytopes, and the exact sum of reciprocal Ehrhart roots.

#pragma once

#include "minklat/lattice.hpp"

namespace minklat {

struct EhrhartPolynomial {
  std::vector<Rational> coeffs;  // E_0 .. E_n, lowest degree first
  int dim() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Value at dilation factor k.
  Rational at(const Int& k) const;
};

/// Exact coefficients: count #(kP cap Z^n) for k = 0..n, solve the
/// Vandermonde system exactly, then verify the count at k = n+1 as an
/// independent consistency node. Requires integral vertices.
EhrhartPolynomial ehrhart_polynomial(const Polytope& p,
                                     const EnumerationOptions& opts = {});

/// Lattice surface area of a rational polytope: half the sum over facets
/// of vol_{n-1}(F) / det(aff_0(F) cap Z^n), computed as relative facet
/// volumes in facet-lattice coordinates. Exact rational; equals the
/// degree-(n-1) Ehrhart coefficient for lattice polytopes.
Rational lattice_surface_area(const Polytope& p);

/// Sum of the gamma_i with -gamma_i the Ehrhart roots, taken exactly as
/// E_{n-1}(P) / E_n(P). No numeric root finding.
Rational root_sum(const Polytope& p, const EnumerationOptions& opts = {});

}  // namespace minklat
