#include "minklat/ehrhart.hpp"

#include <stdexcept>

namespace minklat {

Rational EhrhartPolynomial::at(const Int& k) const {
  Rational v = 0, pw = 1;
  for (const auto& c : coeffs) {
    v += c * pw;
    pw *= Rational(k);
  }
  return v;
}

EhrhartPolynomial ehrhart_polynomial(const Polytope& p,
                                     const EnumerationOptions& opts) {
  if (!p.is_lattice())
    throw std::invalid_argument("ehrhart_polynomial: vertices must be integral");
  const int n = p.dim();
  Lattice zn = Lattice::standard(n);

  std::vector<Rational> counts(n + 1);
  counts[0] = 1;
  for (int k = 1; k <= n; ++k)
    counts[k] = Rational(count_points(p.scaled(k), zn, opts));

  RatMatrix vand(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational pw = 1;
    for (int i = 0; i <= n; ++i) {
      vand(k, i) = pw;
      pw *= k;
    }
  }
  RatVector rhs{std::vector<Rational>(counts)};
  EhrhartPolynomial e;
  RatVector c = solve(vand, rhs);
  for (int i = 0; i <= n; ++i) e.coeffs.push_back(c[i]);

  // One counting node beyond the interpolation range; a genuine check of
  // polynomiality and of the enumeration itself.
  Int check = count_points(p.scaled(n + 1), zn, opts);
  if (e.at(n + 1) != Rational(check))
    throw std::logic_error("ehrhart_polynomial: consistency check at n+1 failed");
  return e;
}

Rational lattice_surface_area(const Polytope& p) {
  Rational sum = 0;
  for (int f = 0; f < static_cast<int>(p.facets().size()); ++f)
    sum += p.facet_relative_volume(f);
  return sum / 2;
}

Rational root_sum(const Polytope& p, const EnumerationOptions& opts) {
  EhrhartPolynomial e = ehrhart_polynomial(p, opts);
  const auto& en = e.coeffs[e.dim()];
  if (en == 0) throw std::invalid_argument("root_sum: zero leading coefficient");
  return e.coeffs[e.dim() - 1] / en;
}

}  // namespace minklat
