// Exact successive minima lambda_1 <= ... <= lambda_n of a rational
// polytope with interior origin, with witness lattice vectors.

#pragma once

#include "minklat/lattice.hpp"

namespace minklat {

struct SuccessiveMinima {
  std::vector<Rational> values;      // non-decreasing, positive
  std::vector<RatVector> witnesses;  // independent, gauge(K, z_i) = values[i]
};

/// Doubling-radius enumeration: collect L cap (R K) for R = 1, 2, 4, ...,
/// sort the nonzero points by (gauge, lexicographic coordinates) and scan
/// greedily, recording the gauge each time the rank of the span grows. A
/// radius is trusted once rank n is reached inside it, since every point
/// of gauge <= lambda_n then lies in the enumerated region. Witness
/// tie-breaking is lexicographic, so results are reproducible.
SuccessiveMinima successive_minima(const Polytope& k, const Lattice& l,
                                   const EnumerationOptions& opts = {});

}  // namespace minklat
