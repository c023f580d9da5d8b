// Constructors for every named body used by the check catalog, plus
// seeded random polytope generators for fuzzing.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minklat/polytope.hpp"

namespace minklat {

enum class Family {
  kCube,             // C_n = [-1,1]^n
  kCross,            // C_n* = conv{+-e_i}
  kStdSimplex,       // S_n = conv{0, e_1..e_n}
  kTSimplex,         // T_n = -1 + (n+1) S_n
  kEqualitySimplex,  // conv{mu_i z_i, -(mu_1 z_1 + ... + mu_n z_n)}
  kKEll,             // conv{+-e_1..+-e_{n-1}, +-(l e_1 + e_n)}
  kPEllN,            // diag(l, 1, ..., 1) C_n*
  kPMu,              // |x_i| <= mu/2 (i < n), |x_n| <= 1/2
  kReflexivePyramid, // conv{(n+1) l P x {-1}, n e_n}, P reflexive centered
  kScaledCross,      // conv{+-mu_i e_i}
};

struct BodySpec {
  Family family;
  int dim = 0;
  std::vector<Rational> params;
  /// Optional lattice basis for the equality simplex (columns z_i);
  /// identity when absent.
  std::optional<RatMatrix> basis;
  /// Base preset for the reflexive pyramid: "square" (default, any dim) or
  /// "hex" (dim 3 only).
  std::string base = "square";

  std::string str() const;
};

/// Parse CLI body spec strings: "cube:3", "cross:3", "S:3", "T:2",
/// "eq:2:3,2", "Kell:3:5", "Pell:4:2", "Pmu:3:4/1", "refpyr:3:2",
/// "refpyr:3:2:hex", "sym-cross:1,1/2".
BodySpec parse_body_spec(const std::string& s);

Polytope make(const BodySpec& spec);

/// The o-symmetric parallelepiped associated to a centered simplex S over
/// the hyperplane section parallel to the facet opposite the apex vertex
/// (default: the lexicographically smallest vertex). Satisfies
/// vol(sym) = n! vol(S cap H^-) with H^- the apex-side halfspace.
Polytope symmetral(const Polytope& s, int apex_index = 0);

/// True iff P and its polar body both have integral vertices. Requires
/// interior origin.
bool is_reflexive(const Polytope& p);

enum class RandomKind { kSymmetric, kCentered, kGeneral };

RandomKind parse_random_kind(const std::string& s);
std::string random_kind_str(RandomKind k);

/// Deterministic random polytope. The generator is std::mt19937_64 seeded
/// with splitmix64(seed); integer coordinates are drawn as
/// lo + (next() mod span), so outputs are identical on every platform.
/// symmetric: hull(V u -V); centered: hull(V) translated by the exact
/// negated centroid; general: hull(V). Degenerate samples are retried a
/// bounded number of times.
Polytope random_body(RandomKind kind, int n, int vertex_count, int coord_bound,
                     std::uint64_t seed);

/// splitmix64 step; used to derive per-instance seeds reproducibly.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace minklat
