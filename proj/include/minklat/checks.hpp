// The check catalog: one executable verdict per inequality, exact where
// both sides are rational and tolerance-tagged where a square root is
// involved, plus the standalone lemma operations and the fuzz campaign
// driver.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minklat/ehrhart.hpp"
#include "minklat/gallery.hpp"
#include "minklat/minima.hpp"

namespace minklat {

/// One side of a comparison: exact rational, or floating with the relative
/// tolerance that governed the comparison.
struct CheckValue {
  bool exact = true;
  Rational rational;
  double value = 0;
  double tol = 0;

  static CheckValue from_rational(const Rational& r);
  static CheckValue from_double(double v, double tol);
  std::string str() const;
};

/// Outcome of one check. The comparison direction is always lhs <= rhs
/// (strict when strict_expected); `holds` records the verdict and
/// `equality` whether the two sides agree (exactly for exact checks,
/// within the tolerance for floating ones).
struct CheckReport {
  std::string check_id;
  std::string body;
  std::string lattice;
  CheckValue lhs, rhs;
  bool holds = false;
  bool equality = false;
  bool strict_expected = false;
  bool probe = false;
  std::optional<SuccessiveMinima> witnesses;
  std::string notes;
};

struct CheckInfo {
  std::string id;
  std::string statement;
  bool probe = false;   // conjecture probe: reported, never a failure
  bool strict = false;  // strict inequality expected
  bool needs_symmetric = false;
  bool needs_centered = false;
  bool needs_simplex = false;
  bool needs_lattice_polytope = false;
  bool needs_standard_lattice = false;
  int min_dim = 1;
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& id);

/// Applicability predicate; a short reason is stored on failure.
bool check_applicable(const CheckInfo& info, const Polytope& p,
                      const Lattice& l, std::string* why = nullptr);

struct CheckOptions {
  double tolerance = 1e-9;
  std::optional<RatVector> direction;  // gruenbaum halfspace normal
  std::string body_label;              // digest of the body when empty
  EnumerationOptions enumeration;
};

/// Runs one catalog check; throws std::invalid_argument when the check is
/// not applicable to (p, l).
CheckReport run_check(const std::string& id, const Polytope& p,
                      const Lattice& l, const CheckOptions& opts = {});

// -- standalone operations ---------------------------------------------------

struct SignSumResult {
  CheckValue value;  // sum over the 2^n sign vectors eps of |Z alpha_eps|
  Rational bound;    // 2^n
  bool holds = false;
  bool equality = false;
};

/// Sign-sum matrix bound: sum_{eps} |Z alpha_eps| >= 2^n for integer Z with
/// det Z != 0 and exactly-unit alpha (a rational Pythagorean vector). A
/// non-integer Z is accepted when all its Gram prefix determinants are
/// >= 1. Terms whose squared norm is a perfect square are accumulated
/// exactly; the comparison is exact when all of them are.
SignSumResult sign_sum_bound(const RatMatrix& z, const RatVector& alpha,
                             double tolerance = 1e-9);

struct GruenbaumResult {
  Rational ratio;  // vol(P cap {<a, x> <= 0}) / vol(P)
  Rational bound;  // (n/(n+1))^n
  bool holds = false;
  bool equality = false;
};

/// Halfspace volume bound for a body with centroid at the origin.
GruenbaumResult gruenbaum_ratio(const Polytope& p, const RatVector& a);

/// vol(P) >= (2^n/n!) |det((v_i - w_i)/2)| for n point pairs inside P with
/// independent differences.
CheckReport cross_lower_bound(
    const Polytope& p, const std::vector<std::pair<RatVector, RatVector>>& pairs);

/// Pyramid coefficient identity: for a lattice d-polytope Q (d >= 2) and
/// Q' = conv{Q x {0}, e_{d+1}}: E_d(Q') = E_{d-1}(Q)/d + vol(Q)/2, exactly.
CheckReport pyramid_identity(const Polytope& q);

// -- fuzz campaign -----------------------------------------------------------

struct FuzzConfig {
  std::vector<RandomKind> kinds{RandomKind::kCentered};
  std::vector<int> dims{2};
  int count = 10;        // bodies per (kind, dim)
  int vertex_count = 0;  // 0: n + 3
  int coord_bound = 4;
  std::uint64_t seed = 1;
  std::vector<std::string> check_ids;  // empty: every applicable check
  double tolerance = 1e-9;
  int gruenbaum_directions = 5;
};

struct FuzzSummary {
  long long bodies = 0;
  long long reports = 0;
  long long skipped = 0;
  long long violations = 0;  // failed theorem-status checks

  struct ProbeExtreme {
    std::string check_id;
    double ratio = 0;  // max lhs/rhs observed (1 = conjectured bound hit)
    std::string body;
    CheckValue lhs, rhs;
  };
  std::vector<ProbeExtreme> probes;
};

struct FuzzResult {
  std::vector<CheckReport> reports;
  FuzzSummary summary;
};

/// Deterministic given the seed. Bodies are generated per (kind, dim,
/// index); every requested check that is applicable runs on each body.
/// For ehrhart-conj the body is first scaled by lambda_1 so its interior
/// is lattice-point free; for gruenbaum several seeded directions are
/// probed per body. A failed theorem-status check is a violation;
/// conjecture probes only report extremal ratios.
FuzzResult fuzz_campaign(const FuzzConfig& config);

std::string polytope_digest(const Polytope& p);
std::string lattice_digest(const Lattice& l);

/// Elementary symmetric function sigma_k.
Rational sigma_k(const std::vector<Rational>& xs, int k);

}  // namespace minklat
