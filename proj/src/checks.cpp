#include "minklat/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace minklat {

CheckValue CheckValue::from_rational(const Rational& r) {
  CheckValue v;
  v.exact = true;
  v.rational = r;
  v.value = rat_double(r);
  return v;
}

CheckValue CheckValue::from_double(double d, double tol) {
  CheckValue v;
  v.exact = false;
  v.value = d;
  v.tol = tol;
  return v;
}

std::string CheckValue::str() const {
  if (exact) return rat_str(rational);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Rational sigma_k(const std::vector<Rational>& xs, int k) {
  if (k < 0 || k > static_cast<int>(xs.size()))
    throw std::invalid_argument("sigma_k: k out of range");
  std::vector<Rational> e(k + 1);
  e[0] = 1;
  for (const auto& x : xs)
    for (int j = std::min<int>(k, static_cast<int>(xs.size())); j >= 1; --j)
      e[j] += e[j - 1] * x;
  return e[k];
}

namespace {

Rational pow2(int n) { return Rational(Int(1) << n); }

Rational rat_ipow(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string polytope_digest(const Polytope& p) {
  std::string s = std::to_string(p.dim()) + ";";
  for (const auto& v : p.vertices()) s += v.str();
  return "P#" + hex16(fnv1a(s));
}

std::string lattice_digest(const Lattice& l) {
  if (l.is_standard()) return "Z^" + std::to_string(l.dim());
  std::string s;
  for (int j = 0; j < l.dim(); ++j) s += l.basis().col(j).str();
  return "L#" + hex16(fnv1a(s));
}

// ---------------------------------------------------------------------------
// catalog

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> c;
    auto add = [&](CheckInfo i) { c.push_back(std::move(i)); };
    add({.id = "mink2-upper",
         .statement = "vol(K)/det <= prod 2/lambda_i(K)",
         .needs_symmetric = true});
    add({.id = "mink2-lower",
         .statement = "(1/n!) prod 2/lambda_i(K) <= vol(K)/det",
         .needs_symmetric = true});
    add({.id = "mink2-diff-upper",
         .statement = "vol(K)/det <= prod 1/lambda_i(DK)"});
    add({.id = "mink2-diff-lower",
         .statement = "(1/n!) prod 1/lambda_i(DK) <= vol(K)/det"});
    add({.id = "thm-vol-lower",
         .statement = "(n+1)/n! prod 1/lambda_i(K) <= vol(K)/det, centered",
         .needs_centered = true});
    add({.id = "mp-upper",
         .statement = "vol(K)/det <= 4^n prod 1/lambda_i(K), centered",
         .needs_centered = true});
    add({.id = "ehrhart-conj",
         .statement = "probe: vol(K)/det vs (n+1)^n/n! for int K cap L = {0}",
         .probe = true,
         .needs_centered = true});
    add({.id = "prop-dim2",
         .statement = "vol(K)/det <= (9/2)/(lambda_1 lambda_2), centered, n = 2",
         .needs_centered = true,
         .min_dim = 2});
    add({.id = "prop-simplex",
         .statement = "vol(S)/det <= (n+1)^n/n! prod 1/lambda_i(S), centered simplex",
         .needs_centered = true,
         .needs_simplex = true});
    add({.id = "lemma-main",
         .statement = "vol(K) >= (n+1)/n! |det(u_1..u_n)| for minima witnesses",
         .needs_centered = true});
    add({.id = "surf-lower",
         .statement = "F(K) >= 2^n/(n-1)! sqrt(sigma_{n-1}(lambda^-2))",
         .needs_symmetric = true,
         .needs_standard_lattice = true});
    add({.id = "surf-lower-lat",
         .statement = "F(K)/(Dmin(L*) det L) >= 2^n/(n-1)! sqrt(sigma_{n-1})",
         .needs_symmetric = true,
         .min_dim = 2});
    add({.id = "hsw-sym",
         .statement = "E_{n-1}(P)/vol(P) <= (1/2) sum lambda_i(P)",
         .needs_symmetric = true,
         .needs_standard_lattice = true});
    add({.id = "hsw-diff",
         .statement = "E_{n-1}(P)/vol(P) <= (n+1)/2 sum lambda_i(DP)",
         .needs_standard_lattice = true});
    add({.id = "hsw-centered",
         .statement = "E_{n-1}(P)/vol(P) < (n/2) sum lambda_i(P), centered",
         .strict = true,
         .needs_centered = true,
         .needs_standard_lattice = true,
         .min_dim = 2});
    add({.id = "cor15-i",
         .statement = "E_{n-1}(P) <= (n+1)/2 sigma_{n-1}(1/lambda(DP))",
         .needs_standard_lattice = true});
    add({.id = "cor15-ii",
         .statement = "E_{n-1}(P) < 4^n (n/2) sigma_{n-1}(1/lambda(P)), centered",
         .strict = true,
         .needs_centered = true,
         .needs_standard_lattice = true,
         .min_dim = 2});
    add({.id = "cor15-iii",
         .statement = "E_{n-1}(P) <= 2^{n-1} sigma_{n-1}(1/lambda(P)), symmetric",
         .needs_symmetric = true,
         .needs_standard_lattice = true});
    add({.id = "roots-i",
         .statement = "sum gamma_i(P) <= (n+1)/2 sum lambda_i(DP)",
         .needs_lattice_polytope = true,
         .needs_standard_lattice = true});
    add({.id = "roots-ii",
         .statement = "sum gamma_i(P) < (n/2) sum lambda_i(P), centered",
         .strict = true,
         .needs_centered = true,
         .needs_lattice_polytope = true,
         .needs_standard_lattice = true,
         .min_dim = 2});
    add({.id = "roots-iii",
         .statement = "sum gamma_i(P) <= (1/2) sum lambda_i(P), symmetric",
         .needs_symmetric = true,
         .needs_lattice_polytope = true,
         .needs_standard_lattice = true});
    add({.id = "conj-surf-vol",
         .statement = "probe: F(K)/vol(K) vs sqrt(sum lambda_i^2)",
         .probe = true,
         .needs_symmetric = true,
         .needs_standard_lattice = true});
    add({.id = "gruenbaum",
         .statement = "vol(K cap halfspace through centroid) >= (n/(n+1))^n vol(K)",
         .needs_centered = true});
    add({.id = "cross-lower",
         .statement = "vol(K) >= (2^n/n!) |det((v_i-w_i)/2)| for vertex pairs"});
    return c;
  }();
  return catalog;
}

const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

bool check_applicable(const CheckInfo& info, const Polytope& p,
                      const Lattice& l, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (p.dim() != l.dim()) return fail("dimension mismatch");
  if (p.dim() < info.min_dim) return fail("needs n >= " + std::to_string(info.min_dim));
  if (info.id == "prop-dim2" && p.dim() != 2) return fail("needs n = 2");
  if (info.needs_standard_lattice && !l.is_standard())
    return fail("needs the standard lattice");
  if (info.needs_symmetric && !p.is_symmetric()) return fail("body not o-symmetric");
  if (info.needs_simplex && !p.is_simplex()) return fail("body not a simplex");
  if (info.needs_lattice_polytope && !p.is_lattice())
    return fail("body not a lattice polytope");
  if (info.needs_centered && !p.centroid().is_zero())
    return fail("centroid not at the origin");
  if (info.id == "ehrhart-conj") {
    if (!p.has_interior_origin()) return fail("origin not interior");
    if (enumerate_interior_points(p, l).size() != 1)
      return fail("interior contains nonzero lattice points");
  }
  return true;
}

// ---------------------------------------------------------------------------
// run_check

namespace {

// Lazily computed per-run quantities shared between the two sides.
struct Ctx {
  Ctx(const Polytope& p_, const Lattice& l_, const CheckOptions& opts_)
      : p(p_), l(l_), opts(opts_) {}
  const Polytope& p;
  const Lattice& l;
  const CheckOptions& opts;
  std::optional<SuccessiveMinima> mp, mdp;
  std::optional<Rational> vol, lsa;

  const SuccessiveMinima& minima_p() {
    if (!mp) mp = successive_minima(p, l, opts.enumeration);
    return *mp;
  }
  const SuccessiveMinima& minima_dp() {
    if (!mdp) mdp = successive_minima(p.difference_body(), l, opts.enumeration);
    return *mdp;
  }
  const Rational& volume() {
    if (!vol) vol = p.volume();
    return *vol;
  }
  const Rational& lat_surface() {
    if (!lsa) lsa = lattice_surface_area(p);
    return *lsa;
  }
};

CheckReport base_report(const CheckInfo& info, const Polytope& p,
                        const Lattice& l, const CheckOptions& opts) {
  CheckReport r;
  r.check_id = info.id;
  r.body = opts.body_label.empty() ? polytope_digest(p) : opts.body_label;
  r.lattice = lattice_digest(l);
  r.strict_expected = info.strict;
  r.probe = info.probe;
  return r;
}

void set_exact(CheckReport& r, const Rational& lhs, const Rational& rhs) {
  r.lhs = CheckValue::from_rational(lhs);
  r.rhs = CheckValue::from_rational(rhs);
  r.equality = lhs == rhs;
  r.holds = r.probe ? true : (r.strict_expected ? lhs < rhs : lhs <= rhs);
}

void set_float(CheckReport& r, double lhs, double rhs, double tol) {
  r.lhs = CheckValue::from_double(lhs, tol);
  r.rhs = CheckValue::from_double(rhs, tol);
  double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
  r.equality = std::fabs(lhs - rhs) <= tol * scale;
  r.holds = r.probe ? true : (lhs - rhs <= tol * scale);
}

Rational prod_inverse(const std::vector<Rational>& lambdas, const Rational& num) {
  Rational r = 1;
  for (const auto& x : lambdas) r *= num / x;
  return r;
}

Rational sum(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

std::vector<Rational> inv_sq(const std::vector<Rational>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Rational(1) / (x * x));
  return out;
}

std::vector<Rational> inv(const std::vector<Rational>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Rational(1) / x);
  return out;
}

// Equality case of the centered volume bound: K must be
// conv{z_1/l_1, ..., z_n/l_n, -(sum z_i/l_i)} with {z_i} a lattice basis.
bool structural_equality_body(const Polytope& p, const Lattice& l,
                              const SuccessiveMinima& sm) {
  int n = p.dim();
  if (static_cast<int>(p.vertices().size()) != n + 1) return false;
  RatMatrix z = RatMatrix::from_columns(sm.witnesses);
  if (abs(det(z)) != l.determinant()) return false;
  std::vector<RatVector> want;
  RatVector s(n);
  for (int i = 0; i < n; ++i) {
    RatVector u = (Rational(1) / sm.values[i]) * sm.witnesses[i];
    s += u;
    want.push_back(std::move(u));
  }
  want.push_back(-s);
  std::sort(want.begin(), want.end());
  return want == p.vertices();
}

double surface_value(const Polytope& p) { return p.surface_area().value; }

}  // namespace

CheckReport run_check(const std::string& id, const Polytope& p,
                      const Lattice& l, const CheckOptions& opts) {
  const CheckInfo* info = find_check(id);
  if (!info) throw std::invalid_argument("unknown check id: " + id);
  std::string why;
  if (!check_applicable(*info, p, l, &why))
    throw std::invalid_argument("check " + id + " not applicable: " + why);

  const int n = p.dim();
  Ctx ctx{p, l, opts};
  CheckReport r = base_report(*info, p, l, opts);

  if (id == "mink2-upper") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.volume() / l.determinant(), prod_inverse(m.values, 2));
    r.witnesses = m;
  } else if (id == "mink2-lower") {
    const auto& m = ctx.minima_p();
    set_exact(r, prod_inverse(m.values, 2) / Rational(factorial(n)),
              ctx.volume() / l.determinant());
    r.witnesses = m;
  } else if (id == "mink2-diff-upper") {
    const auto& m = ctx.minima_dp();
    set_exact(r, ctx.volume() / l.determinant(), prod_inverse(m.values, 1));
    r.witnesses = m;
  } else if (id == "mink2-diff-lower") {
    const auto& m = ctx.minima_dp();
    set_exact(r, prod_inverse(m.values, 1) / Rational(factorial(n)),
              ctx.volume() / l.determinant());
    r.witnesses = m;
  } else if (id == "thm-vol-lower" || id == "lemma-main") {
    const auto& m = ctx.minima_p();
    Rational lhs;
    if (id == "thm-vol-lower") {
      lhs = Rational(n + 1) / Rational(factorial(n)) * prod_inverse(m.values, 1);
      set_exact(r, lhs, ctx.volume() / l.determinant());
    } else {
      std::vector<RatVector> us;
      for (int i = 0; i < n; ++i)
        us.push_back((Rational(1) / m.values[i]) * m.witnesses[i]);
      Rational d = abs(det(RatMatrix::from_columns(us)));
      lhs = Rational(n + 1) / Rational(factorial(n)) * d;
      set_exact(r, lhs, ctx.volume());
    }
    r.witnesses = m;
    if (r.equality) {
      bool structural = structural_equality_body(p, l, m);
      r.notes = structural ? "equality-case structure: confirmed"
                           : "equality-case structure: witness mismatch";
    }
  } else if (id == "mp-upper") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.volume() / l.determinant(),
              rat_ipow(Rational(4), n) * prod_inverse(m.values, 1));
    r.witnesses = m;
    Rational sym_vol = intersect(p, p.negated()).volume();
    bool mp_ok = ctx.volume() <= pow2(n) * sym_vol;
    r.notes = "vol(K cap -K)=" + rat_str(sym_vol);
    if (!mp_ok) {
      r.holds = false;
      r.notes += "; milman-pajor intermediate violated";
    }
  } else if (id == "ehrhart-conj") {
    Rational bound = rat_ipow(Rational(n + 1), n) / Rational(factorial(n));
    set_exact(r, ctx.volume() / l.determinant(), bound);
    r.notes = "ratio=" + rat_str((ctx.volume() / l.determinant()) / bound);
  } else if (id == "prop-dim2") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.volume() / l.determinant(),
              Rational(9, 2) / (m.values[0] * m.values[1]));
    r.witnesses = m;
  } else if (id == "prop-simplex") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.volume() / l.determinant(),
              rat_ipow(Rational(n + 1), n) / Rational(factorial(n)) *
                  prod_inverse(m.values, 1));
    r.witnesses = m;
  } else if (id == "surf-lower") {
    const auto& m = ctx.minima_p();
    Rational sig = sigma_k(inv_sq(m.values), n - 1);
    double lhs = rat_double(pow2(n) / Rational(factorial(n - 1))) *
                 std::sqrt(rat_double(sig));
    set_float(r, lhs, surface_value(p), opts.tolerance);
    r.witnesses = m;
  } else if (id == "surf-lower-lat") {
    const auto& m = ctx.minima_p();
    Rational sig = sigma_k(inv_sq(m.values), n - 1);
    double bound = rat_double(pow2(n) / Rational(factorial(n - 1))) *
                   std::sqrt(rat_double(sig));
    MinimalDeterminants polar_md = minimal_determinants(l.polar(), Rational(n));
    double f = surface_value(p);
    set_float(r, bound * polar_md.d_min * rat_double(l.determinant()), f,
              opts.tolerance);
    r.witnesses = m;
    std::ostringstream notes;
    notes << "dmin(L*)=" << polar_md.d_min
          << (polar_md.d_min_exact ? " (exact)" : " (heuristic)");
    // Companion bound F(K)/D_{n-1}(L) >= (c/sqrt(n)) * the same sigma
    // expression: the constant c is not pinned down, so the observed
    // ratio is reported, never asserted.
    MinimalDeterminants md = minimal_determinants(l, Rational(n));
    double denom = bound / std::sqrt(static_cast<double>(n));
    notes << "; observed-c=" << (f / md.values[n - 2]) / denom;
    r.notes = notes.str();
    if (!polar_md.d_min_exact) {
      r.notes += "; not asserted (heuristic Dmin)";
      r.holds = true;  // reported only
    }
  } else if (id == "hsw-sym") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.lat_surface() / ctx.volume(), sum(m.values) / 2);
    r.witnesses = m;
  } else if (id == "hsw-diff") {
    const auto& m = ctx.minima_dp();
    set_exact(r, ctx.lat_surface() / ctx.volume(),
              Rational(n + 1, 2) * sum(m.values));
    r.witnesses = m;
  } else if (id == "hsw-centered") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.lat_surface() / ctx.volume(),
              Rational(n, 2) * sum(m.values));
    r.witnesses = m;
  } else if (id == "cor15-i") {
    const auto& m = ctx.minima_dp();
    set_exact(r, ctx.lat_surface(),
              Rational(n + 1, 2) * sigma_k(inv(m.values), n - 1));
    r.witnesses = m;
  } else if (id == "cor15-ii") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.lat_surface(),
              rat_ipow(Rational(4), n) * Rational(n, 2) *
                  sigma_k(inv(m.values), n - 1));
    r.witnesses = m;
  } else if (id == "cor15-iii") {
    const auto& m = ctx.minima_p();
    set_exact(r, ctx.lat_surface(), pow2(n - 1) * sigma_k(inv(m.values), n - 1));
    r.witnesses = m;
  } else if (id == "roots-i") {
    const auto& m = ctx.minima_dp();
    set_exact(r, root_sum(p, opts.enumeration), Rational(n + 1, 2) * sum(m.values));
    r.witnesses = m;
  } else if (id == "roots-ii") {
    const auto& m = ctx.minima_p();
    set_exact(r, root_sum(p, opts.enumeration), Rational(n, 2) * sum(m.values));
    r.witnesses = m;
  } else if (id == "roots-iii") {
    const auto& m = ctx.minima_p();
    set_exact(r, root_sum(p, opts.enumeration), sum(m.values) / 2);
    r.witnesses = m;
  } else if (id == "conj-surf-vol") {
    const auto& m = ctx.minima_p();
    Rational lam_sq = 0;
    for (const auto& x : m.values) lam_sq += x * x;
    double lhs = std::sqrt(rat_double(lam_sq));
    double rhs = surface_value(p) / rat_double(ctx.volume());
    set_float(r, lhs, rhs, opts.tolerance);
    r.witnesses = m;
    char buf[64];
    std::snprintf(buf, sizeof buf, "ratio=%.12g", lhs / rhs);
    r.notes = buf;
  } else if (id == "gruenbaum") {
    RatVector a;
    if (opts.direction) {
      a = *opts.direction;
    } else {
      a = RatVector(n);
      for (int i = 0; i < n; ++i) a[i] = 1;
    }
    GruenbaumResult g = gruenbaum_ratio(p, a);
    set_exact(r, g.bound, g.ratio);
    r.notes = "direction=" + a.str();
  } else if (id == "cross-lower") {
    // Deterministic pairs: (v_i, v_0) for vertices whose differences grow
    // the span.
    const auto& vs = p.vertices();
    std::vector<std::pair<RatVector, RatVector>> pairs;
    std::vector<RatVector> diffs;
    for (size_t i = 1; i < vs.size() && static_cast<int>(pairs.size()) < n; ++i) {
      diffs.push_back(vs[i] - vs[0]);
      if (rank(RatMatrix::from_rows(diffs)) == static_cast<int>(diffs.size())) {
        pairs.emplace_back(vs[i], vs[0]);
      } else {
        diffs.pop_back();
      }
    }
    CheckReport inner = cross_lower_bound(p, pairs);
    inner.body = r.body;
    inner.lattice = r.lattice;
    return inner;
  } else {
    throw std::logic_error("check in catalog but not dispatched: " + id);
  }
  return r;
}

// ---------------------------------------------------------------------------
// standalone operations

SignSumResult sign_sum_bound(const RatMatrix& z, const RatVector& alpha,
                             double tolerance) {
  if (!z.is_square() || z.rows() != alpha.dim())
    throw std::invalid_argument("sign_sum_bound: shape mismatch");
  const int n = z.rows();
  if (det(z) == 0) throw std::invalid_argument("sign_sum_bound: singular matrix");
  if (alpha.norm_sq() != 1)
    throw std::invalid_argument(
        "sign_sum_bound: alpha must be exactly unit (rational Pythagorean)");
  if (!z.is_integer()) {
    // General-matrix mode: every Gram prefix determinant must be >= 1.
    for (const auto& m : gram_prefix_dets(z))
      if (m < 1)
        throw std::invalid_argument(
            "sign_sum_bound: gram prefix determinant < 1");
  }

  bool all_exact = true;
  Rational exact_sum = 0;
  double fsum = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    RatVector ae(n);
    for (int i = 0; i < n; ++i)
      ae[i] = (mask >> i) & 1 ? -alpha[i] : alpha[i];
    Rational ns = z.apply(ae).norm_sq();
    Rational root;
    if (rat_sqrt_exact(ns, root)) {
      exact_sum += root;
      fsum += rat_double(root);
    } else {
      all_exact = false;
      fsum += std::sqrt(rat_double(ns));
    }
  }

  SignSumResult res;
  res.bound = pow2(n);
  if (all_exact) {
    res.value = CheckValue::from_rational(exact_sum);
    res.holds = exact_sum >= res.bound;
    res.equality = exact_sum == res.bound;
  } else {
    double b = rat_double(res.bound);
    res.value = CheckValue::from_double(fsum, tolerance);
    res.holds = fsum >= b * (1 - tolerance);
    res.equality = std::fabs(fsum - b) <= tolerance * b;
  }
  return res;
}

GruenbaumResult gruenbaum_ratio(const Polytope& p, const RatVector& a) {
  if (!p.centroid().is_zero())
    throw std::invalid_argument("gruenbaum_ratio: centroid must be the origin");
  if (a.is_zero()) throw std::invalid_argument("gruenbaum_ratio: zero direction");
  GruenbaumResult g;
  g.ratio = clip(p, a, Rational(0)).volume() / p.volume();
  int n = p.dim();
  g.bound = rat_ipow(Rational(n, n + 1), n);
  g.holds = g.ratio >= g.bound;
  g.equality = g.ratio == g.bound;
  return g;
}

CheckReport cross_lower_bound(
    const Polytope& p,
    const std::vector<std::pair<RatVector, RatVector>>& pairs) {
  const int n = p.dim();
  if (static_cast<int>(pairs.size()) != n)
    throw std::invalid_argument("cross_lower_bound: need n pairs");
  std::vector<RatVector> diffs;
  for (const auto& [v, w] : pairs) {
    if (!p.contains_point(v) || !p.contains_point(w))
      throw std::invalid_argument("cross_lower_bound: point outside the body");
    diffs.push_back(v - w);
  }
  Rational d = abs(det(RatMatrix::from_rows(diffs)));
  if (d == 0)
    throw std::invalid_argument("cross_lower_bound: dependent differences");

  CheckReport r;
  r.check_id = "cross-lower";
  r.body = polytope_digest(p);
  r.lattice = "-";
  set_exact(r, d / Rational(factorial(n)), p.volume());
  return r;
}

CheckReport pyramid_identity(const Polytope& q) {
  const int d = q.dim();
  if (d < 2) throw std::invalid_argument("pyramid_identity: base dim >= 2");
  if (!q.is_lattice())
    throw std::invalid_argument("pyramid_identity: base must be a lattice polytope");

  std::vector<RatVector> pts;
  for (const auto& v : q.vertices()) {
    RatVector w(d + 1);
    for (int i = 0; i < d; ++i) w[i] = v[i];
    pts.push_back(std::move(w));
  }
  RatVector apex(d + 1);
  apex[d] = 1;
  pts.push_back(std::move(apex));
  Polytope pyr = Polytope::hull(pts);

  EhrhartPolynomial top = ehrhart_polynomial(pyr);
  EhrhartPolynomial base = ehrhart_polynomial(q);
  Rational lhs = top.coeffs[d];
  Rational rhs = base.coeffs[d - 1] / Rational(d) + q.volume() / 2;

  CheckReport r;
  r.check_id = "pyramid-identity";
  r.body = polytope_digest(q);
  r.lattice = "Z^" + std::to_string(d + 1);
  r.lhs = CheckValue::from_rational(lhs);
  r.rhs = CheckValue::from_rational(rhs);
  r.equality = lhs == rhs;
  r.holds = r.equality;  // the identity must hold exactly
  return r;
}

// ---------------------------------------------------------------------------
// fuzz campaign

FuzzResult fuzz_campaign(const FuzzConfig& config) {
  FuzzResult res;
  std::map<std::string, FuzzSummary::ProbeExtreme> probes;

  std::vector<std::string> ids = config.check_ids;
  if (ids.empty())
    for (const auto& c : check_catalog()) ids.push_back(c.id);
  for (const auto& id : ids)
    if (!find_check(id)) throw std::invalid_argument("unknown check id: " + id);

  auto collect = [&](CheckReport rep) {
    ++res.summary.reports;
    if (!rep.holds && !rep.probe) ++res.summary.violations;
    if (rep.probe && rep.rhs.value != 0) {
      double ratio = rep.lhs.value / rep.rhs.value;
      auto it = probes.find(rep.check_id);
      if (it == probes.end() || ratio > it->second.ratio)
        probes[rep.check_id] = {rep.check_id, ratio, rep.body, rep.lhs, rep.rhs};
    }
    res.reports.push_back(std::move(rep));
  };

  std::uint64_t counter = 0;
  for (RandomKind kind : config.kinds) {
    for (int dim : config.dims) {
      Lattice zn = Lattice::standard(dim);
      int vc = config.vertex_count > 0 ? config.vertex_count : dim + 3;
      for (int i = 0; i < config.count; ++i) {
        std::uint64_t bseed = splitmix64(config.seed + ++counter);
        Polytope body = random_body(kind, dim, vc, config.coord_bound, bseed);
        ++res.summary.bodies;
        std::string label = "fuzz:" + random_kind_str(kind) + ":" +
                            std::to_string(dim) + ":" + std::to_string(i);

        for (const auto& id : ids) {
          const CheckInfo* info = find_check(id);
          CheckOptions co;
          co.tolerance = config.tolerance;
          co.body_label = label;
          std::string why;
          try {
            if (id == "ehrhart-conj") {
              // Normalize to the largest copy whose interior is free of
              // nonzero lattice points: scale by lambda_1.
              if (!body.centroid().is_zero() || !body.has_interior_origin()) {
                ++res.summary.skipped;
                continue;
              }
              SuccessiveMinima sm = successive_minima(body, zn);
              Polytope probe_body = body.scaled(sm.values[0]);
              co.body_label = label + "*l1";
              if (!check_applicable(*info, probe_body, zn, &why)) {
                ++res.summary.skipped;
                continue;
              }
              collect(run_check(id, probe_body, zn, co));
            } else if (id == "gruenbaum") {
              if (!check_applicable(*info, body, zn, &why)) {
                ++res.summary.skipped;
                continue;
              }
              std::mt19937_64 dgen(splitmix64(bseed ^ 0x6772756e62ULL));
              for (int k = 0; k < config.gruenbaum_directions; ++k) {
                RatVector a(dim);
                do {
                  for (int c = 0; c < dim; ++c) {
                    auto span = 2 * static_cast<std::uint64_t>(config.coord_bound) + 1;
                    a[c] = -config.coord_bound + static_cast<long>(dgen() % span);
                  }
                } while (a.is_zero());
                co.direction = a;
                collect(run_check(id, body, zn, co));
              }
            } else {
              if (!check_applicable(*info, body, zn, &why)) {
                ++res.summary.skipped;
                continue;
              }
              collect(run_check(id, body, zn, co));
            }
          } catch (const BudgetExceeded&) {
            ++res.summary.skipped;
          }
        }
      }
    }
  }
  for (auto& [k, v] : probes) res.summary.probes.push_back(std::move(v));
  return res;
}

}  // namespace minklat
