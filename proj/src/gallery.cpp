#include "minklat/gallery.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace minklat {

namespace {

RatVector unit(int n, int i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

RatVector ones(int n) {
  RatVector v(n);
  for (int i = 0; i < n; ++i) v[i] = 1;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Polytope make_box(const std::vector<Rational>& half_widths) {
  int n = static_cast<int>(half_widths.size());
  std::vector<std::pair<RatVector, Rational>> hs;
  for (int i = 0; i < n; ++i) {
    hs.emplace_back(unit(n, i), half_widths[i]);
    hs.emplace_back(-unit(n, i), half_widths[i]);
  }
  return Polytope::from_facets(n, hs);
}

Polytope reflexive_base(int base_dim, const std::string& preset) {
  if (preset == "square" || preset == "cube")
    return make_box(std::vector<Rational>(base_dim, 1));
  if (preset == "hex") {
    if (base_dim != 2)
      throw std::invalid_argument("hex base requires a 3-dimensional pyramid");
    return Polytope::hull({unit(2, 0), unit(2, 1), unit(2, 0) + unit(2, 1),
                           -unit(2, 0), -unit(2, 1),
                           -(unit(2, 0) + unit(2, 1))});
  }
  throw std::invalid_argument("unknown pyramid base: " + preset);
}

}  // namespace

std::string BodySpec::str() const {
  std::ostringstream os;
  auto join = [&](const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += rat_str(v[i]);
    }
    return s;
  };
  switch (family) {
    case Family::kCube: os << "cube:" << dim; break;
    case Family::kCross: os << "cross:" << dim; break;
    case Family::kStdSimplex: os << "S:" << dim; break;
    case Family::kTSimplex: os << "T:" << dim; break;
    case Family::kEqualitySimplex: os << "eq:" << dim << ":" << join(params); break;
    case Family::kKEll: os << "Kell:" << dim << ":" << rat_str(params[0]); break;
    case Family::kPEllN: os << "Pell:" << dim << ":" << rat_str(params[0]); break;
    case Family::kPMu: os << "Pmu:" << dim << ":" << rat_str(params[0]); break;
    case Family::kReflexivePyramid:
      os << "refpyr:" << dim << ":" << rat_str(params[0]);
      if (base != "square") os << ":" << base;
      break;
    case Family::kScaledCross: os << "sym-cross:" << join(params); break;
  }
  return os.str();
}

BodySpec parse_body_spec(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.empty() || parts[0].empty())
    throw std::invalid_argument("empty body spec");
  const std::string& fam = parts[0];
  auto need = [&](size_t k) {
    if (parts.size() != k)
      throw std::invalid_argument("body spec '" + s + "': wrong arity");
  };
  auto parse_params = [&](const std::string& p) {
    std::vector<Rational> out;
    for (const auto& tok : split(p, ',')) out.push_back(rat_parse(tok));
    return out;
  };
  BodySpec spec;
  if (fam == "cube" || fam == "cross" || fam == "S" || fam == "T") {
    need(2);
    spec.family = fam == "cube"    ? Family::kCube
                  : fam == "cross" ? Family::kCross
                  : fam == "S"     ? Family::kStdSimplex
                                   : Family::kTSimplex;
    spec.dim = std::stoi(parts[1]);
  } else if (fam == "eq") {
    need(3);
    spec.family = Family::kEqualitySimplex;
    spec.dim = std::stoi(parts[1]);
    spec.params = parse_params(parts[2]);
  } else if (fam == "Kell" || fam == "Pell" || fam == "Pmu") {
    need(3);
    spec.family = fam == "Kell"   ? Family::kKEll
                  : fam == "Pell" ? Family::kPEllN
                                  : Family::kPMu;
    spec.dim = std::stoi(parts[1]);
    spec.params = parse_params(parts[2]);
  } else if (fam == "refpyr") {
    if (parts.size() != 3 && parts.size() != 4)
      throw std::invalid_argument("body spec '" + s + "': wrong arity");
    spec.family = Family::kReflexivePyramid;
    spec.dim = std::stoi(parts[1]);
    spec.params = parse_params(parts[2]);
    if (parts.size() == 4) spec.base = parts[3];
  } else if (fam == "sym-cross") {
    need(2);
    spec.family = Family::kScaledCross;
    spec.params = parse_params(parts[1]);
    spec.dim = static_cast<int>(spec.params.size());
  } else {
    throw std::invalid_argument("unknown body family: " + fam);
  }
  return spec;
}

Polytope make(const BodySpec& spec) {
  const int n = spec.dim;
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("body dimension out of range");
  auto positive = [&](const Rational& x) {
    if (x <= 0) throw std::invalid_argument("body parameter must be positive");
  };
  switch (spec.family) {
    case Family::kCube:
      return make_box(std::vector<Rational>(n, 1));
    case Family::kCross: {
      std::vector<RatVector> pts;
      for (int i = 0; i < n; ++i) {
        pts.push_back(unit(n, i));
        pts.push_back(-unit(n, i));
      }
      return Polytope::hull(pts);
    }
    case Family::kStdSimplex: {
      std::vector<RatVector> pts{RatVector(n)};
      for (int i = 0; i < n; ++i) pts.push_back(unit(n, i));
      return Polytope::hull(pts);
    }
    case Family::kTSimplex: {
      std::vector<RatVector> pts{-ones(n)};
      for (int i = 0; i < n; ++i)
        pts.push_back(-ones(n) + Rational(n + 1) * unit(n, i));
      return Polytope::hull(pts);
    }
    case Family::kEqualitySimplex: {
      if (static_cast<int>(spec.params.size()) != n)
        throw std::invalid_argument("equality simplex needs n parameters");
      RatMatrix z = spec.basis ? *spec.basis : RatMatrix::identity(n);
      std::vector<RatVector> pts;
      RatVector sum(n);
      for (int i = 0; i < n; ++i) {
        positive(spec.params[i]);
        RatVector v = spec.params[i] * z.col(i);
        sum += v;
        pts.push_back(std::move(v));
      }
      pts.push_back(-sum);
      return Polytope::hull(pts);
    }
    case Family::kKEll: {
      if (spec.params.size() != 1 || !rat_is_integer(spec.params[0]))
        throw std::invalid_argument("K_l needs one integer parameter");
      positive(spec.params[0]);
      if (n < 2) throw std::invalid_argument("K_l needs n >= 2");
      std::vector<RatVector> pts;
      for (int i = 0; i < n - 1; ++i) {
        pts.push_back(unit(n, i));
        pts.push_back(-unit(n, i));
      }
      RatVector last = spec.params[0] * unit(n, 0) + unit(n, n - 1);
      pts.push_back(last);
      pts.push_back(-last);
      return Polytope::hull(pts);
    }
    case Family::kPEllN: {
      if (spec.params.size() != 1) throw std::invalid_argument("P_l^n needs one parameter");
      positive(spec.params[0]);
      std::vector<RatVector> pts;
      pts.push_back(spec.params[0] * unit(n, 0));
      pts.push_back(-spec.params[0] * unit(n, 0));
      for (int i = 1; i < n; ++i) {
        pts.push_back(unit(n, i));
        pts.push_back(-unit(n, i));
      }
      return Polytope::hull(pts);
    }
    case Family::kPMu: {
      if (spec.params.size() != 1) throw std::invalid_argument("P_mu needs one parameter");
      positive(spec.params[0]);
      std::vector<Rational> hw(n, spec.params[0] / 2);
      hw[n - 1] = Rational(1, 2);
      return make_box(hw);
    }
    case Family::kReflexivePyramid: {
      if (spec.params.size() != 1 || !rat_is_integer(spec.params[0]))
        throw std::invalid_argument("reflexive pyramid needs one integer parameter");
      positive(spec.params[0]);
      if (n < 2) throw std::invalid_argument("reflexive pyramid needs n >= 2");
      Polytope base = reflexive_base(n - 1, spec.base);
      std::vector<RatVector> pts;
      Rational scale = Rational(n + 1) * spec.params[0];
      for (const auto& b : base.vertices()) {
        RatVector v(n);
        for (int i = 0; i < n - 1; ++i) v[i] = scale * b[i];
        v[n - 1] = -1;
        pts.push_back(std::move(v));
      }
      pts.push_back(Rational(n) * unit(n, n - 1));
      return Polytope::hull(pts);
    }
    case Family::kScaledCross: {
      if (static_cast<int>(spec.params.size()) != n)
        throw std::invalid_argument("scaled cross needs n parameters");
      std::vector<RatVector> pts;
      for (int i = 0; i < n; ++i) {
        positive(spec.params[i]);
        pts.push_back(spec.params[i] * unit(n, i));
        pts.push_back(-spec.params[i] * unit(n, i));
      }
      return Polytope::hull(pts);
    }
  }
  throw std::logic_error("unreachable");
}

Polytope symmetral(const Polytope& s, int apex_index) {
  const int n = s.dim();
  if (!s.is_simplex())
    throw std::invalid_argument("symmetral: input must be a simplex");
  if (!s.centroid().is_zero())
    throw std::invalid_argument("symmetral: centroid must be the origin");
  if (apex_index < 0 || apex_index > n)
    throw std::invalid_argument("symmetral: bad apex index");

  const RatVector& v0 = s.vertices()[apex_index];
  // Section parallel to the opposite facet: w_i = v0/(n+1) + n v_i/(n+1).
  std::vector<RatVector> edge;  // w_i - v0
  for (int i = 0; i <= n; ++i) {
    if (i == apex_index) continue;
    edge.push_back(Rational(n, n + 1) * (s.vertices()[i] - v0));
  }
  std::vector<RatVector> corners;
  for (int mask = 0; mask < (1 << n); ++mask) {
    RatVector c = v0;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) c += edge[i];
    corners.push_back(std::move(c));
  }
  // Centering translate by (n-2)/2 * v0.
  RatVector shift = Rational(n - 2, 2) * v0;
  for (auto& c : corners) c += shift;
  return Polytope::hull(corners);
}

bool is_reflexive(const Polytope& p) {
  if (!p.has_interior_origin())
    throw std::invalid_argument("is_reflexive: origin not interior");
  return p.is_lattice() && p.polar_body().is_lattice();
}

RandomKind parse_random_kind(const std::string& s) {
  if (s == "symmetric") return RandomKind::kSymmetric;
  if (s == "centered") return RandomKind::kCentered;
  if (s == "general") return RandomKind::kGeneral;
  throw std::invalid_argument("unknown random kind: " + s);
}

std::string random_kind_str(RandomKind k) {
  switch (k) {
    case RandomKind::kSymmetric: return "symmetric";
    case RandomKind::kCentered: return "centered";
    case RandomKind::kGeneral: return "general";
  }
  return "?";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Polytope random_body(RandomKind kind, int n, int vertex_count, int coord_bound,
                     std::uint64_t seed) {
  if (n < 1 || n > 5) throw std::invalid_argument("random_body: n <= 5 only");
  if (vertex_count < n + 1)
    throw std::invalid_argument("random_body: too few vertices requested");
  if (coord_bound < 1 || coord_bound > 16)
    throw std::invalid_argument("random_body: coord_bound in 1..16");

  std::mt19937_64 gen(splitmix64(seed));
  auto draw = [&]() -> int {
    // lo + (next() mod span); the tiny modulo bias is irrelevant here and
    // the result is identical on every platform.
    return -coord_bound +
           static_cast<int>(gen() % (2 * static_cast<std::uint64_t>(coord_bound) + 1));
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<RatVector> pts;
    for (int k = 0; k < vertex_count; ++k) {
      RatVector v(n);
      for (int i = 0; i < n; ++i) v[i] = draw();
      pts.push_back(std::move(v));
    }
    if (kind == RandomKind::kSymmetric) {
      size_t m = pts.size();
      for (size_t i = 0; i < m; ++i) pts.push_back(-pts[i]);
    }
    try {
      Polytope p = Polytope::hull(pts);
      if (kind == RandomKind::kCentered) p = p.translated(-p.centroid());
      return p;
    } catch (const std::invalid_argument&) {
      continue;  // degenerate sample; redraw from the same stream
    }
  }
  throw std::runtime_error("random_body: degenerate samples beyond retry budget");
}

}  // namespace minklat
