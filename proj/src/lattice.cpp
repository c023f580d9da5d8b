#include "minklat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minklat {

Lattice Lattice::standard(int n) {
  Lattice l(RatMatrix::identity(n));
  return l;
}

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0)
    throw std::invalid_argument("lattice basis must be square");
  det_ = abs(det(basis_));
  if (det_ == 0) throw std::invalid_argument("lattice basis is singular");
  standard_ = basis_.is_identity();
}

Lattice Lattice::polar() const {
  return Lattice(inverse(basis_).transposed());
}

namespace {

// Integer facet data of a polytope: <a, x> <= b with a integer primitive
// becomes num(b)-scaled comparisons so the inner loops stay in Z.
struct IntFacet {
  std::vector<Int> a;
  Int bnum, bden;  // b = bnum / bden, bden > 0
};

std::vector<IntFacet> int_facets(const Polytope& p) {
  std::vector<IntFacet> out;
  out.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    IntFacet g;
    g.a.resize(p.dim());
    for (int i = 0; i < p.dim(); ++i) g.a[i] = numerator(f.normal[i]);
    g.bnum = numerator(f.offset);
    g.bden = denominator(f.offset);
    out.push_back(std::move(g));
  }
  return out;
}

// Recursive enumeration of integer points of Q. Level j fixes coordinate
// j using exact bounds derived from the projection of Q onto the first
// j+1 coordinates (the hull of the truncated vertices), so only integer
// points of the projections are ever visited -- no bounding-box scan.
class Enumerator {
 public:
  Enumerator(const Polytope& q, const EnumerationOptions& opts)
      : n_(q.dim()), budget_(opts.budget) {
    projections_.resize(n_);
    projections_[n_ - 1] = int_facets(q);
    std::vector<RatVector> pts = q.vertices();
    for (int j = n_ - 1; j >= 1; --j) {
      for (auto& v : pts) {
        RatVector t(j);
        for (int i = 0; i < j; ++i) t[i] = v[i];
        v = std::move(t);
      }
      // Projections of a full-dimensional polytope stay full-dimensional.
      projections_[j - 1] = int_facets(Polytope::hull(pts));
    }
  }

  // visit(point) is called once per lattice point, in lexicographic order.
  template <typename Visit>
  void run(Visit&& visit) {
    std::vector<Int> x(n_);
    recurse(0, x, visit);
  }

  // Count without materializing: the innermost level contributes the
  // length of its feasible interval directly.
  Int count() {
    Int total = 0;
    std::vector<Int> x(n_);
    count_recurse(0, x, total);
    return total;
  }

 private:
  // Feasible interval of coordinate j given x[0..j-1]; false if empty.
  bool interval(int j, const std::vector<Int>& x, Int& lo, Int& hi) {
    bool has_lo = false, has_hi = false;
    Rational rlo, rhi;
    for (const auto& f : projections_[j]) {
      Int partial = 0;
      for (int i = 0; i < j; ++i) partial += f.a[i] * x[i];
      // f.a[j] * x_j <= b - partial
      Rational rem = Rational(f.bnum, f.bden) - Rational(partial);
      if (f.a[j] == 0) {
        if (rem < 0) return false;
        continue;
      }
      Rational bound = rem / Rational(f.a[j]);
      if (f.a[j] > 0) {
        if (!has_hi || bound < rhi) { rhi = bound; has_hi = true; }
      } else {
        if (!has_lo || bound > rlo) { rlo = bound; has_lo = true; }
      }
    }
    if (!has_lo || !has_hi) throw std::logic_error("unbounded projection");
    lo = rat_ceil(rlo);
    hi = rat_floor(rhi);
    return lo <= hi;
  }

  void charge(Int amount) {
    spent_ += amount;
    if (spent_ > budget_)
      throw BudgetExceeded("lattice point enumeration budget exceeded");
  }

  template <typename Visit>
  void recurse(int j, std::vector<Int>& x, Visit&& visit) {
    Int lo, hi;
    if (!interval(j, x, lo, hi)) return;
    charge(hi - lo + 1);
    for (Int v = lo; v <= hi; ++v) {
      x[j] = v;
      if (j + 1 == n_) {
        RatVector p(n_);
        for (int i = 0; i < n_; ++i) p[i] = Rational(x[i]);
        visit(std::move(p));
      } else {
        recurse(j + 1, x, visit);
      }
    }
  }

  void count_recurse(int j, std::vector<Int>& x, Int& total) {
    Int lo, hi;
    if (!interval(j, x, lo, hi)) return;
    if (j + 1 == n_) {
      total += hi - lo + 1;
      charge(1);
      return;
    }
    charge(hi - lo + 1);
    for (Int v = lo; v <= hi; ++v) {
      x[j] = v;
      count_recurse(j + 1, x, total);
    }
  }

  int n_;
  long long budget_;
  Int spent_ = 0;
  std::vector<std::vector<IntFacet>> projections_;  // index j: first j+1 coords
};

// Transform P into the lattice's coordinates: points of L in P are B m
// for integer m in B^{-1} P.
Polytope in_lattice_coords(const Polytope& p, const Lattice& l) {
  if (p.dim() != l.dim())
    throw std::invalid_argument("polytope/lattice dimension mismatch");
  if (l.is_standard()) return p;
  return p.affine_image(inverse(l.basis()), RatVector(p.dim()));
}

}  // namespace

std::vector<RatVector> enumerate_points(const Polytope& p, const Lattice& l,
                                        const EnumerationOptions& opts) {
  Polytope q = in_lattice_coords(p, l);
  std::vector<RatVector> out;
  Enumerator e(q, opts);
  if (l.is_standard()) {
    e.run([&](RatVector m) { out.push_back(std::move(m)); });
  } else {
    e.run([&](RatVector m) { out.push_back(l.basis().apply(m)); });
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<RatVector> enumerate_interior_points(const Polytope& p,
                                                 const Lattice& l,
                                                 const EnumerationOptions& opts) {
  Polytope q = in_lattice_coords(p, l);
  std::vector<RatVector> out;
  Enumerator e(q, opts);
  e.run([&](RatVector m) {
    if (q.contains_point(m, /*strict=*/true)) {
      out.push_back(l.is_standard() ? std::move(m) : l.basis().apply(m));
    }
  });
  if (!l.is_standard()) std::sort(out.begin(), out.end());
  return out;
}

Int count_points(const Polytope& p, const Lattice& l,
                 const EnumerationOptions& opts) {
  Polytope q = in_lattice_coords(p, l);
  return Enumerator(q, opts).count();
}

FacetLatticeInfo facet_lattice(const RatVector& normal) {
  if (!normal.is_integer())
    throw std::invalid_argument("facet_lattice: integer normal expected");
  RatVector prim = primitive(normal, /*keep_orientation=*/true);
  if (!(prim == normal))
    throw std::invalid_argument("facet_lattice: normal not primitive");
  if (normal.dim() == 1) return {RatMatrix(1, 0), Int(1)};

  FacetLatticeInfo info;
  info.basis = integer_kernel_basis(normal);
  Rational gram = gram_prefix_dets(info.basis).back();
  info.gram_det = numerator(gram);
  // det(aff_0(F) cap Z^n) = |a| for primitive a; squared, an exact check.
  if (Rational(info.gram_det) != normal.norm_sq())
    throw std::logic_error("facet lattice gram determinant != |a|^2");
  return info;
}

MinimalDeterminants minimal_determinants(const Lattice& l,
                                         const Rational& radius_factor) {
  int n = l.dim();
  if (n > 5) throw std::invalid_argument("minimal_determinants: n <= 5 only");
  MinimalDeterminants md;
  md.values.resize(n);
  md.exact_values.resize(n);
  md.exact.assign(n, false);

  if (l.basis().is_diagonal()) {
    // For an orthogonal lattice the minimal i-dimensional determinant is
    // the product of the i smallest |d_j| (Cauchy-Binet argument), so the
    // result is certified exact.
    std::vector<Rational> d(n);
    for (int i = 0; i < n; ++i) d[i] = abs(l.basis()(i, i));
    std::sort(d.begin(), d.end());
    Rational prod = 1;
    md.d_min_exact = true;
    for (int i = 0; i < n; ++i) {
      prod *= d[i];
      md.exact_values[i] = prod;
      md.values[i] = rat_double(prod);
      md.exact[i] = true;
      double root = std::pow(md.values[i], 1.0 / (i + 1));
      if (i == 0 || root < md.d_min) md.d_min = root;
    }
    return md;
  }

  // Heuristic: collect all lattice vectors of norm <= R and minimize Gram
  // determinants over subsets.
  Rational shortest_sq = l.basis().col(0).norm_sq();
  for (int j = 1; j < n; ++j)
    shortest_sq = std::min(shortest_sq, l.basis().col(j).norm_sq());
  Rational r_sq = radius_factor * radius_factor * shortest_sq;
  Int box = static_cast<long long>(std::ceil(std::sqrt(rat_double(r_sq)))) + 1;

  // Cube of side 2*box centered at 0 contains the ball of radius R.
  std::vector<std::pair<RatVector, Rational>> hs;
  for (int i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    hs.emplace_back(e, Rational(box));
    hs.emplace_back(-e, Rational(box));
  }
  Polytope cube = Polytope::from_facets(n, hs);
  std::vector<RatVector> vecs;
  for (const auto& v : enumerate_points(cube, l)) {
    if (v.is_zero() || v.norm_sq() > r_sq) continue;
    if (v < -v) continue;  // keep one of each +/- pair
    vecs.push_back(v);
  }
  if (static_cast<int>(vecs.size()) < n)
    throw std::invalid_argument("minimal_determinants: radius too small");

  long long work = 0;
  std::vector<int> pick;
  std::vector<Rational> best(n, Rational(-1));
  // Iterate i-subsets via simple recursion.
  auto search = [&](auto&& self, int start, int want) -> void {
    if (want == 0) {
      if (++work > 4'000'000)
        throw BudgetExceeded("minimal_determinants budget exceeded");
      RatMatrix m = RatMatrix::from_columns([&] {
        std::vector<RatVector> cols;
        for (int idx : pick) cols.push_back(vecs[idx]);
        return cols;
      }());
      int i = static_cast<int>(pick.size());
      RatMatrix g = m.transposed() * m;
      Rational gd = det(g);
      if (gd == 0) return;
      if (best[i - 1] < 0 || gd < best[i - 1]) best[i - 1] = gd;
      return;
    }
    for (int j = start; j + want <= static_cast<int>(vecs.size()); ++j) {
      pick.push_back(j);
      self(self, j + 1, want - 1);
      pick.pop_back();
    }
  };
  for (int i = 1; i <= n; ++i) search(search, 0, i);

  md.d_min_exact = false;
  for (int i = 0; i < n; ++i) {
    if (best[i] < 0)
      throw std::invalid_argument("minimal_determinants: radius too small");
    md.values[i] = std::sqrt(rat_double(best[i]));
    double root = std::pow(md.values[i], 1.0 / (i + 1));
    if (i == 0 || root < md.d_min) md.d_min = root;
  }
  return md;
}

}  // namespace minklat
