#include "minklat/polytope.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace minklat {

namespace detail {

namespace {

using IntVec = std::vector<Int>;

Int idot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Divide by the gcd of the entries; the direction is kept.
void make_primitive(IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g <= 1) return;
  for (Int& x : v) x /= g;
}

IntVec to_primitive_intvec(const RatVector& v) {
  RatVector p = primitive(v, /*keep_orientation=*/true);
  IntVec r(p.dim());
  for (int i = 0; i < p.dim(); ++i) r[i] = numerator(p[i]);
  return r;
}

struct Ray {
  IntVec v;
  boost::dynamic_bitset<> active;  // over processed constraint indices
};

}  // namespace

std::vector<std::vector<Int>> cone_extreme_rays(
    const std::vector<std::vector<Int>>& rows_in, int d) {
  // Dedupe rows (first occurrence wins) after primitive normalization.
  std::vector<IntVec> rows;
  {
    std::set<IntVec> seen;
    for (IntVec r : rows_in) {
      make_primitive(r);
      if (seen.insert(r).second) rows.push_back(std::move(r));
    }
  }
  const int m = static_cast<int>(rows.size());

  // Pick d rows forming an invertible system; rank < d means the cone has a
  // lineality space, i.e. degenerate input for every caller here.
  std::vector<int> bidx;
  std::vector<std::vector<Rational>> red;
  std::vector<int> piv;
  for (int i = 0; i < m && static_cast<int>(bidx.size()) < d; ++i) {
    std::vector<Rational> v(d);
    for (int j = 0; j < d; ++j) v[j] = Rational(rows[i][j]);
    for (size_t k = 0; k < red.size(); ++k) {
      if (v[piv[k]] == 0) continue;
      Rational f = v[piv[k]] / red[k][piv[k]];
      for (int j = 0; j < d; ++j) v[j] -= f * red[k][j];
    }
    int p = -1;
    for (int j = 0; j < d; ++j)
      if (v[j] != 0) { p = j; break; }
    if (p < 0) continue;
    red.push_back(std::move(v));
    piv.push_back(p);
    bidx.push_back(i);
  }
  if (static_cast<int>(bidx.size()) < d)
    throw std::invalid_argument("degenerate input: constraints not full rank");

  RatMatrix cb(d, d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) cb(k, j) = Rational(rows[bidx[k]][j]);
  RatMatrix binv = inverse(cb);

  // The subcone cut out by the basis rows has the columns of -inv(C_B) as
  // its extreme rays; ray k is active on every basis row but the k-th.
  std::vector<Ray> rays;
  for (int k = 0; k < d; ++k) {
    Ray r;
    r.v = to_primitive_intvec(-binv.col(k));
    r.active.resize(m);
    for (int i = 0; i < d; ++i)
      if (i != k) r.active.set(bidx[i]);
    rays.push_back(std::move(r));
  }

  std::vector<char> in_basis(m, 0);
  for (int b : bidx) in_basis[b] = 1;

  for (int j = 0; j < m; ++j) {
    if (in_basis[j]) continue;
    std::vector<Int> s(rays.size());
    std::vector<int> pos, neg, zer;
    for (size_t r = 0; r < rays.size(); ++r) {
      s[r] = idot(rows[j], rays[r].v);
      if (s[r] > 0) pos.push_back(static_cast<int>(r));
      else if (s[r] < 0) neg.push_back(static_cast<int>(r));
      else zer.push_back(static_cast<int>(r));
    }
    if (pos.empty()) {
      for (int z : zer) rays[z].active.set(j);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(rays.size());
    for (int r : neg) next.push_back(rays[r]);
    for (int z : zer) {
      next.push_back(rays[z]);
      next.back().active.set(j);
    }
    for (int p : pos)
      for (int q : neg) {
        boost::dynamic_bitset<> common = rays[p].active & rays[q].active;
        if (static_cast<int>(common.count()) < d - 2) continue;
        // r_p and r_q are adjacent iff no third ray is active everywhere
        // both of them are.
        bool adjacent = true;
        for (size_t r = 0; r < rays.size(); ++r) {
          if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
          if (common.is_subset_of(rays[r].active)) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(rows[j].size());
        for (size_t i = 0; i < nr.v.size(); ++i)
          nr.v[i] = s[p] * rays[q].v[i] - s[q] * rays[p].v[i];
        make_primitive(nr.v);
        nr.active = common;
        nr.active.set(j);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

namespace {

using detail::cone_extreme_rays;
using IntVec = std::vector<Int>;

void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("dimension out of range (1.." +
                                std::to_string(kMaxDim) + ")");
}

// Jointly primitive integer row for a halfspace <a, x> <= b, encoded as
// (a, -b) with the direction kept.
IntVec halfspace_row(const RatVector& a, const Rational& b) {
  RatVector ext(a.dim() + 1);
  for (int i = 0; i < a.dim(); ++i) ext[i] = a[i];
  ext[a.dim()] = -b;
  return detail::to_primitive_intvec(ext);
}

std::vector<RatVector> vertex_enum(
    int n, const std::vector<std::pair<RatVector, Rational>>& halfspaces) {
  std::vector<IntVec> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& [a, b] : halfspaces) rows.push_back(halfspace_row(a, b));
  IntVec tpos(n + 1, 0);
  tpos[n] = -1;  // t >= 0
  rows.push_back(std::move(tpos));
  auto rays = cone_extreme_rays(rows, n + 1);
  std::vector<RatVector> verts;
  for (const auto& r : rays) {
    if (r[n] == 0)
      throw std::invalid_argument("degenerate input: unbounded polyhedron");
    if (r[n] < 0) throw std::logic_error("vertex ray with negative height");
    RatVector v(n);
    for (int i = 0; i < n; ++i) v[i] = Rational(r[i], r[n]);
    verts.push_back(std::move(v));
  }
  return verts;
}

int affine_rank(const std::vector<RatVector>& pts) {
  if (pts.empty()) return -1;
  std::vector<RatVector> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  if (diffs.empty()) return 0;
  return rank(RatMatrix::from_rows(diffs));
}

}  // namespace

Polytope Polytope::assemble(
    int dim, std::vector<RatVector> vertices,
    std::vector<std::pair<RatVector, Rational>> facets) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(facets.begin(), facets.end(),
            [](const auto& x, const auto& y) {
              if (auto c = x.first <=> y.first; c != 0) return c < 0;
              return x.second < y.second;
            });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  if (static_cast<int>(vertices.size()) < dim + 1 ||
      affine_rank(vertices) != dim)
    throw std::invalid_argument("degenerate input: polytope not full-dimensional");

  Polytope p;
  p.dim_ = dim;
  p.vertices_ = std::move(vertices);
  std::vector<int> per_vertex(p.vertices_.size(), 0);
  for (auto& [a, b] : facets) {
    Facet f;
    f.normal = a;
    f.offset = b;
    for (size_t i = 0; i < p.vertices_.size(); ++i) {
      Rational d = a.dot(p.vertices_[i]);
      if (d > b) throw std::logic_error("vertex violates facet inequality");
      if (d == b) {
        f.vertices.push_back(static_cast<int>(i));
        ++per_vertex[i];
      }
    }
    if (static_cast<int>(f.vertices.size()) < dim)
      throw std::logic_error("facet with too few incident vertices");
    p.facets_.push_back(std::move(f));
  }
  for (int c : per_vertex)
    if (c < dim) throw std::logic_error("vertex on too few facets");
  return p;
}

Polytope Polytope::hull(const std::vector<RatVector>& points) {
  if (points.empty()) throw std::invalid_argument("hull: no points");
  int n = points[0].dim();
  check_dim(n);
  for (const auto& p : points)
    if (p.dim() != n) throw std::invalid_argument("hull: mixed dimensions");

  std::vector<RatVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (affine_rank(pts) != n)
    throw std::invalid_argument("degenerate input: points do not span R^n");

  // Facets of conv(pts) are the extreme rays (a, s) of the cone polar to
  // cone{(p, 1)}; each gives <a, x> <= -s.
  std::vector<IntVec> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    RatVector ext(n + 1);
    for (int i = 0; i < n; ++i) ext[i] = p[i];
    ext[n] = 1;
    rows.push_back(detail::to_primitive_intvec(ext));
  }
  auto rays = cone_extreme_rays(rows, n + 1);

  std::vector<std::pair<RatVector, Rational>> facets;
  for (const auto& r : rays) {
    Int g = 0;
    for (int i = 0; i < n; ++i) g = gcd(g, r[i]);
    if (g == 0) throw std::logic_error("facet ray with zero normal");
    RatVector a(n);
    for (int i = 0; i < n; ++i) a[i] = Rational(r[i] / g);
    facets.emplace_back(std::move(a), Rational(-r[n], g));
  }

  auto verts = vertex_enum(n, facets);
  return assemble(n, std::move(verts), std::move(facets));
}

Polytope Polytope::from_facets(
    int dim, const std::vector<std::pair<RatVector, Rational>>& halfspaces) {
  check_dim(dim);
  if (halfspaces.empty()) throw std::invalid_argument("from_facets: no halfspaces");
  for (const auto& [a, b] : halfspaces) {
    if (a.dim() != dim) throw std::invalid_argument("from_facets: mixed dimensions");
    if (a.is_zero()) throw std::invalid_argument("from_facets: zero normal");
  }
  // Vertices first; hull() then rebuilds the irredundant facet system.
  return hull(vertex_enum(dim, halfspaces));
}

std::vector<std::vector<int>> Polytope::triangulate() const {
  int n = dim_;
  if (static_cast<int>(vertices_.size()) == n + 1) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    return {all};
  }
  // Fan from the lexicographically smallest vertex (index 0) over the
  // recursively triangulated facets that do not contain it.
  std::vector<std::vector<int>> out;
  for (size_t f = 0; f < facets_.size(); ++f) {
    const auto& fv = facets_[f].vertices;
    if (std::binary_search(fv.begin(), fv.end(), 0)) continue;
    std::vector<int> vmap;
    Polytope fp = facet_polytope_mapped(static_cast<int>(f), &vmap);
    for (const auto& s : fp.triangulate()) {
      std::vector<int> simplex;
      simplex.reserve(n + 1);
      simplex.push_back(0);
      for (int k : s) simplex.push_back(vmap[k]);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Polytope Polytope::facet_polytope_mapped(int f, std::vector<int>* vertex_map) const {
  const Facet& fc = facets_[f];
  RatMatrix w = integer_kernel_basis(fc.normal);
  const RatVector& u = vertices_[fc.vertices[0]];
  std::vector<RatVector> mapped;
  mapped.reserve(fc.vertices.size());
  for (int idx : fc.vertices)
    mapped.push_back(solve_full_column_rank(w, vertices_[idx] - u));
  Polytope q = hull(mapped);
  if (vertex_map) {
    vertex_map->assign(q.vertices().size(), -1);
    for (size_t i = 0; i < q.vertices().size(); ++i) {
      for (size_t k = 0; k < mapped.size(); ++k)
        if (mapped[k] == q.vertices()[i]) {
          (*vertex_map)[i] = fc.vertices[k];
          break;
        }
      if ((*vertex_map)[i] < 0) throw std::logic_error("facet vertex map failed");
    }
  }
  return q;
}

Polytope Polytope::facet_polytope(int f) const {
  return facet_polytope_mapped(f, nullptr);
}

Rational Polytope::volume() const {
  if (dim_ == 1) return vertices_[1][0] - vertices_[0][0];
  Rational total = 0;
  for (const auto& s : triangulate()) {
    RatMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      RatVector d = vertices_[s[i + 1]] - vertices_[s[0]];
      for (int j = 0; j < dim_; ++j) m(i, j) = d[j];
    }
    total += abs(det(m));
  }
  return total / Rational(factorial(dim_));
}

RatVector Polytope::centroid() const {
  RatVector c(dim_);
  Rational total = 0;
  Rational np1(dim_ + 1);
  for (const auto& s : triangulate()) {
    RatMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      RatVector d = vertices_[s[i + 1]] - vertices_[s[0]];
      for (int j = 0; j < dim_; ++j) m(i, j) = d[j];
    }
    Rational vol = abs(det(m));  // n! times the simplex volume
    if (vol == 0) continue;
    RatVector mean(dim_);
    for (int idx : s) mean += vertices_[idx];
    c += (vol / np1) * mean;
    total += vol;
  }
  return (Rational(1) / total) * c;
}

Polytope Polytope::affine_image(const RatMatrix& a, const RatVector& t) const {
  if (a.rows() != dim_ || a.cols() != dim_ || t.dim() != dim_)
    throw std::invalid_argument("affine_image: shape mismatch");
  RatMatrix ait = inverse(a).transposed();  // throws on singular a

  std::vector<RatVector> verts;
  verts.reserve(vertices_.size());
  for (const auto& v : vertices_) verts.push_back(a.apply(v) + t);

  std::vector<std::pair<RatVector, Rational>> facets;
  facets.reserve(facets_.size());
  for (const auto& f : facets_) {
    RatVector raw = ait.apply(f.normal);
    RatVector nrm = primitive(raw, /*keep_orientation=*/true);
    Rational g;
    for (int i = 0; i < dim_; ++i)
      if (nrm[i] != 0) { g = raw[i] / nrm[i]; break; }
    facets.emplace_back(std::move(nrm), (f.offset + raw.dot(t)) / g);
  }
  return assemble(dim_, std::move(verts), std::move(facets));
}

Polytope Polytope::translated(const RatVector& t) const {
  std::vector<RatVector> verts;
  for (const auto& v : vertices_) verts.push_back(v + t);
  std::vector<std::pair<RatVector, Rational>> facets;
  for (const auto& f : facets_)
    facets.emplace_back(f.normal, f.offset + f.normal.dot(t));
  return assemble(dim_, std::move(verts), std::move(facets));
}

Polytope Polytope::scaled(const Rational& s) const {
  if (s <= 0) throw std::invalid_argument("scaled: factor must be positive");
  std::vector<RatVector> verts;
  for (const auto& v : vertices_) verts.push_back(s * v);
  std::vector<std::pair<RatVector, Rational>> facets;
  for (const auto& f : facets_) facets.emplace_back(f.normal, s * f.offset);
  return assemble(dim_, std::move(verts), std::move(facets));
}

Polytope Polytope::negated() const {
  std::vector<RatVector> verts;
  for (const auto& v : vertices_) verts.push_back(-v);
  std::vector<std::pair<RatVector, Rational>> facets;
  for (const auto& f : facets_) facets.emplace_back(-f.normal, f.offset);
  return assemble(dim_, std::move(verts), std::move(facets));
}

Polytope Polytope::difference_body() const {
  std::vector<RatVector> pts;
  pts.reserve(vertices_.size() * vertices_.size());
  for (const auto& v : vertices_)
    for (const auto& w : vertices_) pts.push_back(v - w);
  return hull(pts);
}

Polytope Polytope::polar_body() const {
  if (!has_interior_origin())
    throw std::invalid_argument("polar_body: origin not interior");
  std::vector<RatVector> pts;
  pts.reserve(facets_.size());
  for (const auto& f : facets_) pts.push_back((Rational(1) / f.offset) * f.normal);
  return hull(pts);
}

Rational Polytope::gauge(const RatVector& x) const {
  if (!has_interior_origin())
    throw std::invalid_argument("gauge: origin not interior");
  Rational g = 0;
  for (const auto& f : facets_) {
    Rational v = f.normal.dot(x) / f.offset;
    if (v > g) g = v;
  }
  return g;
}

bool Polytope::contains_point(const RatVector& x, bool strict) const {
  for (const auto& f : facets_) {
    Rational d = f.normal.dot(x);
    if (strict ? d >= f.offset : d > f.offset) return false;
  }
  return true;
}

bool Polytope::contains(const Polytope& q) const {
  if (q.dim() != dim_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& v : q.vertices())
    if (!contains_point(v)) return false;
  return true;
}

bool Polytope::is_symmetric() const {
  for (const auto& v : vertices_)
    if (!std::binary_search(vertices_.begin(), vertices_.end(), -v)) return false;
  return true;
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RatVector& v) { return v.is_integer(); });
}

bool Polytope::is_simplex() const {
  return static_cast<int>(vertices_.size()) == dim_ + 1;
}

bool Polytope::has_interior_origin() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const Facet& f) { return f.offset > 0; });
}

Rational Polytope::facet_relative_volume(int f) const {
  if (dim_ == 1) return 1;  // a vertex; 0-dimensional volume
  return facet_polytope_mapped(f, nullptr).volume();
}

Polytope::Approx Polytope::surface_area() const {
  double total = 0;
  for (size_t f = 0; f < facets_.size(); ++f) {
    Rational relvol = facet_relative_volume(static_cast<int>(f));
    // det(W^T W) of the integer kernel basis equals |a|^2 for a primitive.
    Rational gram = dim_ == 1 ? Rational(1)
                              : gram_prefix_dets(
                                    integer_kernel_basis(facets_[f].normal))
                                    .back();
    total += rat_double(relvol) * std::sqrt(rat_double(gram));
  }
  double rel_error = (static_cast<double>(facets_.size()) + 6.0) * DBL_EPSILON;
  return {total, rel_error};
}

std::vector<std::pair<Int, Int>> Polytope::integer_bounding_box() const {
  std::vector<std::pair<Int, Int>> box(dim_);
  for (int j = 0; j < dim_; ++j) {
    Rational lo = vertices_[0][j], hi = vertices_[0][j];
    for (const auto& v : vertices_) {
      if (v[j] < lo) lo = v[j];
      if (v[j] > hi) hi = v[j];
    }
    box[j] = {rat_ceil(lo), rat_floor(hi)};
  }
  return box;
}

Polytope intersect(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<std::pair<RatVector, Rational>> hs;
  for (const auto& f : p.facets()) hs.emplace_back(f.normal, f.offset);
  for (const auto& f : q.facets()) hs.emplace_back(f.normal, f.offset);
  return Polytope::from_facets(p.dim(), hs);
}

Polytope clip(const Polytope& p, const RatVector& a, const Rational& b) {
  if (a.dim() != p.dim()) throw std::invalid_argument("clip: dimension mismatch");
  if (a.is_zero()) throw std::invalid_argument("clip: zero normal");
  std::vector<std::pair<RatVector, Rational>> hs;
  for (const auto& f : p.facets()) hs.emplace_back(f.normal, f.offset);
  hs.emplace_back(a, b);
  return Polytope::from_facets(p.dim(), hs);
}

}  // namespace minklat
