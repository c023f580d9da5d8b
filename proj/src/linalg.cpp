#include "minklat/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minklat {

Rational rat_parse(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s), Int(1));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);  // two-arg ctor canonicalizes
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

bool rat_is_integer(const Rational& r) { return denominator(r) == 1; }

Int rat_floor(const Rational& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int rat_ceil(const Rational& r) { return -rat_floor(-r); }

double rat_double(const Rational& r) { return r.convert_to<double>(); }

bool rat_sqrt_exact(const Rational& r, Rational& root) {
  if (r < 0) return false;
  Int ns = sqrt(numerator(r)), ds = sqrt(denominator(r));
  if (ns * ns != numerator(r) || ds * ds != denominator(r)) return false;
  root = Rational(ns, ds);
  return true;
}

int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }
int sign(const Int& n) { return n < 0 ? -1 : (n > 0 ? 1 : 0); }

Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int r0 = a, r1 = b;
  Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division keeps the invariants
    Int t;
    t = r0 - q * r1; r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  x = x0; y = y0;
  return r0;
}

Int mod_floor(const Int& n, const Int& m) {
  Int r = n % m;
  if (r < 0) r += m;
  return r;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) { b *= n - i; b /= i + 1; }
  return b;
}

// ---------------------------------------------------------------------------
// RatVector

RatVector RatVector::operator-() const {
  RatVector r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = -e_[i];
  return r;
}

RatVector& RatVector::operator+=(const RatVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dims differ");
  for (int i = 0; i < dim(); ++i) e_[i] += o.e_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dims differ");
  for (int i = 0; i < dim(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v.dim());
  for (int i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

Rational RatVector::dot(const RatVector& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("vector dims differ");
  Rational s = 0;
  for (int i = 0; i < dim(); ++i) s += e_[i] * o.e_[i];
  return s;
}

bool RatVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
}

bool RatVector::is_integer() const {
  return std::all_of(e_.begin(), e_.end(), rat_is_integer);
}

std::strong_ordering RatVector::operator<=>(const RatVector& o) const {
  int n = std::min(dim(), o.dim());
  for (int i = 0; i < n; ++i) {
    if (e_[i] < o.e_[i]) return std::strong_ordering::less;
    if (e_[i] > o.e_[i]) return std::strong_ordering::greater;
  }
  return dim() <=> o.dim();
}

std::string RatVector::str() const {
  std::string s = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ", ";
    s += rat_str(e_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  int n = static_cast<int>(d.size());
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(static_cast<int>(rows.size()), rows[0].dim());
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].dim() != m.cols()) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  if (cols.empty()) return {};
  RatMatrix m(cols[0].dim(), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (cols[j].dim() != m.rows()) throw std::invalid_argument("ragged columns");
    for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::row(int i) const {
  RatVector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

RatVector RatMatrix::col(int j) const {
  RatVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dims differ");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (cols_ != x.dim()) throw std::invalid_argument("matrix/vector dims differ");
  RatVector r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

bool RatMatrix::is_integer() const {
  return std::all_of(a_.begin(), a_.end(), rat_is_integer);
}

bool RatMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

bool RatMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// det / inverse / solve / rank

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;
  RatMatrix a = m;
  Rational prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sgn = -sgn;
    }
    // Bareiss step: every division below is exact.
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan on [A | B]; returns false if A is singular.
bool gauss_jordan(RatMatrix& a, RatMatrix& b) {
  int n = a.rows();
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) { p = i; break; }
    if (p < 0) return false;
    if (p != k) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(k, j), a(p, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(p, j));
    }
    Rational piv = a(k, k);
    for (int j = 0; j < a.cols(); ++j) a(k, j) /= piv;
    for (int j = 0; j < b.cols(); ++j) b(k, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(k, j);
      for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
    }
  }
  return true;
}

}  // namespace

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  RatMatrix a = m, b = RatMatrix::identity(m.rows());
  if (!gauss_jordan(a, b)) throw std::invalid_argument("inverse: singular matrix");
  return b;
}

RatVector solve(const RatMatrix& a, const RatVector& b) {
  if (!a.is_square() || a.rows() != b.dim())
    throw std::invalid_argument("solve: shape mismatch");
  RatMatrix aa = a, bb(b.dim(), 1);
  for (int i = 0; i < b.dim(); ++i) bb(i, 0) = b[i];
  if (!gauss_jordan(aa, bb)) throw std::invalid_argument("solve: singular matrix");
  return bb.col(0);
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// hnf / primitive / gram_prefix_dets / kernels

namespace {

std::vector<std::vector<Int>> to_int_columns(const RatMatrix& m) {
  if (!m.is_integer()) throw std::invalid_argument("expected integer entries");
  std::vector<std::vector<Int>> cols(m.cols(), std::vector<Int>(m.rows()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) cols[j][i] = numerator(m(i, j));
  return cols;
}

}  // namespace

RatMatrix hnf(const RatMatrix& m) {
  auto cols = to_int_columns(m);
  int nrows = m.rows(), ncols = m.cols();
  int c = 0;  // next pivot column
  for (int r = 0; r < nrows && c < ncols; ++r) {
    // Combine columns c..end so that row r has a single nonzero entry at c.
    for (int j = c + 1; j < ncols; ++j) {
      if (cols[j][r] == 0) continue;
      if (cols[c][r] == 0) { std::swap(cols[c], cols[j]); continue; }
      Int x, y;
      Int g = xgcd(cols[c][r], cols[j][r], x, y);
      Int u = cols[c][r] / g, v = cols[j][r] / g;
      // (col_c, col_j) <- (x*col_c + y*col_j, -v*col_c + u*col_j), det = 1
      for (int i = 0; i < nrows; ++i) {
        Int a = cols[c][i], b = cols[j][i];
        cols[c][i] = x * a + y * b;
        cols[j][i] = -v * a + u * b;
      }
    }
    if (cols[c][r] == 0) continue;  // no pivot in this row
    if (cols[c][r] < 0)
      for (int i = 0; i < nrows; ++i) cols[c][i] = -cols[c][i];
    // Reduce the entries left of the pivot into [0, pivot).
    for (int j = 0; j < c; ++j) {
      Int q = cols[j][r] - mod_floor(cols[j][r], cols[c][r]);
      q /= cols[c][r];
      if (q == 0) continue;
      for (int i = 0; i < nrows; ++i) cols[j][i] -= q * cols[c][i];
    }
    ++c;
  }
  if (c < ncols) throw std::invalid_argument("hnf: columns not independent");
  RatMatrix h(nrows, ncols);
  for (int j = 0; j < ncols; ++j)
    for (int i = 0; i < nrows; ++i) h(i, j) = cols[j][i];
  return h;
}

RatVector primitive(const RatVector& v, bool keep_orientation) {
  if (v.is_zero()) throw std::invalid_argument("primitive: zero vector");
  // Clear denominators, then divide by the gcd of the numerators.
  Int den = 1;
  for (int i = 0; i < v.dim(); ++i) den = lcm(den, denominator(v[i]));
  Int g = 0;
  std::vector<Int> w(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    w[i] = numerator(v[i]) * (den / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  int flip = 1;
  if (!keep_orientation) {
    for (const Int& x : w)
      if (x != 0) { flip = x < 0 ? -1 : 1; break; }
  }
  RatVector r(v.dim());
  for (int i = 0; i < v.dim(); ++i) r[i] = Rational(flip * w[i] / g);
  return r;
}

std::vector<Rational> gram_prefix_dets(const RatMatrix& v) {
  int k = v.cols();
  RatMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      g(i, j) = v.col(i).dot(v.col(j));
      g(j, i) = g(i, j);
    }
  // Fraction-free elimination without row swaps: the pivot after step i
  // equals the determinant of the leading (i+1) x (i+1) minor, which is
  // exactly det(V_i^T V_i).
  std::vector<Rational> m(k);
  Rational prev = 1;
  for (int s = 0; s < k; ++s) {
    if (s > 0) {
      for (int i = s; i < k; ++i)
        for (int j = s; j < k; ++j)
          g(i, j) = (g(s - 1, s - 1) * g(i, j) - g(i, s - 1) * g(s - 1, j)) / prev;
      prev = g(s - 1, s - 1);
    }
    m[s] = g(s, s);
    if (m[s] <= 0) throw std::invalid_argument("gram_prefix_dets: dependent columns");
  }
  return m;
}

RatMatrix integer_kernel_basis(const RatVector& a) {
  if (!a.is_integer()) throw std::invalid_argument("kernel: integer vector expected");
  if (a.is_zero()) throw std::invalid_argument("kernel: zero vector");
  int n = a.dim();
  std::vector<Int> w(n);
  for (int i = 0; i < n; ++i) w[i] = numerator(a[i]);
  // Column-reduce w to (g, 0, ..., 0) while applying the same unimodular
  // column operations to U; columns 1..n-1 of U then span the kernel.
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) u[i][i] = 1;  // u[j] is column j
  for (int j = 1; j < n; ++j) {
    if (w[j] == 0) continue;
    if (w[0] == 0) { std::swap(w[0], w[j]); std::swap(u[0], u[j]); continue; }
    Int x, y;
    Int g = xgcd(w[0], w[j], x, y);
    Int p = w[0] / g, q = w[j] / g;
    for (int i = 0; i < n; ++i) {
      Int s = u[0][i], t = u[j][i];
      u[0][i] = x * s + y * t;
      u[j][i] = -q * s + p * t;
    }
    w[j] = 0;
    w[0] = g;
  }
  RatMatrix kb(n, n - 1);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < n; ++i) kb(i, j - 1) = u[j][i];
  return kb;
}

RatVector solve_full_column_rank(const RatMatrix& w, const RatVector& rhs) {
  int n = w.rows(), k = w.cols();
  if (rhs.dim() != n) throw std::invalid_argument("solve: shape mismatch");
  // Select k independent rows by elimination, solve the square subsystem,
  // then verify the remaining equations.
  RatMatrix a = w;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int r = 0;
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) throw std::invalid_argument("solve: columns not independent");
    if (p != r) {
      for (int j = 0; j < k; ++j) std::swap(a(r, j), a(p, j));
      std::swap(perm[r], perm[p]);
    }
    for (int i = r + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (int j = c; j < k; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  RatMatrix sq(k, k);
  RatVector b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sq(i, j) = w(perm[i], j);
    b[i] = rhs[perm[i]];
  }
  RatVector y = solve(sq, b);
  if (!(w.apply(y) == rhs)) throw std::invalid_argument("solve: inconsistent system");
  return y;
}

}  // namespace minklat
