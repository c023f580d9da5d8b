// Exact rational vectors and matrices, sized for desk-scale geometry
// (dimensions <= 6). Everything here is an immutable value; operations
// never mutate their arguments.

#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "minklat/rational.hpp"

namespace minklat {

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(int dim) : e_(dim) {}
  RatVector(std::initializer_list<Rational> xs) : e_(xs) {}
  explicit RatVector(std::vector<Rational> xs) : e_(std::move(xs)) {}

  int dim() const { return static_cast<int>(e_.size()); }
  const Rational& operator[](int i) const { return e_[i]; }
  Rational& operator[](int i) { return e_[i]; }

  RatVector operator-() const;
  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, const RatVector& v);

  Rational dot(const RatVector& o) const;
  Rational norm_sq() const { return dot(*this); }
  bool is_zero() const;
  bool is_integer() const;

  bool operator==(const RatVector& o) const { return e_ == o.e_; }
  /// Lexicographic order on entries.
  std::strong_ordering operator<=>(const RatVector& o) const;

  std::string str() const;

 private:
  std::vector<Rational> e_;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rational>& d);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int i, int j) const { return a_[i * cols_ + j]; }
  Rational& operator()(int i, int j) { return a_[i * cols_ + j]; }

  RatVector row(int i) const;
  RatVector col(int j) const;
  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;
  /// Matrix-vector product M x.
  RatVector apply(const RatVector& x) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_integer() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool operator==(const RatMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Throws std::invalid_argument on non-square input.
Rational det(const RatMatrix& m);

/// Column-style Hermite normal form of an integer matrix with full column
/// rank: unimodular column operations only, so the integer column span is
/// unchanged. In the result each column has a pivot (its topmost nonzero
/// entry) strictly below the previous column's pivot row, pivots are
/// positive, and in a pivot's row every entry to the left lies in
/// [0, pivot). Throws on non-integer entries or column rank deficiency.
RatMatrix hnf(const RatMatrix& m);

/// v divided by the gcd of its entries. By default the sign is normalized
/// so the first nonzero entry is positive; with keep_orientation the result
/// is the positive multiple of v (facet normals keep their direction).
/// Throws on the zero vector or non-integer entries.
RatVector primitive(const RatVector& v, bool keep_orientation = false);

/// m_i = det(V_i^T V_i) for i = 1..k, where V_i is the submatrix of the
/// first i columns. All m_i > 0 when the columns are independent; throws
/// std::invalid_argument otherwise.
std::vector<Rational> gram_prefix_dets(const RatMatrix& v);

/// Exact inverse; throws std::invalid_argument on singular input.
RatMatrix inverse(const RatMatrix& m);

/// Solve the square system A x = b exactly; throws on singular A.
RatVector solve(const RatMatrix& a, const RatVector& b);

int rank(const RatMatrix& m);

/// Integer basis of the lattice {z in Z^n : <a, z> = 0} for a nonzero
/// integer vector a, as the columns of an n x (n-1) matrix. Computed by
/// the extended-gcd column reduction that drives hnf.
RatMatrix integer_kernel_basis(const RatVector& a);

/// Solve W y = rhs for a full-column-rank W (rows >= cols). Throws
/// std::invalid_argument if the system is inconsistent.
RatVector solve_full_column_rank(const RatMatrix& w, const RatVector& rhs);

}  // namespace minklat
