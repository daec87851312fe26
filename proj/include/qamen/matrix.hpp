#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qamen/field.hpp"

namespace qamen {

/// Dense row-major matrix over an exact field. Entries are always stored in
/// the field's canonical form. Column vectors are n x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows,
                          std::size_t cols_if_empty = 0);
  /// The i-th standard basis vector of length n as a column.
  static Matrix unit_column(Field field, std::size_t n, std::size_t i);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    return prime_ ? Scalar(static_cast<long>(z_[r * cols_ + c])) : q_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const Scalar& v) { set_raw(r, c, field_.normalize(v)); }
  /// Caller guarantees v is already canonical for the field.
  void set_raw(std::size_t r, std::size_t c, Scalar v) {
    if (prime_)
      z_[r * cols_ + c] = v.get_num().get_si();
    else
      q_[r * cols_ + c] = std::move(v);
  }
  /// Over GF(p) entries are stored as machine integers in [0, p); these give
  /// direct access for the elimination kernels. Undefined over Q.
  std::int64_t residue(std::size_t r, std::size_t c) const { return z_[r * cols_ + c]; }
  void set_residue(std::size_t r, std::size_t c, std::int64_t v) { z_[r * cols_ + c] = v; }
  /// The stored rational entry, without a copy. Undefined over GF(p).
  const Scalar& rational(std::size_t r, std::size_t c) const { return q_[r * cols_ + c]; }

  bool is_zero() const;

  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix rows_subset(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.z_ == b.z_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  bool prime_ = false;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> q_;        // over Q
  std::vector<std::int64_t> z_;  // over GF(p)
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Field& field, std::size_t rows, const std::vector<Matrix>& parts);
Matrix block_diagonal(const Field& field, const std::vector<Matrix>& parts);

// ---- elimination kernels -------------------------------------------------

struct Echelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form. Pivot is the leftmost nonzero column, taken
/// from the first row (at or below the current one) that is nonzero there.
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space as the columns of a cols(m) x k matrix, one
/// column per free variable in reduced echelon convention.
Matrix kernel_basis(const Matrix& m);

/// Basis of {y : y^T m = 0} as rows of a k x rows(m) matrix.
Matrix left_kernel(const Matrix& m);

std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(const Matrix& a);

// ---- subspaces, given by spanning columns --------------------------------

/// Echelon basis of the column space (columns of the transposed rref rows),
/// canonical for the subspace.
Matrix column_space(const Matrix& span);
/// A maximal independent subset of the given columns, in original order.
Matrix independent_columns(const Matrix& span);
bool contains(const Matrix& span, const Matrix& vectors);
bool same_subspace(const Matrix& a, const Matrix& b);
Matrix intersect(const Matrix& u, const Matrix& v);
Matrix sum_spaces(const Matrix& u, const Matrix& v);
/// {x : a x in span(u)}; u has rows(a) rows.
Matrix preimage(const Matrix& a, const Matrix& u);
/// Coordinates of the columns of `vectors` in the independent basis `basis`.
/// Throws InvalidInput if some vector is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& vectors);
/// Extends an independent set of columns by standard basis vectors to a basis
/// of the ambient space; returns only the added columns.
Matrix complement_basis(const Matrix& basis);

}  // namespace qamen
