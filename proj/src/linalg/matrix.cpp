#include "qamen/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qamen {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), prime_(field.is_prime()), rows_(rows), cols_(cols) {
  if (prime_)
    z_.assign(rows * cols, 0);
  else
    q_.resize(rows * cols);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, Scalar(1));
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols_if_empty) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : cols_if_empty;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::unit_column(Field field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set_raw(i, 0, Scalar(1));
  return m;
}

bool Matrix::is_zero() const {
  if (prime_) return std::all_of(z_.begin(), z_.end(), [](std::int64_t x) { return x == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const Scalar& x) { return x == 0; });
}

// Copies entry (si, sj) of `src` to (di, dj) of `dst`; same field assumed.
#define QAMEN_COPY(dst, di, dj, src, si, sj)                                  \
  do {                                                                       \
    if ((dst).prime_)                                                        \
      (dst).z_[(di) * (dst).cols_ + (dj)] = (src).z_[(si) * (src).cols_ + (sj)]; \
    else                                                                     \
      (dst).q_[(di) * (dst).cols_ + (dj)] = (src).q_[(si) * (src).cols_ + (sj)]; \
  } while (0)

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) QAMEN_COPY(t, j, i, *this, i, j);
  return t;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) QAMEN_COPY(m, i, k, *this, i, idx[k]);
  return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) QAMEN_COPY(m, k, j, *this, idx[k], j);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) QAMEN_COPY(m, i, j, *this, r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw Error(ErrorCode::ShapeMismatch, "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) QAMEN_COPY(*this, r0 + i, c0 + j, b, i, j);
}

#undef QAMEN_COPY

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw Error(ErrorCode::ShapeMismatch, "product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  if (prime_) {
    const std::int64_t p = field_.characteristic();
    const std::size_t n = rhs.cols_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t x = z_[i * cols_ + k];
        if (x == 0) continue;
        const std::int64_t* brow = &rhs.z_[k * n];
        std::int64_t* crow = &out.z_[i * n];
        for (std::size_t j = 0; j < n; ++j)
          if (brow[j] != 0) crow[j] = (crow[j] + x * brow[j]) % p;
      }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = q_[i * cols_ + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& y = rhs.q_[k * rhs.cols_ + j];
        if (y != 0) out.q_[i * rhs.cols_ + j] += x * y;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::ShapeMismatch, "sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  if (prime_) {
    const std::int64_t p = field_.characteristic();
    for (std::size_t i = 0; i < z_.size(); ++i) out.z_[i] = (z_[i] + rhs.z_[i]) % p;
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = q_[i] + rhs.q_[i];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::ShapeMismatch, "difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  if (prime_) {
    const std::int64_t p = field_.characteristic();
    for (std::size_t i = 0; i < z_.size(); ++i) out.z_[i] = ((z_[i] - rhs.z_[i]) % p + p) % p;
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = q_[i] - rhs.q_[i];
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  Scalar t = field_.normalize(s);
  if (prime_) {
    const std::int64_t p = field_.characteristic(), k = t.get_num().get_si();
    for (std::size_t i = 0; i < z_.size(); ++i) out.z_[i] = z_[i] * k % p;
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = q_[i] * t;
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.format((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix hstack(const Field& field, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix m(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix block_diagonal(const Field& field, const std::vector<Matrix>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Matrix m(field, r, c);
  r = c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

}  // namespace qamen
