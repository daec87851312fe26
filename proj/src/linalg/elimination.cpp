#include <algorithm>
#include <map>

#include "qamen/matrix.hpp"

namespace qamen {

namespace {

Echelon rref_prime(const Matrix& m) {
  const std::int64_t p = m.field().characteristic();
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::int64_t> a(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i * c + j] = m.residue(i, j);

  auto inv = [p](std::int64_t x) {
    std::int64_t t = 0, nt = 1, rr = p, nr = x;
    while (nr != 0) {
      std::int64_t q = rr / nr, tmp = t - q * nt;
      t = nt, nt = tmp, tmp = rr - q * nr, rr = nr, nr = tmp;
    }
    return t < 0 ? t + p : t;
  };

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t sel = r;
    for (std::size_t i = row; i < r; ++i)
      if (a[i * c + col] != 0) {
        sel = i;
        break;
      }
    if (sel == r) continue;
    if (sel != row)
      std::swap_ranges(a.begin() + sel * c, a.begin() + sel * c + c, a.begin() + row * c);
    std::int64_t* prow = &a[row * c];
    std::int64_t s = inv(prow[col]);
    support.clear();
    for (std::size_t j = col; j < c; ++j)
      if (prow[j] != 0) {
        prow[j] = prow[j] * s % p;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row) continue;
      std::int64_t* irow = &a[i * c];
      std::int64_t f = irow[col];
      if (f == 0) continue;
      for (std::size_t j : support) {
        irow[j] = (irow[j] - f * prow[j]) % p;
        if (irow[j] < 0) irow[j] += p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(m.field(), r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (a[i * c + j] != 0) out.set_residue(i, j, a[i * c + j]);
  return {std::move(out), std::move(pivots)};
}

Echelon rref_rational(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Scalar> a(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i * c + j] = m.rational(i, j);

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t sel = r;
    for (std::size_t i = row; i < r; ++i)
      if (a[i * c + col] != 0) {
        sel = i;
        break;
      }
    if (sel == r) continue;
    if (sel != row)
      for (std::size_t j = 0; j < c; ++j) std::swap(a[sel * c + j], a[row * c + j]);
    Scalar s = 1 / a[row * c + col];
    support.clear();
    for (std::size_t j = col; j < c; ++j)
      if (a[row * c + j] != 0) {
        a[row * c + j] *= s;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row) continue;
      if (a[i * c + col] == 0) continue;
      const Scalar f = a[i * c + col];
      for (std::size_t j : support) a[i * c + j] -= f * a[row * c + j];
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(m.field(), r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (a[i * c + j] != 0) out.set_raw(i, j, a[i * c + j]);
  return {std::move(out), std::move(pivots)};
}

// Rank over Q on sparse rows: each row is reduced against the pivot rows
// found so far (plain echelon form, leading entry 1), so zeros are never
// materialised.
std::size_t rank_rational(const Matrix& m) {
  using Entry = std::pair<std::size_t, Scalar>;
  using Row = std::vector<Entry>;
  std::map<std::size_t, Row> pivots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (const Scalar& x = m.rational(i, j); x != 0) row.emplace_back(j, x);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        Scalar s = 1 / row.front().second;
        for (auto& e : row) e.second *= s;
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      // row -= row[lead] * pivot
      const Scalar f = row.front().second;
      const Row& p = it->second;
      Row out;
      out.reserve(row.size() + p.size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < p.size()) {
        if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
          out.push_back(std::move(row[a++]));
        } else if (a == row.size() || p[b].first < row[a].first) {
          out.emplace_back(p[b].first, -f * p[b].second);
          ++b;
        } else {
          Scalar v = row[a].second - f * p[b].second;
          if (v != 0) out.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

Echelon rref(const Matrix& m) {
  return m.field().is_prime() ? rref_prime(m) : rref_rational(m);
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  if (!m.field().is_prime()) return rank_rational(m);
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  const Field& f = m.field();
  Matrix k(f, n, free_cols.size());
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t fc = free_cols[idx];
    k.set_raw(fc, idx, Scalar(1));
    for (std::size_t row = 0; row < e.pivots.size(); ++row) {
      const Scalar& v = e.reduced(row, fc);
      if (v != 0) k.set_raw(e.pivots[row], idx, f.neg(v));
    }
  }
  return k;
}

Matrix left_kernel(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: row mismatch");
  Echelon e = rref(hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t row = 0; row < e.pivots.size(); ++row) {
    std::size_t pc = e.pivots[row];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set_raw(pc, j, e.reduced(row, a.cols() + j));
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.field(), a.rows()));
}

Scalar determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix w = a;
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i)
      if (w(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel == n) return Scalar(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = w(sel, j);
        w.set_raw(sel, j, w(col, j));
        w.set_raw(col, j, t);
      }
      det = f.neg(det);
    }
    det = f.mul(det, w(col, col));
    Scalar s = f.inv(w(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      Scalar factor = f.mul(w(i, col), s);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) w.set_raw(i, j, f.sub(w(i, j), f.mul(factor, w(col, j))));
    }
  }
  return det;
}

Matrix column_space(const Matrix& span) {
  if (span.cols() == 0) return Matrix(span.field(), span.rows(), 0);
  Echelon e = rref(span.transpose());
  return e.reduced.block(0, 0, e.pivots.size(), span.rows()).transpose();
}

Matrix independent_columns(const Matrix& span) {
  if (span.cols() == 0) return span;
  return span.columns(rref(span).pivots);
}

bool contains(const Matrix& span, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  return rank(hstack(span, vectors)) == rank(span);
}

bool same_subspace(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && column_space(a) == column_space(b);
}

Matrix intersect(const Matrix& u, const Matrix& v) {
  require_same_field(u.field(), v.field());
  if (u.cols() == 0 || v.cols() == 0) return Matrix(u.field(), u.rows(), 0);
  Matrix ub = independent_columns(u);
  Matrix k = kernel_basis(hstack(ub, v));
  Matrix coeffs = k.block(0, 0, ub.cols(), k.cols());
  return independent_columns(ub * coeffs);
}

Matrix sum_spaces(const Matrix& u, const Matrix& v) { return independent_columns(hstack(u, v)); }

Matrix preimage(const Matrix& a, const Matrix& u) {
  require_same_field(a.field(), u.field());
  if (u.cols() == 0) return kernel_basis(a);
  Matrix k = kernel_basis(hstack(a, u));
  return independent_columns(k.block(0, 0, a.cols(), k.cols()));
}

Matrix coordinates(const Matrix& basis, const Matrix& vectors) {
  if (basis.cols() == 0) {
    if (!vectors.is_zero()) throw Error(ErrorCode::InvalidInput, "vector outside the zero subspace");
    return Matrix(vectors.field(), 0, vectors.cols());
  }
  auto x = solve(basis, vectors);
  if (!x) throw Error(ErrorCode::InvalidInput, "vector outside the span");
  return *x;
}

Matrix complement_basis(const Matrix& basis) {
  const std::size_t n = basis.rows();
  std::vector<bool> used(n, false);
  if (basis.cols() > 0)
    for (auto p : rref(basis.transpose()).pivots) used[p] = true;
  std::vector<Matrix> cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!used[j]) cols.push_back(Matrix::unit_column(basis.field(), n, j));
  return hstack(basis.field(), n, cols);
}

}  // namespace qamen
