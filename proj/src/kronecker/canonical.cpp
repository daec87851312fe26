#include <algorithm>
#include <map>

#include "qamen/kronecker.hpp"

namespace qamen {

namespace {

Matrix span_image(const Matrix& a, const Matrix& u) {
  if (u.cols() == 0) return Matrix(a.field(), a.rows(), 0);
  return column_space(a * u);
}

// Limit of U_{k+1} = x^{-1}(y U_k), starting from `start`.
Matrix wong_limit(const Matrix& x, const Matrix& y, Matrix start) {
  for (;;) {
    Matrix next = preimage(x, span_image(y, start));
    if (next.cols() == start.cols() && same_subspace(next, start)) return start;
    start = std::move(next);
  }
}

// Source part of the Reg + Inj summand: blocks on which one of the two
// one-sided Wong sequences stays large.
Matrix torsion_source(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.cols();
  Matrix all = Matrix::identity(a.field(), m);
  Matrix v1 = wong_limit(a, b, all);
  Matrix v2 = wong_limit(b, a, all);
  return column_space(hstack(v1, v2));
}

Subrepresentation torsion_sub(const RepPtr& m) {
  Matrix u = torsion_source(m->map(0), m->map(1));
  Matrix w = column_space(hstack(span_image(m->map(0), u), span_image(m->map(1), u)));
  if (w.cols() == 0) w = Matrix(m->field(), m->dim(1), 0);
  if (u.cols() == 0) u = Matrix(m->field(), m->dim(0), 0);
  return Subrepresentation(m, {u, w});
}

// Multiplicities of Pre(i) in a module without Reg or Inj summands. On
// Pre(i) the sequence S_{k+1} = a^{-1}(b S_k) has dim S_k = max(i - k, 0).
std::map<std::size_t, std::size_t> pre_counts(const Representation& p) {
  const Matrix& a = p.map(0);
  const Matrix& b = p.map(1);
  std::vector<std::size_t> d;
  Matrix s = Matrix::identity(p.field(), p.dim(0));
  d.push_back(s.cols());
  while (d.back() > 0) {
    s = preimage(a, span_image(b, s));
    d.push_back(s.cols());
  }
  d.push_back(0);
  std::map<std::size_t, std::size_t> count;
  std::size_t positive = 0;
  // g_k = #{blocks with i > k} = d_k - d_{k+1}.
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    std::size_t g_prev = d[i - 1] - d[i], g = d[i] - d[i + 1];
    if (g_prev > g) {
      count[i] = g_prev - g;
      positive += g_prev - g;
    }
  }
  const std::size_t total = p.dim(1) - p.dim(0);
  if (total > positive) count[0] = total - positive;
  return count;
}

Representation dual(const Representation& m) {
  return Representation(kronecker_quiver(), m.field(), {m.dim(1), m.dim(0)},
                        {m.map(0).transpose(), m.map(1).transpose()});
}

// rank(G^0), rank(G^1), ... down to 0 for nilpotent G.
std::vector<std::size_t> power_ranks(const Matrix& g) {
  std::vector<std::size_t> ranks{g.rows()};
  Matrix p = Matrix::identity(g.field(), g.rows());
  while (ranks.back() > 0) {
    p = p * g;
    ranks.push_back(rank(p));
  }
  return ranks;
}

void regular_blocks(const Representation& r, std::vector<KroneckerBlock>& out, bool& primary) {
  const Field& f = r.field();
  const Matrix& a = r.map(0);
  const Matrix& b = r.map(1);
  const std::size_t n = r.dim(0);
  if (n == 0) return;
  Matrix all = Matrix::identity(f, n);
  Matrix finite = wong_limit(b, a, all);
  Matrix infinite = wong_limit(a, b, Matrix(f, n, 0));
  if (finite.cols() > 0) {
    Matrix fm = coordinates(a * finite, b * finite);
    for (const auto& inv : invariant_factors(fm)) {
      if (f.is_prime()) {
        for (const auto& pf : factor_monic(inv)) out.push_back(KroneckerBlock::reg(pf.factor, pf.exponent));
      } else {
        for (const auto& [g, k] : squarefree_factorization(inv)) {
          auto blk = KroneckerBlock::reg(g, k);
          blk.primary = g.degree() == 1;
          primary = primary && blk.primary;
          out.push_back(std::move(blk));
        }
      }
    }
  }
  if (infinite.cols() > 0) {
    Matrix g = coordinates(b * infinite, a * infinite);
    std::vector<std::size_t> ranks = power_ranks(g);
    ranks.push_back(0);
    // at_least[k] = rank(G^{k-1}) - rank(G^k) = #{Jordan blocks of size >= k}
    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
      std::size_t ge_k = ranks[k - 1] - ranks[k];
      std::size_t ge_k1 = ranks[k] - ranks[k + 1];
      for (std::size_t c = 0; c < ge_k - ge_k1; ++c) out.push_back(KroneckerBlock::reg_inf(k));
    }
  }
}

}  // namespace

std::vector<Poly> invariant_factors(const Matrix& fm) {
  const Field& f = fm.field();
  const std::size_t n = fm.rows();
  if (fm.cols() != n) throw Error(ErrorCode::ShapeMismatch, "invariant factors of a non-square matrix");
  // Smith form of x I - F over k[x].
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> c{f.neg(fm(i, j))};
      if (i == j) c.push_back(Scalar(1));
      m[i][j] = Poly(f, c);
    }
  std::vector<Poly> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!m[i][j].is_zero() && (pi == n || m[i][j].degree() < m[pi][pj].degree())) pi = i, pj = j;
      if (pi == n) break;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m[i][t].is_zero()) continue;
        auto [q, r] = m[i][t].divmod(m[t][t]);
        for (std::size_t j = t; j < n; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m[t][j].is_zero()) continue;
        auto [q, r] = m[t][j].divmod(m[t][t]);
        for (std::size_t i = t; i < n; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the remaining block; otherwise fold a row in.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(m[i][j] % m[t][t]).is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) m[t][j] = m[t][j] + m[bad][j];
    }
    diag.push_back(m[t][t].monic());
  }
  std::vector<Poly> out;
  for (auto& d : diag)
    if (d.degree() > 0) out.push_back(d);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return out;
}

PencilCanonicalForm pencil_canonical_form(const Representation& rep) {
  require_kronecker(rep);
  auto m = std::make_shared<const Representation>(rep.quiver_ptr() == kronecker_quiver()
                                                      ? rep
                                                      : Representation(kronecker_quiver(), rep.field(), rep.dims(),
                                                                       rep.maps()));
  PencilCanonicalForm form;
  std::vector<KroneckerBlock>& out = form.blocks;

  Subrepresentation n_sub = torsion_sub(m);
  for (auto [i, c] : pre_counts(quotient(*m, n_sub)))
    for (std::size_t k = 0; k < c; ++k) out.push_back(KroneckerBlock::pre(i));

  auto dn = std::make_shared<const Representation>(dual(n_sub.as_representation()));
  Subrepresentation r_sub = torsion_sub(dn);
  for (auto [i, c] : pre_counts(quotient(*dn, r_sub)))
    for (std::size_t k = 0; k < c; ++k) out.push_back(KroneckerBlock::inj(i));

  regular_blocks(r_sub.as_representation(), out, form.primary);
  std::sort(out.begin(), out.end());
  return form;
}

bool iso_test(const Representation& m, const Representation& n) {
  require_kronecker(m);
  require_kronecker(n);
  if (m.field() != n.field()) throw Error(ErrorCode::FieldMismatch, "iso_test over different fields");
  if (m.dims() != n.dims()) return false;
  return pencil_canonical_form(m) == pencil_canonical_form(n);
}

}  // namespace qamen
