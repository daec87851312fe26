#include "qamen/representation.hpp"

namespace qamen {

namespace {

// Unknowns are the entries of f_v (row-major), vertex after vertex. Each
// arrow contributes dim N_t x dim M_s equations f_t M_a - N_a f_s = 0.
Matrix intertwining_system(const Representation& m, const Representation& n, std::vector<std::size_t>& offset) {
  const Quiver& q = m.quiver();
  const Field& f = m.field();
  std::size_t unknowns = 0;
  offset.assign(q.num_vertices() + 1, 0);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    offset[v] = unknowns;
    unknowns += n.dim(v) * m.dim(v);
  }
  offset[q.num_vertices()] = unknowns;
  std::size_t equations = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) equations += n.dim(q.target(a)) * m.dim(q.source(a));

  Matrix sys(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const std::size_t s = q.source(a), t = q.target(a);
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
        // (f_t M_a)_{ij} = sum_k f_t[i][k] M_a[k][j]
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (ma(k, j) != 0) {
            std::size_t col = offset[t] + i * m.dim(t) + k;
            sys.set_raw(row, col, f.add(sys(row, col), ma(k, j)));
          }
        // (N_a f_s)_{ij} = sum_k N_a[i][k] f_s[k][j]
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (na(i, k) != 0) {
            std::size_t col = offset[s] + k * m.dim(s) + j;
            sys.set_raw(row, col, f.sub(sys(row, col), na(i, k)));
          }
      }
  }
  return sys;
}

}  // namespace

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  std::vector<std::size_t> offset;
  Matrix sys = intertwining_system(m, n, offset);
  Matrix k = kernel_basis(sys);
  auto mp = std::make_shared<const Representation>(m);
  auto np = std::make_shared<const Representation>(n);
  const Quiver& q = m.quiver();
  std::vector<Morphism> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      Matrix fv(m.field(), n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) fv.set_raw(i, j, k(offset[v] + i * m.dim(v) + j, c));
      comps.push_back(std::move(fv));
    }
    out.emplace_back(mp, np, std::move(comps));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  require_compatible(m, n);
  std::vector<std::size_t> offset;
  Matrix sys = intertwining_system(m, n, offset);
  return sys.cols() - rank(sys);
}

std::int64_t ext1_dim(const EulerData& e, const Representation& m, const Representation& n) {
  std::int64_t hom = static_cast<std::int64_t>(hom_dim(m, n));
  return hom - euler_form(e, m.dimv(), n.dimv());
}

bool in_perp(const EulerData& e, const Representation& t, const Representation& m) {
  return hom_dim(t, m) == 0 && euler_form(e, t.dimv(), m.dimv()) == 0;
}

}  // namespace qamen
