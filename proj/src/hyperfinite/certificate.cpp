#include <algorithm>
#include <sstream>

#include "qamen/hyperfinite.hpp"

namespace qamen {

SubspaceFamily family_of(const Subrepresentation& s) { return s.bases(); }

std::size_t family_dim(const SubspaceFamily& f) {
  std::size_t d = 0;
  for (const auto& b : f) d += b.cols();
  return d;
}

std::size_t HyperfiniteCertificate::max_block() const {
  std::size_t m = 0;
  for (const auto& b : blocks) m = std::max(m, family_dim(b));
  return m;
}

std::int64_t L_epsilon(const Scalar& eps) {
  require_epsilon(eps);
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), eps.get_den().get_mpz_t(), eps.get_num().get_mpz_t());
  return c.get_si() + 3;
}

void require_epsilon(const Scalar& eps) {
  if (eps <= 0 || eps >= 1) throw Error(ErrorCode::BadEpsilon, "epsilon must lie strictly between 0 and 1");
}

HyperfiniteCertificate trivial_certificate(RepPtr m, const Scalar& epsilon, std::int64_t L) {
  HyperfiniteCertificate c;
  for (std::size_t v = 0; v < m->quiver().num_vertices(); ++v)
    c.submodule.push_back(Matrix::identity(m->field(), m->dim(v)));
  if (m->total_dim() > 0) c.blocks.push_back(c.submodule);
  c.ambient = std::move(m);
  c.epsilon = epsilon;
  c.L = L;
  return c;
}

const char* to_string(VerifyCode c) noexcept {
  switch (c) {
    case VerifyCode::Ok: return "OK";
    case VerifyCode::NotSubrep: return "NOT_SUBREP";
    case VerifyCode::NotDirect: return "NOT_DIRECT";
    case VerifyCode::SpanMismatch: return "SPAN_MISMATCH";
    case VerifyCode::BlockTooBig: return "BLOCK_TOO_BIG";
    case VerifyCode::EpsilonViolated: return "EPSILON_VIOLATED";
  }
  return "UNKNOWN";
}

namespace {

// Arrow stability and shape of one family; empty string when fine.
std::string stability_problem(const Representation& m, const SubspaceFamily& f) {
  const Quiver& q = m.quiver();
  if (f.size() != q.num_vertices()) return "family has the wrong number of vertices";
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].cols() > 0 && f[v].rows() != m.dim(v)) return "basis at " + q.vertices()[v] + " has the wrong length";
    if (f[v].field() != m.field() && f[v].cols() > 0) return "basis at " + q.vertices()[v] + " over another field";
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Matrix& src = f[q.source(a)];
    const Matrix& tgt = f[q.target(a)];
    if (src.cols() == 0) continue;
    Matrix img = m.map(a) * src;
    if (img.is_zero()) continue;
    if (tgt.cols() == 0 || rank(hstack(tgt, img)) != rank(tgt))
      return "arrow " + q.arrows()[a].name + " leaves the subspace";
  }
  return {};
}

Matrix padded(const Matrix& b, const Field& f, std::size_t rows) {
  return b.cols() == 0 ? Matrix(f, rows, 0) : b;
}

}  // namespace

VerifyResult verify_certificate(const Representation& m, const HyperfiniteCertificate& c) {
  const Quiver& q = m.quiver();
  const std::size_t n = q.num_vertices();
  if (auto p = stability_problem(m, c.submodule); !p.empty()) return {VerifyCode::NotSubrep, "submodule: " + p};
  for (std::size_t b = 0; b < c.blocks.size(); ++b)
    if (auto p = stability_problem(m, c.blocks[b]); !p.empty())
      return {VerifyCode::NotSubrep, "block " + std::to_string(b) + ": " + p};

  std::size_t dim_p = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Matrix> parts;
    std::size_t count = 0;
    for (const auto& blk : c.blocks) {
      parts.push_back(padded(blk[v], m.field(), m.dim(v)));
      count += blk[v].cols();
    }
    const Matrix joint = hstack(m.field(), m.dim(v), parts);
    if (rank(joint) != count)
      return {VerifyCode::NotDirect, "blocks are dependent at vertex " + q.vertices()[v]};
    Matrix sub = padded(c.submodule[v], m.field(), m.dim(v));
    const std::size_t sub_rank = rank(sub);
    if (sub_rank != count || rank(hstack(sub, joint)) != count)
      return {VerifyCode::SpanMismatch, "blocks do not span the submodule at vertex " + q.vertices()[v]};
    dim_p += sub_rank;
  }

  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const auto d = static_cast<std::int64_t>(family_dim(c.blocks[b]));
    if (d > c.L) {
      std::ostringstream os;
      os << "block " << b << " has dimension " << d << " > L = " << c.L;
      return {VerifyCode::BlockTooBig, os.str()};
    }
  }

  const Scalar dim_m = static_cast<long>(m.total_dim());
  if (Scalar(static_cast<long>(dim_p)) < (1 - c.epsilon) * dim_m) {
    std::ostringstream os;
    os << "dim P = " << dim_p << " < (1 - " << c.epsilon.get_str() << ") * " << m.total_dim();
    return {VerifyCode::EpsilonViolated, os.str()};
  }
  return {};
}

}  // namespace qamen
