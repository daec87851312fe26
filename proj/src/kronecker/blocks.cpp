#include "qamen/kronecker.hpp"

namespace qamen {

const QuiverPtr& kronecker_quiver() {
  static const QuiverPtr q = std::make_shared<const Quiver>(quivers::kronecker(2));
  return q;
}

const char* to_string(BlockKind k) noexcept {
  switch (k) {
    case BlockKind::Pre: return "pre";
    case BlockKind::Inj: return "inj";
    case BlockKind::Reg: return "reg";
    case BlockKind::RegInf: return "reginf";
  }
  return "unknown";
}

KroneckerBlock KroneckerBlock::pre(std::size_t i) {
  KroneckerBlock b;
  b.kind = BlockKind::Pre;
  b.index = i;
  return b;
}

KroneckerBlock KroneckerBlock::inj(std::size_t i) {
  KroneckerBlock b;
  b.kind = BlockKind::Inj;
  b.index = i;
  return b;
}

KroneckerBlock KroneckerBlock::reg(Poly p, int e) {
  if (!p.is_monic() || p.degree() < 1) throw Error(ErrorCode::NotMonic, p.to_string());
  if (e < 1) throw Error(ErrorCode::InvalidInput, "exponent must be positive");
  KroneckerBlock b;
  b.kind = BlockKind::Reg;
  b.poly = std::move(p);
  b.exponent = e;
  return b;
}

KroneckerBlock KroneckerBlock::reg_inf(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "RegInf needs m >= 1");
  KroneckerBlock b;
  b.kind = BlockKind::RegInf;
  b.index = m;
  return b;
}

DimVector KroneckerBlock::dimv() const {
  const auto i = static_cast<std::int64_t>(index);
  switch (kind) {
    case BlockKind::Pre: return {i, i + 1};
    case BlockKind::Inj: return {i + 1, i};
    case BlockKind::Reg: {
      std::int64_t d = static_cast<std::int64_t>(poly.degree()) * exponent;
      return {d, d};
    }
    case BlockKind::RegInf: return {i, i};
  }
  return {};
}

std::size_t KroneckerBlock::dim() const {
  auto d = dimv();
  return static_cast<std::size_t>(d[0] + d[1]);
}

std::int64_t KroneckerBlock::defect() const {
  auto d = dimv();
  return d[0] - d[1];
}

std::string KroneckerBlock::to_string() const {
  switch (kind) {
    case BlockKind::Pre: return "Pre(" + std::to_string(index) + ")";
    case BlockKind::Inj: return "Inj(" + std::to_string(index) + ")";
    case BlockKind::Reg: return "Reg(" + poly.to_string() + ", " + std::to_string(exponent) + ")";
    case BlockKind::RegInf: return "RegInf(" + std::to_string(index) + ")";
  }
  return "?";
}

bool operator==(const KroneckerBlock& a, const KroneckerBlock& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == BlockKind::Reg) return a.poly == b.poly && a.exponent == b.exponent;
  return a.index == b.index;
}

bool operator<(const KroneckerBlock& a, const KroneckerBlock& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.kind == BlockKind::Reg) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.exponent < b.exponent;
  }
  return a.index < b.index;
}

Representation gen_block(const KroneckerBlock& b, const Field& field) {
  const std::size_t i = b.index;
  std::vector<std::size_t> dims;
  Matrix a, c;
  switch (b.kind) {
    case BlockKind::Pre:
      dims = {i, i + 1};
      a = Matrix(field, i + 1, i);
      c = Matrix(field, i + 1, i);
      for (std::size_t k = 0; k < i; ++k) {
        a.set_raw(k, k, Scalar(1));
        c.set_raw(k + 1, k, Scalar(1));
      }
      break;
    case BlockKind::Inj:
      dims = {i + 1, i};
      a = Matrix(field, i, i + 1);
      c = Matrix(field, i, i + 1);
      for (std::size_t k = 0; k < i; ++k) {
        a.set_raw(k, k, Scalar(1));
        c.set_raw(k, k + 1, Scalar(1));
      }
      break;
    case BlockKind::Reg: {
      if (b.poly.field() != field) throw Error(ErrorCode::FieldMismatch, "block polynomial over another field");
      // Over Q irreducibility is not decidable here; any monic is accepted.
      if (field.is_prime() && !is_irreducible(b.poly)) throw Error(ErrorCode::NotIrreducible, b.poly.to_string());
      Matrix comp = companion(b.poly.pow(static_cast<unsigned>(b.exponent)));
      dims = {comp.rows(), comp.rows()};
      a = Matrix::identity(field, comp.rows());
      c = std::move(comp);
      break;
    }
    case BlockKind::RegInf:
      dims = {i, i};
      a = companion(Poly::monomial(field, i));
      c = Matrix::identity(field, i);
      break;
  }
  return Representation(kronecker_quiver(), field, dims, {a, c});
}

Representation gen_blocks(const std::vector<KroneckerBlock>& blocks, const Field& field) {
  std::vector<Representation> parts;
  for (const auto& b : blocks) parts.push_back(gen_block(b, field));
  return direct_sum(kronecker_quiver(), field, parts).sum;
}

void require_kronecker(const Representation& m) {
  const Quiver& q = m.quiver();
  if (q.num_vertices() != 2 || q.num_arrows() != 2 || q.source(0) != 0 || q.target(0) != 1 || q.source(1) != 0 ||
      q.target(1) != 1)
    throw Error(ErrorCode::WrongQuiver, "expected the 2-Kronecker quiver");
}

DimVector PencilCanonicalForm::dimv() const {
  DimVector d{0, 0};
  for (const auto& b : blocks) {
    auto x = b.dimv();
    d[0] += x[0];
    d[1] += x[1];
  }
  return d;
}

}  // namespace qamen
