#pragma once

#include <string>
#include <vector>

#include "qamen/hyperfinite.hpp"
#include "qamen/poly.hpp"
#include "qamen/representation.hpp"

namespace qamen {

/// Shared instance of the 2-Kronecker quiver 1 => 2 with arrows a, b.
const QuiverPtr& kronecker_quiver();

enum class BlockKind { Pre, Inj, Reg, RegInf };

const char* to_string(BlockKind k) noexcept;

/// Indecomposable type of the 2-Kronecker quiver. Pre(i) has dims (i, i+1),
/// Inj(i) has (i+1, i), Reg(p, e) has (deg p * e, deg p * e), RegInf(m) has (m, m).
struct KroneckerBlock {
  BlockKind kind = BlockKind::Pre;
  std::size_t index = 0;  ///< i for Pre/Inj, m for RegInf
  Poly poly;              ///< Reg only
  int exponent = 1;       ///< Reg only
  /// False for rational invariant-factor blocks that may still decompose.
  bool primary = true;

  static KroneckerBlock pre(std::size_t i);
  static KroneckerBlock inj(std::size_t i);
  static KroneckerBlock reg(Poly p, int e = 1);
  static KroneckerBlock reg_inf(std::size_t m);

  DimVector dimv() const;
  std::size_t dim() const;
  std::int64_t defect() const;
  std::string to_string() const;

  friend bool operator==(const KroneckerBlock& a, const KroneckerBlock& b);
  friend bool operator!=(const KroneckerBlock& a, const KroneckerBlock& b) { return !(a == b); }
  /// Kind (pre, inj, reg, reginf), then parameters.
  friend bool operator<(const KroneckerBlock& a, const KroneckerBlock& b);
};

/// Literal matrices: Pre(i) = ([id;0],[0;id]), Inj(i) = ([id 0],[0 id]),
/// Reg(p,e) = (id, companion(p^e)), RegInf(m) = (companion(x^m), id).
/// Throws NotIrreducible for a reducible p over a prime field.
Representation gen_block(const KroneckerBlock& b, const Field& field);
Representation gen_blocks(const std::vector<KroneckerBlock>& blocks, const Field& field);

struct PencilCanonicalForm {
  std::vector<KroneckerBlock> blocks;  ///< sorted
  /// True when every block is indecomposable (always over prime fields).
  bool primary = true;
  DimVector dimv() const;
  friend bool operator==(const PencilCanonicalForm& a, const PencilCanonicalForm& b) { return a.blocks == b.blocks; }
};

/// Throws WrongQuiver unless m lives on a quiver with two vertices and two
/// arrows from the first to the second.
void require_kronecker(const Representation& m);

PencilCanonicalForm pencil_canonical_form(const Representation& m);
bool iso_test(const Representation& m, const Representation& n);

/// Invariant factors of x*I - F (monic, nonconstant, each dividing the next).
std::vector<Poly> invariant_factors(const Matrix& f);

// ---- shrinking ---------------------------------------------------------------

struct KroneckerShrink {
  HyperfiniteCertificate certificate;
  /// Claimed isomorphism type of each certificate block, in block order.
  std::vector<KroneckerBlock> block_types;
};

/// Block-size bounds of the three families: L_eps, L_{eps/2} and L_{eps/4}.
std::int64_t preprojective_bound(const Scalar& eps);
std::int64_t regular_bound(const Scalar& eps);
std::int64_t preinjective_bound(const Scalar& eps);

/// P_i with every K-th source vector dropped, K = ceil(1/(2 eps)) + 1.
KroneckerShrink shrink_preprojective(std::size_t i, const Scalar& eps, const Field& field);

/// Codimension-one submodule Y of a regular indecomposable, generated by the
/// first n-1 vectors of a cyclic basis; Y is isomorphic to Pre(n-1).
struct RegularCodimOne {
  Subrepresentation sub;
  /// Embedding gen_block(Pre(n-1)) -> m with image sub.
  Morphism embedding;
};
RegularCodimOne regular_codim_one(const RepPtr& m);

KroneckerShrink shrink_regular(const RepPtr& m, const Scalar& eps);
KroneckerShrink shrink_regular(const Representation& m, const Scalar& eps);

/// theta: Q_i -> I(1), the projection of the vertex-1 space onto its last coordinate.
Morphism preinjective_theta(std::size_t i, const Field& field);
KroneckerShrink shrink_preinjective(std::size_t i, const Scalar& eps, const Field& field);

/// Decomposes, shrinks every summand and recombines; certificate L is
/// preinjective_bound(eps).
KroneckerShrink shrink_any(const Representation& m, const Scalar& eps);

/// Isomorphism gen_blocks(form.blocks) -> m, found blockwise (identity when m
/// is already literally in that form). Throws InvalidInput if none is found.
Morphism decomposition_isomorphism(const RepPtr& m, const PencilCanonicalForm& form);

}  // namespace qamen
