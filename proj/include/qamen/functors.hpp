#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qamen/hyperfinite.hpp"
#include "qamen/representation.hpp"

namespace qamen {

/// Injective quiver map sub -> ambient on vertices and arrows.
struct SubquiverEmbedding {
  QuiverPtr sub;
  QuiverPtr ambient;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> arrow_map;

  /// Throws QuiverMismatch when the maps are not injective or do not respect
  /// sources and targets.
  SubquiverEmbedding(QuiverPtr sub, QuiverPtr ambient, std::vector<std::size_t> vertex_map,
                     std::vector<std::size_t> arrow_map);

  /// Matches vertex labels and arrow names.
  static SubquiverEmbedding by_labels(QuiverPtr sub, QuiverPtr ambient);
  /// Full subquiver of `ambient` on the given vertices.
  static SubquiverEmbedding induced(QuiverPtr ambient, const std::vector<std::size_t>& vertices);
};

Representation extend_by_zero(const SubquiverEmbedding& e, const Representation& m);
Representation restrict(const SubquiverEmbedding& e, const Representation& m);
/// Restriction of a subrepresentation of m, as bases inside restrict(e, m).
SubspaceFamily restrict(const SubquiverEmbedding& e, const SubspaceFamily& f);

enum class ReflectionDirection { Plus, Minus };

/// sigma_i(Q): every arrow at i reversed; names and indices kept.
Quiver reflect_quiver(const Quiver& q, std::size_t vertex);

/// S_i^+ at a sink (kernel of the incoming total map) or S_i^- at a source
/// (cokernel of the outgoing one). Throws NotSinkOrSource.
std::pair<QuiverPtr, Representation> reflect(const Quiver& q, std::size_t vertex, const Representation& m,
                                             ReflectionDirection dir);
/// Plus at a sink, otherwise minus at a source.
std::pair<QuiverPtr, Representation> reflect(const Quiver& q, std::size_t vertex, const Representation& m);

/// tau^- as the composite of S^- over the vertices in topological order;
/// each vertex is a source of the quiver reflected so far.
Representation ar_translate_inverse(const Quiver& q, const Representation& m);
Representation ar_translate_inverse(const Representation& m, int times);

struct FunctorDescriptor {
  enum class Kind { ZeroExtension, Reflection };
  Kind kind = Kind::ZeroExtension;
  std::optional<SubquiverEmbedding> embedding;
  std::size_t vertex = 0;
  ReflectionDirection direction = ReflectionDirection::Plus;
  /// K1 dim X <= dim F(X) <= K2 dim X.
  Scalar K1{1}, K2{1};

  static FunctorDescriptor zero_extension(SubquiverEmbedding e);
  /// K2 = |Q_1| + 1; K1 is the caller's claim for the family in use.
  static FunctorDescriptor reflection(const Quiver& q, std::size_t vertex, ReflectionDirection dir, Scalar K1);
};

/// Image of a certificate under a left exact functor: blocks F(P_b), epsilon
/// scaled by K2/K1 and L by K2. For reflections the K1 claim is checked on the
/// instance (InvalidInput); S^- is not left exact (UnsupportedFunctor).
HyperfiniteCertificate pushforward(const HyperfiniteCertificate& c, const FunctorDescriptor& d);

struct WildWitness {
  enum class Kind { None, MultiArrow, ProperEuclidean };
  Kind kind = Kind::None;
  std::size_t from = 0, to = 0, count = 0;  ///< MultiArrow
  std::vector<std::size_t> vertices;       ///< ProperEuclidean: kept vertex indices
  std::vector<std::size_t> arrows;         ///< ProperEuclidean: kept arrow indices
  std::optional<Quiver> sub;
};

const char* to_string(WildWitness::Kind k) noexcept;

/// MultiArrow when some pair carries three or more parallel arrows; otherwise
/// a proper Euclidean subquiver of a wild quiver; None iff q is not wild.
/// Throws Disconnected.
WildWitness wild_witness(const Quiver& q);

struct ExceptionalPairReport {
  std::size_t end_x = 0, end_y = 0;
  std::int64_t ext_xx = 0, ext_yy = 0;
  std::size_t hom_xy = 0, hom_yx = 0;
  std::int64_t ext_yx = 0;
  std::int64_t m = 0;  ///< dim Ext^1(X, Y)
  bool qualifies = false;
};

ExceptionalPairReport exceptional_pair_check(const EulerData& e, const Representation& x, const Representation& y);

struct PairFixture {
  std::string name;
  QuiverPtr quiver;
  Representation x, y;
};

/// Minimal wild quivers with an orthogonal exceptional pair, k = 1..4.
PairFixture pair_fixture(int k, const Field& field);

}  // namespace qamen
