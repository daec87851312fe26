#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qamen/euler.hpp"
#include "qamen/matrix.hpp"
#include "qamen/quiver.hpp"

namespace qamen {

/// Finite-dimensional representation of an acyclic quiver. The map of arrow
/// a has shape dim(t(a)) x dim(s(a)) and acts on column vectors.
class Representation {
 public:
  Representation() = default;
  Representation(QuiverPtr quiver, Field field, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  Representation(const Quiver& quiver, Field field, std::vector<std::size_t> dims, std::vector<Matrix> maps)
      : Representation(std::make_shared<const Quiver>(quiver), field, std::move(dims), std::move(maps)) {}

  static Representation zero(QuiverPtr quiver, Field field);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  DimVector dimv() const;
  std::size_t total_dim() const;
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  /// Structural equality: same quiver, field, dims and matrices.
  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

using RepPtr = std::shared_ptr<const Representation>;

/// Throws QuiverMismatch or FieldMismatch unless a and b live on the same
/// quiver over the same field.
void require_compatible(const Representation& a, const Representation& b);

/// Morphism of representations, one matrix per vertex; intertwining is
/// checked at construction.
class Morphism {
 public:
  Morphism(RepPtr source, RepPtr target, std::vector<Matrix> components);
  Morphism(const Representation& source, const Representation& target, std::vector<Matrix> components)
      : Morphism(std::make_shared<const Representation>(source), std::make_shared<const Representation>(target),
                 std::move(components)) {}

  static Morphism identity(RepPtr m);
  static Morphism zero(RepPtr source, RepPtr target);

  const Representation& source() const noexcept { return *source_; }
  const Representation& target() const noexcept { return *target_; }
  const RepPtr& source_ptr() const noexcept { return source_; }
  const RepPtr& target_ptr() const noexcept { return target_; }
  const Matrix& component(std::size_t vertex) const { return components_[vertex]; }
  const std::vector<Matrix>& components() const noexcept { return components_; }
  bool is_zero() const;
  bool is_isomorphism() const;

 private:
  RepPtr source_, target_;
  std::vector<Matrix> components_;
};

/// g o f.
Morphism compose(const Morphism& g, const Morphism& f);

/// Arrow-stable family of subspaces of an ambient representation, given by an
/// independent set of spanning columns at each vertex.
class Subrepresentation {
 public:
  Subrepresentation(RepPtr ambient, std::vector<Matrix> basis);

  static Subrepresentation zero(RepPtr ambient);
  static Subrepresentation whole(RepPtr ambient);

  const Representation& ambient() const noexcept { return *ambient_; }
  const RepPtr& ambient_ptr() const noexcept { return ambient_; }
  const Matrix& basis(std::size_t vertex) const { return basis_[vertex]; }
  const std::vector<Matrix>& bases() const noexcept { return basis_; }
  std::size_t dim(std::size_t vertex) const { return basis_[vertex].cols(); }
  DimVector dimv() const;
  std::size_t total_dim() const;

  /// The subrepresentation in its own coordinates (the stored basis).
  Representation as_representation() const;
  /// Inclusion into the ambient representation.
  Morphism inclusion() const;
  bool contains(const Subrepresentation& other) const;
  friend bool operator==(const Subrepresentation& a, const Subrepresentation& b);

 private:
  RepPtr ambient_;
  std::vector<Matrix> basis_;
};

Subrepresentation intersect(const Subrepresentation& a, const Subrepresentation& b);
Subrepresentation sum(const Subrepresentation& a, const Subrepresentation& b);

// ---- standard objects ------------------------------------------------------

/// Paths starting at `vertex`, in DFS order; each is a list of arrow indices.
std::vector<std::vector<std::size_t>> paths_starting_at(const Quiver& q, std::size_t vertex);
/// Paths ending at `vertex`, in DFS order (walking arrows backwards).
std::vector<std::vector<std::size_t>> paths_ending_at(const Quiver& q, std::size_t vertex);

Representation make_projective(QuiverPtr q, Field field, std::size_t vertex);
Representation make_injective(QuiverPtr q, Field field, std::size_t vertex);
Representation make_simple(QuiverPtr q, Field field, std::size_t vertex);

// ---- homological algebra -----------------------------------------------------

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
/// dim Hom(m,n) - <dimv m, dimv n>; the quiver is hereditary.
std::int64_t ext1_dim(const EulerData& e, const Representation& m, const Representation& n);
bool in_perp(const EulerData& e, const Representation& t, const Representation& m);

// ---- sub and quotient objects ------------------------------------------------

struct Generator {
  std::size_t vertex;
  Matrix vector;  ///< column vector(s) in the ambient space at `vertex`
};

Subrepresentation sub_generated(const RepPtr& m, const std::vector<Generator>& generators);
Subrepresentation sub_generated(const Representation& m, const std::vector<Generator>& generators);

struct QuotientResult {
  Representation rep;
  Morphism projection;
};
QuotientResult quotient_with_projection(const Subrepresentation& s);
Representation quotient(const Representation& m, const Subrepresentation& s);

Subrepresentation kernel(const Morphism& f);
Subrepresentation image(const Morphism& f);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};
/// Block-diagonal sum; an empty list needs the quiver and field explicitly.
DirectSum direct_sum(const std::vector<Representation>& parts);
DirectSum direct_sum(QuiverPtr quiver, Field field, const std::vector<Representation>& parts);

/// Representation transported along per-vertex changes of basis g_v:
/// maps become g_t M_a g_s^{-1}.
Representation change_basis(const Representation& m, const std::vector<Matrix>& g);

}  // namespace qamen
