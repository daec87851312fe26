#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qamen/error.hpp"

namespace qamen {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
};

/// Integer vector indexed by the vertices of a quiver, in vertex order.
using DimVector = std::vector<std::int64_t>;

/// Finite acyclic quiver with labelled vertices and named arrows. Oriented
/// cycles are rejected at construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::size_t vertex_index(const std::string& label) const;
  std::size_t arrow_index(const std::string& name) const;
  bool has_vertex(const std::string& label) const;
  std::size_t source(std::size_t arrow) const { return src_[arrow]; }
  std::size_t target(std::size_t arrow) const { return tgt_[arrow]; }

  bool is_sink(std::size_t v) const;
  bool is_source(std::size_t v) const;
  bool is_connected() const;
  /// Vertices ordered so that every arrow goes from an earlier to a later one;
  /// ties broken by vertex order.
  std::vector<std::size_t> topological_order() const;

  /// Number of paths (including the trivial one) from `from` to each vertex.
  DimVector paths_from(std::size_t from) const;
  /// Number of paths from each vertex ending at `to`.
  DimVector paths_to(std::size_t to) const;

  /// Full subquiver on the given vertex indices (all arrows between them).
  Quiver induced(const std::vector<std::size_t>& vertex_indices) const;
  /// Subquiver keeping all vertices and the listed arrows.
  Quiver with_arrows(const std::vector<std::size_t>& arrow_indices) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> src_, tgt_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

namespace quivers {

/// Two vertices "1", "2" and n arrows 1 -> 2 named a, b, c, ...
Quiver kronecker(int n = 2);
/// Linearly oriented path 1 -> 2 -> ... -> n.
Quiver path(int n);
/// Subspace quiver: arms 1..n pointing into center "0".
Quiver subspace(int n);
/// Cycle of p + q vertices with p arrows one way round and q the other.
Quiver a_tilde(int p, int q);
/// D~_n (n >= 4): two pairs of leaves hanging off a path, oriented towards the leaves at one end.
Quiver d_tilde(int n);
/// E~_6, E~_7, E~_8 with all arms oriented towards the branch vertex.
Quiver e_tilde(int n);

}  // namespace quivers

}  // namespace qamen
