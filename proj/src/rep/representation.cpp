#include "qamen/representation.hpp"

#include <numeric>

namespace qamen {

Representation::Representation(QuiverPtr quiver, Field field, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_->num_vertices())
    throw Error(ErrorCode::DimensionMismatch, "one dimension per vertex required");
  if (maps_.size() != quiver_->num_arrows()) throw Error(ErrorCode::ShapeMismatch, "one matrix per arrow required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Matrix& m = maps_[a];
    require_same_field(field_, m.field());
    if (m.rows() != dims_[quiver_->target(a)] || m.cols() != dims_[quiver_->source(a)])
      throw Error(ErrorCode::ShapeMismatch, "arrow " + quiver_->arrows()[a].name + " has the wrong shape");
  }
}

Representation Representation::zero(QuiverPtr quiver, Field field) {
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver->num_arrows(); ++a) maps.emplace_back(field, 0, 0);
  std::vector<std::size_t> dims(quiver->num_vertices(), 0);
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

DimVector Representation::dimv() const { return DimVector(dims_.begin(), dims_.end()); }

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

bool operator==(const Representation& a, const Representation& b) {
  return *a.quiver_ == *b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

void require_compatible(const Representation& a, const Representation& b) {
  if (a.quiver_ptr() != b.quiver_ptr() && !(a.quiver() == b.quiver()))
    throw Error(ErrorCode::QuiverMismatch, "representations of different quivers");
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

// ---- morphisms ---------------------------------------------------------------

Morphism::Morphism(RepPtr source, RepPtr target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_compatible(*source_, *target_);
  const Quiver& q = source_->quiver();
  if (components_.size() != q.num_vertices()) throw Error(ErrorCode::ShapeMismatch, "one component per vertex");
  for (std::size_t v = 0; v < components_.size(); ++v) {
    require_same_field(source_->field(), components_[v].field());
    if (components_[v].rows() != target_->dim(v) || components_[v].cols() != source_->dim(v))
      throw Error(ErrorCode::ShapeMismatch, "component at " + q.vertices()[v]);
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto s = q.source(a), t = q.target(a);
    if (components_[t] * source_->map(a) != target_->map(a) * components_[s])
      throw Error(ErrorCode::NotIntertwining, "arrow " + q.arrows()[a].name);
  }
}

Morphism Morphism::identity(RepPtr m) {
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < m->quiver().num_vertices(); ++v) c.push_back(Matrix::identity(m->field(), m->dim(v)));
  return Morphism(m, m, std::move(c));
}

Morphism Morphism::zero(RepPtr source, RepPtr target) {
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < source->quiver().num_vertices(); ++v)
    c.emplace_back(source->field(), target->dim(v), source->dim(v));
  return Morphism(std::move(source), std::move(target), std::move(c));
}

bool Morphism::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

bool Morphism::is_isomorphism() const {
  for (std::size_t v = 0; v < components_.size(); ++v) {
    const Matrix& c = components_[v];
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  }
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) throw Error(ErrorCode::ShapeMismatch, "composition of non-composable morphisms");
  std::vector<Matrix> c;
  for (std::size_t v = 0; v < f.components().size(); ++v) c.push_back(g.component(v) * f.component(v));
  return Morphism(f.source_ptr(), g.target_ptr(), std::move(c));
}

// ---- subrepresentations ------------------------------------------------------

Subrepresentation::Subrepresentation(RepPtr ambient, std::vector<Matrix> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  const Quiver& q = ambient_->quiver();
  if (basis_.size() != q.num_vertices()) throw Error(ErrorCode::ShapeMismatch, "one basis per vertex");
  for (std::size_t v = 0; v < basis_.size(); ++v) {
    require_same_field(ambient_->field(), basis_[v].field());
    if (basis_[v].rows() != ambient_->dim(v)) {
      if (basis_[v].cols() == 0) {
        basis_[v] = Matrix(ambient_->field(), ambient_->dim(v), 0);
      } else {
        throw Error(ErrorCode::ShapeMismatch, "basis vectors at " + q.vertices()[v]);
      }
    }
    if (rank(basis_[v]) != basis_[v].cols())
      throw Error(ErrorCode::NotSubrep, "dependent basis at " + q.vertices()[v]);
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto s = q.source(a), t = q.target(a);
    if (!qamen::contains(basis_[t], ambient_->map(a) * basis_[s]))
      throw Error(ErrorCode::NotSubrep, "arrow " + q.arrows()[a].name + " leaves the subspace");
  }
}

Subrepresentation Subrepresentation::zero(RepPtr ambient) {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < ambient->quiver().num_vertices(); ++v) b.emplace_back(ambient->field(), ambient->dim(v), 0);
  return Subrepresentation(std::move(ambient), std::move(b));
}

Subrepresentation Subrepresentation::whole(RepPtr ambient) {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < ambient->quiver().num_vertices(); ++v)
    b.push_back(Matrix::identity(ambient->field(), ambient->dim(v)));
  return Subrepresentation(std::move(ambient), std::move(b));
}

DimVector Subrepresentation::dimv() const {
  DimVector d;
  for (const auto& b : basis_) d.push_back(static_cast<std::int64_t>(b.cols()));
  return d;
}

std::size_t Subrepresentation::total_dim() const {
  std::size_t s = 0;
  for (const auto& b : basis_) s += b.cols();
  return s;
}

Representation Subrepresentation::as_representation() const {
  const Quiver& q = ambient_->quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : basis_) dims.push_back(b.cols());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    maps.push_back(coordinates(basis_[q.target(a)], ambient_->map(a) * basis_[q.source(a)]));
  return Representation(ambient_->quiver_ptr(), ambient_->field(), std::move(dims), std::move(maps));
}

Morphism Subrepresentation::inclusion() const {
  return Morphism(std::make_shared<const Representation>(as_representation()), ambient_, basis_);
}

bool Subrepresentation::contains(const Subrepresentation& other) const {
  for (std::size_t v = 0; v < basis_.size(); ++v)
    if (!qamen::contains(basis_[v], other.basis_[v])) return false;
  return true;
}

bool operator==(const Subrepresentation& a, const Subrepresentation& b) {
  if (a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t v = 0; v < a.basis_.size(); ++v)
    if (a.basis_[v].cols() != b.basis_[v].cols() || !same_subspace(a.basis_[v], b.basis_[v])) return false;
  return true;
}

Subrepresentation intersect(const Subrepresentation& a, const Subrepresentation& b) {
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < a.bases().size(); ++v) basis.push_back(intersect(a.basis(v), b.basis(v)));
  return Subrepresentation(a.ambient_ptr(), std::move(basis));
}

Subrepresentation sum(const Subrepresentation& a, const Subrepresentation& b) {
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < a.bases().size(); ++v) basis.push_back(sum_spaces(a.basis(v), b.basis(v)));
  return Subrepresentation(a.ambient_ptr(), std::move(basis));
}

// ---- standard objects ----------------------------------------------------------

namespace {

void dfs_paths(const Quiver& q, std::size_t v, bool forward, std::vector<std::size_t>& current,
               std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if ((forward ? q.source(a) : q.target(a)) != v) continue;
    current.push_back(a);
    dfs_paths(q, forward ? q.target(a) : q.source(a), forward, current, out);
    current.pop_back();
  }
}

std::size_t path_end(const Quiver& q, std::size_t start, const std::vector<std::size_t>& p) {
  return p.empty() ? start : q.target(p.back());
}

std::size_t path_start(const Quiver& q, std::size_t end, const std::vector<std::size_t>& p) {
  return p.empty() ? end : q.source(p.back());
}

}  // namespace

std::vector<std::vector<std::size_t>> paths_starting_at(const Quiver& q, std::size_t vertex) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  dfs_paths(q, vertex, true, current, out);
  return out;
}

std::vector<std::vector<std::size_t>> paths_ending_at(const Quiver& q, std::size_t vertex) {
  // Stored as arrows walked backwards from `vertex`: p = a_k ... a_1 with
  // the last stored arrow leaving the start of the path.
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  dfs_paths(q, vertex, false, current, out);
  return out;
}

Representation make_projective(QuiverPtr q, Field field, std::size_t vertex) {
  if (vertex >= q->num_vertices()) throw Error(ErrorCode::VertexUnknown, std::to_string(vertex));
  auto paths = paths_starting_at(*q, vertex);
  const std::size_t n = q->num_vertices();
  // Position of each path within the basis of its end vertex.
  std::vector<std::size_t> dims(n, 0), pos(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) pos[i] = dims[path_end(*q, vertex, paths[i])]++;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->num_arrows(); ++a) maps.emplace_back(field, dims[q->target(a)], dims[q->source(a)]);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (paths[j].size() != paths[i].size() + 1) continue;
      if (!std::equal(paths[i].begin(), paths[i].end(), paths[j].begin())) continue;
      std::size_t a = paths[j].back();
      maps[a].set_raw(pos[j], pos[i], Scalar(1));
    }
  }
  return Representation(std::move(q), field, std::move(dims), std::move(maps));
}

Representation make_injective(QuiverPtr q, Field field, std::size_t vertex) {
  if (vertex >= q->num_vertices()) throw Error(ErrorCode::VertexUnknown, std::to_string(vertex));
  auto paths = paths_ending_at(*q, vertex);
  const std::size_t n = q->num_vertices();
  std::vector<std::size_t> dims(n, 0), pos(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) pos[i] = dims[path_start(*q, vertex, paths[i])]++;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->num_arrows(); ++a) maps.emplace_back(field, dims[q->target(a)], dims[q->source(a)]);
  // Dual basis: a path p from s(a) to `vertex` whose first arrow is a, i.e.
  // p = a followed by p', sends p* to p'*.
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].empty()) continue;
    std::size_t a = paths[i].back();
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (paths[j].size() + 1 != paths[i].size()) continue;
      if (!std::equal(paths[j].begin(), paths[j].end(), paths[i].begin())) continue;
      maps[a].set_raw(pos[j], pos[i], Scalar(1));
    }
  }
  return Representation(std::move(q), field, std::move(dims), std::move(maps));
}

Representation make_simple(QuiverPtr q, Field field, std::size_t vertex) {
  if (vertex >= q->num_vertices()) throw Error(ErrorCode::VertexUnknown, std::to_string(vertex));
  std::vector<std::size_t> dims(q->num_vertices(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->num_arrows(); ++a) maps.emplace_back(field, dims[q->target(a)], dims[q->source(a)]);
  return Representation(std::move(q), field, std::move(dims), std::move(maps));
}

// ---- sub and quotient objects -----------------------------------------------------

Subrepresentation sub_generated(const RepPtr& m, const std::vector<Generator>& generators) {
  const Quiver& q = m->quiver();
  const Field& f = m->field();
  std::vector<Matrix> span;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) span.emplace_back(f, m->dim(v), 0);
  for (const auto& g : generators) {
    if (g.vertex >= q.num_vertices()) throw Error(ErrorCode::VertexUnknown, std::to_string(g.vertex));
    if (g.vector.rows() != m->dim(g.vertex)) throw Error(ErrorCode::ShapeMismatch, "generator length");
    require_same_field(f, g.vector.field());
    span[g.vertex] = hstack(span[g.vertex], g.vector);
  }
  // One pass in topological order closes the family: everything entering a
  // vertex comes from vertices already finished.
  for (auto v : q.topological_order()) {
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
      if (q.target(a) == v) span[v] = hstack(span[v], m->map(a) * span[q.source(a)]);
    span[v] = column_space(span[v]);
  }
  return Subrepresentation(m, std::move(span));
}

Subrepresentation sub_generated(const Representation& m, const std::vector<Generator>& generators) {
  return sub_generated(std::make_shared<const Representation>(m), generators);
}

QuotientResult quotient_with_projection(const Subrepresentation& s) {
  const Representation& m = s.ambient();
  const Quiver& q = m.quiver();
  std::vector<Matrix> complement, projection;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Matrix c = complement_basis(s.basis(v));
    Matrix full_inv = *inverse(hstack(s.basis(v), c));
    projection.push_back(full_inv.block(s.dim(v), 0, c.cols(), m.dim(v)));
    complement.push_back(std::move(c));
    dims.push_back(complement.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    maps.push_back(projection[q.target(a)] * m.map(a) * complement[q.source(a)]);
  auto rep = std::make_shared<const Representation>(m.quiver_ptr(), m.field(), std::move(dims), std::move(maps));
  return QuotientResult{*rep, Morphism(s.ambient_ptr(), rep, std::move(projection))};
}

Representation quotient(const Representation& m, const Subrepresentation& s) {
  if (!(s.ambient() == m)) throw Error(ErrorCode::NotSubrep, "subrepresentation of a different module");
  return quotient_with_projection(s).rep;
}

Subrepresentation kernel(const Morphism& f) {
  std::vector<Matrix> basis;
  for (const auto& c : f.components()) basis.push_back(kernel_basis(c));
  return Subrepresentation(f.source_ptr(), std::move(basis));
}

Subrepresentation image(const Morphism& f) {
  std::vector<Matrix> basis;
  for (const auto& c : f.components()) basis.push_back(column_space(c));
  return Subrepresentation(f.target_ptr(), std::move(basis));
}

DirectSum direct_sum(QuiverPtr quiver, Field field, const std::vector<Representation>& parts) {
  const std::size_t n = quiver->num_vertices();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (p.quiver_ptr() != quiver && !(p.quiver() == *quiver))
      throw Error(ErrorCode::QuiverMismatch, "direct sum of representations of different quivers");
    if (p.field() != field) throw Error(ErrorCode::FieldMismatch, "direct sum over different fields");
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver->num_arrows(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(a));
    Matrix bd(field, dims[quiver->target(a)], dims[quiver->source(a)]);
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
      bd.set_block(r, c, b);
      r += b.rows();
      c += b.cols();
    }
    maps.push_back(std::move(bd));
  }
  auto sum_ptr = std::make_shared<const Representation>(quiver, field, dims, std::move(maps));
  DirectSum out{*sum_ptr, {}, {}};
  std::vector<std::size_t> offset(n, 0);
  for (const auto& p : parts) {
    auto pp = std::make_shared<const Representation>(p);
    std::vector<Matrix> inc, proj;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix i(field, dims[v], p.dim(v));
      i.set_block(offset[v], 0, Matrix::identity(field, p.dim(v)));
      proj.push_back(i.transpose());
      inc.push_back(std::move(i));
      offset[v] += p.dim(v);
    }
    out.inclusions.emplace_back(pp, sum_ptr, std::move(inc));
    out.projections.emplace_back(sum_ptr, pp, std::move(proj));
  }
  return out;
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidInput, "empty direct sum needs a quiver and field");
  return direct_sum(parts.front().quiver_ptr(), parts.front().field(), parts);
}

Representation change_basis(const Representation& m, const std::vector<Matrix>& g) {
  const Quiver& q = m.quiver();
  std::vector<Matrix> inv;
  for (const auto& x : g) {
    auto i = inverse(x);
    if (!i) throw Error(ErrorCode::InvalidInput, "change of basis is singular");
    inv.push_back(*i);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) maps.push_back(g[q.target(a)] * m.map(a) * inv[q.source(a)]);
  return Representation(m.quiver_ptr(), m.field(), m.dims(), std::move(maps));
}

}  // namespace qamen
