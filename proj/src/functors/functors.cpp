#include <algorithm>
#include <map>

#include "qamen/functors.hpp"

namespace qamen {

SubquiverEmbedding::SubquiverEmbedding(QuiverPtr s, QuiverPtr a, std::vector<std::size_t> vm,
                                       std::vector<std::size_t> am)
    : sub(std::move(s)), ambient(std::move(a)), vertex_map(std::move(vm)), arrow_map(std::move(am)) {
  if (vertex_map.size() != sub->num_vertices() || arrow_map.size() != sub->num_arrows())
    throw Error(ErrorCode::QuiverMismatch, "embedding maps have the wrong length");
  std::vector<bool> vseen(ambient->num_vertices(), false), aseen(ambient->num_arrows(), false);
  for (auto v : vertex_map) {
    if (v >= ambient->num_vertices() || vseen[v]) throw Error(ErrorCode::QuiverMismatch, "vertex map not injective");
    vseen[v] = true;
  }
  for (std::size_t k = 0; k < arrow_map.size(); ++k) {
    auto a2 = arrow_map[k];
    if (a2 >= ambient->num_arrows() || aseen[a2]) throw Error(ErrorCode::QuiverMismatch, "arrow map not injective");
    aseen[a2] = true;
    if (ambient->source(a2) != vertex_map[sub->source(k)] || ambient->target(a2) != vertex_map[sub->target(k)])
      throw Error(ErrorCode::QuiverMismatch, "arrow map does not respect endpoints");
  }
}

SubquiverEmbedding SubquiverEmbedding::by_labels(QuiverPtr s, QuiverPtr a) {
  std::vector<std::size_t> vm, am;
  try {
    for (const auto& v : s->vertices()) vm.push_back(a->vertex_index(v));
    for (const auto& arr : s->arrows()) am.push_back(a->arrow_index(arr.name));
  } catch (const Error& err) {
    throw Error(ErrorCode::QuiverMismatch, err.what());
  }
  return SubquiverEmbedding(std::move(s), std::move(a), std::move(vm), std::move(am));
}

SubquiverEmbedding SubquiverEmbedding::induced(QuiverPtr a, const std::vector<std::size_t>& vertices) {
  auto s = std::make_shared<const Quiver>(a->induced(vertices));
  return by_labels(std::move(s), std::move(a));
}

Representation extend_by_zero(const SubquiverEmbedding& e, const Representation& m) {
  if (!(m.quiver() == *e.sub)) throw Error(ErrorCode::QuiverMismatch, "representation is not over the subquiver");
  const Quiver& q = *e.ambient;
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  for (std::size_t v = 0; v < e.vertex_map.size(); ++v) dims[e.vertex_map[v]] = m.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) maps.emplace_back(m.field(), dims[q.target(a)], dims[q.source(a)]);
  for (std::size_t a = 0; a < e.arrow_map.size(); ++a) maps[e.arrow_map[a]] = m.map(a);
  return Representation(e.ambient, m.field(), std::move(dims), std::move(maps));
}

Representation restrict(const SubquiverEmbedding& e, const Representation& m) {
  if (!(m.quiver() == *e.ambient)) throw Error(ErrorCode::QuiverMismatch, "representation is not over the ambient");
  std::vector<std::size_t> dims;
  for (auto v : e.vertex_map) dims.push_back(m.dim(v));
  std::vector<Matrix> maps;
  for (auto a : e.arrow_map) maps.push_back(m.map(a));
  return Representation(e.sub, m.field(), std::move(dims), std::move(maps));
}

SubspaceFamily restrict(const SubquiverEmbedding& e, const SubspaceFamily& f) {
  if (f.size() != e.ambient->num_vertices()) throw Error(ErrorCode::QuiverMismatch, "family over another quiver");
  SubspaceFamily out;
  for (auto v : e.vertex_map) out.push_back(f[v]);
  return out;
}

// ---- reflections -------------------------------------------------------------

Quiver reflect_quiver(const Quiver& q, std::size_t vertex) {
  std::vector<Arrow> arrows = q.arrows();
  const std::string& label = q.vertices()[vertex];
  for (auto& a : arrows)
    if (a.source == label || a.target == label) std::swap(a.source, a.target);
  return Quiver(q.vertices(), std::move(arrows));
}

namespace {

// Incident arrows of `vertex` in index order with the row/column offset of
// each far endpoint inside the stacked space.
struct Star {
  std::vector<std::size_t> arrows, offsets;
  std::size_t total = 0;
};

Star star(const Quiver& q, const Representation& m, std::size_t vertex, bool incoming) {
  Star s;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if ((incoming ? q.target(a) : q.source(a)) != vertex) continue;
    s.arrows.push_back(a);
    s.offsets.push_back(s.total);
    s.total += m.dim(incoming ? q.source(a) : q.target(a));
  }
  return s;
}

// Kernel basis of the total incoming map at a sink.
Matrix sink_kernel(const Representation& m, std::size_t vertex, const Star& s) {
  std::vector<Matrix> parts;
  for (auto a : s.arrows) parts.push_back(m.map(a));
  return kernel_basis(hstack(m.field(), m.dim(vertex), parts));
}

}  // namespace

std::pair<QuiverPtr, Representation> reflect(const Quiver& q, std::size_t vertex, const Representation& m,
                                             ReflectionDirection dir) {
  if (!(m.quiver() == q)) throw Error(ErrorCode::QuiverMismatch, "representation over another quiver");
  const bool plus = dir == ReflectionDirection::Plus;
  if (plus ? !q.is_sink(vertex) : !q.is_source(vertex))
    throw Error(ErrorCode::NotSinkOrSource, q.vertices()[vertex] + (plus ? " is not a sink" : " is not a source"));
  auto rq = std::make_shared<const Quiver>(reflect_quiver(q, vertex));
  const Field& f = m.field();
  std::vector<std::size_t> dims = m.dims();
  std::vector<Matrix> maps = m.maps();
  const Star s = star(q, m, vertex, plus);
  if (plus) {
    Matrix k = sink_kernel(m, vertex, s);
    dims[vertex] = k.cols();
    for (std::size_t j = 0; j < s.arrows.size(); ++j) {
      const auto a = s.arrows[j];
      maps[a] = k.block(s.offsets[j], 0, m.dim(q.source(a)), k.cols());
    }
  } else {
    Matrix total(f, 0, m.dim(vertex));
    for (auto a : s.arrows) total = vstack(total, m.map(a));
    Matrix coker = left_kernel(total);
    dims[vertex] = coker.rows();
    for (std::size_t j = 0; j < s.arrows.size(); ++j) {
      const auto a = s.arrows[j];
      maps[a] = coker.block(0, s.offsets[j], coker.rows(), m.dim(q.target(a)));
    }
  }
  return {rq, Representation(rq, f, std::move(dims), std::move(maps))};
}

std::pair<QuiverPtr, Representation> reflect(const Quiver& q, std::size_t vertex, const Representation& m) {
  return reflect(q, vertex, m, q.is_sink(vertex) ? ReflectionDirection::Plus : ReflectionDirection::Minus);
}

Representation ar_translate_inverse(const Quiver& q, const Representation& m) {
  if (!(m.quiver() == q)) throw Error(ErrorCode::QuiverMismatch, "representation over another quiver");
  Representation cur = m;
  for (auto v : q.topological_order()) cur = reflect(cur.quiver(), v, cur, ReflectionDirection::Minus).second;
  return Representation(m.quiver_ptr(), m.field(), cur.dims(), cur.maps());
}

Representation ar_translate_inverse(const Representation& m, int times) {
  Representation cur = m;
  for (int t = 0; t < times; ++t) cur = ar_translate_inverse(m.quiver(), cur);
  return cur;
}

// ---- functor descriptors -------------------------------------------------------

FunctorDescriptor FunctorDescriptor::zero_extension(SubquiverEmbedding e) {
  FunctorDescriptor d;
  d.kind = Kind::ZeroExtension;
  d.embedding = std::move(e);
  return d;
}

FunctorDescriptor FunctorDescriptor::reflection(const Quiver& q, std::size_t vertex, ReflectionDirection dir,
                                                Scalar K1) {
  if (K1 <= 0) throw Error(ErrorCode::InvalidInput, "K1 must be positive");
  FunctorDescriptor d;
  d.kind = Kind::Reflection;
  d.vertex = vertex;
  d.direction = dir;
  d.K1 = std::move(K1);
  d.K2 = Scalar(static_cast<long>(q.num_arrows() + 1));
  return d;
}

HyperfiniteCertificate pushforward(const HyperfiniteCertificate& c, const FunctorDescriptor& d) {
  const Representation& m = *c.ambient;
  HyperfiniteCertificate out;
  if (d.kind == FunctorDescriptor::Kind::ZeroExtension) {
    const SubquiverEmbedding& e = *d.embedding;
    out.ambient = std::make_shared<const Representation>(extend_by_zero(e, m));
    auto pad = [&](const SubspaceFamily& f) {
      SubspaceFamily g;
      for (std::size_t v = 0; v < e.ambient->num_vertices(); ++v) g.emplace_back(m.field(), out.ambient->dim(v), 0);
      for (std::size_t v = 0; v < e.vertex_map.size(); ++v) g[e.vertex_map[v]] = f[v];
      return g;
    };
    out.submodule = pad(c.submodule);
    for (const auto& b : c.blocks) out.blocks.push_back(pad(b));
    out.epsilon = c.epsilon;
    out.L = c.L;
    return out;
  }
  if (d.direction != ReflectionDirection::Plus)
    throw Error(ErrorCode::UnsupportedFunctor, "S^- is not left exact");
  const Quiver& q = m.quiver();
  const std::size_t i = d.vertex;
  auto [rq, fm] = reflect(q, i, m, ReflectionDirection::Plus);
  if (Scalar(static_cast<long>(fm.total_dim())) < d.K1 * static_cast<long>(m.total_dim()))
    throw Error(ErrorCode::InvalidInput, "K1 bound fails on this instance");
  out.ambient = std::make_shared<const Representation>(fm);
  const Star s = star(q, m, i, true);
  const Matrix k = sink_kernel(m, i, s);
  // F(P) at i is ker(total map) intersected with the stacked P_{s(a)}.
  auto image = [&](const SubspaceFamily& f) {
    SubspaceFamily g = f;
    std::vector<Matrix> parts;
    for (auto a : s.arrows) parts.push_back(f[q.source(a)]);
    Matrix stacked = block_diagonal(m.field(), parts);
    Matrix meet = intersect(k, stacked);
    g[i] = meet.cols() == 0 ? Matrix(m.field(), k.cols(), 0) : coordinates(k, meet);
    return g;
  };
  out.submodule = image(c.submodule);
  for (const auto& b : c.blocks) out.blocks.push_back(image(b));
  out.epsilon = d.K2 / d.K1 * c.epsilon;
  out.L = static_cast<std::int64_t>(d.K2.get_num().get_si()) * c.L;
  return out;
}

// ---- wild witness -------------------------------------------------------------

const char* to_string(WildWitness::Kind k) noexcept {
  switch (k) {
    case WildWitness::Kind::None: return "none";
    case WildWitness::Kind::MultiArrow: return "multi_arrow";
    case WildWitness::Kind::ProperEuclidean: return "proper_euclidean";
  }
  return "unknown";
}

namespace {

Quiver subquiver(const Quiver& q, const std::vector<bool>& vkeep, const std::vector<bool>& akeep) {
  std::vector<std::string> vs;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (vkeep[v]) vs.push_back(q.vertices()[v]);
  std::vector<Arrow> as;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (akeep[a] && vkeep[q.source(a)] && vkeep[q.target(a)]) as.push_back(q.arrows()[a]);
  return Quiver(std::move(vs), std::move(as));
}

bool connected_non_dynkin(const Quiver& q) {
  if (q.num_vertices() == 0 || !q.is_connected()) return false;
  return classify(q).kind != QuiverClass::Dynkin;
}

}  // namespace

WildWitness wild_witness(const Quiver& q) {
  if (!q.is_connected()) throw Error(ErrorCode::Disconnected, "wild_witness needs a connected quiver");
  WildWitness w;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> parallel;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    ++parallel[{std::min(q.source(a), q.target(a)), std::max(q.source(a), q.target(a))}];
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    std::size_t c = parallel[{std::min(q.source(a), q.target(a)), std::max(q.source(a), q.target(a))}];
    if (c >= 3) {
      w.kind = WildWitness::Kind::MultiArrow;
      w.from = q.source(a);
      w.to = q.target(a);
      w.count = c;
      return w;
    }
  }
  if (classify(q).kind != QuiverClass::Wild) return w;
  // Shrink while connected and not Dynkin; a minimal such quiver is Euclidean.
  std::vector<bool> vkeep(q.num_vertices(), true), akeep(q.num_arrows(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = q.num_vertices(); v-- > 0 && !changed;) {
      if (!vkeep[v]) continue;
      vkeep[v] = false;
      if (connected_non_dynkin(subquiver(q, vkeep, akeep)))
        changed = true;
      else
        vkeep[v] = true;
    }
    for (std::size_t a = q.num_arrows(); a-- > 0 && !changed;) {
      if (!akeep[a] || !vkeep[q.source(a)] || !vkeep[q.target(a)]) continue;
      akeep[a] = false;
      if (connected_non_dynkin(subquiver(q, vkeep, akeep)))
        changed = true;
      else
        akeep[a] = true;
    }
  }
  Quiver sub = subquiver(q, vkeep, akeep);
  if (classify(sub).kind != QuiverClass::Euclidean) return w;
  w.kind = WildWitness::Kind::ProperEuclidean;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (vkeep[v]) w.vertices.push_back(v);
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    if (akeep[a] && vkeep[q.source(a)] && vkeep[q.target(a)]) w.arrows.push_back(a);
  w.sub = std::move(sub);
  return w;
}

// ---- exceptional pairs --------------------------------------------------------

ExceptionalPairReport exceptional_pair_check(const EulerData& e, const Representation& x, const Representation& y) {
  require_compatible(x, y);
  ExceptionalPairReport r;
  r.end_x = hom_dim(x, x);
  r.end_y = hom_dim(y, y);
  r.ext_xx = ext1_dim(e, x, x);
  r.ext_yy = ext1_dim(e, y, y);
  r.hom_xy = hom_dim(x, y);
  r.hom_yx = hom_dim(y, x);
  r.ext_yx = ext1_dim(e, y, x);
  r.m = ext1_dim(e, x, y);
  r.qualifies = r.hom_xy == 0 && r.hom_yx == 0 && r.ext_yx == 0 && r.ext_xx == 0 && r.ext_yy == 0 && r.m >= 3;
  return r;
}

}  // namespace qamen
