#include <algorithm>
#include <cstdint>
#include <set>

#include "qamen/hyperfinite.hpp"

namespace qamen {

namespace {

constexpr std::size_t kExactMaxDim = 12;
constexpr std::size_t kNodeBudget = 2'000'000;

// GF(2) vectors of the whole module packed into one bitmask: vertex v owns
// the coordinates offset[v] .. offset[v] + dim(v) - 1.
using Bits = std::uint32_t;

struct XorBasis {
  std::vector<Bits> rows;  // reduced, distinct leading bits

  Bits reduce(Bits x) const {
    for (Bits r : rows) x = std::min(x, x ^ r);
    return x;
  }
  bool insert(Bits x) {
    x = reduce(x);
    if (!x) return false;
    rows.push_back(x);
    std::sort(rows.rbegin(), rows.rend());
    return true;
  }
};

struct BitModule {
  std::vector<std::size_t> offset, owner;
  // image[a][j]: image of coordinate j (global index) under arrow a.
  std::vector<std::vector<Bits>> image;
  std::vector<std::vector<std::size_t>> out_arrows;
};

BitModule pack(const Representation& m) {
  const Quiver& q = m.quiver();
  BitModule b;
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    b.offset.push_back(total);
    for (std::size_t k = 0; k < m.dim(v); ++k) b.owner.push_back(v);
    total += m.dim(v);
  }
  b.out_arrows.resize(q.num_vertices());
  b.image.assign(q.num_arrows(), std::vector<Bits>(total, 0));
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto s = q.source(a), t = q.target(a);
    b.out_arrows[s].push_back(a);
    for (std::size_t j = 0; j < m.dim(s); ++j)
      for (std::size_t i = 0; i < m.dim(t); ++i)
        if (m.map(a)(i, j) != 0) b.image[a][b.offset[s] + j] |= Bits{1} << (b.offset[t] + i);
  }
  return b;
}

// Closure of a set of single-vertex generators; returns a reduced basis.
std::vector<Bits> closure(const BitModule& b, const std::vector<Bits>& gens) {
  XorBasis span;
  std::vector<Bits> queue;
  for (Bits g : gens)
    if (span.insert(g)) queue.push_back(g);
  std::vector<Bits> basis = queue;
  while (!queue.empty()) {
    Bits x = queue.back();
    queue.pop_back();
    std::size_t v = b.owner[static_cast<std::size_t>(__builtin_ctz(x))];
    for (auto a : b.out_arrows[v]) {
      Bits y = 0;
      for (Bits rest = x; rest; rest &= rest - 1) y ^= b.image[a][static_cast<std::size_t>(__builtin_ctz(rest))];
      if (y && span.insert(y)) {
        queue.push_back(y);
        basis.push_back(y);
      }
    }
  }
  return basis;
}

struct Packing {
  const std::vector<std::vector<Bits>>* cands = nullptr;
  std::size_t total_dim = 0;
  std::size_t best = 0;
  std::vector<std::size_t> best_choice, choice;
  std::size_t nodes = 0;
  bool exhausted = true;

  void run(std::size_t from, const XorBasis& cur, std::size_t dim) {
    if (dim > best) {
      best = dim;
      best_choice = choice;
    }
    if (best == total_dim) return;
    for (std::size_t i = from; i < cands->size(); ++i) {
      if (++nodes > kNodeBudget) {
        exhausted = false;
        return;
      }
      const auto& c = (*cands)[i];
      if (dim + c.size() > total_dim) continue;
      XorBasis next = cur;
      bool independent = true;
      for (Bits x : c)
        if (!next.insert(x)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      choice.push_back(i);
      run(i + 1, next, dim + c.size());
      choice.pop_back();
      if (best == total_dim || !exhausted) return;
    }
  }
};

SubspaceFamily unpack(const Representation& m, const BitModule& b, const std::vector<Bits>& vecs) {
  const std::size_t n = m.quiver().num_vertices();
  std::vector<std::vector<Matrix>> cols(n);
  for (Bits x : vecs) {
    std::size_t v = b.owner[static_cast<std::size_t>(__builtin_ctz(x))];
    Matrix c(m.field(), m.dim(v), 1);
    for (std::size_t i = 0; i < m.dim(v); ++i)
      if (x >> (b.offset[v] + i) & 1u) c.set_raw(i, 0, Scalar(1));
    cols[v].push_back(std::move(c));
  }
  SubspaceFamily f;
  for (std::size_t v = 0; v < n; ++v) f.push_back(hstack(m.field(), m.dim(v), cols[v]));
  return f;
}

HyperfiniteCertificate from_blocks(RepPtr m, std::vector<SubspaceFamily> blocks, std::int64_t L) {
  HyperfiniteCertificate c;
  const std::size_t n = m->quiver().num_vertices();
  for (std::size_t v = 0; v < n; ++v) c.submodule.push_back(Matrix(m->field(), m->dim(v), 0));
  for (const auto& b : blocks)
    for (std::size_t v = 0; v < n; ++v) c.submodule[v] = hstack(c.submodule[v], b[v]);
  c.blocks = std::move(blocks);
  const std::size_t dim_m = m->total_dim();
  c.epsilon = dim_m == 0 ? Scalar(0) : Scalar(static_cast<long>(dim_m - c.dim_P()), static_cast<long>(dim_m));
  c.epsilon.canonicalize();
  c.L = L;
  c.ambient = std::move(m);
  return c;
}

ProfileResult exact_search(const RepPtr& m, std::int64_t L) {
  const BitModule b = pack(*m);
  const std::size_t total = m->total_dim();
  std::set<std::vector<Bits>> seen;
  std::vector<std::vector<Bits>> cands;
  auto consider = [&](const std::vector<Bits>& gens) {
    auto basis = closure(b, gens);
    if (basis.empty() || static_cast<std::int64_t>(basis.size()) > L) return;
    XorBasis canon;
    for (Bits x : basis) canon.insert(x);
    // Fully reduce so that equal subspaces get equal keys.
    std::vector<Bits> key = canon.rows;
    for (std::size_t i = 0; i < key.size(); ++i)
      for (std::size_t j = 0; j < key.size(); ++j)
        if (i != j) key[j] = std::min(key[j], key[j] ^ key[i]);
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) cands.push_back(basis);
  };
  // Subsets of the standard basis.
  for (Bits mask = 1; mask < (Bits{1} << total); ++mask) {
    std::vector<Bits> gens;
    for (std::size_t j = 0; j < total; ++j)
      if (mask >> j & 1u) gens.push_back(Bits{1} << j);
    consider(gens);
  }
  // Cyclic submodules of every vector supported at one vertex.
  for (std::size_t v = 0; v < m->quiver().num_vertices(); ++v)
    for (Bits x = 1; x < (Bits{1} << m->dim(v)); ++x) consider({x << b.offset[v]});
  std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });

  Packing p;
  p.cands = &cands;
  p.total_dim = total;
  p.run(0, XorBasis{}, 0);
  std::vector<SubspaceFamily> blocks;
  for (auto i : p.best_choice) blocks.push_back(unpack(*m, b, cands[i]));
  ProfileResult r;
  r.best_dim = p.best;
  r.exact = p.exhausted;
  r.certificate = from_blocks(m, std::move(blocks), L);
  return r;
}

ProfileResult greedy_search(const RepPtr& m, std::int64_t L) {
  const Quiver& q = m->quiver();
  const std::size_t n = q.num_vertices();
  std::vector<Subrepresentation> cands;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < m->dim(v); ++j) {
      auto s = sub_generated(m, {Generator{v, Matrix::unit_column(m->field(), m->dim(v), j)}});
      if (static_cast<std::int64_t>(s.total_dim()) <= L) cands.push_back(std::move(s));
    }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& x, const auto& y) { return x.total_dim() > y.total_dim(); });
  std::vector<Matrix> cur;
  for (std::size_t v = 0; v < n; ++v) cur.emplace_back(m->field(), m->dim(v), 0);
  std::vector<SubspaceFamily> blocks;
  std::size_t dim = 0;
  for (const auto& s : cands) {
    bool independent = true;
    for (std::size_t v = 0; v < n && independent; ++v)
      independent = rank(hstack(cur[v], s.basis(v))) == cur[v].cols() + s.dim(v);
    if (!independent) continue;
    for (std::size_t v = 0; v < n; ++v) cur[v] = hstack(cur[v], s.basis(v));
    blocks.push_back(s.bases());
    dim += s.total_dim();
  }
  ProfileResult r;
  r.best_dim = dim;
  r.exact = false;
  r.certificate = from_blocks(m, std::move(blocks), L);
  return r;
}

}  // namespace

ProfileResult profile_search(const Representation& rep, std::int64_t L) {
  auto m = std::make_shared<const Representation>(rep);
  if (L >= static_cast<std::int64_t>(m->total_dim())) {
    ProfileResult r;
    r.best_dim = m->total_dim();
    r.exact = true;
    r.certificate = trivial_certificate(m, Scalar(0), std::max<std::int64_t>(L, 0));
    return r;
  }
  if (L <= 0) {
    ProfileResult r;
    r.exact = true;
    r.certificate = from_blocks(m, {}, 0);
    return r;
  }
  if (m->field().is_prime() && m->field().characteristic() == 2 && m->total_dim() <= kExactMaxDim)
    return exact_search(m, L);
  return greedy_search(m, L);
}

}  // namespace qamen
