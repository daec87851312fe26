#pragma once

// Random chains of combine_direct_sum, extend_bounded_codim and zero-extension
// pushforward. Every step re-derives the expected (epsilon, L, dims) by hand
// and runs the verifier; the first mismatch is reported as a string.

#include <memory>
#include <string>

#include "qamen/functors.hpp"
#include "qamen/kronecker.hpp"
#include "qamen/random.hpp"

namespace compositions {

using namespace qamen;

struct Ladder {
  // Kronecker 1 => 2, then 2 -> 3 added, then 4 -> 3 added.
  std::vector<QuiverPtr> quivers;
  Ladder() {
    quivers.push_back(kronecker_quiver());
    quivers.push_back(std::make_shared<const Quiver>(
        Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"}})));
    quivers.push_back(std::make_shared<const Quiver>(
        Quiver({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"}, {"d", "4", "3"}})));
  }
};

inline Representation random_small(QuiverPtr q, const Field& f, Rng& rng, std::size_t max_dim) {
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q->num_vertices(); ++v) dims.push_back(rng() % (max_dim + 1));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->num_arrows(); ++a)
    maps.push_back(random_matrix(f, dims[q->target(a)], dims[q->source(a)], rng));
  return Representation(q, f, dims, maps);
}

inline HyperfiniteCertificate lift(const Ladder& ladder, HyperfiniteCertificate c, std::size_t level) {
  for (std::size_t k = 0; k < level; ++k)
    c = pushforward(c, FunctorDescriptor::zero_extension(
                           SubquiverEmbedding::by_labels(ladder.quivers[k], ladder.quivers[k + 1])));
  return c;
}

// A valid certificate at (eps, L) on ladder level `level`.
inline HyperfiniteCertificate base(const Ladder& ladder, const Field& f, const Scalar& eps, std::int64_t L,
                                   std::size_t level, Rng& rng) {
  HyperfiniteCertificate c;
  if (rng() % 2 == 0 && L_epsilon(eps) <= L) {
    c = shrink_preprojective(rng() % 25, eps, f).certificate;
  } else {
    auto m = std::make_shared<const Representation>(
        random_small(kronecker_quiver(), f, rng, static_cast<std::size_t>(std::max<std::int64_t>(L / 2, 0))));
    c = trivial_certificate(m, eps, L);
    if (static_cast<std::int64_t>(m->total_dim()) > L) c = trivial_certificate(
        std::make_shared<const Representation>(Representation::zero(kronecker_quiver(), f)), eps, L);
  }
  c.L = L;
  return lift(ladder, c, level);
}

struct Outcome {
  bool ok = true;
  std::string failure;
  int steps = 0;
};

inline Outcome run_one(const Ladder& ladder, const Field& f, Rng& rng) {
  Outcome out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.failure = why;
    return out;
  };
  const Scalar eps0 = Scalar(1, static_cast<long>(2 + rng() % 9));
  std::size_t level = 0;
  HyperfiniteCertificate cur = base(ladder, f, eps0, L_epsilon(eps0), level, rng);
  int steps = 2 + static_cast<int>(rng() % 4);
  for (int s = 0; s < steps; ++s) {
    ++out.steps;
    const Scalar eps = cur.epsilon;
    const std::int64_t L = cur.L;
    const std::size_t p0 = cur.dim_P(), m0 = cur.dim_M();
    int op = static_cast<int>(rng() % 3);
    if (op == 0) {
      std::vector<HyperfiniteCertificate> parts{cur};
      std::size_t k = 1 + rng() % 2, sp = p0, sm = m0;
      for (std::size_t j = 0; j < k; ++j) {
        parts.push_back(base(ladder, f, eps, L, level, rng));
        sp += parts.back().dim_P();
        sm += parts.back().dim_M();
      }
      cur = combine_direct_sum(parts);
      if (cur.epsilon != eps || cur.L != L) return fail("direct sum changed (eps, L)");
      if (cur.dim_P() != sp || cur.dim_M() != sm) return fail("direct sum dims not additive");
    } else if (op == 1) {
      auto x = random_small(ladder.quivers[level], f, rng, 2);
      auto ds = direct_sum({*cur.ambient, x});
      const std::size_t dm = ds.sum.total_dim();
      if (dm == 0) continue;
      const Scalar codim(static_cast<long>(x.total_dim()));
      const Scalar expect = (codim + eps * Scalar(static_cast<long>(m0))) / Scalar(static_cast<long>(dm));
      if (expect >= 1) continue;
      const Scalar target = expect > eps ? expect : eps;
      Morphism inc(cur.ambient, std::make_shared<const Representation>(ds.sum), ds.inclusions[0].components());
      if (expect > 0) {
        bool threw = false;
        try {
          extend_bounded_codim(cur, inc, expect - Scalar(1, 1000000));
        } catch (const Error& e) {
          threw = e.code() == ErrorCode::EpsilonUnachievable;
        }
        if (!threw) return fail("extension below the bookkeeping bound was accepted");
      }
      auto r = extend_bounded_codim(cur, inc, target);
      if (r.epsilon_effective != expect) return fail("epsilon_effective " + r.epsilon_effective.get_str());
      if (r.epsilon_achieved * Scalar(static_cast<long>(dm)) != Scalar(static_cast<long>(dm - p0)))
        return fail("epsilon_achieved bookkeeping");
      cur = r.certificate;
      if (cur.epsilon != target || cur.L != L) return fail("extension changed L or missed target");
      if (cur.dim_P() != p0 || cur.dim_M() != dm) return fail("extension dims");
    } else {
      if (level + 1 >= ladder.quivers.size()) continue;
      auto e = SubquiverEmbedding::by_labels(ladder.quivers[level], ladder.quivers[level + 1]);
      cur = pushforward(cur, FunctorDescriptor::zero_extension(e));
      ++level;
      if (cur.epsilon != eps || cur.L != L) return fail("zero extension changed (eps, L)");
      if (cur.dim_P() != p0 || cur.dim_M() != m0) return fail("zero extension changed dims");
    }
    auto v = verify_certificate(*cur.ambient, cur);
    if (!v.ok()) return fail(std::string(to_string(v.code)) + ": " + v.detail);
  }
  return out;
}

}  // namespace compositions
