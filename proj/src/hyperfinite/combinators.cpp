#include "qamen/hyperfinite.hpp"

namespace qamen {

HyperfiniteCertificate combine_direct_sum(QuiverPtr quiver, Field field,
                                          const std::vector<HyperfiniteCertificate>& certs) {
  for (const auto& c : certs)
    if (c.epsilon != certs.front().epsilon || c.L != certs.front().L)
      throw Error(ErrorCode::EpsilonMismatch, "direct sum of certificates with different (epsilon, L)");
  std::vector<Representation> parts;
  for (const auto& c : certs) parts.push_back(*c.ambient);
  DirectSum ds = direct_sum(quiver, field, parts);
  auto sum_ptr = std::make_shared<const Representation>(ds.sum);
  const std::size_t n = quiver->num_vertices();

  HyperfiniteCertificate out;
  out.ambient = sum_ptr;
  out.epsilon = certs.empty() ? Scalar(1, 2) : certs.front().epsilon;
  out.L = certs.empty() ? 0 : certs.front().L;
  out.submodule.assign(n, Matrix());
  for (std::size_t v = 0; v < n; ++v) out.submodule[v] = Matrix(field, ds.sum.dim(v), 0);

  auto embed = [&](std::size_t part, const SubspaceFamily& f) {
    SubspaceFamily g;
    for (std::size_t v = 0; v < n; ++v) {
      const Matrix& inc = ds.inclusions[part].component(v);
      g.push_back(f[v].cols() == 0 ? Matrix(field, ds.sum.dim(v), 0) : inc * f[v]);
    }
    return g;
  };
  std::vector<std::vector<Matrix>> cols(n);
  for (std::size_t i = 0; i < certs.size(); ++i) {
    SubspaceFamily sub = embed(i, certs[i].submodule);
    for (std::size_t v = 0; v < n; ++v) cols[v].push_back(sub[v]);
    for (const auto& b : certs[i].blocks) out.blocks.push_back(embed(i, b));
  }
  for (std::size_t v = 0; v < n; ++v) out.submodule[v] = hstack(field, ds.sum.dim(v), cols[v]);
  return out;
}

HyperfiniteCertificate combine_direct_sum(const std::vector<HyperfiniteCertificate>& certs) {
  if (certs.empty()) throw Error(ErrorCode::InvalidInput, "empty certificate list needs a quiver and field");
  return combine_direct_sum(certs.front().ambient->quiver_ptr(), certs.front().ambient->field(), certs);
}

ExtendResult extend_bounded_codim(const HyperfiniteCertificate& c, const Morphism& inclusion, const Scalar& target) {
  if (!(inclusion.source() == *c.ambient))
    throw Error(ErrorCode::NotSubrep, "inclusion does not start at the certified module");
  for (const auto& comp : inclusion.components())
    if (rank(comp) != comp.cols()) throw Error(ErrorCode::NotSubrep, "map is not injective");
  const Representation& m = inclusion.target();
  const std::size_t n = m.quiver().num_vertices();
  const std::size_t dim_m = m.total_dim();
  const std::size_t dim_p = c.ambient->total_dim();
  const std::size_t dim_y = c.dim_P();
  const Scalar codim = static_cast<long>(dim_m - dim_p);

  ExtendResult r;
  if (dim_m == 0) {
    r.epsilon_effective = 0;
    r.epsilon_achieved = 0;
  } else {
    r.epsilon_effective = (codim + c.epsilon * static_cast<long>(dim_p)) / static_cast<long>(dim_m);
    r.epsilon_achieved = Scalar(static_cast<long>(dim_m - dim_y), static_cast<long>(dim_m));
    r.epsilon_achieved.canonicalize();
  }
  if (r.epsilon_effective > target)
    throw Error(ErrorCode::EpsilonUnachievable,
                "bounded-codimension bound " + r.epsilon_effective.get_str() + " exceeds " + target.get_str());

  auto push = [&](const SubspaceFamily& f) {
    SubspaceFamily g;
    for (std::size_t v = 0; v < n; ++v)
      g.push_back(f[v].cols() == 0 ? Matrix(m.field(), m.dim(v), 0) : inclusion.component(v) * f[v]);
    return g;
  };
  r.certificate.ambient = inclusion.target_ptr();
  r.certificate.epsilon = target;
  r.certificate.L = c.L;
  r.certificate.submodule = push(c.submodule);
  for (const auto& b : c.blocks) r.certificate.blocks.push_back(push(b));
  return r;
}

}  // namespace qamen
