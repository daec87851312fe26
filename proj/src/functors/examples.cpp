#include "qamen/functors.hpp"

namespace qamen {

namespace {

Quiver build(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Arrow> arrows;
  for (const auto& [s, t] : edges) arrows.push_back({s + ">" + t, s, t});
  return Quiver(std::move(vertices), std::move(arrows));
}

// Representation of `ambient` induced from tau^{-r} P(v) of the full
// subquiver without the vertex "inf".
Representation induced_translate(const QuiverPtr& ambient, const Field& field, const std::string& v, int r) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < ambient->num_vertices(); ++k)
    if (ambient->vertices()[k] != "inf") keep.push_back(k);
  auto e = SubquiverEmbedding::induced(ambient, keep);
  Representation p = make_projective(e.sub, field, e.sub->vertex_index(v));
  return extend_by_zero(e, ar_translate_inverse(p, r));
}

}  // namespace

PairFixture pair_fixture(int k, const Field& field) {
  PairFixture fx;
  fx.name = "example" + std::to_string(k);
  switch (k) {
    case 1: {
      // Five subspace quiver; X = S(5), Y = tau^- P(5).
      fx.quiver = std::make_shared<const Quiver>(quivers::subspace(5));
      const auto v5 = fx.quiver->vertex_index("5");
      fx.x = make_simple(fx.quiver, field, v5);
      fx.y = ar_translate_inverse(make_projective(fx.quiver, field, v5), 1);
      break;
    }
    case 2: {
      // E~6 with arms towards 3, extended at 0 by the source inf. The arm tip
      // 1 only reaches m = 1 after six steps; the branch vertex 3 reaches 3.
      fx.quiver = std::make_shared<const Quiver>(
          build({"1", "2", "3", "4", "0", "5", "6", "inf"},
                {{"1", "2"}, {"2", "3"}, {"4", "3"}, {"0", "4"}, {"inf", "0"}, {"6", "5"}, {"5", "3"}}));
      fx.x = make_simple(fx.quiver, field, fx.quiver->vertex_index("inf"));
      fx.y = induced_translate(fx.quiver, field, "3", 6);
      break;
    }
    case 3:
    case 4: {
      // D~5 oriented 4,5 -> 3 -> 2 -> 0,1; inf a source (3) or a sink (4) at 0.
      std::vector<std::pair<std::string, std::string>> edges{
          {"4", "3"}, {"5", "3"}, {"3", "2"}, {"2", "0"}, {"2", "1"}};
      edges.push_back(k == 3 ? std::pair<std::string, std::string>{"inf", "0"}
                             : std::pair<std::string, std::string>{"0", "inf"});
      fx.quiver = std::make_shared<const Quiver>(build({"4", "5", "3", "2", "0", "1", "inf"}, edges));
      Representation s = make_simple(fx.quiver, field, fx.quiver->vertex_index("inf"));
      Representation t = induced_translate(fx.quiver, field, "3", 3);
      fx.x = k == 3 ? s : t;
      fx.y = k == 3 ? t : s;
      break;
    }
    default: throw Error(ErrorCode::InvalidInput, "fixture index must be 1..4");
  }
  return fx;
}

}  // namespace qamen
