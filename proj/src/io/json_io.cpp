#include <fstream>
#include <iostream>
#include <sstream>

#include "qamen/json_io.hpp"

namespace qamen {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw parse_error("expected an integer, got '" + s + "'");
  return v;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw parse_error("scalars must be strings or integers");
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << text;
}

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0) {
    try {
      return Field::prime(parse_long(text.substr(3)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotPrime) throw;
      throw parse_error("bad field '" + text + "'");
    }
  }
  throw parse_error("field must be q or gf:P, got '" + text + "'");
}

json field_to_json(const Field& f) {
  if (f.is_prime()) return json{{"kind", "GF"}, {"p", f.characteristic()}};
  return json{{"kind", "Q"}};
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw parse_error("field must be an object with \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "GF") {
    if (!j.contains("p") || !j.at("p").is_number_integer()) throw parse_error("GF field needs integer \"p\"");
    return Field::prime(j.at("p").get<std::int64_t>());
  }
  throw parse_error("unknown field kind '" + kind + "'");
}

Scalar parse_rational(const std::string& text) { return Field::rationals().parse(text); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.field().format(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw parse_error("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw parse_error("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, f.parse(scalar_text(row[k])));
  }
  return m;
}

// Column count of a basis matrix whose row count is known.
static std::size_t basis_cols(const json& j) {
  if (!j.is_array()) throw parse_error("basis must be an array of rows");
  return j.empty() ? 0 : j[0].size();
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  return json{{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  if (j.is_string()) return named_quiver(j.get<std::string>());
  try {
    std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Arrow> as;
    for (const auto& a : j.at("arrows"))
      as.push_back({a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                    a.at("target").get<std::string>()});
    return Quiver(std::move(vs), std::move(as));
  } catch (const json::exception& e) {
    throw parse_error(std::string("quiver: ") + e.what());
  }
}

Quiver named_quiver(const std::string& name) {
  auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto n = [&]() { return static_cast<int>(parse_long(arg)); };
  if (kind == "kronecker") return quivers::kronecker(arg.empty() ? 2 : n());
  if (kind == "path") return quivers::path(n());
  if (kind == "subspace") return quivers::subspace(n());
  if (kind == "d_tilde") return quivers::d_tilde(n());
  if (kind == "e_tilde") return quivers::e_tilde(n());
  if (kind == "a_tilde") {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw parse_error("a_tilde needs P,Q");
    return quivers::a_tilde(static_cast<int>(parse_long(arg.substr(0, comma))),
                            static_cast<int>(parse_long(arg.substr(comma + 1))));
  }
  throw parse_error("unknown quiver name '" + name + "'");
}

json dimv_to_json(const Quiver& q, const DimVector& d) {
  json j = json::object();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) j[q.vertices()[v]] = d[v];
  return j;
}

json classification_to_json(const Classification& c, const std::optional<DimVector>& h, const Quiver& q) {
  json j{{"class", to_string(c.kind)}};
  if (c.kind == QuiverClass::Euclidean) {
    j["family"] = c.family;
    j["tubular_type"] = c.tubular_type;
    if (h) j["h"] = dimv_to_json(q, *h);
  }
  return j;
}

json rep_to_json(const Representation& m) {
  const Quiver& q = m.quiver();
  json dims = json::object(), maps = json::object();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) dims[q.vertices()[v]] = m.dim(v);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) maps[q.arrows()[a].name] = matrix_to_json(m.map(a));
  return json{{"quiver", quiver_to_json(q)}, {"field", field_to_json(m.field())}, {"dims", dims}, {"maps", maps}};
}

Representation rep_from_json(const json& j, QuiverPtr fallback) {
  if (!j.is_object()) throw parse_error("representation must be an object");
  QuiverPtr q = fallback;
  if (j.contains("quiver")) q = std::make_shared<const Quiver>(quiver_from_json(j.at("quiver")));
  if (!q) throw parse_error("representation without a quiver");
  const Field f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  try {
    std::vector<std::size_t> dims;
    const auto& jd = j.at("dims");
    for (const auto& label : q->vertices()) dims.push_back(jd.contains(label) ? jd.at(label).get<std::size_t>() : 0);
    for (auto it = jd.begin(); it != jd.end(); ++it)
      if (!q->has_vertex(it.key())) throw Error(ErrorCode::VertexUnknown, it.key());
    std::vector<Matrix> maps;
    const json empty = json::object();
    const auto& jm = j.contains("maps") ? j.at("maps") : empty;
    for (std::size_t a = 0; a < q->num_arrows(); ++a) {
      const auto rows = dims[q->target(a)], cols = dims[q->source(a)];
      const auto& name = q->arrows()[a].name;
      if (jm.contains(name))
        maps.push_back(matrix_from_json(f, jm.at(name), rows, cols));
      else if (rows == 0 || cols == 0)
        maps.emplace_back(f, rows, cols);
      else
        throw parse_error("missing map for arrow " + name);
    }
    for (auto it = jm.begin(); it != jm.end(); ++it) q->arrow_index(it.key());
    return Representation(q, f, std::move(dims), std::move(maps));
  } catch (const json::exception& e) {
    throw parse_error(std::string("representation: ") + e.what());
  }
}

json block_to_json(const KroneckerBlock& b) {
  json j{{"kind", to_string(b.kind)}};
  switch (b.kind) {
    case BlockKind::Pre:
    case BlockKind::Inj: j["i"] = b.index; break;
    case BlockKind::Reg:
      j["poly"] = b.poly.coefficient_strings();
      j["exponent"] = b.exponent;
      if (!b.primary) j["primary"] = false;
      break;
    case BlockKind::RegInf: j["m"] = b.index; break;
  }
  j["label"] = b.to_string();
  return j;
}

KroneckerBlock parse_block(const std::string& text, const Field& f) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw parse_error("block spec needs kind:args, got '" + text + "'");
  const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  auto index = [&]() {
    long v = parse_long(rest);
    if (v < 0) throw parse_error("negative block index");
    return static_cast<std::size_t>(v);
  };
  if (kind == "pre") return KroneckerBlock::pre(index());
  if (kind == "inj") return KroneckerBlock::inj(index());
  if (kind == "reginf") return KroneckerBlock::reg_inf(index());
  if (kind != "reg") throw parse_error("unknown block kind '" + kind + "'");
  auto second = rest.find(':');
  const std::string coeffs = rest.substr(0, second);
  int e = 1;
  if (second != std::string::npos) e = static_cast<int>(parse_long(rest.substr(second + 1)));
  std::vector<Scalar> c;
  std::stringstream ss(coeffs);
  for (std::string item; std::getline(ss, item, ',');) c.push_back(f.parse(item));
  return KroneckerBlock::reg(Poly(f, c), e);
}

json canonical_to_json(const PencilCanonicalForm& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back(block_to_json(b));
  return blocks;
}

json family_to_json(const SubspaceFamily& f) {
  json j = json::array();
  for (const auto& m : f) j.push_back(matrix_to_json(m));
  return j;
}

json certificate_to_json(const HyperfiniteCertificate& c) {
  json blocks = json::array();
  for (const auto& b : c.blocks) blocks.push_back(family_to_json(b));
  return json{{"epsilon", Field::rationals().format(c.epsilon)},
              {"L", c.L},
              {"submodule", family_to_json(c.submodule)},
              {"blocks", blocks},
              {"achieved", {{"dim_P", c.dim_P()}, {"dim_M", c.dim_M()}, {"max_block", c.max_block()}}}};
}

HyperfiniteCertificate certificate_from_json(const json& j, RepPtr ambient) {
  const Representation& m = *ambient;
  const std::size_t n = m.quiver().num_vertices();
  auto family = [&](const json& jf) {
    if (!jf.is_array() || jf.size() != n) throw parse_error("subspace family needs one basis per vertex");
    SubspaceFamily f;
    for (std::size_t v = 0; v < n; ++v) f.push_back(matrix_from_json(m.field(), jf[v], m.dim(v), basis_cols(jf[v])));
    return f;
  };
  try {
    HyperfiniteCertificate c;
    c.epsilon = parse_rational(scalar_text(j.at("epsilon")));
    c.L = j.at("L").get<std::int64_t>();
    c.submodule = family(j.at("submodule"));
    for (const auto& b : j.at("blocks")) c.blocks.push_back(family(b));
    c.ambient = std::move(ambient);
    return c;
  } catch (const json::exception& e) {
    throw parse_error(std::string("certificate: ") + e.what());
  }
}

json pair_report_to_json(const ExceptionalPairReport& r) {
  return json{{"end_x", r.end_x},   {"end_y", r.end_y},   {"ext_xx", r.ext_xx}, {"ext_yy", r.ext_yy},
              {"hom_xy", r.hom_xy}, {"hom_yx", r.hom_yx}, {"ext_yx", r.ext_yx}, {"m", r.m},
              {"qualifies", r.qualifies}};
}

json fixture_to_json(const PairFixture& fx) {
  json x = rep_to_json(fx.x), y = rep_to_json(fx.y);
  x.erase("quiver");
  y.erase("quiver");
  return json{{"name", fx.name}, {"quiver", quiver_to_json(*fx.quiver)}, {"x", x}, {"y", y}};
}

}  // namespace qamen
