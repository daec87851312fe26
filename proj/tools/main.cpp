// qamen: batch front end. Every command reads files, computes, and writes one
// JSON or CSV artifact. Exit 0 when all checks pass, 1 on a failed check or
// domain error, 2 on unparseable input.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qamen/functors.hpp"
#include "qamen/json_io.hpp"
#include "qamen/kronecker.hpp"
#include "qamen/lemmas.hpp"
#include "qamen/random.hpp"

using namespace qamen;

namespace {

struct Common {
  std::string quiver, rep, eps = "1/4", field = "q", out = "-", format = "json";
  long L = 0;
  long i = -1;
};

// Signals a failed check; the report has already been written.
struct CheckFailed {};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

QuiverPtr load_quiver(const std::string& spec) {
  if (spec.empty()) throw Error(ErrorCode::ParseError, "--quiver is required");
  if (std::filesystem::exists(spec)) {
    json j = read_json_file(spec);
    if (j.is_object() && j.contains("quiver")) return std::make_shared<const Quiver>(quiver_from_json(j.at("quiver")));
    return std::make_shared<const Quiver>(quiver_from_json(j));
  }
  return std::make_shared<const Quiver>(named_quiver(spec));
}

RepPtr load_rep(const Common& c) {
  if (c.rep.empty()) throw Error(ErrorCode::ParseError, "--rep is required");
  QuiverPtr fallback = c.quiver.empty() ? nullptr : load_quiver(c.quiver);
  return std::make_shared<const Representation>(rep_from_json(read_json_file(c.rep), fallback));
}

Scalar load_eps(const Common& c) {
  Scalar e = parse_rational(c.eps);
  require_epsilon(e);
  return e;
}

void emit(const Common& c, const json& j, bool ok) {
  write_text(c.out, dump(j));
  if (!ok) throw CheckFailed{};
}

json identity_json(const std::string& name, const IdentityCheck& r) {
  json j{{"lemma", name}, {"checked", r.checked}, {"failed", r.failed}, {"ok", r.ok()}};
  if (r.printed_sign_mismatches) j["printed_sign_mismatches"] = r.printed_sign_mismatches;
  if (!r.ok()) j["first_failure"] = r.first_failure;
  return j;
}

json orbits_json(const EulerData& e) {
  json orbits = json::array();
  for (const auto& o : simple_regular_orbits(e)) {
    json row = json::array();
    for (const auto& x : o) row.push_back(dimv_to_json(e.quiver(), x));
    orbits.push_back(row);
  }
  return orbits;
}

json int_matrix_json(const IntMatrix& m) {
  json j = json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

// ---- commands ------------------------------------------------------------------

void quiver_classify(const Common& c) {
  auto q = load_quiver(c.quiver);
  emit(c, classification_to_json(classify(*q), radical_generator(*q), *q), true);
}

void quiver_euler(const Common& c) {
  EulerData e(load_quiver(c.quiver));
  json j{{"vertices", e.quiver().vertices()},
         {"euler", int_matrix_json(e.euler_matrix())},
         {"coxeter", int_matrix_json(e.coxeter())},
         {"coxeter_inverse", int_matrix_json(e.coxeter_inverse())},
         {"class", to_string(e.classification().kind)}};
  if (e.is_euclidean()) j["coxeter_number"] = coxeter_number(e);
  emit(c, j, true);
}

void quiver_orbits(const Common& c) {
  EulerData e(load_quiver(c.quiver));
  if (!e.is_euclidean()) throw Error(ErrorCode::NotEuclidean, "orbits need a Euclidean quiver");
  auto sums = check_orbit_sums(e);
  json j{{"h", dimv_to_json(e.quiver(), *e.radical_generator())}, {"orbits", orbits_json(e)}, {"sums_ok", sums.ok()}};
  emit(c, j, sums.ok());
}

void kron_gen(const Common& c, const std::vector<std::string>& specs) {
  const Field f = parse_field(c.field);
  std::vector<KroneckerBlock> blocks;
  for (const auto& s : specs) blocks.push_back(parse_block(s, f));
  emit(c, rep_to_json(gen_blocks(blocks, f)), true);
}

void kron_canon(const Common& c, bool conjugate) {
  RepPtr m = load_rep(c);
  PencilCanonicalForm form = pencil_canonical_form(*m);
  json j{{"dims", dimv_to_json(m->quiver(), m->dimv())}, {"primary", form.primary}, {"blocks", canonical_to_json(form)}};
  bool ok = true;
  if (conjugate) {
    Rng rng(seed_from_env());
    ok = pencil_canonical_form(random_conjugate(*m, rng)) == form;
    j["conjugation_invariant"] = ok;
  }
  emit(c, j, ok);
}

json shrink_json(const KroneckerShrink& s, const std::string& family, long i) {
  VerifyResult v = verify_certificate(*s.certificate.ambient, s.certificate);
  json types = json::array();
  for (const auto& b : s.block_types) types.push_back(b.to_string());
  json j{{"family", family}};
  if (i >= 0) j["i"] = i;
  j["certificate"] = certificate_to_json(s.certificate);
  j["block_types"] = types;
  j["verified"] = v.ok();
  j["code"] = to_string(v.code);
  if (!v.ok()) j["detail"] = v.detail;
  return j;
}

KroneckerShrink shrink_family(const std::string& family, std::size_t i, const Scalar& eps, const Field& f) {
  if (family == "pre") return shrink_preprojective(i, eps, f);
  if (family == "inj") return shrink_preinjective(i, eps, f);
  throw Error(ErrorCode::ParseError, "--family must be pre or inj");
}

void kron_shrink(const Common& c, const std::string& family, const std::string& block, long i_max) {
  const Scalar eps = load_eps(c);
  const Field f = parse_field(c.field);
  const bool single_row = c.format == "csv" && c.i >= 0 && c.rep.empty() && block.empty();
  if (i_max >= 0 || single_row) {
    // Sweep table: one row per i, columns (i, dim, eps, dim_P, max_block, L, verified).
    const long lo = i_max >= 0 ? 0 : c.i, hi = i_max >= 0 ? i_max : c.i;
    bool all = true;
    json rows = json::array();
    std::ostringstream csv;
    csv << "i,dim,eps,dim_P,max_block,L,verified\n";
    for (long i = lo; i <= hi; ++i) {
      KroneckerShrink s = shrink_family(family, static_cast<std::size_t>(i), eps, f);
      const auto& cert = s.certificate;
      bool ok = verify_certificate(*cert.ambient, cert).ok();
      all = all && ok;
      csv << i << ',' << cert.dim_M() << ',' << c.eps << ',' << cert.dim_P() << ',' << cert.max_block() << ','
          << cert.L << ',' << (ok ? "true" : "false") << '\n';
      rows.push_back({{"i", i},
                      {"dim", cert.dim_M()},
                      {"eps", c.eps},
                      {"dim_P", cert.dim_P()},
                      {"max_block", cert.max_block()},
                      {"L", cert.L},
                      {"verified", ok}});
    }
    write_text(c.out, c.format == "csv" ? csv.str() : dump(rows));
    if (!all) throw CheckFailed{};
    return;
  }
  json j;
  if (!c.rep.empty()) {
    j = shrink_json(shrink_any(*load_rep(c), eps), "any", -1);
  } else if (!block.empty()) {
    j = shrink_json(shrink_regular(gen_block(parse_block(block, f), f), eps), "reg", -1);
  } else {
    if (c.i < 0) throw Error(ErrorCode::ParseError, "kron-shrink needs --i, --i-max, --block or --rep");
    j = shrink_json(shrink_family(family, static_cast<std::size_t>(c.i), eps, f), family, c.i);
  }
  emit(c, j, j.at("verified").get<bool>());
}

void hf_verify(const Common& c, const std::string& cert_path) {
  RepPtr m = load_rep(c);
  // Accepts a bare certificate or kron-shrink output wrapping one.
  json j = read_json_file(cert_path);
  HyperfiniteCertificate cert = certificate_from_json(j.contains("certificate") ? j.at("certificate") : j, m);
  VerifyResult v = verify_certificate(*m, cert);
  json r{{"ok", v.ok()}, {"code", to_string(v.code)}};
  if (!v.ok()) r["detail"] = v.detail;
  emit(c, r, v.ok());
}

void hf_profile(const Common& c) {
  RepPtr m = load_rep(c);
  ProfileResult r = profile_search(*m, c.L);
  json j{{"L", c.L},
         {"best_dim", r.best_dim},
         {"dim_M", m->total_dim()},
         {"exact", r.exact},
         {"certificate", certificate_to_json(r.certificate)}};
  emit(c, j, verify_certificate(*m, r.certificate).ok());
}

void lemma_check(const Common& c, const std::string& which, int r_max) {
  EulerData e(load_quiver(c.quiver));
  if (!e.is_euclidean()) throw Error(ErrorCode::NotEuclidean, "lemma checks need a Euclidean quiver");
  json j;
  IdentityCheck r;
  if (which == "3.1") {
    r = check_orbit_sums(e);
    j = identity_json(which, r);
    j["h"] = dimv_to_json(e.quiver(), *e.radical_generator());
    j["orbits"] = orbits_json(e);
  } else if (which == "3.2-pattern") {
    r = check_orbit_pattern(e);
    j = identity_json(which, r);
  } else if (which == "3.3") {
    r = check_perpendicular_chain(e, r_max);
    j = identity_json(which, r);
    j["r_max"] = r_max;
  } else if (which == "3.4-homdims") {
    r = check_hom_dims(e, r_max);
    j = identity_json(which, r);
    j["r_max"] = r_max;
  } else {
    throw Error(ErrorCode::ParseError, "unknown lemma '" + which + "'");
  }
  emit(c, j, r.ok());
}

void wild(const Common& c) {
  auto q = load_quiver(c.quiver);
  WildWitness w = wild_witness(*q);
  json j{{"kind", to_string(w.kind)}};
  if (w.kind == WildWitness::Kind::MultiArrow) {
    j["from"] = q->vertices()[w.from];
    j["to"] = q->vertices()[w.to];
    j["count"] = w.count;
  } else if (w.kind == WildWitness::Kind::ProperEuclidean) {
    j["family"] = classify(*w.sub).family;
    j["sub"] = quiver_to_json(*w.sub);
  }
  emit(c, j, true);
}

void pair_check(const Common& c, const std::string& name, const std::string& fixture, const std::string& x_path,
                const std::string& y_path, bool emit_fixture) {
  PairFixture fx;
  if (!name.empty()) {
    if (name.rfind("example", 0) != 0 || name.size() != 8) throw Error(ErrorCode::ParseError, "unknown pair " + name);
    fx = pair_fixture(name[7] - '0', parse_field(c.field));
  } else if (!fixture.empty()) {
    json j = read_json_file(fixture);
    fx.name = j.value("name", fixture);
    fx.quiver = std::make_shared<const Quiver>(quiver_from_json(j.at("quiver")));
    fx.x = rep_from_json(j.at("x"), fx.quiver);
    fx.y = rep_from_json(j.at("y"), fx.quiver);
  } else {
    fx.quiver = load_quiver(c.quiver);
    fx.name = "files";
    fx.x = rep_from_json(read_json_file(x_path), fx.quiver);
    fx.y = rep_from_json(read_json_file(y_path), fx.quiver);
  }
  if (emit_fixture) {
    emit(c, fixture_to_json(fx), true);
    return;
  }
  EulerData e(fx.quiver);
  ExceptionalPairReport r = exceptional_pair_check(e, fx.x, fx.y);
  json j{{"name", fx.name},
         {"dimv_x", dimv_to_json(*fx.quiver, fx.x.dimv())},
         {"dimv_y", dimv_to_json(*fx.quiver, fx.y.dimv())},
         {"report", pair_report_to_json(r)}};
  emit(c, j, r.qualifies);
}

json error_json(const Error& e) {
  std::string what = e.what();
  return json{{"ok", false}, {"error", to_string(e.code())}, {"detail", what}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for quiver representations and hyperfiniteness certificates"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "output file, - for stdout");
    s->add_option("--field", c.field, "q or gf:P");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* classify_cmd = app.add_subcommand("quiver-classify", "Dynkin / Euclidean / wild with tubular type and h_Q");
  auto* euler_cmd = app.add_subcommand("quiver-euler", "Euler and Coxeter matrices");
  auto* orbits_cmd = app.add_subcommand("quiver-orbits", "simple regular orbits of the inhomogeneous tubes");
  auto* wild_cmd = app.add_subcommand("wild-witness", "3-Kronecker or proper Euclidean subquiver of a wild quiver");
  for (auto* s : {classify_cmd, euler_cmd, orbits_cmd, wild_cmd}) {
    s->add_option("--quiver", c.quiver, "quiver JSON file or built-in name")->required();
    common(s);
  }

  std::vector<std::string> blocks;
  auto* gen_cmd = app.add_subcommand("kron-gen", "Kronecker representation from block specs");
  gen_cmd->add_option("--block", blocks, "pre:I, inj:I, reginf:M or reg:c0,...,cn[:E]")->required();
  common(gen_cmd);

  bool conjugate = false;
  auto* canon_cmd = app.add_subcommand("kron-canon", "pencil canonical form");
  canon_cmd->add_option("--rep", c.rep)->required();
  canon_cmd->add_option("--quiver", c.quiver);
  canon_cmd->add_flag("--conjugate", conjugate, "also check invariance under a random change of basis (QAMEN_SEED)");
  common(canon_cmd);

  std::string family = "pre", block;
  long i_max = -1;
  auto* shrink_cmd = app.add_subcommand("kron-shrink", "hyperfiniteness certificate for a Kronecker module");
  shrink_cmd->add_option("--i", c.i, "index of P_i or Q_i");
  shrink_cmd->add_option("--i-max", i_max, "sweep i = 0..N and write a table");
  shrink_cmd->add_option("--family", family, "pre or inj")->check(CLI::IsMember({"pre", "inj"}));
  shrink_cmd->add_option("--block", block, "single regular block spec");
  shrink_cmd->add_option("--rep", c.rep, "arbitrary Kronecker representation");
  shrink_cmd->add_option("--quiver", c.quiver);
  shrink_cmd->add_option("--eps", c.eps, "exact rational a/b");
  common(shrink_cmd);

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("hf-verify", "independent certificate check");
  verify_cmd->add_option("--rep", c.rep)->required();
  verify_cmd->add_option("--cert", cert_path)->required();
  verify_cmd->add_option("--quiver", c.quiver);
  common(verify_cmd);

  auto* profile_cmd = app.add_subcommand("hf-profile", "largest packing of blocks of dimension <= L");
  profile_cmd->add_option("--rep", c.rep)->required();
  profile_cmd->add_option("--L", c.L)->required();
  profile_cmd->add_option("--quiver", c.quiver);
  common(profile_cmd);

  std::string lemma;
  int r_max = 20;
  auto* lemma_cmd = app.add_subcommand("lemma-check", "numerical identities on a Euclidean quiver");
  lemma_cmd->add_option("lemma", lemma, "3.1, 3.2-pattern, 3.3 or 3.4-homdims")
      ->required()
      ->check(CLI::IsMember({"3.1", "3.2-pattern", "3.3", "3.4-homdims"}));
  lemma_cmd->add_option("--quiver", c.quiver)->required();
  lemma_cmd->add_option("--r-max", r_max, "largest translate exponent");
  common(lemma_cmd);

  std::string pair_name, fixture, x_path, y_path;
  bool emit_fixture = false;
  auto* pair_cmd = app.add_subcommand("pair-check", "orthogonal exceptional pair conditions");
  pair_cmd->add_option("name", pair_name, "example1..example4");
  pair_cmd->add_option("--fixture", fixture, "fixture JSON file");
  pair_cmd->add_option("--quiver", c.quiver);
  pair_cmd->add_option("--x", x_path);
  pair_cmd->add_option("--y", y_path);
  pair_cmd->add_flag("--emit-fixture", emit_fixture, "write the fixture instead of the report");
  common(pair_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_cmd) quiver_classify(c);
    else if (*euler_cmd) quiver_euler(c);
    else if (*orbits_cmd) quiver_orbits(c);
    else if (*wild_cmd) wild(c);
    else if (*gen_cmd) kron_gen(c, blocks);
    else if (*canon_cmd) kron_canon(c, conjugate);
    else if (*shrink_cmd) kron_shrink(c, family, block, i_max);
    else if (*verify_cmd) hf_verify(c, cert_path);
    else if (*profile_cmd) hf_profile(c);
    else if (*lemma_cmd) lemma_check(c, lemma, r_max);
    else if (*pair_cmd) pair_check(c, pair_name, fixture, x_path, y_path, emit_fixture);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << dump(error_json(e));
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << dump(json{{"ok", false}, {"error", "ParseError"}, {"detail", e.what()}});
    return 2;
  }
  return 0;
}
