// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any line fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "compositions.hpp"
#include "qamen/functors.hpp"
#include "qamen/json_io.hpp"
#include "qamen/kronecker.hpp"
#include "qamen/lemmas.hpp"
#include "random_blocks.hpp"
#include "euclidean_table.hpp"

using namespace qamen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool late = budget_s > 0 && secs > budget_s;
  bool pass = o.ok && !late;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d (%s): %s; %.2f s", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  if (budget_s > 0) std::printf(" (budget %.0f s)", budget_s);
  if (late) std::printf(" OVER BUDGET");
  std::printf("\n");
  std::fflush(stdout);
}

// Every certificate block, read in its own coordinates, has the claimed type.
bool blocks_match(const KroneckerShrink& s, std::string& why) {
  const auto& c = s.certificate;
  if (c.blocks.size() != s.block_types.size()) {
    why = "block count differs from claimed types";
    return false;
  }
  for (std::size_t k = 0; k < c.blocks.size(); ++k) {
    auto form = pencil_canonical_form(Subrepresentation(c.ambient, c.blocks[k]).as_representation());
    if (form.blocks.size() != 1 || form.blocks[0] != s.block_types[k]) {
      why = "block " + std::to_string(k) + " is not " + s.block_types[k].to_string();
      return false;
    }
  }
  return true;
}

bool shrink_ok(const Representation& m, const KroneckerShrink& s, const Scalar& eps, std::int64_t bound,
               std::string& why) {
  const auto& c = s.certificate;
  auto v = verify_certificate(m, c);
  if (!v.ok()) {
    why = std::string(to_string(v.code)) + ": " + v.detail;
    return false;
  }
  if (Scalar(static_cast<long>(c.dim_P())) < (1 - eps) * Scalar(static_cast<long>(c.dim_M()))) {
    why = "dim P below (1 - eps) dim M";
    return false;
  }
  if (c.L > bound || static_cast<std::int64_t>(c.max_block()) > bound) {
    why = "block bound exceeded";
    return false;
  }
  return blocks_match(s, why);
}

// Monic irreducibles of degree d over GF(p), in lexicographic coefficient order.
std::vector<Poly> irreducibles(const Field& f, int d, std::size_t limit) {
  std::vector<Poly> out;
  const long p = static_cast<long>(f.characteristic());
  long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (long code = 0; code < total && out.size() < limit; ++code) {
    std::vector<Scalar> c;
    long x = code;
    for (int i = 0; i < d; ++i, x /= p) c.push_back(Scalar(x % p));
    c.push_back(1);
    Poly q(f, c);
    if (is_irreducible(q)) out.push_back(q);
  }
  return out;
}

std::multiset<std::string> as_multiset(const std::vector<KroneckerBlock>& bs) {
  std::multiset<std::string> s;
  for (auto& b : bs) s.insert(b.to_string());
  return s;
}

const std::vector<Scalar>& sweep_eps() {
  static const std::vector<Scalar> e{Scalar(1, 2), Scalar(1, 4), Scalar(1, 10)};
  return e;
}

Outcome euclidean_table_reproduction() {
  std::size_t n = 0;
  for (auto& row : euclidean_table::rows()) {
    auto h = radical_generator(row.quiver);
    auto cls = classify(row.quiver);
    if (!h || *h != euclidean_table::h_vector(row)) return {false, row.name + ": h_Q mismatch"};
    if (cls.kind != QuiverClass::Euclidean || cls.tubular_type != row.tubular_type)
      return {false, row.name + ": tubular type mismatch"};
    ++n;
  }
  return {true, std::to_string(n) + " Euclidean quivers, h_Q and tubular type exact"};
}

Outcome orbit_structure() {
  std::size_t rows = 0, orbits = 0;
  for (auto& row : euclidean_table::rows()) {
    EulerData e(row.quiver);
    auto found = simple_regular_orbits(e);
    std::vector<int> sizes, expected;
    for (auto& o : found) sizes.push_back(static_cast<int>(o.size()));
    for (int t : row.tubular_type)
      if (t > 1) expected.push_back(t);
    std::sort(sizes.begin(), sizes.end());
    if (sizes != expected) return {false, row.name + ": orbit sizes differ from tubular type"};
    auto sums = check_orbit_sums(e);
    if (!sums.ok()) return {false, row.name + ": " + sums.first_failure};
    auto pattern = check_orbit_pattern(e);
    if (!pattern.ok()) return {false, row.name + ": " + pattern.first_failure};
    ++rows;
    orbits += found.size();
  }
  return {true, std::to_string(orbits) + " orbits on " + std::to_string(rows) +
                    " quivers; sizes, sums = h_Q and the 1/-1/0 pattern exact"};
}

Outcome kronecker_sweep() {
  std::string why;
  std::size_t certs = 0;
  Field q;
  for (auto& eps : sweep_eps())
    for (std::size_t i = 0; i <= 200; ++i) {
      auto s = shrink_preprojective(i, eps, q);
      if (!shrink_ok(*s.certificate.ambient, s, eps, L_epsilon(eps), why))
        return {false, "Pre(" + std::to_string(i) + ") eps " + eps.get_str() + ": " + why};
      ++certs;
    }
  const std::size_t pre_certs = certs;

  Rng rng(20261016);
  for (long p : {2L, 5L}) {
    Field f = Field::prime(p);
    std::vector<KroneckerBlock> blocks;
    for (std::size_t i = 0; 2 * i + 1 <= 100; ++i) blocks.push_back(KroneckerBlock::inj(i));
    for (std::size_t m = 1; 2 * m <= 100; ++m) blocks.push_back(KroneckerBlock::reg_inf(m));
    for (int d = 1; d <= 5; ++d)
      for (auto& poly : irreducibles(f, d, d <= 2 ? 1000 : 1))
        for (int e = 1; 2 * d * e <= 100; ++e) blocks.push_back(KroneckerBlock::reg(poly, e));
    for (auto& b : blocks)
      for (auto& eps : sweep_eps()) {
        std::string tag = b.to_string() + " over GF(" + std::to_string(p) + ") eps " + eps.get_str();
        if (b.kind == BlockKind::Inj) {
          auto s = shrink_preinjective(b.index, eps, f);
          if (!shrink_ok(*s.certificate.ambient, s, eps, preinjective_bound(eps), why)) return {false, tag + ": " + why};
        } else {
          auto m = gen_block(b, f);
          auto s = shrink_regular(m, eps);
          if (!shrink_ok(m, s, eps, regular_bound(eps), why)) return {false, tag + ": " + why};
          auto mc = random_conjugate(m, rng);
          auto sc = shrink_regular(mc, eps);
          if (!shrink_ok(mc, sc, eps, regular_bound(eps), why)) return {false, tag + " conjugated: " + why};
          ++certs;
        }
        ++certs;
      }
  }
  return {true, std::to_string(pre_certs) + " preprojective certificates over Q and " +
                    std::to_string(certs - pre_certs) +
                    " regular/preinjective certificates over GF(2), GF(5) verified with block types confirmed"};
}

Outcome canonical_soundness() {
  Rng rng(seed_from_env(4));
  std::size_t blocks = 0;
  for (int t = 0; t < 500; ++t) {
    Field f = Field::prime(t % 2 ? 5 : 2);
    auto parts = random_blocks::sum(f, rng, 40);
    auto m = random_conjugate(gen_blocks(parts, f), rng);
    auto form = pencil_canonical_form(m);
    if (as_multiset(form.blocks) != as_multiset(parts)) return {false, "trial " + std::to_string(t) + " multiset differs"};
    blocks += parts.size();
  }
  return {true, "500 conjugated sums (" + std::to_string(blocks) + " blocks) recovered exactly"};
}

Outcome defect_trichotomy() {
  EulerData e(kronecker_quiver());
  Rng rng(seed_from_env(5));
  const std::map<BlockKind, std::int64_t> expect{
      {BlockKind::Pre, -1}, {BlockKind::Inj, 1}, {BlockKind::Reg, 0}, {BlockKind::RegInf, 0}};
  std::size_t n = 0;
  for (int t = 0; t < 400; ++t) {
    Field f = Field::prime(t % 2 ? 5 : 2);
    auto b = random_blocks::block(f, rng, 40);
    auto m = gen_block(b, f);
    if (defect(e, m.dimv()) != expect.at(b.kind) || b.defect() != expect.at(b.kind))
      return {false, b.to_string() + " has defect " + std::to_string(defect(e, m.dimv()))};
    ++n;
  }
  Field q;
  for (std::size_t i = 0; i <= 200; ++i) {
    auto m = gen_block(KroneckerBlock::inj(i), q);
    if (defect(e, m.dimv()) != 1) return {false, "Q_" + std::to_string(i) + " defect not +1"};
    ++n;
  }
  return {true, std::to_string(n) + " generated blocks, defects -1/+1/0/0; Q_i at +1 for i <= 200"};
}

Outcome lemma_numerics() {
  std::size_t quivers = 0, checked = 0, mismatches = 0;
  for (auto& row : euclidean_table::rows()) {
    EulerData e(row.quiver);
    if (simple_regular_orbits(e).empty()) continue;
    auto chain = check_perpendicular_chain(e, 20);
    if (!chain.ok()) return {false, row.name + ": " + chain.first_failure};
    auto homs = check_hom_dims(e, 20);
    if (!homs.ok()) return {false, row.name + ": " + homs.first_failure};
    ++quivers;
    checked += chain.checked + homs.checked;
    mismatches += chain.printed_sign_mismatches;
  }
  return {true, std::to_string(checked) + " identities on " + std::to_string(quivers) +
                    " quivers, r <= 20; sign-as-printed variant differs in " + std::to_string(mismatches)};
}

Outcome descent() {
  std::size_t n = 0;
  for (const Field& f : {Field(), Field::prime(2)})
    for (std::size_t i = 1; i <= 50; ++i) {
      auto form = pencil_canonical_form(kernel(preinjective_theta(i, f)).as_representation());
      for (auto& b : form.blocks)
        if (b.kind == BlockKind::Inj) return {false, "ker theta(" + std::to_string(i) + ") contains " + b.to_string()};
      ++n;
    }
  return {true, std::to_string(n) + " kernels (Q and GF(2), i <= 50) free of Inj blocks"};
}

Outcome combinators() {
  compositions::Ladder ladder;
  Rng rng(seed_from_env(8));
  int steps = 0;
  for (int t = 0; t < 200; ++t) {
    Field f = t % 2 ? Field::prime(3) : Field();
    auto o = compositions::run_one(ladder, f, rng);
    if (!o.ok) return {false, "composition " + std::to_string(t) + ": " + o.failure};
    steps += o.steps;
  }
  return {true, "200 compositions (" + std::to_string(steps) + " steps) verified with exact (eps, L) bookkeeping"};
}

Outcome examples() {
  std::ostringstream out;
  auto w3 = wild_witness(quivers::kronecker(3));
  if (w3.kind != WildWitness::Kind::MultiArrow || w3.count != 3) return {false, "3-Kronecker witness"};
  auto check = [&](const PairFixture& fx, int k, bool report) -> std::string {
    auto r = exceptional_pair_check(EulerData(fx.quiver), fx.x, fx.y);
    if (!r.qualifies || r.m < 3) return fx.name + " does not qualify with m >= 3";
    if (k == 1 && r.m != 3) return fx.name + " has m = " + std::to_string(r.m);
    auto w = wild_witness(*fx.quiver);
    if (w.kind != WildWitness::Kind::ProperEuclidean || classify(*w.sub).kind != QuiverClass::Euclidean)
      return fx.name + " lacks a proper Euclidean witness";
    if (report) out << " " << fx.name << ":m=" << r.m << "," << classify(*w.sub).family;
    return "";
  };
  for (int k = 1; k <= 4; ++k) {
    json j = read_json_file(std::string(QAMEN_DATA_DIR) + "/example" + std::to_string(k) + ".json");
    PairFixture fx;
    fx.name = j.value("name", "example" + std::to_string(k));
    fx.quiver = std::make_shared<const Quiver>(quiver_from_json(j.at("quiver")));
    fx.x = rep_from_json(j.at("x"), fx.quiver);
    fx.y = rep_from_json(j.at("y"), fx.quiver);
    if (auto err = check(fx, k, true); !err.empty()) return {false, err};
    if (auto err = check(pair_fixture(k, Field::prime(2)), k, false); !err.empty()) return {false, err + " over GF(2)"};
  }
  return {true, "3-Kronecker MultiArrow;" + out.str() + "; built-in fixtures over GF(2) agree"};
}

}  // namespace

int main() {
  run(1, "Euclidean table", 1, euclidean_table_reproduction);
  run(2, "simple regular orbits", 10, orbit_structure);
  run(3, "Kronecker shrink sweep", 60, kronecker_sweep);
  run(4, "canonical form soundness", 120, canonical_soundness);
  run(5, "defect trichotomy", 0, defect_trichotomy);
  run(6, "perpendicular and hom identities", 5, lemma_numerics);
  run(7, "preinjective descent", 0, descent);
  run(8, "certificate combinators", 0, combinators);
  run(9, "exceptional pairs and wild witnesses", 10, examples);
  std::printf(
      "[DECLARED] criterion 10 (type-level statements): not reproducible at desk scale; amenability of Euclidean "
      "path algebras and non-amenability of wild ones quantify over infinitely many modules. Proxies: uniform L_eps "
      "in criterion 3, functor hypothesis audits in the unit suite.\n");
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
