#include <doctest.h>

#include "qamen/functors.hpp"
#include "qamen/kronecker.hpp"
#include "qamen/random.hpp"

using namespace qamen;

namespace {

QuiverPtr qp(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }
RepPtr rp(const Representation& m) { return std::make_shared<const Representation>(m); }

Representation random_rep(QuiverPtr q, Field f, Rng& rng, std::size_t max_dim) {
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q->num_vertices(); ++v) dims.push_back(rng() % (max_dim + 1));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q->num_arrows(); ++a)
    maps.push_back(random_matrix(f, dims[q->target(a)], dims[q->source(a)], rng));
  return Representation(q, f, dims, maps);
}

// Three-vertex quiver containing the Kronecker quiver: 1 => 2 -> 3.
QuiverPtr kron_plus() { return qp(Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"}})); }

}  // namespace

TEST_CASE("extension by zero and restriction") {
  Field q;
  auto k3 = qp(quivers::kronecker(3));
  auto e = SubquiverEmbedding::by_labels(kronecker_quiver(), k3);
  CHECK(extend_by_zero(e, Representation::zero(kronecker_quiver(), q)).total_dim() == 0);
  auto p1 = gen_block(KroneckerBlock::pre(1), q);
  auto f = extend_by_zero(e, p1);
  CHECK(f.dims() == std::vector<std::size_t>{1, 2});
  CHECK(f.map(2).is_zero());
  CHECK(restrict(e, f) == p1);

  auto big = kron_plus();
  auto e3 = SubquiverEmbedding::by_labels(kronecker_quiver(), big);
  CHECK(restrict(e3, make_simple(big, q, 2)).total_dim() == 0);
  CHECK_THROWS_AS(SubquiverEmbedding(kronecker_quiver(), big, {0, 0}, {0, 1}), Error);
  CHECK_THROWS_AS(extend_by_zero(e3, make_simple(big, q, 0)), Error);

  Field f3 = Field::prime(3);
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    auto m = random_rep(kronecker_quiver(), f3, rng, 3);
    auto fm = rp(extend_by_zero(e3, m));
    CHECK(fm->total_dim() == m.total_dim());
    CHECK(restrict(e3, *fm) == m);
    // Subrepresentations of F(m) restrict to subrepresentations of m of equal dimension.
    if (fm->total_dim() == 0) continue;
    std::size_t v = fm->dim(0) ? 0 : 1;
    auto sub = sub_generated(fm, {{v, random_matrix(f3, fm->dim(v), 1, rng)}});
    auto restricted = restrict(e3, family_of(sub));
    Subrepresentation back(rp(m), restricted);
    CHECK(back.total_dim() == sub.total_dim());
  }
}

TEST_CASE("zero-extension hypothesis audit") {
  Field f5 = Field::prime(5);
  Rng rng(13);
  auto big = kron_plus();
  auto e = SubquiverEmbedding::by_labels(kronecker_quiver(), big);
  for (int t = 0; t < 30; ++t) {
    auto m = random_rep(kronecker_quiver(), f5, rng, 4);
    auto fm = extend_by_zero(e, m);
    // G F = id exactly.
    CHECK(restrict(e, fm) == m);
    // K1 = 1: dim G F(M) >= dim M.
    CHECK(restrict(e, fm).total_dim() >= m.total_dim());
    // K2 = 1: dim G(X) <= dim X for arbitrary X on the ambient quiver.
    auto x = random_rep(big, f5, rng, 4);
    CHECK(restrict(e, x).total_dim() <= x.total_dim());
    // G left exact on subobjects: a sub of X restricts to a sub of G(X).
    if (x.total_dim() == 0) continue;
    auto xp = rp(x);
    std::size_t v = 0;
    while (x.dim(v) == 0) ++v;
    auto sub = sub_generated(xp, {{v, random_matrix(f5, x.dim(v), 1, rng)}});
    CHECK_NOTHROW(Subrepresentation(rp(restrict(e, x)), restrict(e, family_of(sub))));
  }
}

TEST_CASE("reflections") {
  Field q;
  auto k = kronecker_quiver();
  auto [q0, z] = reflect(*k, 1, make_simple(k, q, 1), ReflectionDirection::Plus);
  CHECK(z.total_dim() == 0);

  auto [q1, r1] = reflect(*k, 1, gen_block(KroneckerBlock::pre(1), q), ReflectionDirection::Plus);
  CHECK(r1.dims() == std::vector<std::size_t>{1, 0});
  CHECK(q1->is_source(1));

  CHECK_THROWS_AS(reflect(quivers::path(3), 1, make_simple(qp(quivers::path(3)), q, 1)), Error);
  CHECK_THROWS_AS(reflect(*k, 0, make_simple(k, q, 0), ReflectionDirection::Plus), Error);

  // S^- S^+ returns an isomorphic module when there is no S(2) summand.
  Field f5 = Field::prime(5);
  Rng rng(14);
  for (auto b : {KroneckerBlock::pre(3), KroneckerBlock::inj(2), KroneckerBlock::reg(Poly::linear(f5, 2), 3),
                 KroneckerBlock::reg_inf(2)}) {
    auto m = random_conjugate(gen_block(b, f5), rng);
    auto [qa, ma] = reflect(*k, 1, m, ReflectionDirection::Plus);
    auto [qb, mb] = reflect(*qa, 1, ma, ReflectionDirection::Minus);
    CHECK(*qb == *k);
    CHECK(iso_test(Representation(k, f5, mb.dims(), mb.maps()), m));
  }

  // Dimension bound (|Q_1| + 1) dim m.
  auto d5 = qp(quivers::d_tilde(5));
  for (int t = 0; t < 30; ++t) {
    auto m = random_rep(d5, f5, rng, 3);
    for (std::size_t v = 0; v < d5->num_vertices(); ++v) {
      if (!d5->is_sink(v) && !d5->is_source(v)) continue;
      auto [rq, rm] = reflect(*d5, v, m);
      CHECK(rm.total_dim() <= (d5->num_arrows() + 1) * m.total_dim());
    }
  }
}

TEST_CASE("inverse AR translate") {
  Field f2 = Field::prime(2);
  auto k = kronecker_quiver();
  EulerData e(k);
  for (std::size_t v = 0; v < 2; ++v) CHECK(ar_translate_inverse(*k, make_injective(k, f2, v)).total_dim() == 0);
  for (std::size_t i = 0; i <= 50; ++i) {
    auto t = ar_translate_inverse(*k, gen_block(KroneckerBlock::pre(i), f2));
    CHECK(pencil_canonical_form(t).blocks == std::vector<KroneckerBlock>{KroneckerBlock::pre(i + 2)});
    CHECK(t.dimv() == int_apply(e.coxeter_inverse(), gen_block(KroneckerBlock::pre(i), f2).dimv()));
  }
  Rng rng(15);
  Poly p = Poly::from_ints(f2, {1, 1, 1});
  for (auto b : {KroneckerBlock::reg(p, 3), KroneckerBlock::reg_inf(4), KroneckerBlock::inj(3)}) {
    auto m = random_conjugate(gen_block(b, f2), rng);
    auto t = ar_translate_inverse(*k, m);
    CHECK(t.dimv() == int_apply(e.coxeter_inverse(), m.dimv()));
  }

  // Other quivers: non-injective indecomposable projectives follow C^{-1}.
  for (auto q : {qp(quivers::d_tilde(5)), qp(quivers::e_tilde(6)), qp(quivers::a_tilde(3, 2))}) {
    EulerData d(q);
    for (std::size_t v = 0; v < q->num_vertices(); ++v) {
      Representation x = make_projective(q, f2, v);
      for (int r = 0; r < 4; ++r) {
        auto y = ar_translate_inverse(*q, x);
        CHECK(y.dimv() == int_apply(d.coxeter_inverse(), x.dimv()));
        x = Representation(q, f2, y.dims(), y.maps());
      }
    }
  }
}

TEST_CASE("wild witnesses") {
  auto w3 = wild_witness(quivers::kronecker(3));
  CHECK(w3.kind == WildWitness::Kind::MultiArrow);
  CHECK(w3.count == 3);
  auto w5 = wild_witness(quivers::subspace(5));
  REQUIRE(w5.kind == WildWitness::Kind::ProperEuclidean);
  REQUIRE(w5.sub);
  CHECK(classify(*w5.sub).family == "D~4");
  CHECK(w5.sub->num_vertices() == 5);
  CHECK(wild_witness(quivers::kronecker(2)).kind == WildWitness::Kind::None);
  CHECK(wild_witness(quivers::path(4)).kind == WildWitness::Kind::None);
  CHECK_THROWS_AS(wild_witness(Quiver({"1", "2"}, {})), Error);
  Field q;
  for (int k = 1; k <= 4; ++k) {
    auto fx = pair_fixture(k, q);
    auto w = wild_witness(*fx.quiver);
    REQUIRE(w.kind == WildWitness::Kind::ProperEuclidean);
    CHECK(classify(*w.sub).kind == QuiverClass::Euclidean);
    CHECK(w.sub->num_vertices() + w.sub->num_arrows() < fx.quiver->num_vertices() + fx.quiver->num_arrows());
  }
}

TEST_CASE("exceptional pairs") {
  Field q;
  auto k = kronecker_quiver();
  EulerData ek(k);
  auto s1 = make_simple(k, q, 0);
  auto bad = exceptional_pair_check(ek, s1, s1);
  CHECK_FALSE(bad.qualifies);
  CHECK(bad.hom_xy == 1);

  std::vector<std::int64_t> ms;
  for (int n = 1; n <= 4; ++n) {
    auto fx = pair_fixture(n, q);
    EulerData e(fx.quiver);
    auto r = exceptional_pair_check(e, fx.x, fx.y);
    CAPTURE(n);
    CHECK(r.qualifies);
    CHECK(r.m >= 3);
    CHECK(r.hom_xy == 0);
    CHECK(r.hom_yx == 0);
    CHECK(r.ext_yx == 0);
    CHECK(r.ext_xx == 0);
    CHECK(r.ext_yy == 0);
    ms.push_back(r.m);
  }
  CHECK(ms[0] == 3);
}

TEST_CASE("example two read with the arm tip") {
  // tau^{-6} P(1) of the E~6 part has y_0 = 1, so Ext^1(S(inf), Y) is one-dimensional.
  Field q;
  auto fx = pair_fixture(2, q);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < fx.quiver->num_vertices(); ++v)
    if (fx.quiver->vertices()[v] != "inf") keep.push_back(v);
  auto e = SubquiverEmbedding::induced(fx.quiver, keep);
  auto y = extend_by_zero(e, ar_translate_inverse(make_projective(e.sub, q, e.sub->vertex_index("1")), 6));
  auto r = exceptional_pair_check(EulerData(fx.quiver), fx.x, y);
  CHECK(r.m == 1);
  CHECK_FALSE(r.qualifies);
}

TEST_CASE("certificate pushforward") {
  Field q;
  auto big = kron_plus();
  auto e = SubquiverEmbedding::by_labels(kronecker_quiver(), big);
  auto s = shrink_any(gen_blocks({KroneckerBlock::pre(9), KroneckerBlock::reg(Poly::linear(q, 1), 6)}, q),
                      Scalar(1, 4)).certificate;
  auto z = pushforward(s, FunctorDescriptor::zero_extension(e));
  CHECK(verify_certificate(*z.ambient, z).ok());
  CHECK(z.epsilon == s.epsilon);
  CHECK(z.L == s.L);
  CHECK(z.dim_P() == s.dim_P());
  CHECK(z.submodule[2].cols() == 0);

  // Reflection at the Kronecker sink on a preprojective: dim drops from 2i+1 to 2i-1.
  auto k = kronecker_quiver();
  auto c = shrink_preprojective(20, Scalar(1, 20), q).certificate;
  auto d = FunctorDescriptor::reflection(*k, 1, ReflectionDirection::Plus, Scalar(1, 3));
  CHECK(d.K2 == 3);
  auto r = pushforward(c, d);
  CHECK(r.L == 3 * c.L);
  CHECK(r.epsilon == Scalar(9, 20));
  CHECK(verify_certificate(*r.ambient, r).ok());
  auto minus = FunctorDescriptor::reflection(reflect_quiver(*k, 1), 1, ReflectionDirection::Minus, Scalar(1, 3));
  CHECK_THROWS_AS(pushforward(r, minus), Error);
}
