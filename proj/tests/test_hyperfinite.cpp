#include <doctest.h>

#include "compositions.hpp"
#include "qamen/hyperfinite.hpp"
#include "qamen/kronecker.hpp"

using namespace qamen;

namespace {

RepPtr ptr(const Representation& m) { return std::make_shared<const Representation>(m); }

}  // namespace

TEST_CASE("verifier accepts producer output") {
  Field q;
  auto s = shrink_any(gen_block(KroneckerBlock::pre(10), q), Scalar(1, 4));
  CHECK(verify_certificate(*s.certificate.ambient, s.certificate).ok());
}

TEST_CASE("verifier rejects each kind of violation") {
  Field q;
  auto p1 = ptr(gen_block(KroneckerBlock::pre(1), q));  // dims (1,2)
  auto good = trivial_certificate(p1, Scalar(1, 2), 3);
  REQUIRE(verify_certificate(*p1, good).ok());

  // Block missing one image vector of the source generator.
  auto c = good;
  c.blocks[0][1] = Matrix::unit_column(q, 2, 0);
  CHECK(verify_certificate(*p1, c).code == VerifyCode::NotSubrep);

  auto r = ptr(gen_blocks({KroneckerBlock::pre(0), KroneckerBlock::pre(0)}, q));  // dims (0,2)
  SubspaceFamily b1{Matrix(q, 0, 0), Matrix::unit_column(q, 2, 0)};
  SubspaceFamily b2{Matrix(q, 0, 0), Matrix::from_ints(q, {{2}, {0}})};
  HyperfiniteCertificate dup{r, Scalar(1, 2), 2, b1, {b1, b2}};
  CHECK(verify_certificate(*r, dup).code == VerifyCode::NotDirect);

  HyperfiniteCertificate span{r, Scalar(1, 2), 2, {Matrix(q, 0, 0), Matrix::identity(q, 2)}, {b1}};
  CHECK(verify_certificate(*r, span).code == VerifyCode::SpanMismatch);

  // L = 1 on a block of dimension 2.
  CHECK(verify_certificate(*r, trivial_certificate(r, Scalar(1, 2), 1)).code == VerifyCode::BlockTooBig);

  HyperfiniteCertificate small{r, Scalar(1, 4), 2, b1, {b1}};
  CHECK(verify_certificate(*r, small).code == VerifyCode::EpsilonViolated);
  small.epsilon = Scalar(1, 2);
  CHECK(verify_certificate(*r, small).ok());
}

TEST_CASE("direct sum combinator") {
  Field q;
  auto s = shrink_preprojective(10, Scalar(1, 4), q).certificate;
  auto two = combine_direct_sum({s, s});
  CHECK(verify_certificate(*two.ambient, two).ok());
  CHECK(two.epsilon == s.epsilon);
  CHECK(two.L == s.L);
  CHECK(two.dim_P() == 36);

  auto empty = combine_direct_sum(kronecker_quiver(), q, {});
  CHECK(empty.ambient->total_dim() == 0);
  CHECK(verify_certificate(*empty.ambient, empty).ok());

  auto r1 = trivial_certificate(ptr(gen_block(KroneckerBlock::reg(Poly::linear(q, 0)), q)), Scalar(1, 4), 7);
  auto mixed = combine_direct_sum({s, r1});
  CHECK(verify_certificate(*mixed.ambient, mixed).ok());

  auto other = trivial_certificate(ptr(gen_block(KroneckerBlock::pre(0), q)), Scalar(1, 3), 7);
  CHECK_THROWS_AS(combine_direct_sum({s, other}), Error);
}

TEST_CASE("bounded codimension extension") {
  Field q;
  auto s = shrink_preprojective(10, Scalar(1, 4), q).certificate;
  auto r0 = extend_bounded_codim(s, Morphism::identity(s.ambient), Scalar(1, 4));
  CHECK(r0.epsilon_effective == Scalar(1, 4));
  CHECK(r0.certificate.submodule == s.submodule);

  // dim M = 100, codim 1, eps_P = 1/10, dim P = 99.
  auto p = shrink_preprojective(49, Scalar(1, 10), q).certificate;
  REQUIRE(p.dim_M() == 99);
  auto ds = direct_sum({*p.ambient, gen_block(KroneckerBlock::pre(0), q)});
  Morphism inc(p.ambient, ptr(ds.sum), ds.inclusions[0].components());
  auto r = extend_bounded_codim(p, inc, Scalar(1, 5));
  CHECK(r.epsilon_effective == Scalar(109, 1000));
  CHECK(r.epsilon_achieved * 100 == Scalar(static_cast<long>(100 - p.dim_P())));
  CHECK(verify_certificate(ds.sum, r.certificate).ok());
  CHECK(r.certificate.L == p.L);

  // dim M = 4, codim 3.
  auto t = trivial_certificate(ptr(gen_block(KroneckerBlock::pre(0), q)), Scalar(1, 4), 7);
  auto ds4 = direct_sum({*t.ambient, gen_block(KroneckerBlock::inj(1), q)});
  Morphism inc4(t.ambient, ptr(ds4.sum), ds4.inclusions[0].components());
  CHECK_THROWS_AS(extend_bounded_codim(t, inc4, Scalar(1, 4)), Error);
}

TEST_CASE("profile search") {
  Field f2 = Field::prime(2);
  auto p2 = gen_block(KroneckerBlock::pre(2), f2);
  auto whole = profile_search(p2, 5);
  CHECK(whole.best_dim == 5);
  CHECK(profile_search(p2, 0).best_dim == 0);
  auto r = profile_search(p2, 3);
  CHECK(r.exact);
  CHECK(r.best_dim == 4);
  CHECK(verify_certificate(p2, r.certificate).ok());

  // Exact search is at least as good as shrink_any at an epsilon whose bound fits.
  for (std::size_t i = 2; i <= 3; ++i) {
    auto m = gen_block(KroneckerBlock::pre(i), f2);
    auto s = shrink_preprojective(i, Scalar(1, 2), f2).certificate;
    auto best = profile_search(m, static_cast<std::int64_t>(s.max_block()));
    CHECK(best.best_dim >= s.dim_P());
  }
}

TEST_CASE("random combinator compositions") {
  compositions::Ladder ladder;
  Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    Field f = Field::prime(t % 2 ? 5 : 2);
    auto o = compositions::run_one(ladder, f, rng);
    CAPTURE(o.failure);
    CHECK(o.ok);
  }
}
