#include <doctest.h>

#include <algorithm>

#include "qamen/kronecker.hpp"
#include "qamen/random.hpp"
#include "random_blocks.hpp"

using namespace qamen;

namespace {

Representation block_rep(const HyperfiniteCertificate& c, const SubspaceFamily& b) {
  return Subrepresentation(c.ambient, b).as_representation();
}

std::vector<KroneckerBlock> sorted(std::vector<KroneckerBlock> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("generated blocks") {
  Field q;
  auto pre0 = gen_block(KroneckerBlock::pre(0), q);
  CHECK(pre0.dims() == std::vector<std::size_t>{0, 1});
  CHECK(gen_block(KroneckerBlock::inj(0), q).dims() == std::vector<std::size_t>{1, 0});
  auto r = gen_block(KroneckerBlock::reg(Poly::linear(q, 4)), q);
  CHECK(r.map(0) == Matrix::from_ints(q, {{1}}));
  CHECK(r.map(1) == Matrix::from_ints(q, {{4}}));
  auto p2 = gen_block(KroneckerBlock::pre(2), q);
  CHECK(p2.map(0) == Matrix::from_ints(q, {{1, 0}, {0, 1}, {0, 0}}));
  CHECK(p2.map(1) == Matrix::from_ints(q, {{0, 0}, {1, 0}, {0, 1}}));
  auto i2 = gen_block(KroneckerBlock::inj(2), q);
  CHECK(i2.map(0) == Matrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(i2.map(1) == Matrix::from_ints(q, {{0, 1, 0}, {0, 0, 1}}));
  auto ri = gen_block(KroneckerBlock::reg_inf(2), q);
  CHECK(ri.map(0) == Matrix::from_ints(q, {{0, 0}, {1, 0}}));
  CHECK(ri.map(1) == Matrix::identity(q, 2));
  Field f2 = Field::prime(2);
  CHECK_THROWS_AS(gen_block(KroneckerBlock::reg(Poly::from_ints(f2, {1, 0, 1})), f2), Error);

  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(gen_block(KroneckerBlock::pre(i), f2).dimv() == DimVector{long(i), long(i + 1)});
    CHECK(gen_block(KroneckerBlock::inj(i), f2).dimv() == DimVector{long(i + 1), long(i)});
    CHECK(gen_block(KroneckerBlock::reg_inf(i + 1), f2).dimv() == DimVector{long(i + 1), long(i + 1)});
    auto b = KroneckerBlock::reg(Poly::from_ints(f2, {1, 1, 1}), int(i + 1));
    CHECK(gen_block(b, f2).dimv() == DimVector{long(2 * i + 2), long(2 * i + 2)});
  }
}

TEST_CASE("defects of blocks") {
  Field f5 = Field::prime(5);
  EulerData e(kronecker_quiver());
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(KroneckerBlock::pre(i).defect() == -1);
    CHECK(KroneckerBlock::inj(i).defect() == 1);
    CHECK(defect(e, gen_block(KroneckerBlock::inj(i), f5).dimv()) == 1);
    CHECK(defect(e, gen_block(KroneckerBlock::pre(i), f5).dimv()) == -1);
    CHECK(KroneckerBlock::reg_inf(i + 1).defect() == 0);
    CHECK(KroneckerBlock::reg(Poly::linear(f5, 2), int(i + 1)).defect() == 0);
  }
}

TEST_CASE("canonical form examples") {
  Field f2 = Field::prime(2);
  CHECK(pencil_canonical_form(gen_block(KroneckerBlock::pre(3), f2)).blocks ==
        std::vector<KroneckerBlock>{KroneckerBlock::pre(3)});
  Representation r(kronecker_quiver(), f2, {2, 2},
                   {Matrix::identity(f2, 2), companion(Poly::from_ints(f2, {1, 1, 1}))});
  CHECK(pencil_canonical_form(r).blocks ==
        std::vector<KroneckerBlock>{KroneckerBlock::reg(Poly::from_ints(f2, {1, 1, 1}))});

  Field f5 = Field::prime(5);
  Rng rng(21);
  auto m = random_conjugate(gen_blocks({KroneckerBlock::pre(1), KroneckerBlock::inj(1)}, f5), rng);
  CHECK(pencil_canonical_form(m).blocks == std::vector<KroneckerBlock>{KroneckerBlock::pre(1), KroneckerBlock::inj(1)});
  CHECK_THROWS_AS(pencil_canonical_form(Representation::zero(std::make_shared<const Quiver>(quivers::path(2)), f5)),
                  Error);
}

TEST_CASE("canonical form is invariant under change of basis") {
  Rng rng(77);
  for (long p : {2L, 5L}) {
    Field f = Field::prime(p);
    for (int t = 0; t < 25; ++t) {
      std::vector<KroneckerBlock> blocks;
      std::size_t total = 0;
      while (total < 20) {
        auto b = random_blocks::block(f, rng, 10);
        if (total + b.dim() > 30) break;
        total += b.dim();
        blocks.push_back(b);
      }
      auto m = random_conjugate(gen_blocks(blocks, f), rng);
      auto form = pencil_canonical_form(m);
      CHECK(form.blocks == sorted(blocks));
      CHECK(form.primary);
      CHECK(form.dimv() == m.dimv());
      CHECK(pencil_canonical_form(gen_blocks(form.blocks, f)) == form);
    }
  }
}

TEST_CASE("canonical form over the rationals") {
  Field q;
  Rng rng(3);
  // x^2 - 2 is irreducible over Q; (x-1)(x+1) is reported by invariant factor parts.
  Poly irr = Poly::from_ints(q, {-2, 0, 1});
  auto m = random_conjugate(gen_blocks({KroneckerBlock::pre(2), KroneckerBlock::reg(irr, 2)}, q), rng);
  auto form = pencil_canonical_form(m);
  CHECK(form.dimv() == m.dimv());
  CHECK(iso_test(gen_blocks(form.blocks, q), m));
  CHECK(std::count(form.blocks.begin(), form.blocks.end(), KroneckerBlock::pre(2)) == 1);
  auto inv = invariant_factors(companion(irr.pow(2)));
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == irr.pow(2));
}

TEST_CASE("iso test") {
  Field f5 = Field::prime(5);
  Rng rng(6);
  auto m = gen_blocks({KroneckerBlock::pre(2), KroneckerBlock::reg(Poly::linear(f5, 3), 2)}, f5);
  CHECK(iso_test(m, m));
  CHECK(iso_test(m, random_conjugate(m, rng)));
  CHECK_FALSE(iso_test(gen_block(KroneckerBlock::pre(1), f5), gen_block(KroneckerBlock::inj(1), f5)));
  CHECK_FALSE(iso_test(gen_block(KroneckerBlock::reg(Poly::linear(f5, 1)), f5),
                       gen_block(KroneckerBlock::reg(Poly::linear(f5, 2)), f5)));
}

TEST_CASE("preprojective shrink") {
  Field q;
  auto s = shrink_preprojective(10, Scalar(1, 4), q);
  auto& c = s.certificate;
  CHECK(c.L == 7);
  CHECK(c.dim_P() == 18);
  CHECK(c.dim_M() == 21);
  CHECK(verify_certificate(*c.ambient, c).ok());
  CHECK(sorted(s.block_types) == std::vector<KroneckerBlock>{KroneckerBlock::pre(1), KroneckerBlock::pre(2),
                                                              KroneckerBlock::pre(2), KroneckerBlock::pre(2)});
  // The dropped source vectors are e_3, e_6, e_9.
  for (std::size_t k : {2u, 5u, 8u}) CHECK_FALSE(contains(c.submodule[0], Matrix::unit_column(q, 10, k)));
  for (std::size_t b = 0; b < c.blocks.size(); ++b) CHECK(iso_test(block_rep(c, c.blocks[b]), gen_block(s.block_types[b], q)));

  auto small = shrink_preprojective(2, Scalar(1, 4), q);
  CHECK(small.certificate.dim_P() == 5);
  CHECK(small.block_types == std::vector<KroneckerBlock>{KroneckerBlock::pre(2)});
  // i = K - 1 with dim <= L: eps = 1/2 gives K = 2, L = 5.
  auto edge = shrink_preprojective(1, Scalar(1, 2), q);
  CHECK(edge.certificate.dim_P() == edge.certificate.dim_M());
  CHECK_THROWS_AS(shrink_preprojective(3, Scalar(0), q), Error);
  CHECK_THROWS_AS(shrink_preprojective(3, Scalar(1), q), Error);
  CHECK(preprojective_bound(Scalar(1, 3)) == 6);
  CHECK(L_epsilon(Scalar(2, 7)) == 7);
}

TEST_CASE("preprojective sweep") {
  Field f2 = Field::prime(2);
  for (const Scalar& eps : {Scalar(1, 2), Scalar(1, 4), Scalar(1, 10)})
    for (std::size_t i = 0; i <= 40; ++i) {
      auto s = shrink_preprojective(i, eps, f2);
      auto& c = s.certificate;
      REQUIRE(verify_certificate(*c.ambient, c).ok());
      CHECK(Scalar(c.dim_P()) >= (1 - eps) * Scalar(c.dim_M()));
      CHECK(static_cast<std::int64_t>(c.max_block()) <= L_epsilon(eps));
    }
}

TEST_CASE("regular codimension-one sub") {
  Field q;
  auto r0 = std::make_shared<const Representation>(gen_block(KroneckerBlock::reg(Poly::linear(q, 0)), q));
  auto y = regular_codim_one(r0);
  CHECK(y.sub.total_dim() == 1);
  CHECK(iso_test(y.sub.as_representation(), gen_block(KroneckerBlock::pre(0), q)));

  Field f2 = Field::prime(2);
  auto r2 = std::make_shared<const Representation>(gen_block(KroneckerBlock::reg(Poly::from_ints(f2, {1, 1, 1})), f2));
  auto y2 = regular_codim_one(r2);
  CHECK(y2.sub.total_dim() == 3);
  CHECK(pencil_canonical_form(y2.sub.as_representation()).blocks == std::vector<KroneckerBlock>{KroneckerBlock::pre(1)});

  auto ri = std::make_shared<const Representation>(gen_block(KroneckerBlock::reg_inf(5), f2));
  auto yi = regular_codim_one(ri);
  CHECK(yi.sub.total_dim() == 9);
  CHECK(iso_test(yi.sub.as_representation(), gen_block(KroneckerBlock::pre(4), f2)));
}

TEST_CASE("regular shrink") {
  Field f5 = Field::prime(5);
  Rng rng(12);
  Poly p = Poly::from_ints(f5, {2, 0, 1});  // x^2 + 2, irreducible over GF(5)
  REQUIRE(is_irreducible(p));
  for (auto b : {KroneckerBlock::reg(p, 10), KroneckerBlock::reg(Poly::linear(f5, 3), 17), KroneckerBlock::reg_inf(23)}) {
    auto m = random_conjugate(gen_block(b, f5), rng);
    for (const Scalar& eps : {Scalar(1, 2), Scalar(1, 4), Scalar(1, 10)}) {
      auto s = shrink_regular(m, eps);
      CHECK(verify_certificate(m, s.certificate).ok());
      CHECK(s.certificate.L == regular_bound(eps));
    }
  }
  // Small branch.
  auto small = shrink_regular(gen_block(KroneckerBlock::reg(Poly::linear(f5, 0)), f5), Scalar(1, 2));
  CHECK(small.certificate.dim_P() == 2);
  CHECK_THROWS_AS(shrink_regular(gen_blocks({KroneckerBlock::reg(Poly::linear(f5, 0)),
                                             KroneckerBlock::reg(Poly::linear(f5, 1))}, f5),
                                 Scalar(1, 2)),
                  Error);
  CHECK_THROWS_AS(shrink_regular(gen_block(KroneckerBlock::pre(4), f5), Scalar(1, 2)), Error);
}

TEST_CASE("preinjective shrink") {
  Field q;
  auto k1 = kernel(preinjective_theta(1, q));
  CHECK(k1.dimv() == DimVector{1, 1});
  for (std::size_t i = 1; i <= 15; ++i) {
    auto form = pencil_canonical_form(kernel(preinjective_theta(i, q)).as_representation());
    for (auto& b : form.blocks) {
      CHECK(b.kind != BlockKind::Inj);
      CHECK(b.defect() <= 0);
    }
  }
  auto z = shrink_preinjective(0, Scalar(1, 2), q);
  CHECK(z.certificate.dim_P() == 1);
  Field f2 = Field::prime(2);
  for (std::size_t i : {0u, 3u, 12u, 30u})
    for (const Scalar& eps : {Scalar(1, 2), Scalar(1, 4), Scalar(1, 10)}) {
      auto s = shrink_preinjective(i, eps, f2);
      CHECK(verify_certificate(*s.certificate.ambient, s.certificate).ok());
    }
}

TEST_CASE("shrink any") {
  Field q;
  auto p10 = gen_block(KroneckerBlock::pre(10), q);
  auto s = shrink_any(gen_blocks({KroneckerBlock::pre(10), KroneckerBlock::pre(10)}, q), Scalar(1, 4));
  CHECK(verify_certificate(*s.certificate.ambient, s.certificate).ok());
  CHECK(s.certificate.dim_P() == 36);
  CHECK(s.certificate.dim_M() == 42);
  std::vector<KroneckerBlock> expect(6, KroneckerBlock::pre(2));
  expect.push_back(KroneckerBlock::pre(1));
  expect.push_back(KroneckerBlock::pre(1));
  CHECK(sorted(s.block_types) == sorted(expect));

  auto z = shrink_any(Representation::zero(kronecker_quiver(), q), Scalar(1, 4));
  CHECK(z.certificate.dim_P() == 0);
  CHECK(z.certificate.blocks.empty());
  CHECK(verify_certificate(*z.certificate.ambient, z.certificate).ok());

  Field f3 = Field::prime(3);
  Rng rng(31);
  for (int t = 0; t < 5; ++t) {
    Representation m(kronecker_quiver(), f3, {8, 8}, {random_matrix(f3, 8, 8, rng), random_matrix(f3, 8, 8, rng)});
    auto c = shrink_any(m, Scalar(1, 4));
    CHECK(verify_certificate(m, c.certificate).ok());
  }
}
