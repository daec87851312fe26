#include <doctest.h>

#include "qamen/json_io.hpp"
#include "qamen/random.hpp"

using namespace qamen;

TEST_CASE("fields and scalars") {
  CHECK(parse_field("q") == Field::rationals());
  CHECK(parse_field("gf:7") == Field::prime(7));
  CHECK_THROWS_AS(parse_field("gf:9"), Error);
  CHECK_THROWS_AS(parse_field("real"), Error);
  CHECK(field_from_json(field_to_json(Field::prime(5))) == Field::prime(5));
  CHECK(parse_rational("1/4") == Scalar(1, 4));
  CHECK(parse_rational("3") == 3);
  CHECK_THROWS_AS(parse_rational("0.25"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("named quivers") {
  CHECK(named_quiver("kronecker:3") == quivers::kronecker(3));
  CHECK(named_quiver("e_tilde:7") == quivers::e_tilde(7));
  CHECK(named_quiver("a_tilde:2,1") == quivers::a_tilde(2, 1));
  CHECK_THROWS_AS(named_quiver("nonsense"), Error);
  Quiver q = quivers::d_tilde(5);
  CHECK(quiver_from_json(quiver_to_json(q)) == q);
}

TEST_CASE("representation round trip") {
  Rng rng(3);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    auto q = std::make_shared<const Quiver>(quivers::d_tilde(4));
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q->num_vertices(); ++v) dims.push_back(rng() % 3);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q->num_arrows(); ++a)
      maps.push_back(random_matrix(f, dims[q->target(a)], dims[q->source(a)], rng));
    Representation m(q, f, dims, maps);
    Representation back = rep_from_json(json::parse(rep_to_json(m).dump()));
    CHECK(back == m);
  }
  CHECK_THROWS_AS(rep_from_json(json::parse(R"({"quiver":"kronecker:2","field":{"kind":"Q"},"dims":{"1":1,"2":1},
                   "maps":{"a":[["1","2"]],"b":[["1"]]}})")),
                  Error);
}

TEST_CASE("blocks and certificates") {
  Field f5 = Field::prime(5);
  CHECK(parse_block("pre:3", f5) == KroneckerBlock::pre(3));
  CHECK(parse_block("reginf:2", f5) == KroneckerBlock::reg_inf(2));
  CHECK(parse_block("reg:2,0,1:3", f5) == KroneckerBlock::reg(Poly::from_ints(f5, {2, 0, 1}), 3));
  CHECK_THROWS_AS(parse_block("pre:x", f5), Error);

  auto s = shrink_any(gen_blocks({KroneckerBlock::pre(7), KroneckerBlock::inj(6)}, f5), Scalar(1, 4)).certificate;
  json j = json::parse(certificate_to_json(s).dump());
  CHECK(j["achieved"]["dim_P"] == s.dim_P());
  CHECK(j["epsilon"] == "1/4");
  auto back = certificate_from_json(j, s.ambient);
  CHECK(back.submodule == s.submodule);
  CHECK(back.blocks == s.blocks);
  CHECK(verify_certificate(*s.ambient, back).ok());
}
