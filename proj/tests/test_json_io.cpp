#include <doctest.h>

#include <random>

#include "magic/json_io.hpp"
#include "magic/lattice.hpp"
#include "magic/sampling.hpp"
#include "support.hpp"

using namespace magic;

TEST_SUITE("json") {

TEST_CASE("integer matrices") {
  const auto doc = parse_matrix(Json::parse(
      R"({"order": 3, "modulus": null, "entries": [[4,9,2],[3,5,7],[8,1,6]]})"));
  CHECK(doc.ring->name() == "Z");
  CHECK(verify(integer_entries(doc)) == loh_shu());
  // "modulus" may be omitted for Z.
  const auto bare = parse_matrix(Json::parse(R"({"entries": [[1]]})"));
  CHECK(bare.ring->name() == "Z");
}

TEST_CASE("residue and product carriers") {
  const auto z5 = parse_matrix(Json::parse(R"({"modulus": 5, "entries": [[1,4],[4,1]]})"));
  CHECK(z5.ring->name() == "Z_5");
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"({"modulus": 5, "entries": [[5,0],[0,5]]})")),
                  ParseError);
  CHECK_THROWS_AS(integer_entries(z5), ParseError);

  const auto reduced = parse_matrix(
      Json::parse(R"({"modulus": null, "entries": [[4,9,2],[3,5,7],[8,1,6]]})"), Integer(5));
  CHECK(reduced.ring->name() == "Z_5");
  CHECK(reduced.entries(0, 1).value() == 4);

  const auto prod = parse_matrix(
      Json::parse(R"({"moduli": [2, 3], "entries": [[[1,2],[0,0]],[[0,0],[1,2]]]})"));
  CHECK(prod.ring->name() == "Z_2 x Z_3");
  CHECK(prod.entries(0, 0).to_string() == "(1,2)");
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"({"moduli": [2, 3], "entries": [[1]]})")),
                  ParseError);
  const auto mixed = parse_matrix(Json::parse(R"({"moduli": [null, 4], "entries": [[[-7,3]]]})"));
  CHECK(mixed.ring->name() == "Z x Z_4");
}

TEST_CASE("malformed documents") {
  for (const char* text : {
           R"([1,2])",
           R"({"order": 2})",
           R"({"entries": []})",
           R"({"entries": [[1,2],[3]]})",
           R"({"entries": [[1,2]]})",
           R"({"order": 3, "entries": [[1,1],[1,1]]})",
           R"({"entries": [[1.5]]})",
           R"({"entries": [["x"]]})",
           R"({"modulus": 0, "entries": [[0]]})",
           R"({"modulus": -3, "entries": [[0]]})",
       }) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_matrix(Json::parse(text)), ParseError);
  }
}

TEST_CASE("big integers travel as decimal strings") {
  const Integer big("-98765432109876543210987654321");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(Integer(42)).is_number_integer());
  CHECK(integer_from_json(Json("17")) == 17);
  CHECK_THROWS_AS(integer_from_json(Json("17a")), ParseError);
  CHECK_THROWS_AS(integer_from_json(Json("-")), ParseError);

  const auto a = scale(loh_shu(), big);
  const auto back = verify(integer_entries(parse_matrix(to_json(a))));
  CHECK(back == a);
  CHECK(back.constant() == big * 15);
}

TEST_CASE("written squares re-parse and re-verify identically") {
  std::mt19937_64 rng(43);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto basis = lattice_basis(n);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_pms(basis, rng);
      CHECK(verify(integer_entries(parse_matrix(Json::parse(to_json(a).dump())))) == a);
    }
  }
  for (auto g : {ProductRing::residues(7), ProductRing::product({2, 0, 3})}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_gms(g, 3, rng);
      const auto doc = parse_matrix(Json::parse(to_json(a).dump()));
      const auto back = gverify(doc.ring, doc.entries);
      CHECK(back.entries() == a.entries());
      CHECK(back.constant() == a.constant());
    }
  }
  auto z = ProductRing::integers();
  const auto c = random_circulant_rms(z, 4, rng);
  const auto doc = parse_matrix(to_json(c));
  CHECK(rverify(doc.ring, doc.entries) == c);
}

TEST_CASE("matrix field order") {
  const auto text = to_json(loh_shu()).dump();
  CHECK(text == R"({"order":3,"modulus":null,"entries":[[4,9,2],[3,5,7],[8,1,6]]})");
}

TEST_CASE("independence systems") {
  const auto sys = parse_system(
      Json::parse(R"({"labels": ["a","b","c"], "independent": [[], [0], [1], [0,1]]})"));
  CHECK(sys.ground_size() == 3);
  CHECK(sys.contains({0, 1}));
  CHECK(parse_system(to_json(sys)).independent() == sys.independent());
  CHECK_THROWS_AS(parse_system(Json::parse(R"({"labels": ["a"]})")), ParseError);
  CHECK_THROWS_AS(parse_system(Json::parse(R"({"labels": ["a"], "independent": [[2]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_system(Json::parse(R"({"labels": ["a"], "independent": [[-1]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_system(Json::parse(R"({"labels": [1], "independent": []})")),
                  ParseError);
}

}
