#include <doctest.h>

#include "magic/algebra.hpp"
#include "magic/error.hpp"

using namespace magic;

TEST_SUITE("algebra") {

TEST_CASE("group operation on the shipped carriers") {
  auto z = ProductRing::integers();
  CHECK(z->op(z->make(3), z->make(-3)) == z->identity());

  auto z5 = ProductRing::residues(5);
  CHECK(z5->op(z5->make(4), z5->make(3)) == z5->make(2));

  auto z2z3 = ProductRing::product({2, 3});
  const auto x = z2z3->make({1, 2});
  CHECK(z2z3->op(x, x) == z2z3->make({0, 1}));
  CHECK(z2z3->op(x, x).to_string() == "(0,1)");
}

TEST_CASE("ring operations") {
  auto z = ProductRing::integers();
  CHECK(z->mul(z->make(-5), z->make(4)) == z->make(-20));
  CHECK(z->add(z->make(7), z->neg(z->make(7))) == z->zero());

  auto z4 = ProductRing::residues(4);
  CHECK(z4->mul(z4->make(2), z4->make(2)) == z4->zero());
  CHECK(z4->one() == z4->make(1));
}

TEST_CASE("residues stay in range") {
  auto z7 = ProductRing::residues(7);
  CHECK(z7->make(-1).value() == 6);
  CHECK(z7->make(15).value() == 1);
  CHECK_THROWS_AS(Element(z7->carrier(), {Integer(7)}), CarrierMismatch);
  CHECK_THROWS_AS(Element(z7->carrier(), {Integer(-1)}), CarrierMismatch);
}

TEST_CASE("mixing carriers is an error") {
  auto z5 = ProductRing::residues(5);
  auto z6 = ProductRing::residues(6);
  CHECK_THROWS_AS(z5->op(z5->make(1), z6->make(1)), CarrierMismatch);
  CHECK_THROWS_AS(z5->mul(ProductRing::integers()->make(1), z5->make(1)), CarrierMismatch);
  CHECK_FALSE(z5->make(1) == z6->make(1));
}

TEST_CASE("carrier names and sizes") {
  CHECK(Carrier::integers()->name() == "Z");
  CHECK(Carrier::residues(5)->name() == "Z_5");
  CHECK(Carrier::product({2, 3})->name() == "Z_2 x Z_3");
  CHECK_FALSE(Carrier::integers()->cardinality());
  CHECK(*Carrier::product({2, 3})->cardinality() == 6);
  CHECK_THROWS_AS(ProductRing::integers()->elements(), BudgetExceeded);
  CHECK(ProductRing::residues(1)->elements().size() == 1);
}

TEST_CASE("elements of a product enumerate in lexicographic order") {
  auto g = ProductRing::product({2, 3});
  const auto all = g->elements();
  REQUIRE(all.size() == 6);
  CHECK(all.front() == g->make({0, 0}));
  CHECK(all[1] == g->make({0, 1}));
  CHECK(all.back() == g->make({1, 2}));
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("Z_6 passes every ring axiom exhaustively") {
  const auto report = check_ring_axioms(*ProductRing::residues(6));
  CHECK(report.passed());
  for (const auto& r : report.results) {
    CHECK(r.exhaustive);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("Z_m group axioms for m = 2..8") {
  for (int m = 2; m <= 8; ++m) {
    CAPTURE(m);
    const auto report = check_axioms(*ProductRing::residues(m));
    CHECK(report.passed());
    CHECK(report.results.size() == 5);
  }
}

TEST_CASE("products and Z pass, Z by sampling") {
  CHECK(check_ring_axioms(*ProductRing::product({2, 3, 4})).passed());
  const auto z = check_ring_axioms(*ProductRing::integers());
  CHECK(z.passed());
  CHECK_FALSE(z.results.front().exhaustive);
  CHECK(check_axioms(*ProductRing::product({0, 5})).passed());
}

TEST_CASE("a broken operation table is caught with a witness") {
  // a*b = a - b mod 3: closed with identity 0 on the right only.
  std::vector<std::vector<std::size_t>> table = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  const auto bad = TableGroup::unverified(table, "minus");
  const auto report = check_axioms(*bad);
  CHECK_FALSE(report.passed());
  const auto* fail = report.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->axiom == "associativity");
  CHECK_FALSE(fail->witness.empty());
  CHECK_THROWS_AS(TableGroup::create(table, "minus"), InvalidStructure);
}

TEST_CASE("a valid table group: the Klein four-group") {
  std::vector<std::vector<std::size_t>> v4 = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const auto g = TableGroup::create(v4, "V4");
  CHECK(g->identity() == g->label(0));
  CHECK(g->inverse(g->label(3)) == g->label(3));
  CHECK(g->op(g->label(1), g->label(2)) == g->label(3));
  CHECK(check_axioms(*g).passed());
  CHECK_THROWS_AS(TableGroup::create({{0, 1}, {1, 2}}, "x"), InvalidStructure);
}

TEST_CASE("random_integer covers its range") {
  std::mt19937_64 rng(7);
  std::set<long long> seen;
  for (int i = 0; i < 500; ++i) {
    const Integer v = random_integer(rng, -3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    seen.insert(static_cast<long long>(v));
  }
  CHECK(seen.size() == 7);
  const Integer big("100000000000000000000000000000");
  const Integer w = random_integer(rng, -big, big);
  CHECK(w >= -big);
  CHECK(w <= big);
}

}
