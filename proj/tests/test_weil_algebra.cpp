#include <doctest.h>

#include "weil/weil_algebra.hpp"

using namespace weil;

TEST_CASE("jet algebras") {
  for (std::size_t r = 1; r <= 3; ++r)
    for (unsigned k = 0; k <= 3; ++k) {
      const auto a = WeilAlgebra::jet(r, k);
      CHECK(a->dim() == binomial(r + k, k));
      CHECK(a->height() == k);
      CHECK(a->ideal_power_dim(k + 1) == 0);
      CHECK(a->ideal_power_dim(0) == a->dim());
    }
  const auto j = WeilAlgebra::jet(1, 2);
  CHECK(j->labels() == std::vector<std::string>{"1", "e1", "e1^2"});
  CHECK(j->name() == "jet(1,2)");
  CHECK(WeilAlgebra::jet(2, 2)->dim() == 6);  // oracle
}

TEST_CASE("the trivial algebra") {
  const auto r = WeilAlgebra::real();
  CHECK(r->dim() == 1);
  CHECK(r->height() == 0);
  CHECK(r->name() == "R");
  CHECK(r->is_trivial());
}

TEST_CASE("element arithmetic and parsing") {
  const auto a = WeilAlgebra::jet(1, 2);
  const auto e = WeilElement::parse(a, "e1");
  CHECK((e * e).to_string() == "e1^2");
  CHECK(e.pow(3).is_zero());
  CHECK(WeilElement::parse(a, "e1^3").is_zero());
  CHECK(WeilElement::parse(a, "1+2*e1").to_string() == "1+2*e1");
  CHECK(WeilElement::parse(a, "-1/2*e1").to_string() == "-1/2*e1");
  CHECK(WeilElement::parse(a, "0").to_string() == "0");
  CHECK(WeilElement::parse(a, "(1+e1)^2").to_string() == "1+2*e1+e1^2");
  CHECK(WeilElement::parse(a, "3 - e1").augmentation() == 3);
  CHECK_THROWS_AS(WeilElement::parse(a, "e2"), ParseError);
  CHECK_THROWS_AS(WeilElement::parse(a, "1+"), ParseError);
  // Round trip.
  const auto x = WeilElement::parse(a, "2/3-e1+5*e1^2");
  CHECK(WeilElement::parse(a, x.to_string()) == x);
  // Mixing algebras is an error.
  CHECK_THROWS_AS(e * WeilElement::one(WeilAlgebra::jet(1, 1)), MismatchError);
}

TEST_CASE("augmentation is multiplicative") {
  const auto a = WeilAlgebra::jet(2, 2);
  const auto x = WeilElement::parse(a, "2+e1-e2+e1*e2");
  const auto y = WeilElement::parse(a, "-3+e2^2");
  CHECK((x * y).augmentation() == x.augmentation() * y.augmentation());
}

TEST_CASE("monomial quotients") {
  const auto q = WeilAlgebra::monomial_quotient({"x", "y"}, std::vector<std::string>{"x^3", "x*y", "y^2"});
  CHECK(q->dim() == 4);
  // Oracle basis exponents {(0,0),(0,1),(1,0),(2,0)}, listed here in graded-lex order.
  CHECK(q->basis_exponents() == std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {2, 0}});
  CHECK(q->height() == 2);
  try {
    WeilAlgebra::monomial_quotient({"x", "y"}, std::vector<std::string>{"x^2"});
    FAIL("infinite quotient accepted");
  } catch (const ValidationError& e) {
    CHECK(e.witness() == "y");
  }
  CHECK(WeilAlgebra::monomial_quotient({"x", "y"}, std::vector<std::string>{"x^2"}, 2u)->dim() == 5);
  CHECK_THROWS_AS(WeilAlgebra::monomial_quotient({"x", "x"}, std::vector<std::string>{"x^2"}), ParseError);
  CHECK_THROWS_AS(WeilAlgebra::monomial_quotient({"x"}, std::vector<std::string>{"1"}), ValidationError);
}

TEST_CASE("table algebras") {
  const StructureTable dual = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  const auto d = WeilAlgebra::from_table({"1", "eps"}, dual, {1, 0});
  CHECK(d->dim() == 2);
  CHECK(d->height() == 1);
  CHECK(d->unit() == std::vector<Rational>{1, 0});
  CHECK(WeilElement::parse(d, "eps*eps").is_zero());

  // Unit not listed first is found by solving.
  const StructureTable swapped = {{{0, 0}, {1, 0}}, {{1, 0}, {0, 1}}};
  const auto s = WeilAlgebra::from_table({"eps", "u"}, swapped, {0, 1});
  CHECK(s->unit() == std::vector<Rational>{0, 1});

  // R x R: the maximal ideal contains an idempotent.
  const StructureTable rxr = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  const auto chk = WeilAlgebra::check_table({"e1", "e2"}, rxr, {1, 0});
  CHECK_FALSE(chk.ok);
  CHECK(chk.witness == "1*e2");
  CHECK_THROWS_AS(WeilAlgebra::from_table({"e1", "e2"}, rxr, {1, 0}), ValidationError);

  const StructureTable noncomm = {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}};
  CHECK_FALSE(WeilAlgebra::check_table({"1", "e"}, noncomm, {1, 0}).ok);
  CHECK_FALSE(WeilAlgebra::check_table({"1", "e"}, {{{1, 0}}}, {1, 0}).ok);
  CHECK_FALSE(WeilAlgebra::check_table({}, {}, {}).ok);
  CHECK_FALSE(WeilAlgebra::check_table({"1", "1"}, dual, {1, 0}).ok);
  CHECK_FALSE(WeilAlgebra::check_table({"1", "bad label"}, dual, {1, 0}).ok);
  // Augmentation that is not multiplicative.
  CHECK_FALSE(WeilAlgebra::check_table({"1", "eps"}, dual, {1, 1}).ok);

  // Raw-table round trip of a jet algebra.
  const auto j = WeilAlgebra::jet(2, 2);
  CHECK(WeilAlgebra::from_table(j->labels(), j->table(), j->augmentation())->same_as(*j));
}

TEST_CASE("algebra homomorphisms") {
  const auto j12 = WeilAlgebra::jet(1, 2), j11 = WeilAlgebra::jet(1, 1);
  const auto t = AlgebraHom::truncation(j12, j11);
  CHECK_FALSE(t.validate());
  CHECK(t(WeilElement::parse(j12, "1+e1+e1^2")).to_string() == "1+e1");
  const auto aug = AlgebraHom::augmentation(j12);
  CHECK_FALSE(aug.validate());
  CHECK(aug(WeilElement::parse(j12, "3+e1"))[0] == 3);
  CHECK_FALSE(AlgebraHom::identity(j12).validate());
  const AlgebraHom bad(j12, j12, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(bad.validate().has_value());
  CHECK_THROWS_AS(AlgebraHom(j12, j11, {{1, 0}}), MismatchError);
}
