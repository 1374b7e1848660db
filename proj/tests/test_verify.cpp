#include <doctest.h>

#include <vector>

#include "weil/verify.hpp"

using namespace weil;

TEST_CASE("random source is deterministic") {
  RandomSource a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const auto x = a.rational();
    CHECK(x == b.rational());
    if (x != c.rational()) differs = true;
  }
  CHECK(differs);
  RandomSource r(1);
  for (int i = 0; i < 200; ++i) {
    const long v = r.between(-2, 3);
    CHECK(v >= -2);
    CHECK(v <= 3);
    CHECK(r.nonzero_rational() != 0);
  }
  const auto p = r.poly(3, 2, 4);
  CHECK(p.nvars() == 3);
  CHECK(p.degree() <= 2);
}

TEST_CASE("random skew callables are alternating") {
  RandomSource rs(3);
  const auto c = random_skew_callable(rs, 2, 2);
  const Poly f = parse_poly("x^2+y", 2), g = parse_poly("x*y", 2);
  const std::vector<Poly> fg{f, g}, gf{g, f}, ff{f, f};
  CHECK(c(fg) == -c(gf));
  CHECK(c(ff).is_zero());
}

TEST_CASE("minimize_inputs drops unneeded terms") {
  const auto fails = [](const std::vector<Poly>& in) { return in[0].coeff({1, 0}) != 0; };
  const auto out = minimize_inputs({parse_poly("x+y^2+3", 2)}, fails);
  CHECK(to_string(out[0]) == "x1");
}

TEST_CASE("individual checks pass with small counts") {
  CHECK(check_jet_axioms(1, 10).passed);
  CHECK(check_table_algebras().passed);
  CHECK(check_prolong_homomorphism(1, 10, 5).passed);
  CHECK(check_tilde_extension(1, 10).passed);
  CHECK(check_prolonged_vector_fields(1, 5).passed);
  CHECK(check_shipped_jacobi().passed);
  CHECK(check_tau_identities(1, 10).passed);
  CHECK(check_lifted_bracket(1, 10, 5).passed);
  CHECK(check_chain_map(1, 5).passed);
  CHECK(check_closed_iff_closed(1, 3).passed);
  CHECK(check_cohomologous_lift(1, 5).passed);
  CHECK(check_center(1).passed);
  CHECK(check_h1_symplectic().passed);
  CHECK(check_restriction_of_scalars().passed);
  CHECK(check_composites_vanish(2).passed);
  CHECK(check_permutation_invariance(1).passed);
}

TEST_CASE("the printed sign variant breaks nilpotency at p = 0") {
  const auto good = check_nilpotency(1, 5);
  CHECK(good.passed);
  CHECK(good.cases > 0);
  const auto bad = check_nilpotency(1, 5, SignConvention::printed);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness.find("p=0") != std::string::npos);
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 6);
  const auto w = run_suite("weil", 9);
  CHECK(w.passed());
  CHECK(w.seed == 9);
  CHECK_FALSE(w.checks.empty());
  CHECK_THROWS_AS(run_suite("nope", 1), ParseError);
  SuiteReport r;
  r.checks.emplace_back("x");
  CHECK(r.passed());
  r.checks.back().fail("first");
  r.checks.back().fail("second");
  CHECK_FALSE(r.passed());
  CHECK(r.checks.back().witness == "first");
}

TEST_CASE("printed polynomials re-parse to equal values") {
  RandomSource rs(11);
  for (const auto& a : standard_algebras())
    for (int t = 0; t < 50; ++t) {
      const Poly p = rs.poly(3, 3, 5);
      CHECK(parse_poly(to_string(p), 3) == p);
      const APoly q = rs.apoly(3, a, 3, 5);
      CHECK(parse_apoly(to_string(q), 3, a) == q);
      const WeilElement e = rs.element(a);
      CHECK(WeilElement::parse(a, e.to_string()) == e);
    }
}
