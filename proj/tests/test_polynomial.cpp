#include <doctest.h>

#include <vector>

#include "weil/polynomial.hpp"

using namespace weil;

TEST_CASE("poly parsing and canonical printing") {
  const Poly p = parse_poly("x1^2 + 2*x1*x2 - 1/2", 2);
  CHECK(to_string(p) == "2*x1*x2+x1^2-1/2");
  CHECK(parse_poly(to_string(p), 2) == p);
  CHECK(parse_poly("x*y + y^2", 2) == parse_poly("x1*x2+x2^2", 2));
  CHECK(parse_poly("(x+1)^2", 1) == parse_poly("x^2+2*x+1", 1));
  CHECK_THROWS_AS(parse_poly("2x", 1), ParseError);
  CHECK(to_string(parse_poly("0", 3)) == "0");
  CHECK(parse_poly("a*b", 2, {"a", "b"}) == parse_poly("x1*x2", 2));
  CHECK_THROWS_AS(parse_poly("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("z", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("x^", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x", 1, {"a", "b"}), MismatchError);
}

TEST_CASE("poly arithmetic") {
  const Poly x = Poly::variable(2, 0, Rational(0)), y = Poly::variable(2, 1, Rational(0));
  CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
  CHECK(make_poly(2).degree() == -1);
  CHECK((x * y * y).degree() == 3);
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(x + make_poly(3), MismatchError);
  CHECK_THROWS_AS(Poly::variable(2, 2, Rational(0)), MismatchError);
}

TEST_CASE("derivatives, evaluation and composition") {
  const Poly f = parse_poly("x^3*y - 2*y^2", 2);
  CHECK(f.derivative(0) == parse_poly("3*x^2*y", 2));
  CHECK(partial_derivative(f, 1) == parse_poly("x^3-4*y", 2));
  const std::vector<Rational> pt{2, -1};
  CHECK(f.evaluate(pt) == Rational(-10));
  const std::vector<Poly> subs{parse_poly("x+y", 2), parse_poly("x", 2)};
  CHECK(parse_poly("x*y", 2).compose(subs) == parse_poly("x^2+x*y", 2));
  CHECK_THROWS_AS(f.derivative(2), MismatchError);
}

TEST_CASE("A-coefficient polynomials") {
  const auto a = WeilAlgebra::jet(1, 1);
  const APoly p = parse_apoly("(1+2*e1)*x^2 + e1", 1, a);
  CHECK(to_string(p) == "(1+2*e1)*x1^2+(e1)");
  CHECK(parse_apoly(to_string(p), 1, a) == p);
  CHECK(to_string(parse_apoly("x^2", 2, a)) == "(1)*x1^2");
  CHECK(algebra_of(p) == a);
  CHECK(prolong_function(parse_poly("x^2+3", 1), a) == parse_apoly("x^2+3", 1, a));
  // Prolongation commutes with partial derivatives.
  const Poly f = parse_poly("x^2*y+y", 2);
  CHECK(prolong_function(f, a).derivative(0) == prolong_function(f.derivative(0), a));
  CHECK(real_part(prolong_function(f, WeilAlgebra::real())) == f);
  CHECK(to_string(make_apoly(2, a)) == "0");
  CHECK_THROWS_AS(parse_apoly("e2*x", 1, a), ParseError);
  CHECK_THROWS_AS(p + make_apoly(1, WeilAlgebra::jet(1, 2)), MismatchError);
}
