#include <doctest.h>

#include <map>

#include "weil/poisson.hpp"

using namespace weil;

TEST_CASE("brackets of the shipped structures") {
  const auto s = PoissonStructure::symplectic(2);
  CHECK(to_string(bracket(s, parse_poly("x^2", 2), parse_poly("y", 2))) == "2*x1");
  CHECK(s.homogeneity() == Homogeneity::constant);
  const auto so3 = PoissonStructure::so3();
  CHECK(so3.homogeneity() == Homogeneity::linear);
  CHECK(to_string(bracket(so3, parse_poly("x", 3), parse_poly("y", 3))) == "x3");
  const Poly c = parse_poly("x^2+y^2+z^2", 3);
  for (const char* v : {"x", "y", "z"}) CHECK(bracket(so3, c, parse_poly(v, 3)).is_zero());  // oracle
  CHECK(PoissonStructure::zero(2).max_degree() == 0);
  CHECK_THROWS_AS(PoissonStructure::symplectic(3), ValidationError);
}

TEST_CASE("Jacobi check") {
  CHECK(jacobi_check(PoissonStructure::so3()).ok);
  std::map<std::pair<std::size_t, std::size_t>, Poly> bad{{{1, 2}, parse_poly("y", 3)}, {{1, 3}, parse_poly("x", 3)}};
  CHECK_THROWS_AS(PoissonStructure::from_entries(3, bad), ValidationError);
  const auto pi = PoissonStructure::from_entries(3, bad, PoissonStructure::Jacobi::waive);
  const auto res = jacobi_check(pi);
  CHECK_FALSE(res.ok);
  CHECK(res.indices == std::array<std::size_t, 3>{1, 2, 3});
  REQUIRE(res.residual);
  CHECK(*res.residual == parse_poly("-y", 3));  // oracle
  std::map<std::pair<std::size_t, std::size_t>, Poly> diag{{{1, 1}, parse_poly("1", 2)}};
  CHECK_THROWS(PoissonStructure::from_entries(2, diag));
  std::vector<std::vector<Poly>> nonskew{{parse_poly("0", 2), parse_poly("1", 2)}, {parse_poly("1", 2), parse_poly("0", 2)}};
  CHECK_THROWS_AS(PoissonStructure::from_matrix(nonskew), ValidationError);
}

TEST_CASE("homogeneity classes") {
  std::map<std::pair<std::size_t, std::size_t>, Poly> inh{{{1, 2}, parse_poly("1+x^2", 2)}};
  const auto pi = PoissonStructure::from_entries(2, inh);
  CHECK(pi.homogeneity() == Homogeneity::inhomogeneous);
  CHECK(pi.max_degree() == 2);
  std::map<std::pair<std::size_t, std::size_t>, Poly> quad{{{1, 2}, parse_poly("x*y", 2)}};
  CHECK(PoissonStructure::from_entries(2, quad).homogeneity() == Homogeneity::inhomogeneous);
}

TEST_CASE("lifted bracket") {
  const auto s = PoissonStructure::symplectic(2);
  const auto d = WeilAlgebra::jet(1, 1);
  const APoly x2 = prolong_function(parse_poly("x^2", 2), d), y = prolong_function(parse_poly("y", 2), d);
  CHECK(to_string(bracket_A(s, x2, y)) == "(2)*x1");
  const APoly phi = parse_apoly("(1+e1)*x*y+(e1)*x^2", 3, d), psi = parse_apoly("(e1)*z+y^2", 3, d);
  const auto so3 = PoissonStructure::so3();
  CHECK(bracket_A(so3, phi, psi) == bracket_A_closed_form(so3, phi, psi));
  CHECK(bracket_A(so3, phi, psi) == -bracket_A(so3, psi, phi));
  // tau of a prolonged function is the prolonged Hamiltonian field.
  const Poly f = parse_poly("x*z", 3);
  CHECK(tau(so3, prolong_function(f, d)) == prolong_vector_field(ad(so3, f), d));
  CHECK(tilde_apply(prolong_ad_tilde(so3, f, d), psi) == tilde_apply(prolong_vector_field(ad(so3, f), d), psi));
}
