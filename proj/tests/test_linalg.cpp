#include <doctest.h>

#include "weil/linalg.hpp"
#include "weil/monomial.hpp"
#include "weil/rational.hpp"

using namespace weil;

namespace {

Matrix make(std::vector<std::vector<Rational>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(to_string(parse_rational("-3/9")) == "-1/3");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("monomial helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 3) == 0);
  CHECK(monomials_of_degree(2, 2).size() == 3);
  CHECK(monomials_up_to(3, 2).size() == 10);
  // Graded lex: unit first, then x1 before x2.
  const auto m = monomials_up_to(2, 1);
  CHECK(m[0] == Exponents{0, 0});
  CHECK(m[1] == Exponents{1, 0});
  CHECK(m[2] == Exponents{0, 1});
  CHECK(divides({1, 0}, {2, 1}));
  CHECK_FALSE(divides({0, 2}, {2, 1}));
  CHECK(format_monomial({2, 1}, {"x", "y"}) == "x^2*y");
  CHECK(format_monomial({0, 0}, {"x", "y"}) == "1");
}

TEST_CASE("Bareiss rank") {
  CHECK(rank_bareiss(Matrix(0, 4)) == 0);
  CHECK(rank_bareiss(Matrix(3, 3)) == 0);
  CHECK(rank_bareiss(make({{1, 0}, {0, 1}})) == 2);
  CHECK(rank_bareiss(make({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(rank_bareiss(make({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}})) == 1);
  CHECK(rank_bareiss(make({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 2}})) == 2);
}

TEST_CASE("rref and canonical kernel") {
  const Matrix m = make({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RowEchelon e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{-1, -1, 1});
  CHECK((m * from_columns(k, 3)).is_zero());
  // rank + nullity
  CHECK(rank_bareiss(m) + k.size() == m.cols());
  // Kernel of the empty map is everything.
  CHECK(kernel_basis(Matrix(0, 2)).size() == 2);
}

TEST_CASE("span basis and permutations") {
  const auto b = span_basis({{1, 1, 0}, {2, 2, 0}, {0, 0, 1}}, 3);
  CHECK(b.size() == 2);
  CHECK(span_basis({}, 3).empty());
  const Matrix m = make({{1, 2}, {3, 4}});
  CHECK(m.permute_columns({1, 0}) == make({{2, 1}, {4, 3}}));
  CHECK(m.permute_rows({1, 0}) == make({{3, 4}, {1, 2}}));
  CHECK(m.transpose() == make({{1, 3}, {2, 4}}));
  CHECK(rank_bareiss(m.permute_columns({1, 0})) == rank_bareiss(m));
}
