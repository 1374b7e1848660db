#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace weil {

/// Exponent vector of a monomial x1^a1 ... xn^an.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order: lower total degree first, then x1 > x2 > ...
/// Unit first, then x1, x2, ..., then x1^2, x1*x2, ...
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors in `nvars` variables of total degree exactly `degree`,
/// in graded-lex order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

/// All exponent vectors of total degree <= `max_degree`, graded-lex order.
std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned max_degree);

/// True when `a` divides `b` componentwise.
bool divides(const Exponents& a, const Exponents& b);

Exponents operator+(const Exponents& a, const Exponents& b);

/// "x1^2*x3" using the given names; "1" for the unit monomial.
std::string format_monomial(const Exponents& e, const std::vector<std::string>& names);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace weil
