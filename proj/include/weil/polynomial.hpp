#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "weil/monomial.hpp"
#include "weil/rational.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

inline Rational one_like(const Rational&) { return 1; }
inline WeilElement one_like(const WeilElement& z) { return WeilElement::one(z.algebra()); }
inline Rational zero_like(const Rational&) { return 0; }
inline WeilElement zero_like(const WeilElement& z) { return WeilElement::zero(z.algebra()); }

/// Sparse multivariate polynomial in nvars variables with coefficients in a
/// commutative ring C (Rational or WeilElement). Terms are kept in graded-lex
/// order and zero coefficients are never stored.
///
/// The polynomial carries a zero coefficient of its ring, so a zero APoly
/// still knows its algebra.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C, GradedLex>;

  Polynomial(std::size_t nvars, C zero) : nvars_(nvars), zero_(zero_like(zero)) {}

  static Polynomial constant(std::size_t nvars, const C& c) {
    Polynomial p(nvars, c);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Polynomial monomial(std::size_t nvars, Exponents e, const C& c) {
    Polynomial p(nvars, c);
    p.add_term(std::move(e), c);
    return p;
  }
  /// The coordinate function x_i (0-based) with unit coefficient.
  static Polynomial variable(std::size_t nvars, std::size_t i, const C& ring) {
    if (i >= nvars) throw MismatchError("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), one_like(ring));
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  const C& zero_coeff() const { return zero_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
  }

  C coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(Exponents e, const C& c) {
    if (e.size() != nvars_) throw MismatchError("monomial has wrong number of variables");
    if (weil::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (weil::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial out(nvars_, zero_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    require_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    require_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial& operator*=(const C& s) {
    if (weil::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    TermMap out;
    for (auto& [e, c] : terms_) {
      C v = c * s;
      if (!weil::is_zero(v)) out.emplace(e, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    Polynomial out(a.nvars_, a.zero_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned n) const {
    Polynomial result = constant(nvars_, one_like(zero_));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// Formal partial derivative in variable i (0-based).
  Polynomial derivative(std::size_t i) const {
    if (i >= nvars_) throw MismatchError("partial derivative: variable index out of range");
    Polynomial out(nvars_, zero_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      --d[i];
      out.add_term(std::move(d), c * Rational(e[i]));
    }
    return out;
  }

  /// Substitution homomorphism x_i -> point[i]; the value ring is C.
  C evaluate(std::span<const C> point) const {
    if (point.size() != nvars_) throw MismatchError("evaluation point has wrong arity");
    C total = zero_;
    // Cache powers per variable to avoid recomputing x_i^k for every term.
    std::vector<std::vector<C>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
      C term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one_like(zero_));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
        term *= pw[e[i]];
      }
      total += term;
    }
    return total;
  }

  /// Composition: x_i -> subs[i]; all substitutes share one arity and ring.
  Polynomial compose(std::span<const Polynomial> subs) const {
    if (subs.size() != nvars_) throw MismatchError("composition: wrong number of substitutes");
    if (subs.empty()) {
      Polynomial out(0, zero_);
      for (const auto& [e, c] : terms_) out.add_term(e, c);
      return out;
    }
    const std::size_t m = subs.front().nvars();
    Polynomial total(m, zero_);
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(m, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(m, one_like(zero_)));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
        term *= pw[e[i]];
      }
      total += term;
    }
    return total;
  }

  /// Applies f to every coefficient; zero images are dropped.
  template <class D, class F>
  Polynomial<D> map_coefficients(F&& f, const D& zero) const {
    Polynomial<D> out(nvars_, zero);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  void require_same(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw MismatchError("polynomials in different numbers of variables");
    if constexpr (std::is_same_v<C, WeilElement>) {
      if (!same_algebra(zero_.algebra(), rhs.zero_.algebra()))
        throw MismatchError("APoly coefficients in different algebras");
    }
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
  C zero_;
};

/// Polynomial over Q: the model of smooth functions on R^n.
using Poly = Polynomial<Rational>;
/// Polynomial with Weil algebra coefficients: the model of C^inf(M^A, A).
using APoly = Polynomial<WeilElement>;

inline Poly make_poly(std::size_t nvars) { return Poly(nvars, Rational(0)); }
inline APoly make_apoly(std::size_t nvars, const AlgebraPtr& a) {
  return APoly(nvars, WeilElement::zero(a));
}
inline const AlgebraPtr& algebra_of(const APoly& p) { return p.zero_coeff().algebra(); }

template <class C>
Polynomial<C> partial_derivative(const Polynomial<C>& p, std::size_t i) {
  return p.derivative(i);
}

/// f^A: coefficientwise inclusion R -> A.
APoly prolong_function(const Poly& f, const AlgebraPtr& a);

/// Real part of an APoly over the trivial algebra R.
Poly real_part(const APoly& p);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

/// Polynomial text grammar: terms `[+|-] coeff['*' var['^'int]]*`, parentheses
/// allowed for grouping. With default names, x/y/z alias x1/x2/x3 when n <= 3.
Poly parse_poly(std::string_view text, std::size_t nvars,
                const std::vector<std::string>& names = {});

/// APoly grammar: as for Poly, plus algebra labels as constants, e.g.
/// "(1+2*e1)*x1^2". Plain Poly text is accepted and prolonged.
APoly parse_apoly(std::string_view text, std::size_t nvars, const AlgebraPtr& a,
                  const std::vector<std::string>& names = {});

/// Canonical text, highest-degree terms first: "x1^2+2*x1*x2-1/2".
std::string to_string(const Poly& p, const std::vector<std::string>& names = {});
/// Canonical text with every coefficient in parentheses: "(1+2*e1)*x1^2+(3)".
std::string to_string(const APoly& p, const std::vector<std::string>& names = {});

}  // namespace weil
