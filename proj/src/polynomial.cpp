#include "weil/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "lexer.hpp"

namespace weil {

namespace {

using detail::Tok;
using detail::TokenStream;

std::vector<std::string> resolve_names(std::size_t nvars, const std::vector<std::string>& names) {
  if (names.empty()) return default_names(nvars);
  if (names.size() != nvars) throw MismatchError("variable name list has wrong length");
  return names;
}

std::optional<std::size_t> variable_index(const std::string& ident,
                                          const std::vector<std::string>& names, bool aliases) {
  const auto it = std::find(names.begin(), names.end(), ident);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  if (aliases && ident.size() == 1) {
    const std::size_t k = static_cast<std::size_t>(ident[0] == 'x' ? 0 : ident[0] == 'y' ? 1 : ident[0] == 'z' ? 2 : 99);
    if (k < names.size()) return k;
  }
  return std::nullopt;
}

// Recursive descent over polynomials in ring C. `atom` turns an identifier
// that is not a variable into a constant, or fails.
template <class C>
class PolyParser {
 public:
  using P = Polynomial<C>;
  using Atom = std::function<std::optional<C>(const std::string&)>;

  PolyParser(std::string_view text, std::size_t nvars, std::vector<std::string> names, bool aliases,
             C zero, Atom atom)
      : ts_(text), nvars_(nvars), names_(std::move(names)), aliases_(aliases),
        zero_(std::move(zero)), atom_(std::move(atom)) {}

  P parse() {
    if (ts_.peek().kind == Tok::end) ts_.fail("empty polynomial");
    P out = sum();
    if (ts_.peek().kind != Tok::end) ts_.fail("unexpected trailing input");
    return out;
  }

 private:
  P sum() {
    P total(nvars_, zero_);
    bool first = true;
    while (true) {
      bool negative = false;
      if (ts_.accept(Tok::minus)) {
        negative = true;
      } else if (!ts_.accept(Tok::plus) && !first) {
        break;
      }
      P term = factor();
      while (ts_.accept(Tok::star)) term = term * factor();
      if (negative) term = -term;
      total += term;
      first = false;
    }
    return total;
  }

  P factor() {
    P base(nvars_, zero_);
    const auto& t = ts_.peek();
    if (t.kind == Tok::number) {
      base = P::constant(nvars_, one_like(zero_) * ts_.read_unsigned_rational());
    } else if (t.kind == Tok::lparen) {
      ts_.next();
      base = sum();
      ts_.expect(Tok::rparen, "')'");
    } else if (t.kind == Tok::ident) {
      const std::string name = ts_.next().text;
      if (auto i = variable_index(name, names_, aliases_)) {
        base = P::variable(nvars_, *i, zero_);
      } else if (auto c = atom_(name)) {
        base = P::constant(nvars_, *c);
      } else {
        ts_.fail("unknown variable '" + name + "'");
      }
    } else {
      ts_.fail("expected number, variable or '('");
    }
    const unsigned p = ts_.read_power();
    return p == 1 ? base : base.pow(p);
  }

  TokenStream ts_;
  std::size_t nvars_;
  std::vector<std::string> names_;
  bool aliases_;
  C zero_;
  Atom atom_;
};

std::string rational_term(const Rational& c, const std::string& mono, bool first) {
  std::string out;
  const Rational mag = abs(c);
  if (sgn(c) < 0)
    out += "-";
  else if (!first)
    out += "+";
  if (mono == "1") return out + to_string(mag);
  if (mag != 1) out += to_string(mag) + "*";
  return out + mono;
}

}  // namespace

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

APoly prolong_function(const Poly& f, const AlgebraPtr& a) {
  const WeilElement one = WeilElement::one(a);
  return f.map_coefficients([&](const Rational& c) { return one * c; }, WeilElement::zero(a));
}

Poly real_part(const APoly& p) {
  if (!algebra_of(p)->is_trivial()) throw MismatchError("real_part needs an APoly over R");
  return p.map_coefficients([](const WeilElement& c) { return c.augmentation(); }, Rational(0));
}

Poly parse_poly(std::string_view text, std::size_t nvars, const std::vector<std::string>& names) {
  PolyParser<Rational> parser(text, nvars, resolve_names(nvars, names), names.empty(), Rational(0),
                              [](const std::string&) { return std::optional<Rational>{}; });
  return parser.parse();
}

APoly parse_apoly(std::string_view text, std::size_t nvars, const AlgebraPtr& a,
                  const std::vector<std::string>& names) {
  PolyParser<WeilElement> parser(
      text, nvars, resolve_names(nvars, names), names.empty(), WeilElement::zero(a),
      [&a](const std::string& ident) -> std::optional<WeilElement> {
        try {
          return WeilElement::parse(a, ident);
        } catch (const ParseError&) {
          return std::nullopt;
        }
      });
  return parser.parse();
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  const auto n = resolve_names(p.nvars(), names);
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out += rational_term(it->second, format_monomial(it->first, n), out.empty());
  return out.empty() ? "0" : out;
}

std::string to_string(const APoly& p, const std::vector<std::string>& names) {
  const auto n = resolve_names(p.nvars(), names);
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += "+";
    out += "(" + it->second.to_string() + ")";
    const std::string mono = format_monomial(it->first, n);
    if (mono != "1") out += "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace weil
