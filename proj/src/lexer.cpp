#include "lexer.hpp"

#include <algorithm>
#include <cctype>

namespace weil::detail {

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    const char ch = input[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
      out.push_back({Tok::number, std::string(input.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_'))
        ++j;
      out.push_back({Tok::ident, std::string(input.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '/': k = Tok::slash; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, ch) + "' at offset " +
                         std::to_string(i) + " in '" + std::string(input) + "'");
    }
    out.push_back({k, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Tok::end, "", input.size()});
  return out;
}

Token TokenStream::expect(Tok k, const char* what) {
  if (peek().kind != k) fail(std::string("expected ") + what);
  return next();
}

void TokenStream::fail(const std::string& msg) const {
  throw ParseError(msg + " at offset " + std::to_string(peek().pos) + " in '" + source_ + "'");
}

Rational TokenStream::read_unsigned_rational() {
  const Token num = expect(Tok::number, "number");
  std::string text = num.text;
  if (peek().kind == Tok::slash) {
    next();
    text += "/" + expect(Tok::number, "denominator").text;
  }
  return parse_rational(text);
}

unsigned TokenStream::read_power() {
  if (!accept(Tok::caret)) return 1;
  const Token num = expect(Tok::number, "exponent");
  if (num.text.size() > 6) fail("exponent too large");
  return static_cast<unsigned>(std::stoul(num.text));
}

}  // namespace weil::detail
