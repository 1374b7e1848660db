#pragma once

// Tokenizer shared by the element, polynomial and relation grammars.

#include <string>
#include <string_view>
#include <vector>

#include "weil/rational.hpp"

namespace weil::detail {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view input);

class TokenStream {
 public:
  explicit TokenStream(std::string_view input) : source_(input), toks_(tokenize(input)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k, const char* what);
  std::size_t position() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }
  [[noreturn]] void fail(const std::string& msg) const;

  /// Reads "p" or "p/q" (unsigned) starting at a number token.
  Rational read_unsigned_rational();
  /// Reads '^' int if present, else 1.
  unsigned read_power();

 private:
  std::string source_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace weil::detail
