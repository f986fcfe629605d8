#pragma once

// Table-driven lexer for Java-like and C-like source text.
//
// Whitespace and comments are consumed and never emitted. String and
// character literals keep their quotes and become a single String token.
// In C-like text a '#' directive word ("#include", "#define") is fused into
// one OtherType token; the rest of the directive line is lexed normally.
// Java annotations ("@Override") are fused into one Annotation token.
//
// Operators use maximal munch, so ">>" and ">>>" are single tokens even in
// generic type arguments.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphacc/token.hpp"

namespace alphacc {

class LexError : public std::runtime_error {
 public:
  LexError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Throws LexError on an unterminated string, character or block comment.
TokenSequence tokenize(std::string_view source, Language lang);

/// Total: every lexeme maps to exactly one of the fifteen types.
TokenType classify_token(std::string_view lexeme, Language lang);

}  // namespace alphacc
