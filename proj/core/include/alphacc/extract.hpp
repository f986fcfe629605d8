#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphacc/token.hpp"

namespace alphacc {

/// Tokens of context kept on each side of an extracted function.
inline constexpr std::size_t kDefaultContextTokens = 64;

struct SourceFunction {
  std::string id;
  Language language = Language::JavaLike;
  std::string text;  // signature and body, verbatim
  std::string file_path;
  std::size_t start_line = 0;
  std::size_t end_line = 0;
  std::vector<Token> context_before;  // file order
  std::vector<Token> context_after;   // file order
};

/// Raised when a file cannot be split into functions (unbalanced braces).
class ExtractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brace-balance function finder. A header is an identifier followed by a
/// balanced parameter list, an optional Java `throws` clause and `{`; the
/// function ends at the matching `}`. Anything nested (local classes,
/// lambdas, anonymous classes) stays inside the enclosing function.
///
/// Function ids are "<file_path>#<ordinal>". Throws LexError or ExtractError.
std::vector<SourceFunction> extract_functions(std::string_view file_text, Language lang,
                                              std::string_view file_path = "<memory>",
                                              std::size_t context_tokens = kDefaultContextTokens);

}  // namespace alphacc
