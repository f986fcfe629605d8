#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alphacc {

enum class Language : std::uint8_t { JavaLike, CLike };

/// Parses "java" / "c" (and a few aliases). Returns nullopt for anything else.
std::optional<Language> parse_language(std::string_view name);
std::string_view language_name(Language lang);

/// The fifteen lexical categories. The numeric value is the type id fed to
/// the type-embedding table, so the order is part of the checkpoint format.
enum class TokenType : std::uint8_t {
  Separator = 0,
  Identifier,
  Operator,
  Keyword,
  Modifier,
  DecimalInteger,
  BasicType,
  String,
  Boolean,
  Null,
  DecimalFloatingPoint,
  Annotation,
  HexInteger,
  HexFloatingPoint,
  OtherType,
};

inline constexpr std::size_t kTokenTypeCount = 15;

std::string_view token_type_name(TokenType type);
std::optional<TokenType> token_type_from_name(std::string_view name);

inline constexpr int token_type_id(TokenType type) { return static_cast<int>(type); }

struct Token {
  std::string text;
  TokenType type = TokenType::OtherType;
  std::size_t offset = 0;  // byte offset of the first character in the source
  std::size_t line = 1;

  std::size_t end() const { return offset + text.size(); }
  bool operator==(const Token& other) const = default;
};

struct TokenSequence {
  std::string function_id;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const TokenSequence& other) const = default;
};

/// Token texts only, in order.
std::vector<std::string> token_texts(const std::vector<Token>& tokens);

}  // namespace alphacc
