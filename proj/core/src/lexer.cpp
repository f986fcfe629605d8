#include "alphacc/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace alphacc {

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet& java_keywords() {
  static const WordSet words = {
      "assert",   "break",      "case",   "catch",     "class",      "const",   "continue",
      "do",       "else",       "enum",   "extends",   "finally",    "for",     "goto",
      "if",       "implements", "import", "instanceof", "interface", "new",     "package",
      "return",   "super",      "switch", "this",      "throw",      "throws",  "try",
      "void",     "while"};
  return words;
}

const WordSet& java_modifiers() {
  static const WordSet words = {"abstract",  "default",  "final",        "native",    "private",
                                "protected", "public",   "static",       "strictfp",  "synchronized",
                                "transient", "volatile"};
  return words;
}

const WordSet& java_basic_types() {
  static const WordSet words = {"boolean", "byte", "char", "double", "float", "int", "long", "short"};
  return words;
}

const WordSet& c_keywords() {
  static const WordSet words = {
      "auto",     "break",     "case",          "const",   "continue", "default",   "do",
      "else",     "enum",      "extern",        "for",     "goto",     "if",        "inline",
      "register", "restrict",  "return",        "sizeof",  "static",   "struct",    "switch",
      "typedef",  "union",     "volatile",      "while",   "_Alignas", "_Alignof",  "_Atomic",
      "_Generic", "_Noreturn", "_Static_assert", "_Thread_local"};
  return words;
}

const WordSet& c_basic_types() {
  static const WordSet words = {"char",     "double", "float", "int",   "long",     "short",
                                "signed",   "unsigned", "void", "_Bool", "_Complex", "bool"};
  return words;
}

// Longest first so maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 41> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=",   "+=",  "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "<<", ">>", "=",  ">",  "<",
    "!",    "~",   "?",   ":",   "+",   "-",  "*",  "/",  "&",  "|",  "^",  "%",  "##"};

constexpr std::array<std::string_view, 10> kSeparators = {"(", ")", "{", "}", "[",
                                                          "]", ";", ",", ".", "@"};

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_char(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(unsigned char c) { return std::isxdigit(c) != 0; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ident_char(static_cast<unsigned char>(c)); });
}

bool is_operator(std::string_view s) {
  return std::find(kOperators.begin(), kOperators.end(), s) != kOperators.end() && s != "##";
}

bool is_separator(std::string_view s) {
  return std::find(kSeparators.begin(), kSeparators.end(), s) != kSeparators.end();
}

// Consumes [0-9_]* and returns how many digits (not underscores) were seen.
std::size_t eat_digits(std::string_view s, std::size_t& i, bool hex) {
  std::size_t digits = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (hex ? is_hex_digit(c) : is_digit(c)) {
      ++digits;
    } else if (c != '_') {
      break;
    }
    ++i;
  }
  return digits;
}

bool eat_suffix(std::string_view s, std::size_t& i, std::string_view allowed) {
  while (i < s.size() && allowed.find(s[i]) != std::string_view::npos) ++i;
  return i == s.size();
}

std::optional<TokenType> classify_number(std::string_view s) {
  std::size_t i = 0;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    i = 2;
    std::size_t mantissa = eat_digits(s, i, true);
    bool fractional = false;
    if (i < s.size() && s[i] == '.') {
      ++i;
      fractional = true;
      mantissa += eat_digits(s, i, true);
    }
    if (mantissa == 0) return std::nullopt;
    if (i < s.size() && (s[i] == 'p' || s[i] == 'P')) {
      ++i;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
      if (eat_digits(s, i, false) == 0) return std::nullopt;
      if (!eat_suffix(s, i, "fFdDlL")) return std::nullopt;
      return TokenType::HexFloatingPoint;
    }
    if (fractional) return std::nullopt;
    if (!eat_suffix(s, i, "lLuU")) return std::nullopt;
    return TokenType::HexInteger;
  }

  std::size_t int_digits = eat_digits(s, i, false);
  bool is_float = false;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    is_float = true;
    frac_digits = eat_digits(s, i, false);
  }
  if (int_digits + frac_digits == 0) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (eat_digits(s, i, false) == 0) return std::nullopt;
    is_float = true;
  }
  if (i < s.size() && std::string_view("fFdD").find(s[i]) != std::string_view::npos) {
    ++i;
    is_float = true;
    return i == s.size() ? std::optional(TokenType::DecimalFloatingPoint) : std::nullopt;
  }
  if (is_float) {
    return eat_suffix(s, i, "lL") ? std::optional(TokenType::DecimalFloatingPoint) : std::nullopt;
  }
  // Integers: "0" or a non-zero leading digit. Octal and binary forms fall through.
  if (s[0] == '0' && int_digits > 1) return std::nullopt;
  if (s[0] == '_') return std::nullopt;
  if (!eat_suffix(s, i, "lLuU")) return std::nullopt;
  return TokenType::DecimalInteger;
}

bool is_string_literal(std::string_view s, Language lang) {
  if (s.size() < 2) return false;
  std::size_t q = 0;
  if (lang == Language::CLike) {
    for (std::string_view prefix : {"u8", "u", "U", "L"}) {
      if (s.substr(0, prefix.size()) == prefix && s.size() > prefix.size() &&
          (s[prefix.size()] == '"' || s[prefix.size()] == '\'')) {
        q = prefix.size();
        break;
      }
    }
  }
  const char quote = s[q];
  return (quote == '"' || quote == '\'') && s.back() == quote && s.size() >= q + 2;
}

class Scanner {
 public:
  Scanner(std::string_view src, Language lang) : src_(src), lang_(lang) {}

  std::vector<Token> run() {
    while (pos_ < src_.size()) {
      const auto c = static_cast<unsigned char>(src_[pos_]);
      if (std::isspace(c)) {
        advance(1);
      } else if (starts_with("//")) {
        skip_line_comment();
      } else if (starts_with("/*")) {
        skip_block_comment();
      } else if (lang_ == Language::CLike && c == '\\' && next_is_newline(pos_ + 1)) {
        advance(1);
      } else if (c == '"' || c == '\'') {
        lex_quoted(pos_);
      } else if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        lex_number();
      } else if (is_ident_start(c)) {
        lex_word();
      } else if (c == '@' && lang_ == Language::JavaLike && pos_ + 1 < src_.size() &&
                 is_ident_start(static_cast<unsigned char>(src_[pos_ + 1]))) {
        const std::size_t start = pos_;
        std::size_t end = pos_ + 1;
        while (end < src_.size() && is_ident_char(static_cast<unsigned char>(src_[end]))) ++end;
        emit(start, end);
      } else if (c == '#' && lang_ == Language::CLike && at_line_start()) {
        lex_directive();
      } else {
        lex_punctuation();
      }
    }
    return std::move(tokens_);
  }

 private:
  bool starts_with(std::string_view p) const { return src_.substr(pos_, p.size()) == p; }

  bool next_is_newline(std::size_t i) const {
    if (i < src_.size() && src_[i] == '\n') return true;
    return i + 1 < src_.size() && src_[i] == '\r' && src_[i + 1] == '\n';
  }

  void advance(std::size_t n) {
    const std::size_t end = std::min(src_.size(), pos_ + n);
    line_ += static_cast<std::size_t>(std::count(src_.begin() + static_cast<std::ptrdiff_t>(pos_),
                                                 src_.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
    pos_ = end;
  }

  bool at_line_start() const { return tokens_.empty() || tokens_.back().line < line_; }

  void emit(std::size_t start, std::size_t end, std::string text = {}) {
    Token tok;
    tok.text = text.empty() ? std::string(src_.substr(start, end - start)) : std::move(text);
    tok.offset = start;
    tok.line = line_;
    tok.type = classify_token(tok.text, lang_);
    tokens_.push_back(std::move(tok));
    advance(end - pos_);
  }

  void skip_line_comment() {
    const std::size_t nl = src_.find('\n', pos_);
    advance(nl == std::string_view::npos ? src_.size() - pos_ : nl - pos_);
  }

  void skip_block_comment() {
    const std::size_t close = src_.find("*/", pos_ + 2);
    if (close == std::string_view::npos) throw LexError("unterminated block comment", pos_);
    advance(close + 2 - pos_);
  }

  void lex_quoted(std::size_t start) {
    // `start` may sit on a C string prefix; find the quote.
    std::size_t i = start;
    while (src_[i] != '"' && src_[i] != '\'') ++i;
    const char quote = src_[i];
    if (lang_ == Language::JavaLike && quote == '"' && src_.substr(i, 3) == "\"\"\"") {
      const std::size_t close = src_.find("\"\"\"", i + 3);
      if (close == std::string_view::npos) throw LexError("unterminated text block", start);
      emit(start, close + 3);
      return;
    }
    ++i;
    while (i < src_.size()) {
      const char c = src_[i];
      if (c == '\\') {
        i += 2;
        continue;
      }
      if (c == quote) break;
      if (c == '\n') break;
      ++i;
    }
    if (i >= src_.size() || src_[i] != quote) {
      throw LexError(quote == '"' ? "unterminated string literal" : "unterminated character literal", start);
    }
    emit(start, i + 1);
  }

  void lex_number() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    auto alnum = [&](std::size_t k) {
      return k < src_.size() && (is_ident_char(static_cast<unsigned char>(src_[k])));
    };
    const bool hex = src_[i] == '0' && i + 1 < src_.size() && (src_[i + 1] == 'x' || src_[i + 1] == 'X');
    while (i < src_.size()) {
      const char c = src_[i];
      if (alnum(i)) {
        const bool exponent = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
        ++i;
        if (exponent && i < src_.size() && (src_[i] == '+' || src_[i] == '-')) ++i;
      } else if (c == '.' && src_.substr(i, 3) != "..." && !(i + 1 < src_.size() && src_[i + 1] == '.')) {
        ++i;
      } else {
        break;
      }
    }
    emit(start, i);
  }

  void lex_word() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < src_.size() && is_ident_char(static_cast<unsigned char>(src_[end]))) ++end;
    const std::string_view word = src_.substr(start, end - start);
    if (lang_ == Language::CLike && end < src_.size() && (src_[end] == '"' || src_[end] == '\'') &&
        (word == "L" || word == "u" || word == "U" || word == "u8")) {
      lex_quoted(start);
      return;
    }
    emit(start, end);
  }

  void lex_directive() {
    const std::size_t start = pos_;
    std::size_t i = pos_ + 1;
    while (i < src_.size() && (src_[i] == ' ' || src_[i] == '\t')) ++i;
    std::size_t end = i;
    while (end < src_.size() && is_ident_char(static_cast<unsigned char>(src_[end]))) ++end;
    std::string text = "#" + std::string(src_.substr(i, end - i));
    if (end == i) end = pos_ + 1;
    emit(start, end, std::move(text));
  }

  void lex_punctuation() {
    for (std::string_view op : kOperators) {
      if (starts_with(op)) {
        emit(pos_, pos_ + op.size());
        return;
      }
    }
    emit(pos_, pos_ + 1);
  }

  std::string_view src_;
  Language lang_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::vector<Token> tokens_;
};

}  // namespace

std::optional<Language> parse_language(std::string_view name) {
  if (name == "java" || name == "java-like" || name == "Java") return Language::JavaLike;
  if (name == "c" || name == "c-like" || name == "C") return Language::CLike;
  return std::nullopt;
}

std::string_view language_name(Language lang) { return lang == Language::JavaLike ? "java" : "c"; }

namespace {
constexpr std::array<std::string_view, kTokenTypeCount> kTypeNames = {
    "Separator", "Identifier", "Operator", "Keyword",  "Modifier",
    "DecimalInteger", "BasicType", "String", "Boolean", "Null",
    "DecimalFloatingPoint", "Annotation", "HexInteger", "HexFloatingPoint", "OtherType"};
}  // namespace

std::string_view token_type_name(TokenType type) { return kTypeNames[static_cast<std::size_t>(type)]; }

std::optional<TokenType> token_type_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTypeNames.size(); ++i) {
    if (kTypeNames[i] == name) return static_cast<TokenType>(i);
  }
  return std::nullopt;
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

TokenType classify_token(std::string_view lexeme, Language lang) {
  if (lexeme.empty()) return TokenType::OtherType;
  if (is_string_literal(lexeme, lang)) return TokenType::String;

  const auto first = static_cast<unsigned char>(lexeme.front());
  if (first == '@' && lexeme.size() > 1) {
    return lang == Language::JavaLike && is_identifier(lexeme.substr(1)) ? TokenType::Annotation
                                                                       : TokenType::OtherType;
  }
  if (first == '#') return TokenType::OtherType;
  if (is_digit(first) || (first == '.' && lexeme.size() > 1 && is_digit(lexeme[1]))) {
    return classify_number(lexeme).value_or(TokenType::OtherType);
  }

  if (lexeme == "true" || lexeme == "false") return TokenType::Boolean;
  if (lang == Language::JavaLike) {
    if (lexeme == "null") return TokenType::Null;
    if (java_modifiers().contains(lexeme)) return TokenType::Modifier;
    if (java_basic_types().contains(lexeme)) return TokenType::BasicType;
    if (java_keywords().contains(lexeme)) return TokenType::Keyword;
  } else {
    if (lexeme == "NULL") return TokenType::Null;
    if (c_basic_types().contains(lexeme)) return TokenType::BasicType;
    if (c_keywords().contains(lexeme)) return TokenType::Keyword;
  }
  if (is_identifier(lexeme)) return TokenType::Identifier;
  if (is_separator(lexeme)) return TokenType::Separator;
  if (is_operator(lexeme)) return TokenType::Operator;
  return TokenType::OtherType;
}

TokenSequence tokenize(std::string_view source, Language lang) {
  TokenSequence seq;
  seq.tokens = Scanner(source, lang).run();
  return seq;
}

}  // namespace alphacc
