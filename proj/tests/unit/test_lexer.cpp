#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "alphacc/lexer.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/synthetic.hpp"

using namespace alphacc;

namespace {

std::vector<std::string> texts(std::string_view src, Language lang = Language::JavaLike) {
  return token_texts(tokenize(src, lang).tokens);
}

std::vector<TokenType> types(const std::vector<Token>& tokens) {
  std::vector<TokenType> out;
  for (const auto& t : tokens) out.push_back(t.type);
  return out;
}

// Re-renders a token stream with random layout and comments between tokens.
std::string reformat(const std::vector<Token>& tokens, Rng& rng) {
  static const char* gaps[] = {" ", "  ", "\n", "\t", "\n\n    ", " /* note */ ", "// line comment\n",
                               "\n/** doc\n * more\n */\n", "/*x*/"};
  auto glued = [](const Token& a, const Token& b) {
    const bool a_sep = a.type == TokenType::Separator && a.text != ".";
    const bool b_sep = b.type == TokenType::Separator && b.text != ".";
    return (a_sep || b_sep) && a.text != "@";
  };
  std::string out = rng.below(2) ? "\n  " : "";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += tokens[i].text;
    if (i + 1 == tokens.size()) break;
    if (glued(tokens[i], tokens[i + 1]) && rng.below(3) == 0) continue;
    const std::string gap = gaps[rng.below(std::size(gaps))];
    // "/" followed by a comment opener would read as a different comment
    if (tokens[i].text.back() == '/' && gap.front() == '/') out += ' ';
    out += gap;
  }
  if (rng.below(2)) out += "\n// trailing\n";
  return out;
}

}  // namespace

TEST_SUITE("lexer") {
  TEST_CASE("for-loop header tokenizes to 14 tokens") {
    const std::vector<std::string> expected = {"for", "(", "int", "a", "=", "0", ";",
                                               "a",   "<", "N",   ";", "a", "++", ")"};
    const auto seq = tokenize("for(int a = 0; a < N; a++)", Language::JavaLike);
    CHECK(token_texts(seq.tokens) == expected);
    CHECK(types(seq.tokens) ==
          std::vector<TokenType>{TokenType::Keyword, TokenType::Separator, TokenType::BasicType,
                                 TokenType::Identifier, TokenType::Operator, TokenType::DecimalInteger,
                                 TokenType::Separator, TokenType::Identifier, TokenType::Operator,
                                 TokenType::Identifier, TokenType::Separator, TokenType::Identifier,
                                 TokenType::Operator, TokenType::Separator});
  }

  TEST_CASE("empty input") {
    CHECK(tokenize("", Language::JavaLike).empty());
    CHECK(tokenize("  \n// only a comment\n/* and another */", Language::CLike).empty());
  }

  TEST_CASE("annotation is one token") {
    const auto seq = tokenize("@Override public int f(){return 0;}", Language::JavaLike);
    REQUIRE(seq.size() == 11);
    CHECK(seq.tokens[0].text == "@Override");
    CHECK(seq.tokens[0].type == classify_token("@Override", Language::JavaLike));
    CHECK(seq.tokens[0].type == TokenType::Annotation);
    CHECK(seq.tokens[1].type == TokenType::Modifier);
  }

  TEST_CASE("classify_token") {
    CHECK(classify_token("for", Language::JavaLike) == TokenType::Keyword);
    CHECK(classify_token("0", Language::JavaLike) == TokenType::DecimalInteger);
    CHECK(classify_token("0x1F", Language::CLike) == TokenType::HexInteger);
    CHECK(classify_token("0x1.8p3", Language::JavaLike) == TokenType::HexFloatingPoint);
    CHECK(classify_token("1.5e-3f", Language::JavaLike) == TokenType::DecimalFloatingPoint);
    CHECK(classify_token(".5", Language::CLike) == TokenType::DecimalFloatingPoint);
    CHECK(classify_token("10L", Language::JavaLike) == TokenType::DecimalInteger);
    CHECK(classify_token("true", Language::CLike) == TokenType::Boolean);
    CHECK(classify_token("null", Language::JavaLike) == TokenType::Null);
    CHECK(classify_token("NULL", Language::CLike) == TokenType::Null);
    CHECK(classify_token("null", Language::CLike) == TokenType::Identifier);
    CHECK(classify_token("static", Language::JavaLike) == TokenType::Modifier);
    CHECK(classify_token("static", Language::CLike) == TokenType::Keyword);
    CHECK(classify_token("unsigned", Language::CLike) == TokenType::BasicType);
    CHECK(classify_token("\"a b\"", Language::JavaLike) == TokenType::String);
    CHECK(classify_token("'x'", Language::CLike) == TokenType::String);
    CHECK(classify_token("@Inject", Language::CLike) == TokenType::OtherType);
    CHECK(classify_token("#include", Language::CLike) == TokenType::OtherType);
    CHECK(classify_token(">>>=", Language::JavaLike) == TokenType::Operator);
    CHECK(classify_token(";", Language::JavaLike) == TokenType::Separator);
  }

  TEST_CASE("maximal munch operators") {
    CHECK(texts("a>>>=b") == std::vector<std::string>{"a", ">>>=", "b"});
    CHECK(texts("x->y") == std::vector<std::string>{"x", "->", "y"});
    CHECK(texts("i+++j") == std::vector<std::string>{"i", "++", "+", "j"});
  }

  TEST_CASE("strings keep whitespace and escapes") {
    CHECK(texts(R"(s = "a  b\"c";)") == std::vector<std::string>{"s", "=", R"("a  b\"c")", ";"});
    CHECK(texts(R"(c = '\'';)") == std::vector<std::string>{"c", "=", R"('\'')", ";"});
  }

  TEST_CASE("C preprocessor and comments") {
    const auto t = texts("#include <stdio.h>\nint x; /* c */ // d\n", Language::CLike);
    CHECK(t.back() == ";");
    CHECK(std::find(t.begin(), t.end(), "int") != t.end());
  }

  TEST_CASE("offsets and lines") {
    const auto seq = tokenize("int\n  x = 1;", Language::JavaLike);
    REQUIRE(seq.size() == 5);
    CHECK(seq.tokens[1].offset == 6);
    CHECK(seq.tokens[1].line == 2);
    CHECK(seq.tokens[4].end() == 12);
  }

  TEST_CASE("unterminated literals are lexical errors") {
    CHECK_THROWS_AS(tokenize("s = \"open", Language::JavaLike), LexError);
    CHECK_THROWS_AS(tokenize("c = 'x", Language::CLike), LexError);
    CHECK_THROWS_AS(tokenize("int x; /* never closed", Language::JavaLike), LexError);
    try {
      tokenize("ab \"cd", Language::JavaLike);
    } catch (const LexError& e) {
      CHECK(e.offset() == 3);
    }
  }

  TEST_CASE("determinism") {
    const std::string src = "public static long f(int[] a) { return a.length * 0x10L; }";
    CHECK(tokenize(src, Language::JavaLike) == tokenize(src, Language::JavaLike));
  }

  TEST_CASE("reformat invariance on 200 functions") {
    SynthConfig cfg;
    cfg.problems = 40;
    cfg.variants = 5;
    const SyntheticBenchmark bench = generate_synthetic(cfg);
    REQUIRE(bench.functions.size() == 200);
    Rng rng(2024);
    for (const auto& [id, fn] : bench.functions) {
      const std::string mutated = reformat(fn.tokens, rng);
      const auto again = tokenize(mutated, Language::JavaLike).tokens;
      INFO(id);
      REQUIRE(token_texts(again) == token_texts(fn.tokens));
      REQUIRE(types(again) == types(fn.tokens));
    }
  }

  TEST_CASE("agrees with a reference Java lexer on 100 functions") {
    std::ifstream in(ALPHACC_TEST_DATA "/javalang_tokens.jsonl");
    REQUIRE(in);
    std::string line;
    std::size_t checked = 0;
    while (std::getline(in, line)) {
      const auto obj = nlohmann::json::parse(line);
      const auto seq = tokenize(obj["code"].get<std::string>(), Language::JavaLike);
      const auto& ref = obj["tokens"];
      INFO(obj["id"].get<std::string>());
      REQUIRE(seq.size() == ref.size());
      for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq.tokens[i].text == ref[i][0].get<std::string>());
        CHECK(token_type_name(seq.tokens[i].type) == ref[i][1].get<std::string>());
      }
      ++checked;
    }
    CHECK(checked == 100);
  }
}
