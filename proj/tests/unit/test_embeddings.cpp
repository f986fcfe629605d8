#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "alphacc/error.hpp"
#include "alphacc/lexer.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/vocab.hpp"
#include "alphacc/word2vec.hpp"

using namespace alphacc;

namespace {

FunctionStore store_of(const std::vector<std::string>& codes) {
  FunctionStore store(Language::JavaLike);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    StoredFunction fn;
    fn.id = "f" + std::to_string(i);
    fn.code = codes[i];
    fn.tokens = tokenize(codes[i], Language::JavaLike).tokens;
    store.add(std::move(fn));
  }
  return store;
}

double cos_rows(const EmbeddingTable& t, std::int32_t a, std::int32_t b) {
  const auto u = t.matrix.row(a).cast<double>();
  const auto v = t.matrix.row(b).cast<double>();
  return u.dot(v) / (u.norm() * v.norm());
}

}  // namespace

TEST_SUITE("embeddings") {
  TEST_CASE("vocabulary ids follow frequency after the reserved ids") {
    const FunctionStore store = store_of({"a a a b"});
    const Vocabulary v = Vocabulary::build(store);
    CHECK(v.size() == 4);
    CHECK(v.text(Vocabulary::kPad) == "<pad>");
    CHECK(v.id("a") == 2);
    CHECK(v.id("b") == 3);
    CHECK(v.frequency(2) == 3);
    CHECK(v.id("never") == Vocabulary::kUnk);

    const Vocabulary frequent = Vocabulary::build(store, 2);
    CHECK(frequent.id("a") == 2);
    CHECK(frequent.id("b") == Vocabulary::kUnk);
    CHECK(frequent.size() == 3);

    CHECK(Vocabulary::build(store) == v);
    CHECK(Vocabulary::build(store).digest() == v.digest());
  }

  TEST_CASE("ties break by text") {
    const Vocabulary v = Vocabulary::build(store_of({"zeta alpha mid alpha zeta"}));
    CHECK(v.texts() == std::vector<std::string>{"<pad>", "<unk>", "alpha", "zeta", "mid"});
  }

  TEST_CASE("lookup contract") {
    const FunctionStore store = store_of({"x y z"});
    const Vocabulary v = Vocabulary::build(store);
    const EmbeddingTable t = initial_embeddings(v.size(), 4, 3);
    const auto pad = lookup(v, t, "<pad>");
    CHECK(std::all_of(pad.begin(), pad.end(), [](float f) { return f == 0.0f; }));
    const auto unk = lookup(v, t, "missing");
    CHECK(std::equal(unk.begin(), unk.end(), t.matrix.row(Vocabulary::kUnk).data()));
    const auto y = lookup(v, t, "y");
    CHECK(std::equal(y.begin(), y.end(), t.matrix.row(v.id("y")).data()));
    CHECK(y.size() == 4);
  }

  TEST_CASE("zero epochs return the seeded initialization") {
    const FunctionStore store = store_of({"x y x y", "z w"});
    const Vocabulary v = Vocabulary::build(store);
    Word2VecConfig cfg;
    cfg.dim = 8;
    cfg.epochs = 0;
    cfg.seed = 5;
    CHECK(train_embeddings({&store}, v, cfg).matrix == initial_embeddings(v.size(), 8, 5).matrix);
    CHECK(initial_embeddings(v.size(), 8, 5).matrix != initial_embeddings(v.size(), 8, 6).matrix);
  }

  TEST_CASE("sgns gradient matches central differences") {
    Rng rng(9);
    const std::size_t d = 6;
    auto random_vec = [&] {
      std::vector<double> v(d);
      for (auto& x : v) x = rng.uniform(-0.8, 0.8);
      return v;
    };
    std::vector<double> c = random_vec(), o = random_vec();
    std::vector<std::vector<double>> negs = {random_vec(), random_vec(), random_vec()};
    std::vector<double> gc(d), go(d), scratch_c(d), scratch_o(d);
    std::vector<std::vector<double>> gn;
    sgns_loss(c, o, negs, gc, go, &gn);

    const double h = 1e-6;
    auto loss = [&] { return sgns_loss(c, o, negs, scratch_c, scratch_o, nullptr); };
    auto check = [&](double& x, double analytic) {
      const double saved = x;
      x = saved + h;
      const double up = loss();
      x = saved - h;
      const double down = loss();
      x = saved;
      const double numeric = (up - down) / (2 * h);
      CHECK(std::abs(numeric - analytic) / std::max({std::abs(numeric), std::abs(analytic), 1e-8}) < 1e-4);
    };
    for (std::size_t k = 0; k < d; ++k) {
      check(c[k], gc[k]);
      check(o[k], go[k]);
      for (std::size_t n = 0; n < negs.size(); ++n) check(negs[n][k], gn[n][k]);
    }
  }

  TEST_CASE("co-occurring tokens end up closer") {
    std::vector<std::string> codes;
    for (int i = 0; i < 30; ++i) {
      codes.push_back("x y x y x y x y");
      codes.push_back("z w z w z w z w");
      codes.push_back("u v u v u v u v");
    }
    const FunctionStore store = store_of(codes);
    const Vocabulary v = Vocabulary::build(store);
    int holds = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Word2VecConfig cfg;
      cfg.dim = 4;
      cfg.window = 2;
      cfg.negatives = 3;
      cfg.epochs = 5;
      cfg.seed = seed;
      const EmbeddingTable t = train_embeddings({&store}, v, cfg);
      if (cos_rows(t, v.id("x"), v.id("y")) > cos_rows(t, v.id("x"), v.id("z"))) ++holds;
    }
    CHECK(holds >= 19);
  }

  TEST_CASE("training is reproducible and keeps PAD zero") {
    const FunctionStore store = store_of({"int f(int a){ return a + 1; }", "int g(int b){ return b * 2; }"});
    const Vocabulary v = Vocabulary::build(store);
    Word2VecConfig cfg;
    cfg.dim = 8;
    cfg.epochs = 3;
    const EmbeddingTable a = train_embeddings({&store}, v, cfg);
    const EmbeddingTable b = train_embeddings({&store}, v, cfg);
    CHECK(a.matrix == b.matrix);
    CHECK(a.matrix.row(Vocabulary::kPad).isZero(0.0));
    CHECK(a.matrix != initial_embeddings(v.size(), 8, cfg.seed).matrix);
  }

  TEST_CASE("embedding file round trip") {
    const FunctionStore store = store_of({"p q r s"});
    const Vocabulary v = Vocabulary::build(store);
    const EmbeddingTable t = initial_embeddings(v.size(), 5, 2);
    const auto path = std::filesystem::temp_directory_path() / "alphacc_test.acce";
    save_embeddings(path, v, t, R"({"k":1})");
    const EmbeddingFile f = load_embeddings(path);
    std::filesystem::remove(path);
    CHECK(f.vocab == v);
    CHECK(f.table.matrix == t.matrix);
    CHECK(f.provenance == R"({"k":1})");
  }

  TEST_CASE("configuration errors") {
    const FunctionStore store = store_of({"a b"});
    Word2VecConfig cfg;
    cfg.dim = 0;
    CHECK_THROWS_AS(train_embeddings({&store}, Vocabulary::build(store), cfg), ConfigError);
  }
}
