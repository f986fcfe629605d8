#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <limits>
#include <memory>
#include <set>

#include "alphacc/dataset.hpp"
#include "alphacc/error.hpp"
#include "alphacc/evaluate.hpp"
#include "alphacc/lexer.hpp"
#include "alphacc/metrics.hpp"
#include "alphacc/ngram_index.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/synthetic.hpp"
#include "alphacc/trainer.hpp"

using namespace alphacc;
namespace fs = std::filesystem;

namespace {

Metrics metrics_of(const std::vector<int>& labels, const std::vector<char>& predicted,
                   const std::vector<std::optional<CloneType>>& types = {}) {
  const auto flags = std::make_unique<bool[]>(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) flags[i] = predicted[i] != 0;
  return compute_metrics(labels, std::span<const bool>(flags.get(), predicted.size()), types);
}

// Exhaustive oracle: F1 at every midpoint between sorted scores, plus both ends.
double best_f1_by_sweep(const std::vector<double>& scores, const std::vector<int>& labels, Polarity pol) {
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> taus = {sorted.front() - 1, sorted.back() + 1};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) taus.push_back((sorted[i] + sorted[i + 1]) / 2);
  double best = 0;
  for (double tau : taus) {
    std::vector<char> pred;
    for (double s : scores) pred.push_back(classify({s, pol}, tau));
    best = std::max(best, metrics_of(labels, pred).f1);
  }
  return best;
}


}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("metric formulas") {
    const Metrics perfect = metrics_of({1, -1, 1}, {1, 0, 1});
    CHECK(perfect.precision == 1.0);
    CHECK(perfect.recall == 1.0);
    CHECK(perfect.f1 == 1.0);

    std::vector<int> labels;
    std::vector<char> pred;
    for (int i = 0; i < 8; ++i) labels.push_back(1), pred.push_back(1);
    for (int i = 0; i < 2; ++i) labels.push_back(-1), pred.push_back(1);
    for (int i = 0; i < 4; ++i) labels.push_back(1), pred.push_back(0);
    for (int i = 0; i < 5; ++i) labels.push_back(-1), pred.push_back(0);
    const Metrics m = metrics_of(labels, pred);
    CHECK(m.precision == 0.8);
    CHECK(m.recall == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(m.f1 == doctest::Approx(8.0 / 11).epsilon(1e-15));
    CHECK(m.counts.tn == 5);

    const Metrics none = metrics_of({1, 1, -1}, {0, 0, 0});
    CHECK(none.precision == 0.0);
    CHECK(none.recall == 0.0);
    CHECK(none.f1 == 0.0);
    CHECK_THROWS_AS(metrics_of({1}, {1, 0}), ConfigError);
  }

  TEST_CASE("per-type metrics share the negatives") {
    const Metrics m = metrics_of({1, 1, 1, -1, -1}, {1, 0, 1, 1, 0},
                                 {CloneType::T1, CloneType::T4, CloneType::T4, std::nullopt, std::nullopt});
    REQUIRE(m.type_f1(CloneType::T1).has_value());
    CHECK_FALSE(m.type_f1(CloneType::T2).has_value());
    const Confusion t1 = *m.per_type[0];
    CHECK(t1.tp == 1);
    CHECK(t1.fp == 1);
    CHECK(t1.tn == 1);
    CHECK(*m.type_f1(CloneType::T1) == doctest::Approx(2.0 / 3));
    const Confusion t4 = *m.per_type[4];
    CHECK(t4.tp == 1);
    CHECK(t4.fn == 1);
    CHECK(*m.type_f1(CloneType::T4) == 0.5);
  }

  TEST_CASE("calibration on separable clusters") {
    const std::vector<double> scores = {0.2, 0.2, 0.2, 1.8, 1.8, 1.8};
    const std::vector<int> labels = {1, 1, 1, -1, -1, -1};
    const Calibration c = calibrate_threshold(scores, labels, Polarity::DistanceLike);
    CHECK(c.tau == 1.0);
    CHECK(c.f1 == 1.0);
    CHECK(best_f1_by_sweep(scores, labels, Polarity::DistanceLike) == 1.0);

    const std::vector<double> sim = {0.9, 0.8, 0.1, 0.3};
    const Calibration s = calibrate_threshold(sim, std::vector<int>{1, 1, -1, -1}, Polarity::SimilarityLike);
    CHECK(s.tau == doctest::Approx(0.55));
    CHECK(s.f1 == 1.0);
  }

  TEST_CASE("calibration edge cases") {
    const Calibration tied = calibrate_threshold(std::vector<double>{0.5, 0.5, 0.5, 0.5}, std::vector<int>{1, 1, -1, -1},
                                                 Polarity::DistanceLike);
    CHECK(tied.f1 == doctest::Approx(2.0 / 3));
    CHECK(tied.tau == std::nextafter(0.5, 1.0));

    const Calibration single = calibrate_threshold(std::vector<double>{0.7}, std::vector<int>{1}, Polarity::DistanceLike);
    CHECK(single.f1 == 1.0);
    CHECK(single.tau > 0.7);
    CHECK(single.tau == std::nextafter(0.7, 1.0));
    CHECK_THROWS_AS(calibrate_threshold(std::vector<double>{}, std::vector<int>{}, Polarity::DistanceLike), DataError);
  }

  TEST_CASE("calibration matches the exhaustive sweep") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> scores;
      std::vector<int> labels;
      const std::size_t n = 2 + rng.below(40);
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(rng.below(2) ? 1 : -1);
        scores.push_back(static_cast<double>(rng.below(12)) / 6.0 + (labels.back() > 0 ? 0.0 : 0.3));
      }
      for (Polarity pol : {Polarity::DistanceLike, Polarity::SimilarityLike}) {
        const Calibration c = calibrate_threshold(scores, labels, pol);
        CHECK(c.f1 == doctest::Approx(best_f1_by_sweep(scores, labels, pol)).epsilon(1e-15));
        std::vector<char> pred;
        for (double s : scores) pred.push_back(classify({s, pol}, c.tau));
        CHECK(metrics_of(labels, pred).f1 == doctest::Approx(c.f1).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("synthetic pair combinatorics") {
    SynthConfig one;
    one.problems = 5;
    one.variants = 1;
    const SyntheticBenchmark b1 = generate_synthetic(one);
    CHECK(b1.functions.size() == 5);
    CHECK(b1.dataset(Split::Train).positives() == 0);

    SynthConfig two;
    two.problems = 2;
    two.variants = 2;
    const SyntheticBenchmark b2 = generate_synthetic(two);
    const ClonePairDataset d = b2.dataset(Split::Train);
    CHECK(d.positives() == 2);
    CHECK(d.negatives() == 2);
    for (const auto& p : d.pairs) {
      const bool same = synthetic_problem(p.id1) == synthetic_problem(p.id2);
      CHECK(same == (p.label > 0));
    }
    CHECK_NOTHROW(validate_pairs(d.functions, d.pairs));
  }

  TEST_CASE("synthetic variants and splits") {
    SynthConfig cfg;
    cfg.problems = 40;
    cfg.test_fraction = 0.2;
    cfg.validation_fraction = 0.1;
    const SyntheticBenchmark b = generate_synthetic(cfg);
    CHECK(b.functions.size() == 240);
    CHECK(b.digest() == generate_synthetic(cfg).digest());
    SynthConfig other = cfg;
    other.seed = 8;
    CHECK(b.digest() != generate_synthetic(other).digest());

    std::set<std::string> train_problems, test_problems, validation_problems;
    for (const auto& p : b.train) train_problems.insert(synthetic_problem(p.id1));
    for (const auto& p : b.test) test_problems.insert(synthetic_problem(p.id1)), test_problems.insert(synthetic_problem(p.id2));
    for (const auto& p : b.validation) validation_problems.insert(synthetic_problem(p.id1));
    CHECK(test_problems.size() == 8);
    for (const auto& t : test_problems) CHECK_FALSE(train_problems.contains(t));
    for (const auto& t : validation_problems) CHECK_FALSE(train_problems.contains(t));
    CHECK(b.test.size() == 8 * 15 * 2);

    std::array<std::size_t, kCloneTypeCount> per_type{};
    for (const auto& p : b.test) {
      if (p.label > 0) {
        REQUIRE(p.clone_type.has_value());
        ++per_type[static_cast<std::size_t>(*p.clone_type)];
      } else {
        CHECK_FALSE(p.clone_type.has_value());
      }
    }
    for (std::size_t t = 0; t < kCloneTypeCount; ++t) CHECK(per_type[t] > 0);

    // level-1 variants differ from the original only in layout and comments
    for (std::size_t p = 0; p < 40; ++p) {
      char id[32];
      std::snprintf(id, sizeof id, "p%04zu", p);
      const auto& v0 = b.functions.at(std::string(id) + ".v0");
      const auto& v1 = b.functions.at(std::string(id) + ".v1");
      CHECK(v0.code != v1.code);
      CHECK(token_texts(v0.tokens) == token_texts(v1.tokens));
      const auto& v2 = b.functions.at(std::string(id) + ".v2");
      CHECK(token_texts(v0.tokens) != token_texts(v2.tokens));
    }
  }

  TEST_CASE("synthetic digest is frozen") {
    SynthConfig cfg;
    cfg.test_fraction = 0.2;
    cfg.validation_fraction = 0.1;
    const SyntheticBenchmark b = generate_synthetic(cfg);
    CHECK(b.functions.size() == 1200);
    CHECK(b.train.size() == 4200);
    CHECK(b.validation.size() == 600);
    CHECK(b.test.size() == 1200);
    CHECK(b.digest() == 0x203c2cab4f4e4883ULL);
  }

  TEST_CASE("fine-tune sampling") {
    std::vector<ClonePair> pairs;
    for (int i = 0; i < 50; ++i) pairs.push_back({"a" + std::to_string(i), "b", i % 2 ? 1 : -1, std::nullopt});
    CHECK(sample_pairs(pairs, 0.0, 1).empty());
    CHECK(sample_pairs(pairs, 1.0, 1) == pairs);
    const auto tenth = sample_pairs(pairs, 0.1, 1);
    CHECK(tenth.size() == 5);
    CHECK(tenth == sample_pairs(pairs, 0.1, 1));
    CHECK_THROWS_AS(sample_pairs(pairs, 1.5, 1), ConfigError);
    CHECK_THROWS_AS(sample_pairs(pairs, -0.1, 1), ConfigError);
  }

  TEST_CASE("evaluation report") {
    SynthConfig scfg;
    scfg.problems = 8;
    scfg.variants = 3;
    scfg.test_fraction = 0.25;
    const SyntheticBenchmark b = generate_synthetic(scfg);
    const NGramIndex index = NGramIndex::build(b.functions);
    const Vocabulary vocab = Vocabulary::build(b.functions);
    TrainConfig cfg;
    cfg.dim = 8;
    cfg.heads = 2;
    cfg.blocks = 1;
    cfg.ffn = 8;
    cfg.msa_depth = 2;
    cfg.msa_length = 200;
    cfg.epochs = 0;
    MsaCache cache(b.functions, index, vocab, cfg.msa_depth, cfg.msa_length);
    const Checkpoint ckpt = train(b.dataset(Split::Train), cache, vocab, nullptr, cfg);
    const ClonePairDataset test = b.dataset(Split::Test);
    const EvalReport r = evaluate(ckpt, cache, test);
    CHECK(r.n_pairs == test.pairs.size());
    CHECK(r.tau == ckpt.tau);
    CHECK(r.scores.size() == test.pairs.size());
    const EvalReport forced = evaluate(ckpt, cache, test, 10.0);
    CHECK(forced.metrics.recall == 1.0);
    CHECK(forced.scores == r.scores);

    const auto json = nlohmann::json::parse(report_json(r, R"({"tool":"alphacc"})"));
    for (const char* key : {"precision", "recall", "f1", "per_type", "n_pairs", "tau", "counts", "provenance"}) {
      CHECK(json.contains(key));
    }
    CHECK(json["n_pairs"] == test.pairs.size());
    CHECK(json["provenance"]["tool"] == "alphacc");
    CHECK(json["per_type"].contains("T1"));
  }

  TEST_CASE("splits from a directory") {
    const fs::path dir = fs::temp_directory_path() / "alphacc_test_splits";
    fs::remove_all(dir);
    fs::create_directories(dir);
    SynthConfig scfg;
    scfg.problems = 6;
    scfg.variants = 2;
    scfg.test_fraction = 0.5;
    const SyntheticBenchmark b = generate_synthetic(scfg);
    write_functions(dir / "functions.jsonl", b.functions);
    write_pairs(dir / "train.jsonl", b.train);
    write_pairs(dir / "test.jsonl", b.test);
    const DatasetSplits s = load_splits(dir);
    CHECK(s.train.pairs == b.train);
    CHECK(s.test.pairs == b.test);
    CHECK(s.validation.pairs.empty());
    CHECK(s.train.functions.digest() == b.functions.digest());
    fs::remove_all(dir);
  }
}
