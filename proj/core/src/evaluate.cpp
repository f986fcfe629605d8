#include "alphacc/evaluate.hpp"

#include <cmath>
#include <filesystem>
#include <memory>

#include "alphacc/error.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/trainer.hpp"
#include "jsonl.hpp"

namespace alphacc {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kFinetuneStream = 0x7f4a7c159e3779b9ULL;

detail::Json confusion_json(const Confusion& c) {
  return {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}};
}

Metrics score_and_measure(const ModelParams<float>& params, const SimilarityConfig& similarity, double tau,
                          MsaCache& cache, const ClonePairDataset& data, unsigned threads,
                          std::vector<double>* scores_out) {
  std::vector<double> scores = score_pairs(params, similarity, cache, data.functions, data.pairs, threads);
  const Polarity polarity = polarity_of(similarity.measure);
  std::vector<int> labels;
  std::vector<std::optional<CloneType>> types;
  auto predicted = std::make_unique<bool[]>(data.pairs.size());
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    labels.push_back(data.pairs[i].label);
    types.push_back(data.pairs[i].clone_type);
    predicted[i] = classify({scores[i], polarity}, tau);
  }
  Metrics m = compute_metrics(labels, std::span<const bool>(predicted.get(), data.pairs.size()), types);
  if (scores_out) *scores_out = std::move(scores);
  return m;
}

}  // namespace

EvalReport evaluate(const Checkpoint& ckpt, MsaCache& cache, const ClonePairDataset& data, std::optional<double> tau,
                    unsigned threads) {
  EvalReport report;
  report.tau = tau.value_or(ckpt.tau);
  report.n_pairs = data.pairs.size();
  report.metrics =
      score_and_measure(ckpt.params, ckpt.config.similarity, report.tau, cache, data, threads, &report.scores);
  return report;
}

std::string report_json(const EvalReport& report, const std::string& provenance_json) {
  detail::Json per_type = detail::Json::object();
  for (std::size_t t = 0; t < kCloneTypeCount; ++t) {
    const auto& c = report.metrics.per_type[t];
    if (!c) continue;
    per_type[std::string(clone_type_name(static_cast<CloneType>(t)))] = {
        {"precision", c->precision()}, {"recall", c->recall()}, {"f1", c->f1()}, {"counts", confusion_json(*c)}};
  }
  detail::Json out = {{"precision", report.metrics.precision},
                      {"recall", report.metrics.recall},
                      {"f1", report.metrics.f1},
                      {"per_type", per_type},
                      {"n_pairs", report.n_pairs},
                      {"tau", report.tau},
                      {"counts", confusion_json(report.metrics.counts)},
                      {"provenance", detail::Json::parse(provenance_json)}};
  return out.dump(2);
}

DatasetSplits load_splits(const fs::path& dir, Language lang) {
  DatasetSplits splits;
  splits.train = load_dataset(dir, Split::Train, lang);
  for (auto [split, out] : {std::pair{Split::Validation, &splits.validation}, std::pair{Split::Test, &splits.test}}) {
    const fs::path file = dir / (std::string(split_name(split)) + ".jsonl");
    out->functions = splits.train.functions;
    out->split = split;
    if (fs::exists(file)) {
      out->pairs = load_pairs(file);
      validate_pairs(out->functions, out->pairs);
    }
  }
  return splits;
}

std::vector<ClonePair> sample_pairs(const std::vector<ClonePair>& pairs, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw ConfigError("fraction must lie in [0, 1]");
  const auto n = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(pairs.size())));
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed ^ kFinetuneStream);
  rng.shuffle(order);
  order.resize(n);
  std::sort(order.begin(), order.end());
  std::vector<ClonePair> out;
  out.reserve(n);
  for (std::size_t i : order) out.push_back(pairs[i]);
  return out;
}

TransferReport transfer_protocol(const DatasetSplits& source, const DatasetSplits& target, double fraction,
                                 const TrainConfig& cfg) {
  const std::vector<ClonePair> finetune = sample_pairs(target.train.pairs, fraction, cfg.seed);
  const Vocabulary vocab = Vocabulary::build({&source.train.functions, &target.train.functions});

  const NGramIndex source_index = NGramIndex::build(source.train.functions, kDefaultNgram, kDefaultBuckets, cfg.threads);
  MsaCache source_cache(source.train.functions, source_index, vocab, cfg.msa_depth, cfg.msa_length);
  Checkpoint ckpt = train(source.train, source_cache, vocab, nullptr, cfg);

  const NGramIndex target_index = NGramIndex::build(target.train.functions, kDefaultNgram, kDefaultBuckets, cfg.threads);
  MsaCache target_cache(target.train.functions, target_index, vocab, cfg.msa_depth, cfg.msa_length);
  if (!finetune.empty()) {
    const ClonePairDataset slice{target.train.functions, finetune, Split::Train};
    train_epochs(ckpt.params, cfg, target_cache, slice);
    if (!ckpt.params.all_finite()) throw NumericalError("fine-tuning produced non-finite parameters");
  }
  if (!target.validation.pairs.empty()) {
    ckpt.tau = calibrate_checkpoint(ckpt, target_cache, target.validation, cfg.threads);
  }

  TransferReport report;
  report.tau = ckpt.tau;
  report.finetune_pairs = finetune.size();
  report.metrics = evaluate(ckpt, target_cache, target.test, std::nullopt, cfg.threads).metrics;
  return report;
}

}  // namespace alphacc
