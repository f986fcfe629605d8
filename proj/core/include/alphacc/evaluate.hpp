#pragma once

// Scoring a labeled dataset with a checkpoint, and the cross-dataset
// transfer protocol (train on a source, fine-tune on a slice of the target).

#include <optional>
#include <string>
#include <vector>

#include "alphacc/checkpoint.hpp"
#include "alphacc/dataset.hpp"
#include "alphacc/metrics.hpp"
#include "alphacc/pipeline.hpp"

namespace alphacc {

struct EvalReport {
  Metrics metrics;
  double tau = 1.0;
  std::size_t n_pairs = 0;
  std::vector<double> scores;  // raw measure value per pair, dataset order
};

/// Classifies every pair with `tau`, or the checkpoint's calibrated tau when unset.
EvalReport evaluate(const Checkpoint& ckpt, MsaCache& cache, const ClonePairDataset& data,
                    std::optional<double> tau = std::nullopt, unsigned threads = 1);

/// {"precision","recall","f1","per_type":{...},"n_pairs","tau","counts":{...}}
std::string report_json(const EvalReport& report, const std::string& provenance_json = "{}");

struct DatasetSplits {
  ClonePairDataset train, validation, test;
};

/// Reads dir/functions.jsonl and the three split files.
DatasetSplits load_splits(const std::filesystem::path& dir, Language lang = Language::JavaLike);

struct TransferReport {
  Metrics metrics;
  double tau = 1.0;
  std::size_t finetune_pairs = 0;
};

/// Trains on source.train, fine-tunes on a seeded `fraction` of target.train,
/// recalibrates tau on target.validation (if it has pairs) and evaluates on
/// target.test. Each side retrieves only from its own functions. Throws
/// ConfigError when fraction is outside [0, 1].
TransferReport transfer_protocol(const DatasetSplits& source, const DatasetSplits& target, double fraction,
                                 const TrainConfig& cfg);

/// Seeded subset of round(fraction * n) pairs, kept in their original order.
std::vector<ClonePair> sample_pairs(const std::vector<ClonePair>& pairs, double fraction, std::uint64_t seed);

}  // namespace alphacc
