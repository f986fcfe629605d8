#pragma once

// End-to-end training over labeled pairs and finite-difference gradient checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alphacc/checkpoint.hpp"
#include "alphacc/dataset.hpp"
#include "alphacc/pipeline.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/word2vec.hpp"

namespace alphacc {

/// Adaptive moment estimation with bias correction.
class Adam {
 public:
  Adam(const ModelShape& shape, double learning_rate, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

  void step(ModelParams<float>& params, const ModelParams<float>& grad, bool freeze_embeddings);
  std::uint64_t steps() const { return t_; }

 private:
  ModelParams<float> m_, v_;
  double lr_, beta1_, beta2_, eps_;
  std::uint64_t t_ = 0;
};

/// Seeded parameters whose token table is copied from `embeddings` when given.
/// Throws ConfigError when the table does not match the vocabulary or dim.
ModelParams<float> initial_params(const TrainConfig& cfg, const Vocabulary& vocab,
                                  const EmbeddingTable* embeddings);

/// Pair order for one epoch: the majority class once, the minority class
/// resampled to the same count, alternating positive and negative.
std::vector<std::size_t> balanced_order(const std::vector<ClonePair>& pairs, Rng& rng);

struct TrainProgress {
  std::size_t epoch = 0;
  std::size_t batch = 0;
  std::size_t batches = 0;
  double mean_loss = 0.0;
};

using ProgressFn = std::function<void(const TrainProgress&)>;

/// Runs cfg.epochs epochs of balanced mini-batch training in place.
/// Throws NumericalError (with the batch's pairs in the message) on a non-finite loss.
void train_epochs(ModelParams<float>& params, const TrainConfig& cfg, MsaCache& cache,
                  const ClonePairDataset& data, const ProgressFn& progress = {});

/// Initializes, trains, and calibrates tau on `validation` when given
/// (otherwise tau is cfg.similarity.threshold).
Checkpoint train(const ClonePairDataset& data, MsaCache& cache, const Vocabulary& vocab,
                 const EmbeddingTable* embeddings, const TrainConfig& cfg,
                 const ClonePairDataset* validation = nullptr, const ProgressFn& progress = {});

/// Threshold maximizing F1 on `validation` under the checkpoint's measure.
double calibrate_checkpoint(const Checkpoint& ckpt, MsaCache& cache, const ClonePairDataset& validation,
                            unsigned threads = 1);

struct GradProbe {
  std::string tensor;
  Eigen::Index index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_error = 0.0;
};

struct GradCheckReport {
  double loss = 0.0;
  double max_rel_error = 0.0;
  std::vector<GradProbe> probes;
};

/// Compares the analytic gradient of the pair loss with central differences
/// on `n_probes` scalars spread round-robin over every tensor. Within a tensor
/// the probe is drawn among entries with a nonzero analytic gradient when any
/// exist. Relative error is |a - f| / max(|a|, |f|, 1e-8).
GradCheckReport grad_check(const ModelParams<double>& params, const PairObjective& objective, const MsaInput& a,
                           const MsaInput& b, int label, std::size_t n_probes, std::uint64_t seed,
                           double step = 1e-5);

struct ToyProblem {
  ModelParams<double> params;
  MsaInput a, b;
  int label = 1;
};

/// Built-in toy model (d=8, L=12, R=3, B=1, H=2, d_ff=16) over synthetic
/// functions. The label is chosen so that the margin hinge is active.
ToyProblem make_toy_problem(std::uint64_t seed, const PairObjective& objective);

}  // namespace alphacc
