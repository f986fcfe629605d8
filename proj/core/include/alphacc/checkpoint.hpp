#pragma once

// Training configuration and the persisted model.
//
// File layout (little-endian): "ACCM", version, d, L, R, H, B, loss,
// measure, tau, then the remaining configuration, the vocabulary, named
// tensor blocks (name, rows, cols, row-major f32) and a provenance string.

#include <cstdint>
#include <filesystem>
#include <string>

#include "alphacc/losses.hpp"
#include "alphacc/model.hpp"
#include "alphacc/vocab.hpp"

namespace alphacc {

struct TrainConfig {
  double gamma = 0.5;
  double learning_rate = 1e-4;
  std::size_t epochs = 1;
  std::size_t batch_size = 32;
  std::uint64_t seed = 1;
  LossKind loss = LossKind::Margin;
  SimilarityConfig similarity;
  std::size_t msa_depth = 5;     // R
  std::size_t msa_length = 256;  // L
  std::size_t dim = 256;
  std::size_t heads = 4;
  std::size_t blocks = 2;
  std::size_t ffn = 512;
  EnhancerMode mode = EnhancerMode::Full;
  bool freeze_embeddings = false;
  unsigned threads = 1;

  ModelShape shape(std::size_t vocab_size) const {
    return {vocab_size, dim, msa_length, heads, blocks, ffn, mode};
  }
  PairObjective objective() const { return {loss, similarity, gamma, freeze_embeddings}; }
  /// Throws ConfigError on values outside their domain.
  void validate() const;

  bool operator==(const TrainConfig&) const = default;
};

struct Checkpoint {
  ModelParams<float> params;
  Vocabulary vocab;
  TrainConfig config;
  double tau = 1.0;
  std::string provenance = "{}";
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace alphacc
