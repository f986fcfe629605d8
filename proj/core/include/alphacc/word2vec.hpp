#pragma once

// Skip-gram with negative sampling over function token sequences.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "alphacc/corpus.hpp"
#include "alphacc/vocab.hpp"

namespace alphacc {

using FloatMatrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct EmbeddingTable {
  FloatMatrix matrix;  // V x d, row 0 (PAD) is all zero

  std::size_t vocab_size() const { return static_cast<std::size_t>(matrix.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(matrix.cols()); }
};

struct Word2VecConfig {
  std::size_t dim = 256;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double start_lr = 0.025;
  double end_lr = 0.0001;
  std::uint64_t seed = 1;
  /// More than one thread applies lock-free racy updates and is not reproducible.
  unsigned threads = 1;
};

/// Seeded initialization: uniform(-0.5/d, 0.5/d) input rows, PAD row zero.
EmbeddingTable initial_embeddings(std::size_t vocab_size, std::size_t dim, std::uint64_t seed);

EmbeddingTable train_embeddings(const std::vector<const FunctionStore*>& stores, const Vocabulary& vocab,
                                const Word2VecConfig& cfg);

/// Row for `text`: UNK row when unknown, zero row for PAD.
std::span<const float> lookup(const Vocabulary& vocab, const EmbeddingTable& table, std::string_view text);

/// Loss of one (center, context, negatives) triple and its gradient:
///   -log s(u_o . v_c) - sum_k log s(-u_k . v_c)
/// Gradients are written into the grad_* arguments (same shapes as inputs).
double sgns_loss(std::span<const double> center, std::span<const double> context,
                 const std::vector<std::vector<double>>& negatives, std::span<double> grad_center,
                 std::span<double> grad_context, std::vector<std::vector<double>>* grad_negatives);

struct EmbeddingFile {
  Vocabulary vocab;
  EmbeddingTable table;
  std::string provenance = "{}";
};

void save_embeddings(const std::filesystem::path& path, const Vocabulary& vocab, const EmbeddingTable& table,
                     const std::string& provenance_json = "{}");
EmbeddingFile load_embeddings(const std::filesystem::path& path);

}  // namespace alphacc
