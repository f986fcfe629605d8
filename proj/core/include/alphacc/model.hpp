#pragma once

// The full encoder: embedding fusion, enhancer, Codeformer and pooling,
// plus the pair loss with its gradient w.r.t. every parameter.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "alphacc/codeformer.hpp"
#include "alphacc/enhancer.hpp"
#include "alphacc/losses.hpp"
#include "alphacc/scorer.hpp"

namespace alphacc {

struct ModelShape {
  std::size_t vocab = 2;
  std::size_t dim = 256;
  std::size_t length = 256;  // L, rows of the positional table
  std::size_t heads = 4;
  std::size_t blocks = 2;
  std::size_t ffn = 512;
  EnhancerMode mode = EnhancerMode::Full;

  bool operator==(const ModelShape&) const = default;
};

template <class S>
struct ModelParams {
  ModelShape shape;
  Matrix<S> token_embed;  // V x d
  EnhancerParams<S> enhancer;
  CodeformerParams<S> codeformer;
  Matrix<S> bce;  // 1 x 2: weight, bias

  /// Every tensor with a stable dotted name, in serialization order.
  std::vector<std::pair<std::string, Matrix<S>*>> tensors();
  std::vector<std::pair<std::string, const Matrix<S>*>> tensors() const;

  std::size_t parameter_count() const;
  bool all_finite() const;
};

/// Zero-filled parameters of the given shape.
template <class S>
ModelParams<S> zero_params(const ModelShape& shape);

/// Seeded initialization: matrices and type/positional/token embeddings from
/// uniform(-1/sqrt(d), 1/sqrt(d)), biases zero, LayerNorm gains one, PAD row
/// zero, BCE weight 4 and bias 0.
ModelParams<float> init_params(const ModelShape& shape, std::uint64_t seed);

template <class To, class From>
ModelParams<To> cast_params(const ModelParams<From>& p);

template <class S>
struct EncoderCache {
  TypeProjectCache<S> project;
  TypeAttentionCache<S> attend;
  std::vector<BlockCache<S>> blocks;
  PooledFragment<S> pooled;
};

template <class S>
MsaTensor<S> encode_msa(const ModelParams<S>& params, const MsaInput& input);

/// Encodes and pools one MSA. Fills `cache` for a later backward pass.
template <class S>
PooledFragment<S> encode(const ModelParams<S>& params, const MsaInput& input, EncoderCache<S>* cache = nullptr);

/// Accumulates parameter gradients from dL/d(pooled vectors).
template <class S>
void encode_backward(const ModelParams<S>& params, const MsaInput& input, const EncoderCache<S>& cache,
                     const Matrix<S>& dpooled, ModelParams<S>& grad, bool freeze_embeddings);

struct PairObjective {
  LossKind loss = LossKind::Margin;
  SimilarityConfig similarity;
  double gamma = 0.5;
  bool freeze_embeddings = false;
};

/// The score the losses see: cosine enters as the distance 1 - cos.
template <class S>
S loss_distance(Measure m, S value) {
  return m == Measure::Cosine ? S(1) - value : value;
}

template <class S>
struct PairResult {
  S loss = 0;
  S score = 0;  // raw measure value
};

/// Loss of one labeled pair. Gradients are added to `grad` when non-null.
template <class S>
PairResult<S> pair_loss(const ModelParams<S>& params, const PairObjective& objective, const MsaInput& a,
                        const MsaInput& b, int label, ModelParams<S>* grad);

}  // namespace alphacc
