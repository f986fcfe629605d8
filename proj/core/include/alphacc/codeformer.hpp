#pragma once

// Codeformer: stacked blocks of row attention with a shared map, column
// attention and a feed-forward layer, each followed by residual + LayerNorm.
//
// Row attention: per head, every row computes logits Q_r K_r^T / sqrt(d_h).
// The shared logit at (i, j) is the mean over the rows valid at both i and j.
// Row r then applies softmax over its own valid columns and mixes its own
// values with it.
//
// Column attention: the valid cells of a column attend among themselves.

#include <cstddef>
#include <vector>

#include "alphacc/tensor.hpp"

namespace alphacc {

template <class S>
struct AttentionParams {
  Matrix<S> wq, wk, wv, wo;  // d x d, head h uses columns [h*d_h, (h+1)*d_h)
};

template <class S>
struct BlockParams {
  AttentionParams<S> inner;
  Matrix<S> ln1_gain, ln1_bias;
  AttentionParams<S> inter;
  Matrix<S> ln2_gain, ln2_bias;
  Matrix<S> w1, b1;  // d x d_ff, 1 x d_ff
  Matrix<S> w2, b2;  // d_ff x d, 1 x d
  Matrix<S> ln3_gain, ln3_bias;
};

template <class S>
struct CodeformerParams {
  std::size_t heads = 4;
  std::vector<BlockParams<S>> blocks;
};

template <class S>
struct AttentionCache {
  Matrix<S> input, q, k, v, mixed;
  std::vector<Matrix<S>> probs;  // inner: heads * rows, inter: heads * columns
  Matrix<S> ln_xhat;
  ColumnVector<S> ln_inv_std;
};

template <class S>
struct FeedForwardCache {
  Matrix<S> input, pre, hidden;
  Matrix<S> ln_xhat;
  ColumnVector<S> ln_inv_std;
};

template <class S>
struct BlockCache {
  AttentionCache<S> inner, inter;
  FeedForwardCache<S> ffn;
};

template <class S>
Matrix<S> inner_attention_forward(const MsaLayout& layout, const Matrix<S>& x, const AttentionParams<S>& p,
                                  const Matrix<S>& gain, const Matrix<S>& bias, std::size_t heads,
                                  AttentionCache<S>* cache);
template <class S>
Matrix<S> inner_attention_backward(const MsaLayout& layout, const Matrix<S>& dy, const AttentionParams<S>& p,
                                   const Matrix<S>& gain, std::size_t heads, const AttentionCache<S>& cache,
                                   AttentionParams<S>& grad, Matrix<S>& dgain, Matrix<S>& dbias);

template <class S>
Matrix<S> inter_attention_forward(const MsaLayout& layout, const Matrix<S>& x, const AttentionParams<S>& p,
                                  const Matrix<S>& gain, const Matrix<S>& bias, std::size_t heads,
                                  AttentionCache<S>* cache);
template <class S>
Matrix<S> inter_attention_backward(const MsaLayout& layout, const Matrix<S>& dy, const AttentionParams<S>& p,
                                   const Matrix<S>& gain, std::size_t heads, const AttentionCache<S>& cache,
                                   AttentionParams<S>& grad, Matrix<S>& dgain, Matrix<S>& dbias);

template <class S>
Matrix<S> feed_forward_forward(const Matrix<S>& x, const BlockParams<S>& p, FeedForwardCache<S>* cache);
template <class S>
Matrix<S> feed_forward_backward(const Matrix<S>& dy, const BlockParams<S>& p, const FeedForwardCache<S>& cache,
                                BlockParams<S>& grad);

template <class S>
MsaTensor<S> inner_attention(const MsaTensor<S>& x, const BlockParams<S>& block, std::size_t heads);
template <class S>
MsaTensor<S> inter_attention(const MsaTensor<S>& x, const BlockParams<S>& block, std::size_t heads);

/// Runs every block in order. Caches are filled when `caches` is non-null.
template <class S>
MsaTensor<S> codeformer_forward(const MsaTensor<S>& x, const CodeformerParams<S>& params,
                                std::vector<BlockCache<S>>* caches = nullptr);

/// Backpropagates through all blocks; returns dL/dx and accumulates into `grad`.
template <class S>
Matrix<S> codeformer_backward(const MsaLayout& layout, const Matrix<S>& dy, const CodeformerParams<S>& params,
                              const std::vector<BlockCache<S>>& caches, CodeformerParams<S>& grad);

}  // namespace alphacc
