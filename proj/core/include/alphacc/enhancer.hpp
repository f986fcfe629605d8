#pragma once

// Token semantic enhancer: fuses token, type and column embeddings, projects
// every cell through the projection of its token type, then lets each cell
// attend over the per-row mean vectors of the token types present in its row.
//
// Projections act on row vectors: y = x * W.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "alphacc/msa.hpp"
#include "alphacc/tensor.hpp"
#include "alphacc/token.hpp"
#include "alphacc/vocab.hpp"

namespace alphacc {

enum class EnhancerMode : std::uint8_t { Full, AttentionOnly, Off };

std::string_view enhancer_mode_name(EnhancerMode mode);
std::optional<EnhancerMode> parse_enhancer_mode(std::string_view name);

/// Token and type ids of the valid cells of an MSA, cropped to its active width.
struct MsaInput {
  MsaLayout layout;
  std::vector<std::int32_t> token_ids;
  std::vector<std::uint8_t> type_ids;
};

MsaInput make_msa_input(const CodeMSA& msa, const Vocabulary& vocab);

template <class S>
struct EnhancerParams {
  Matrix<S> type_embed;                                // 15 x d
  Matrix<S> pos_embed;                                 // L x d
  std::array<Matrix<S>, kTokenTypeCount> type_proj;    // d x d each
  Matrix<S> type_bias;                                 // 15 x d
  Matrix<S> wq, wk, wv, wo;                            // d x d
  Matrix<S> ln_gain, ln_bias;                          // 1 x d
};

/// x = token_embed[token] + type_embed[type] + pos_embed[column] for every valid cell.
/// Throws ConfigError on inconsistent dimensions.
template <class S>
MsaTensor<S> embed_msa(const MsaInput& input, const Matrix<S>& token_embed, const EnhancerParams<S>& params);

template <class S>
MsaTensor<S> type_project(const MsaTensor<S>& x, const std::vector<std::uint8_t>& types,
                          const EnhancerParams<S>& params);

template <class S>
MsaTensor<S> type_attention(const MsaTensor<S>& h, const std::vector<std::uint8_t>& types,
                            const EnhancerParams<S>& params);

/// Attention weights of every valid cell over its row's type summaries
/// (row r: len_r x number of types present). Exposed for inspection and tests.
template <class S>
std::vector<Matrix<S>> type_attention_weights(const MsaTensor<S>& h, const std::vector<std::uint8_t>& types,
                                              const EnhancerParams<S>& params);

// Cached passes used by training.

template <class S>
struct TypeProjectCache {
  Matrix<S> input;
};

template <class S>
struct TypeAttentionCache {
  struct Row {
    std::vector<std::uint8_t> present;            // type ids with at least one cell
    std::vector<std::vector<std::size_t>> cells;  // compact indices per present type
    Matrix<S> summaries, keys, values, weights;
  };
  Matrix<S> input, queries, attended;
  std::vector<Row> rows;
  Matrix<S> ln_xhat;
  ColumnVector<S> ln_inv_std;
};

template <class S>
Matrix<S> type_project_forward(const MsaLayout& layout, const Matrix<S>& x, const std::vector<std::uint8_t>& types,
                               const EnhancerParams<S>& p, TypeProjectCache<S>* cache);
template <class S>
Matrix<S> type_project_backward(const Matrix<S>& dy, const std::vector<std::uint8_t>& types,
                                const EnhancerParams<S>& p, const TypeProjectCache<S>& cache, EnhancerParams<S>& grad);

template <class S>
Matrix<S> type_attention_forward(const MsaLayout& layout, const Matrix<S>& h, const std::vector<std::uint8_t>& types,
                                 const EnhancerParams<S>& p, TypeAttentionCache<S>* cache);
template <class S>
Matrix<S> type_attention_backward(const MsaLayout& layout, const Matrix<S>& dy, const EnhancerParams<S>& p,
                                  const TypeAttentionCache<S>& cache, EnhancerParams<S>& grad);

}  // namespace alphacc
