#pragma once

// Fragment pooling and pair similarity.
//
// Pooling averages the encoded MSA over the rows valid at each column where
// the query row is valid, then scales each vector to unit length. Late
// interaction is the mean over the tokens of one fragment of the distance to
// the nearest token of the other; it is symmetrized by default.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "alphacc/tensor.hpp"

namespace alphacc {

enum class Measure : std::uint8_t { LateInteraction, Cosine, Euclidean };
enum class Polarity : std::uint8_t { DistanceLike, SimilarityLike };

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
Polarity polarity_of(Measure m);

struct Score {
  double value = 0.0;
  Polarity polarity = Polarity::DistanceLike;
};

struct SimilarityConfig {
  Measure measure = Measure::LateInteraction;
  bool symmetrize = true;
  double threshold = 1.0;

  bool operator==(const SimilarityConfig&) const = default;
};

inline constexpr double kDegenerateNorm = 1e-12;

template <class S>
struct PooledFragment {
  Matrix<S> vectors;                 // n x d, unit rows
  std::vector<std::size_t> columns;  // MSA column of each vector
  std::vector<S> norms;              // pre-normalization norms
  std::vector<bool> degenerate;      // replaced by e1

  std::size_t size() const { return columns.size(); }
};

/// Throws DataError when the query row has no valid cell.
template <class S>
PooledFragment<S> pool_and_normalize(const MsaTensor<S>& h);

/// dL/dh (cells x d) given dL/dvectors. Degenerate vectors pass no gradient.
template <class S>
Matrix<S> pool_backward(const MsaLayout& layout, const PooledFragment<S>& pooled, const Matrix<S>& dvectors);

template <class S>
S token_distance(const Eigen::Ref<const ColumnVector<S>>& u, const Eigen::Ref<const ColumnVector<S>>& v) {
  return (u - v).norm();
}

/// Mean over rows of `a` of the distance to the nearest row of `b`, and the
/// symmetrized average when requested. Gradients w.r.t. both inputs are
/// accumulated when the pointers are non-null.
template <class S>
S late_interaction(const Matrix<S>& a, const Matrix<S>& b, bool symmetrize, Matrix<S>* da = nullptr,
                   Matrix<S>* db = nullptr);

/// O(n1 * n2) double loop without a Gram matrix; the reference for late_interaction.
double late_interaction_reference(const Matrix<double>& a, const Matrix<double>& b, bool symmetrize);

/// Mean-pools each fragment to one vector, renormalizes, and compares.
template <class S>
S fragment_cosine(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da = nullptr, Matrix<S>* db = nullptr);
template <class S>
S fragment_euclidean(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da = nullptr, Matrix<S>* db = nullptr);

/// Dispatches on cfg.measure.
template <class S>
S similarity(const SimilarityConfig& cfg, const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da = nullptr,
             Matrix<S>* db = nullptr);

template <class S>
Score score_fragments(const SimilarityConfig& cfg, const PooledFragment<S>& a, const PooledFragment<S>& b) {
  return {static_cast<double>(similarity<S>(cfg, a.vectors, b.vectors)), polarity_of(cfg.measure)};
}

/// Distance-like: clone iff value < tau. Similarity-like: clone iff value > tau.
bool classify(const Score& score, double tau);

}  // namespace alphacc
