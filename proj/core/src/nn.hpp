#pragma once

// Layer primitives shared by the enhancer and Codeformer: layer norm,
// row softmax and GELU, each with its backward pass.

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/SpecialFunctions>

#include "alphacc/tensor.hpp"

namespace alphacc::nn {

inline constexpr double kLayerNormEps = 1e-5;

template <class S>
struct LayerNormCache {
  Matrix<S> xhat;
  ColumnVector<S> inv_std;
};

/// Row-wise layer norm of z with gain/bias rows (1 x d).
template <class S>
Matrix<S> layer_norm(const Matrix<S>& z, const Matrix<S>& gain, const Matrix<S>& bias, LayerNormCache<S>* cache) {
  const ColumnVector<S> mean = z.rowwise().mean();
  Matrix<S> centered = z.colwise() - mean;
  const ColumnVector<S> var = centered.array().square().rowwise().mean().matrix();
  const ColumnVector<S> inv_std = (var.array() + static_cast<S>(kLayerNormEps)).rsqrt().matrix();
  Matrix<S> xhat = (centered.array().colwise() * inv_std.array()).matrix();
  Matrix<S> y = ((xhat.array().rowwise() * gain.row(0).array()).rowwise() + bias.row(0).array()).matrix();
  if (cache) {
    cache->xhat = std::move(xhat);
    cache->inv_std = inv_std;
  }
  return y;
}

template <class S>
Matrix<S> layer_norm_backward(const Matrix<S>& dy, const LayerNormCache<S>& cache, const Matrix<S>& gain,
                              Matrix<S>& dgain, Matrix<S>& dbias) {
  dgain.row(0) += (dy.array() * cache.xhat.array()).colwise().sum().matrix();
  dbias.row(0) += dy.colwise().sum();
  const Matrix<S> dxhat = (dy.array().rowwise() * gain.row(0).array()).matrix();
  const ColumnVector<S> mean_d = dxhat.rowwise().mean();
  const ColumnVector<S> mean_dx = (dxhat.array() * cache.xhat.array()).rowwise().mean().matrix();
  Matrix<S> dz = dxhat.colwise() - mean_d;
  dz.array() -= cache.xhat.array().colwise() * mean_dx.array();
  dz.array().colwise() *= cache.inv_std.array();
  return dz;
}

/// In-place numerically stable softmax of each row.
template <class Derived>
void softmax_rows(Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    const auto mx = row.maxCoeff();
    row.array() = (row.array() - mx).exp();
    row /= row.sum();
  }
}

/// Given P = softmax(S) row-wise and dL/dP, returns dL/dS.
template <class S>
Matrix<S> softmax_rows_backward(const Matrix<S>& p, const Matrix<S>& dp) {
  const ColumnVector<S> dot = (p.array() * dp.array()).rowwise().sum().matrix();
  return (p.array() * (dp.colwise() - dot).array()).matrix();
}

/// Exact (erf) GELU, elementwise.
template <class S>
Matrix<S> gelu(const Matrix<S>& x) {
  const auto cdf = S(0.5) * (S(1) + (x.array() * S(0.5 * std::numbers::sqrt2)).erf());
  return (x.array() * cdf).matrix();
}

template <class S>
Matrix<S> gelu_grad(const Matrix<S>& x) {
  const auto cdf = S(0.5) * (S(1) + (x.array() * S(0.5 * std::numbers::sqrt2)).erf());
  const auto pdf = (x.array().square() * S(-0.5)).exp() * S(0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
  return (cdf + x.array() * pdf).matrix();
}

template <class S>
Matrix<S> gather_rows(const Matrix<S>& m, const std::vector<std::size_t>& idx) {
  Matrix<S> out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(idx[i]));
  return out;
}

template <class S>
void scatter_add_rows(Matrix<S>& m, const std::vector<std::size_t>& idx, const Matrix<S>& rows) {
  for (std::size_t i = 0; i < idx.size(); ++i) m.row(static_cast<Eigen::Index>(idx[i])) += rows.row(static_cast<Eigen::Index>(i));
}

}  // namespace alphacc::nn
