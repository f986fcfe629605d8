#include "alphacc/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphacc/error.hpp"

namespace alphacc {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::LateInteraction: return "late_interaction";
    case Measure::Cosine: return "cosine";
    case Measure::Euclidean: return "euclidean";
  }
  return "late_interaction";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "late_interaction") return Measure::LateInteraction;
  if (name == "cosine") return Measure::Cosine;
  if (name == "euclidean") return Measure::Euclidean;
  return std::nullopt;
}

Polarity polarity_of(Measure m) { return m == Measure::Cosine ? Polarity::SimilarityLike : Polarity::DistanceLike; }

bool classify(const Score& score, double tau) {
  return score.polarity == Polarity::DistanceLike ? score.value < tau : score.value > tau;
}

template <class S>
PooledFragment<S> pool_and_normalize(const MsaTensor<S>& h) {
  const MsaLayout& layout = h.layout;
  if (layout.rows() == 0 || layout.row_length(0) == 0) throw DataError("query row has no valid cell to pool");
  const std::size_t n = layout.row_length(0);
  const Eigen::Index d = h.values.cols();
  PooledFragment<S> out;
  out.vectors.resize(static_cast<Eigen::Index>(n), d);
  out.columns.resize(n);
  out.norms.resize(n);
  out.degenerate.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& cells = layout.column(c);
    auto row = out.vectors.row(static_cast<Eigen::Index>(c));
    row.setZero();
    for (std::size_t idx : cells) row += h.values.row(static_cast<Eigen::Index>(idx));
    row /= static_cast<S>(cells.size());
    const S norm = row.norm();
    out.columns[c] = c;
    out.norms[c] = norm;
    if (norm < static_cast<S>(kDegenerateNorm)) {
      row.setZero();
      row(0) = S(1);
      out.degenerate[c] = true;
    } else {
      row /= norm;
    }
  }
  return out;
}

template <class S>
Matrix<S> pool_backward(const MsaLayout& layout, const PooledFragment<S>& pooled, const Matrix<S>& dvectors) {
  Matrix<S> dh = Matrix<S>::Zero(static_cast<Eigen::Index>(layout.cells()), dvectors.cols());
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    if (pooled.degenerate[i]) continue;
    const auto row = static_cast<Eigen::Index>(i);
    const auto v = pooled.vectors.row(row);
    const auto dv = dvectors.row(row);
    const auto& cells = layout.column(pooled.columns[i]);
    const Eigen::Matrix<S, 1, Eigen::Dynamic> dm =
        (dv - v * v.dot(dv)) / (pooled.norms[i] * static_cast<S>(cells.size()));
    for (std::size_t idx : cells) dh.row(static_cast<Eigen::Index>(idx)) += dm;
  }
  return dh;
}

namespace {

// Mean over rows of a of the distance to the nearest row of b.
template <class S>
S directed_late_interaction(const Matrix<S>& a, const Matrix<S>& b, S weight, Matrix<S>* da, Matrix<S>* db) {
  const Eigen::Index n = a.rows();
  const Eigen::Matrix<S, 1, Eigen::Dynamic> b_sq = b.rowwise().squaredNorm().transpose();
  const Matrix<S> gram = a * b.transpose();
  S total = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index best = 0;
    (b_sq - S(2) * gram.row(i)).minCoeff(&best);
    const Eigen::Matrix<S, 1, Eigen::Dynamic> diff = a.row(i) - b.row(best);
    const S dist = diff.norm();
    total += dist;
    if (da && dist > S(0)) {
      const Eigen::Matrix<S, 1, Eigen::Dynamic> g = diff * (weight / (dist * static_cast<S>(n)));
      da->row(i) += g;
      db->row(best) -= g;
    }
  }
  return total / static_cast<S>(n);
}

template <class S>
struct MeanDirection {
  Eigen::Matrix<S, 1, Eigen::Dynamic> unit;
  S norm;
  bool degenerate;
};

template <class S>
MeanDirection<S> mean_direction(const Matrix<S>& a) {
  MeanDirection<S> out{a.colwise().mean(), S(0), false};
  out.norm = out.unit.norm();
  if (out.norm < static_cast<S>(kDegenerateNorm)) {
    out.unit.setZero();
    out.unit(0) = S(1);
    out.degenerate = true;
  } else {
    out.unit /= out.norm;
  }
  return out;
}

// Spreads dL/dunit back to the rows that were averaged.
template <class S>
void mean_direction_backward(const MeanDirection<S>& m, const Eigen::Matrix<S, 1, Eigen::Dynamic>& dunit,
                             Matrix<S>& dx) {
  if (m.degenerate) return;
  const Eigen::Matrix<S, 1, Eigen::Dynamic> dm =
      (dunit - m.unit * m.unit.dot(dunit)) / (m.norm * static_cast<S>(dx.rows()));
  dx.rowwise() += dm;
}

template <class S>
void check_fragments(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() == 0 || b.rows() == 0) throw DataError("cannot score an empty fragment");
  if (a.cols() != b.cols()) throw ConfigError("fragments have different dimensions");
}

template <class S>
void prepare_grads(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da, Matrix<S>* db) {
  if (static_cast<bool>(da) != static_cast<bool>(db)) throw ConfigError("request both fragment gradients or neither");
  if (da) {
    *da = Matrix<S>::Zero(a.rows(), a.cols());
    *db = Matrix<S>::Zero(b.rows(), b.cols());
  }
}

}  // namespace

template <class S>
S late_interaction(const Matrix<S>& a, const Matrix<S>& b, bool symmetrize, Matrix<S>* da, Matrix<S>* db) {
  check_fragments(a, b);
  prepare_grads(a, b, da, db);
  if (!symmetrize) return directed_late_interaction<S>(a, b, S(1), da, db);
  const S ab = directed_late_interaction<S>(a, b, S(0.5), da, db);
  const S ba = directed_late_interaction<S>(b, a, S(0.5), db, da);
  return (ab + ba) / S(2);
}

double late_interaction_reference(const Matrix<double>& a, const Matrix<double>& b, bool symmetrize) {
  auto directed = [](const Matrix<double>& x, const Matrix<double>& y) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < y.rows(); ++j) {
        double sq = 0.0;
        for (Eigen::Index k = 0; k < x.cols(); ++k) {
          const double diff = x(i, k) - y(j, k);
          sq += diff * diff;
        }
        best = std::min(best, std::sqrt(sq));
      }
      total += best;
    }
    return total / static_cast<double>(x.rows());
  };
  const double ab = directed(a, b);
  return symmetrize ? (ab + directed(b, a)) / 2.0 : ab;
}

template <class S>
S fragment_cosine(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da, Matrix<S>* db) {
  check_fragments(a, b);
  prepare_grads(a, b, da, db);
  const auto ma = mean_direction(a);
  const auto mb = mean_direction(b);
  const S value = ma.unit.dot(mb.unit);
  if (da) {
    mean_direction_backward<S>(ma, mb.unit, *da);
    mean_direction_backward<S>(mb, ma.unit, *db);
  }
  return std::clamp(value, S(-1), S(1));
}

template <class S>
S fragment_euclidean(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da, Matrix<S>* db) {
  check_fragments(a, b);
  prepare_grads(a, b, da, db);
  const auto ma = mean_direction(a);
  const auto mb = mean_direction(b);
  const Eigen::Matrix<S, 1, Eigen::Dynamic> diff = ma.unit - mb.unit;
  const S dist = diff.norm();
  if (da && dist > S(0)) {
    const Eigen::Matrix<S, 1, Eigen::Dynamic> g = diff / dist;
    mean_direction_backward<S>(ma, g, *da);
    mean_direction_backward<S>(mb, (-g).eval(), *db);
  }
  return dist;
}

template <class S>
S similarity(const SimilarityConfig& cfg, const Matrix<S>& a, const Matrix<S>& b, Matrix<S>* da, Matrix<S>* db) {
  switch (cfg.measure) {
    case Measure::LateInteraction: return late_interaction<S>(a, b, cfg.symmetrize, da, db);
    case Measure::Cosine: return fragment_cosine<S>(a, b, da, db);
    case Measure::Euclidean: return fragment_euclidean<S>(a, b, da, db);
  }
  throw ConfigError("unknown similarity measure");
}

#define ALPHACC_INSTANTIATE_SCORER(S)                                                                         \
  template PooledFragment<S> pool_and_normalize<S>(const MsaTensor<S>&);                                      \
  template Matrix<S> pool_backward<S>(const MsaLayout&, const PooledFragment<S>&, const Matrix<S>&);          \
  template S late_interaction<S>(const Matrix<S>&, const Matrix<S>&, bool, Matrix<S>*, Matrix<S>*);           \
  template S fragment_cosine<S>(const Matrix<S>&, const Matrix<S>&, Matrix<S>*, Matrix<S>*);                  \
  template S fragment_euclidean<S>(const Matrix<S>&, const Matrix<S>&, Matrix<S>*, Matrix<S>*);               \
  template S similarity<S>(const SimilarityConfig&, const Matrix<S>&, const Matrix<S>&, Matrix<S>*, Matrix<S>*);

ALPHACC_INSTANTIATE_SCORER(float)
ALPHACC_INSTANTIATE_SCORER(double)

}  // namespace alphacc
