#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "alphacc/dataset.hpp"
#include "alphacc/scorer.hpp"

namespace alphacc {

struct Confusion {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  double precision() const { return tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0; }
  double recall() const { return tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0; }
  double f1() const;
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  Confusion counts;
  /// Positives of one clone type against all negatives; unset when the type has no pairs.
  std::array<std::optional<Confusion>, kCloneTypeCount> per_type;

  std::optional<double> type_f1(CloneType t) const {
    const auto& c = per_type[static_cast<std::size_t>(t)];
    return c ? std::optional<double>(c->f1()) : std::nullopt;
  }
};

/// labels are +1/-1; types align with labels (ignored for negatives).
Metrics compute_metrics(std::span<const int> labels, std::span<const bool> predicted,
                        std::span<const std::optional<CloneType>> types = {});

struct Calibration {
  double tau = 1.0;
  double f1 = 0.0;
};

/// Candidate thresholds are the midpoints of adjacent distinct scores plus one
/// value just outside each end of the range. Returns the candidate with the
/// highest F1, the smallest one on ties.
Calibration calibrate_threshold(std::span<const double> scores, std::span<const int> labels, Polarity polarity);

/// Every candidate threshold with its F1, in ascending threshold order.
std::vector<Calibration> threshold_sweep(std::span<const double> scores, std::span<const int> labels,
                                         Polarity polarity);

}  // namespace alphacc
