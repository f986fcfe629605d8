#include "alphacc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphacc/error.hpp"

namespace alphacc {

double Confusion::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

Metrics compute_metrics(std::span<const int> labels, std::span<const bool> predicted,
                        std::span<const std::optional<CloneType>> types) {
  if (labels.size() != predicted.size()) throw ConfigError("labels and predictions differ in length");
  if (!types.empty() && types.size() != labels.size()) throw ConfigError("clone types and labels differ in length");
  Metrics m;
  Confusion negatives;
  std::array<Confusion, kCloneTypeCount> typed{};
  std::array<bool, kCloneTypeCount> seen{};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool pos = labels[i] > 0;
    const bool pred = predicted[i];
    Confusion& c = m.counts;
    if (pos && pred) ++c.tp;
    if (pos && !pred) ++c.fn;
    if (!pos && pred) ++c.fp;
    if (!pos && !pred) ++c.tn;
    if (!pos) {
      (pred ? negatives.fp : negatives.tn) += 1;
    } else if (!types.empty() && types[i]) {
      const auto t = static_cast<std::size_t>(*types[i]);
      seen[t] = true;
      (pred ? typed[t].tp : typed[t].fn) += 1;
    }
  }
  m.precision = m.counts.precision();
  m.recall = m.counts.recall();
  m.f1 = m.counts.f1();
  for (std::size_t t = 0; t < kCloneTypeCount; ++t) {
    if (!seen[t]) continue;
    typed[t].fp = negatives.fp;
    typed[t].tn = negatives.tn;
    m.per_type[t] = typed[t];
  }
  return m;
}

std::vector<Calibration> threshold_sweep(std::span<const double> scores, std::span<const int> labels,
                                         Polarity polarity) {
  if (scores.size() != labels.size()) throw ConfigError("scores and labels differ in length");
  if (scores.empty()) throw DataError("cannot calibrate on an empty set");
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Distinct values with positive/negative counts.
  std::vector<double> values;
  std::vector<std::size_t> pos, neg;
  for (std::size_t i : order) {
    if (values.empty() || scores[i] != values.back()) {
      values.push_back(scores[i]);
      pos.push_back(0);
      neg.push_back(0);
    }
    (labels[i] > 0 ? pos.back() : neg.back()) += 1;
  }
  std::size_t total_pos = 0, total_neg = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    total_pos += pos[k];
    total_neg += neg[k];
  }

  // below[k] = counts among the first k distinct values.
  const std::size_t n = values.size();
  std::vector<double> taus;
  taus.push_back(std::nextafter(values.front(), -std::numeric_limits<double>::infinity()));
  for (std::size_t k = 0; k + 1 < n; ++k) taus.push_back((values[k] + values[k + 1]) / 2.0);
  taus.push_back(std::nextafter(values.back(), std::numeric_limits<double>::infinity()));

  std::vector<Calibration> out;
  std::size_t below_pos = 0, below_neg = 0;
  for (std::size_t c = 0; c < taus.size(); ++c) {
    // Candidate c lies above the first c distinct values.
    if (c > 0) {
      below_pos += pos[c - 1];
      below_neg += neg[c - 1];
    }
    Confusion conf;
    if (polarity == Polarity::DistanceLike) {
      conf.tp = below_pos;
      conf.fp = below_neg;
    } else {
      conf.tp = total_pos - below_pos;
      conf.fp = total_neg - below_neg;
    }
    conf.fn = total_pos - conf.tp;
    conf.tn = total_neg - conf.fp;
    out.push_back({taus[c], conf.f1()});
  }
  return out;
}

Calibration calibrate_threshold(std::span<const double> scores, std::span<const int> labels, Polarity polarity) {
  const auto sweep = threshold_sweep(scores, labels, polarity);
  Calibration best = sweep.front();
  for (const auto& c : sweep) {
    if (c.f1 > best.f1) best = c;
  }
  return best;
}

}  // namespace alphacc
