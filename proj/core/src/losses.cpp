#include "alphacc/losses.hpp"

#include <algorithm>
#include <cmath>

#include "alphacc/error.hpp"

namespace alphacc {

std::string_view loss_name(LossKind k) { return k == LossKind::Margin ? "margin" : "bce"; }

std::optional<LossKind> parse_loss(std::string_view name) {
  if (name == "margin") return LossKind::Margin;
  if (name == "bce") return LossKind::Bce;
  return std::nullopt;
}

template <class S>
LossResult<S> margin_loss(S s, int y, S gamma) {
  const S label = static_cast<S>(y);
  const S active = gamma - label * (S(1) - s);
  if (active <= S(0)) return {};
  return {active, label, S(0), S(0)};
}

template <class S>
LossResult<S> bce_loss(S s, int y, S weight, S bias) {
  const S target = y > 0 ? S(1) : S(0);
  const S logit = weight * (S(1) - s) + bias;
  const S raw = S(1) / (S(1) + std::exp(-logit));
  const S lo = static_cast<S>(kBceClamp);
  const S p = std::clamp(raw, lo, S(1) - lo);
  LossResult<S> out;
  out.loss = -(target * std::log(p) + (S(1) - target) * std::log(S(1) - p));
  if (raw > lo && raw < S(1) - lo) {
    const S dlogit = p - target;
    out.dscore = -weight * dlogit;
    out.dweight = (S(1) - s) * dlogit;
    out.dbias = dlogit;
  }
  return out;
}

double margin_loss(const Score& s, int y, double gamma) {
  if (s.polarity != Polarity::DistanceLike) throw ConfigError("margin loss needs a distance-like score");
  if (!(gamma > 0.0)) throw ConfigError("margin must be positive");
  return margin_loss<double>(s.value, y, gamma).loss;
}

double bce_loss(const Score& s, int y, double weight, double bias) {
  return bce_loss<double>(s.value, y, weight, bias).loss;
}

template LossResult<float> margin_loss<float>(float, int, float);
template LossResult<double> margin_loss<double>(double, int, double);
template LossResult<float> bce_loss<float>(float, int, float, float);
template LossResult<double> bce_loss<double>(double, int, double, double);

}  // namespace alphacc
