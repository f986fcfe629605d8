#pragma once

// Pair losses on a distance-like score s (0 = identical, 2 = antipodal) and
// label y in {-1, +1}.
//
//   margin: max(0, gamma - y (1 - s))
//   bce:    p = sigmoid(w (1 - s) + b), cross-entropy against (y + 1) / 2

#include <cstdint>
#include <optional>
#include <string_view>

#include "alphacc/scorer.hpp"

namespace alphacc {

enum class LossKind : std::uint8_t { Margin, Bce };

std::string_view loss_name(LossKind k);
std::optional<LossKind> parse_loss(std::string_view name);

inline constexpr double kBceInitialWeight = 4.0;
inline constexpr double kBceInitialBias = 0.0;
inline constexpr double kBceClamp = 1e-7;

template <class S>
struct LossResult {
  S loss = 0;
  S dscore = 0;  // dL/ds
  S dweight = 0;
  S dbias = 0;
};

/// The subgradient at the hinge kink is 0.
template <class S>
LossResult<S> margin_loss(S s, int y, S gamma);

template <class S>
LossResult<S> bce_loss(S s, int y, S weight, S bias);

/// Throws ConfigError for a similarity-like score.
double margin_loss(const Score& s, int y, double gamma);
double bce_loss(const Score& s, int y, double weight, double bias);

}  // namespace alphacc
