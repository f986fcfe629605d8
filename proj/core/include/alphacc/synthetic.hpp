#pragma once

// Synthetic clone benchmark in the java-like grammar.
//
// A problem is a method assembled from two algorithmic steps drawn from a
// built-in bank, with seeded constants; no two problems use the same pair of
// steps. Variants of a problem are produced by transformations tagged with the
// clone type they emulate:
//   T1  layout and comment edits
//   T2  T1 plus identifier renaming and literal replacement
//   ST3 T2 plus reordering of independent statements and one dead statement
//   MT3 T2 plus reordering and several dead statements
//   T4  T2 plus for/while conversion and recursive/iterative step swaps
// Variant 0 is the untransformed problem; variant k > 0 applies level
// ((k - 1) mod 5) + 1. A same-problem pair is labeled with the stronger level
// of its two variants.

#include <cstdint>
#include <string>
#include <vector>

#include "alphacc/dataset.hpp"

namespace alphacc {

struct SynthConfig {
  std::uint64_t seed = 7;
  std::size_t problems = 200;
  std::size_t variants = 6;
  double negative_ratio = 1.0;  // negatives per positive
  double test_fraction = 0.0;   // share of problems held out for test
  double validation_fraction = 0.0;
};

struct SyntheticBenchmark {
  FunctionStore functions{Language::JavaLike};
  std::vector<ClonePair> train, validation, test;

  ClonePairDataset dataset(Split split) const;
  std::uint64_t digest() const;
};

/// Number of algorithmic steps in the built-in bank.
std::size_t synthetic_step_count();

/// Throws ConfigError when problems < 2 or variants < 1.
SyntheticBenchmark generate_synthetic(const SynthConfig& cfg);

/// "p012.v3" -> "p012".
std::string synthetic_problem(const std::string& function_id);

}  // namespace alphacc
