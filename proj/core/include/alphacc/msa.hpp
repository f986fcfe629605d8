#pragma once

// Code MSA: the query's token row stacked with the rows of its retrieved
// neighbours, every row standardized to exactly L cells. Rows are placed
// unaligned from column 0, so "aligned positions" means equal column index.

#include <cstddef>
#include <string>
#include <vector>

#include "alphacc/corpus.hpp"
#include "alphacc/ngram_index.hpp"

namespace alphacc {

inline constexpr std::size_t kDefaultMsaDepth = 5;
inline constexpr std::size_t kDefaultMsaLength = 256;
inline constexpr const char* kPadToken = "<pad>";

struct MsaCell {
  std::string text = kPadToken;
  TokenType type = TokenType::OtherType;
  bool valid = false;

  bool operator==(const MsaCell&) const = default;
};

using MsaRow = std::vector<MsaCell>;

struct CodeMSA {
  std::size_t depth = 0;   // R
  std::size_t length = 0;  // L
  std::vector<std::string> row_ids;  // row 0 is the query
  std::vector<MsaCell> cells;        // row-major R x L

  const MsaCell& at(std::size_t row, std::size_t col) const { return cells[row * length + col]; }
  /// Number of leading valid cells in `row`.
  std::size_t valid_length(std::size_t row) const;
  /// Largest valid_length over rows; columns past it are PAD in every row.
  std::size_t active_width() const;

  bool operator==(const CodeMSA&) const = default;
};

/// Truncates to L, or grows the function toward L by alternately appending
/// context_after and prepending context_before (nearest first), then pads
/// with PAD cells on the right. The function tokens stay contiguous.
MsaRow standardize(const std::vector<Token>& seq, const std::vector<Token>& context_before,
                   const std::vector<Token>& context_after, std::size_t length);

/// Row 0 is the standardized query; rows 1..R-1 follow retrieval rank.
/// R == 1 performs no retrieval.
CodeMSA build_msa(const StoredFunction& query, const FunctionStore& store, const NGramIndex& index,
                  std::size_t depth = kDefaultMsaDepth, std::size_t length = kDefaultMsaLength);

}  // namespace alphacc
