#include "alphacc/msa.hpp"

#include <deque>

#include "alphacc/error.hpp"

namespace alphacc {

std::size_t CodeMSA::valid_length(std::size_t row) const {
  std::size_t n = 0;
  while (n < length && at(row, n).valid) ++n;
  return n;
}

std::size_t CodeMSA::active_width() const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < depth; ++r) w = std::max(w, valid_length(r));
  return w;
}

namespace {
MsaCell cell_of(const Token& t) { return MsaCell{t.text, t.type, true}; }
}  // namespace

MsaRow standardize(const std::vector<Token>& seq, const std::vector<Token>& context_before,
                   const std::vector<Token>& context_after, std::size_t length) {
  if (length == 0) throw ConfigError("MSA length must be >= 1");
  std::deque<MsaCell> row;
  for (std::size_t i = 0; i < seq.size() && i < length; ++i) row.push_back(cell_of(seq[i]));

  std::size_t next_after = 0;
  std::size_t next_before = context_before.size();
  bool append_turn = true;
  while (row.size() < length && (next_after < context_after.size() || next_before > 0)) {
    const bool can_append = next_after < context_after.size();
    const bool can_prepend = next_before > 0;
    if ((append_turn && can_append) || !can_prepend) {
      row.push_back(cell_of(context_after[next_after++]));
    } else {
      row.push_front(cell_of(context_before[--next_before]));
    }
    append_turn = !append_turn;
  }
  MsaRow out(row.begin(), row.end());
  out.resize(length);
  return out;
}

CodeMSA build_msa(const StoredFunction& query, const FunctionStore& store, const NGramIndex& index,
                  std::size_t depth, std::size_t length) {
  if (depth == 0) throw ConfigError("MSA depth must be >= 1");
  CodeMSA msa;
  msa.depth = depth;
  msa.length = length;
  msa.row_ids.push_back(query.id);
  if (depth > 1) {
    for (auto& id : retrieve_topk(query.tokens, query.id, index, depth - 1)) msa.row_ids.push_back(std::move(id));
  }
  msa.cells.reserve(depth * length);
  for (const std::string& id : msa.row_ids) {
    const StoredFunction* fn = id == query.id ? &query : store.find(id);
    if (fn == nullptr) throw DataError("index references function '" + id + "' missing from the store");
    const MsaRow row = standardize(fn->tokens, fn->context_before, fn->context_after, length);
    msa.cells.insert(msa.cells.end(), row.begin(), row.end());
  }
  return msa;
}

}  // namespace alphacc
