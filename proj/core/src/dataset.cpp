#include "alphacc/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "alphacc/error.hpp"
#include "alphacc/hash.hpp"
#include "jsonl.hpp"

namespace alphacc {

namespace fs = std::filesystem;

namespace {
constexpr std::string_view kCloneTypeNames[] = {"T1", "T2", "ST3", "MT3", "T4"};
constexpr std::string_view kSplitNames[] = {"train", "validation", "test"};
}  // namespace

std::string_view clone_type_name(CloneType t) { return kCloneTypeNames[static_cast<std::size_t>(t)]; }

std::optional<CloneType> parse_clone_type(std::string_view name) {
  for (std::size_t i = 0; i < kCloneTypeCount; ++i) {
    if (kCloneTypeNames[i] == name) return static_cast<CloneType>(i);
  }
  return std::nullopt;
}

std::string_view split_name(Split s) { return kSplitNames[static_cast<std::size_t>(s)]; }

std::optional<Split> parse_split(std::string_view name) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (kSplitNames[i] == name) return static_cast<Split>(i);
  }
  return std::nullopt;
}

std::size_t ClonePairDataset::positives() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const ClonePair& p) { return p.label > 0; }));
}

std::size_t ClonePairDataset::negatives() const { return pairs.size() - positives(); }

std::uint64_t ClonePairDataset::digest() const {
  Fnv1a h;
  h.value(functions.digest());
  h.str(split_name(split));
  for (const auto& p : pairs) {
    h.str(p.id1).str(p.id2).value(p.label);
    h.str(p.clone_type ? clone_type_name(*p.clone_type) : "");
  }
  return h.digest();
}

void validate_pairs(const FunctionStore& functions, const std::vector<ClonePair>& pairs) {
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ClonePair& p = pairs[i];
    const std::string name = "pair " + std::to_string(i) + " (" + p.id1 + ", " + p.id2 + ")";
    if (!functions.contains(p.id1)) throw DataError(name + ": unknown function id '" + p.id1 + "'");
    if (!functions.contains(p.id2)) throw DataError(name + ": unknown function id '" + p.id2 + "'");
    if (p.label != 1 && p.label != -1) throw DataError(name + ": label must be -1 or 1");
    auto key = std::minmax(p.id1, p.id2);
    if (!seen.emplace(key.first, key.second).second) throw DataError(name + ": duplicate pair");
  }
}

std::vector<ClonePair> load_pairs(const fs::path& path, bool require_label) {
  std::vector<ClonePair> pairs;
  detail::for_each_jsonl(path, [&](std::size_t line_no, const detail::Json& obj) {
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (!obj.is_object() || !obj.contains("id1") || !obj.contains("id2")) {
      throw DataError(where + ": pair needs 'id1' and 'id2'");
    }
    if (require_label && !obj.contains("label")) throw DataError(where + ": pair needs 'label'");
    ClonePair p;
    try {
      p.id1 = obj["id1"].get<std::string>();
      p.id2 = obj["id2"].get<std::string>();
      p.label = obj.contains("label") ? obj["label"].get<int>() : 0;
    } catch (const detail::Json::exception& e) {
      throw DataError(where + ": " + e.what());
    }
    if (obj.contains("clone_type") && !obj["clone_type"].is_null()) {
      const auto t = parse_clone_type(obj["clone_type"].get<std::string>());
      if (!t) throw DataError(where + ": unknown clone_type");
      p.clone_type = t;
    }
    pairs.push_back(std::move(p));
  });
  return pairs;
}

ClonePairDataset load_dataset(const fs::path& dir, Split split, Language lang) {
  const fs::path functions = dir / "functions.jsonl";
  const fs::path pairs = dir / (std::string(split_name(split)) + ".jsonl");
  if (!fs::exists(functions)) throw DataError("missing " + functions.string());
  if (!fs::exists(pairs)) throw DataError("missing " + pairs.string());
  ClonePairDataset ds;
  ds.functions = ingest(functions, lang).store;
  ds.pairs = load_pairs(pairs);
  ds.split = split;
  validate_pairs(ds.functions, ds.pairs);
  return ds;
}

void write_functions(const fs::path& path, const FunctionStore& store) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& [id, fn] : store) {
    detail::Json obj = {{"id", id},
                        {"language", language_name(store.language())},
                        {"code", fn.code},
                        {"file_path", fn.file_path},
                        {"start_line", fn.start_line},
                        {"end_line", fn.end_line}};
    out << obj.dump() << '\n';
  }
}

void write_pairs(const fs::path& path, const std::vector<ClonePair>& pairs) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& p : pairs) {
    detail::Json obj = {{"id1", p.id1}, {"id2", p.id2}, {"label", p.label}};
    if (p.clone_type) obj["clone_type"] = clone_type_name(*p.clone_type);
    out << obj.dump() << '\n';
  }
}

}  // namespace alphacc
