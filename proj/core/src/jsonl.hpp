#pragma once

// Internal JSON-lines helpers (nlohmann/json stays out of public headers).

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "alphacc/error.hpp"
#include "json.hpp"

namespace alphacc::detail {

using Json = nlohmann::json;

/// Calls `fn(line_number, object)` for every non-blank line. Malformed JSON is a DataError.
inline void for_each_jsonl(const std::filesystem::path& path, const std::function<void(std::size_t, const Json&)>& fn) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    fn(line_no, obj);
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace alphacc::detail
