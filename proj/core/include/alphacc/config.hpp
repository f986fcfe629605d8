#pragma once

// Flat key=value configuration with layering: defaults < file < flags.
//
//   # comment
//   msa_depth = 3
//   loss = bce
//
// Keys are listed by config_keys(); an unknown key or a malformed value is a
// ConfigError naming the key.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphacc/checkpoint.hpp"
#include "alphacc/word2vec.hpp"

namespace alphacc {

struct Config {
  TrainConfig train;
  std::uint32_t ngram = 5;
  std::uint32_t buckets = 1u << 20;
  std::size_t context = 64;  // K tokens of file context on each side
  Word2VecConfig embed;      // embed.dim and embed.seed follow train.dim and train.seed

  bool operator==(const Config&) const = default;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> config_keys();

/// Sets one key. Throws ConfigError on an unknown key or unparsable value.
void set_config_value(Config& cfg, const std::string& key, const std::string& value);

std::string get_config_value(const Config& cfg, const std::string& key);

/// Parses flat key=value text. `origin` names the source in error messages.
KeyValues parse_key_values(const std::string& text, const std::string& origin = "config");

/// "key=value" -> {key, value}. Throws ConfigError without '='.
std::pair<std::string, std::string> split_assignment(const std::string& assignment);

/// defaults, then the file (if any), then flags; validates the result.
Config resolve_config(const Config& defaults, const std::optional<std::filesystem::path>& file,
                      const KeyValues& flags);

/// Every key with its resolved value as a JSON object.
std::string config_json(const Config& cfg);

}  // namespace alphacc
