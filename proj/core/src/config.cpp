#include "alphacc/config.hpp"

#include <charconv>
#include <functional>
#include <sstream>

#include "alphacc/error.hpp"
#include "jsonl.hpp"

namespace alphacc {

namespace {

enum class Kind : std::uint8_t { Unsigned, Real, Boolean, Text };

struct Entry {
  const char* key;
  Kind kind;
  std::function<void(Config&, const std::string&)> set;
  std::function<std::string(const Config&)> get;
};

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* expected) {
  throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as " + expected);
}

std::uint64_t to_unsigned(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) bad_value(key, value, "a non-negative integer");
  return out;
}

double to_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) bad_value(key, value, "a number");
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value, "a boolean");
}

std::string real_text(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

#define ALPHACC_UNSIGNED(KEY, EXPR)                                                                        \
  Entry {                                                                                                  \
    KEY, Kind::Unsigned,                                                                                   \
        [](Config& c, const std::string& v) { EXPR = static_cast<std::remove_reference_t<decltype(EXPR)>>( \
                                                   to_unsigned(KEY, v)); },                                \
        [](const Config& c) { return std::to_string(EXPR); }                                               \
  }

#define ALPHACC_REAL(KEY, EXPR)                                                                     \
  Entry {                                                                                           \
    KEY, Kind::Real, [](Config& c, const std::string& v) { EXPR = to_real(KEY, v); },               \
        [](const Config& c) { return real_text(EXPR); }                                             \
  }

#define ALPHACC_BOOL(KEY, EXPR)                                                                     \
  Entry {                                                                                           \
    KEY, Kind::Boolean, [](Config& c, const std::string& v) { EXPR = to_bool(KEY, v); },            \
        [](const Config& c) { return std::string(EXPR ? "true" : "false"); }                        \
  }

#define ALPHACC_ENUM(KEY, EXPR, PARSE, NAME, EXPECTED)                                              \
  Entry {                                                                                           \
    KEY, Kind::Text,                                                                                \
        [](Config& c, const std::string& v) {                                                       \
          const auto parsed = PARSE(v);                                                             \
          if (!parsed) bad_value(KEY, v, EXPECTED);                                                 \
          EXPR = *parsed;                                                                           \
        },                                                                                          \
        [](const Config& c) { return std::string(NAME(EXPR)); }                                     \
  }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      ALPHACC_UNSIGNED("msa_length", c.train.msa_length),
      ALPHACC_UNSIGNED("msa_depth", c.train.msa_depth),
      ALPHACC_UNSIGNED("dim", c.train.dim),
      ALPHACC_UNSIGNED("heads", c.train.heads),
      ALPHACC_UNSIGNED("blocks", c.train.blocks),
      ALPHACC_UNSIGNED("ffn", c.train.ffn),
      ALPHACC_UNSIGNED("ngram", c.ngram),
      ALPHACC_UNSIGNED("buckets", c.buckets),
      ALPHACC_UNSIGNED("context", c.context),
      ALPHACC_REAL("gamma", c.train.gamma),
      ALPHACC_REAL("learning_rate", c.train.learning_rate),
      ALPHACC_UNSIGNED("epochs", c.train.epochs),
      ALPHACC_UNSIGNED("batch_size", c.train.batch_size),
      ALPHACC_UNSIGNED("seed", c.train.seed),
      ALPHACC_ENUM("loss", c.train.loss, parse_loss, loss_name, "margin|bce"),
      ALPHACC_ENUM("measure", c.train.similarity.measure, parse_measure, measure_name,
                   "late_interaction|cosine|euclidean"),
      ALPHACC_BOOL("symmetrize", c.train.similarity.symmetrize),
      ALPHACC_REAL("threshold", c.train.similarity.threshold),
      ALPHACC_ENUM("enhancer_mode", c.train.mode, parse_enhancer_mode, enhancer_mode_name,
                   "full|attention_only|off"),
      ALPHACC_BOOL("freeze_embeddings", c.train.freeze_embeddings),
      ALPHACC_UNSIGNED("embed_window", c.embed.window),
      ALPHACC_UNSIGNED("embed_negatives", c.embed.negatives),
      ALPHACC_UNSIGNED("embed_epochs", c.embed.epochs),
      ALPHACC_REAL("embed_start_lr", c.embed.start_lr),
      ALPHACC_REAL("embed_end_lr", c.embed.end_lr),
  };
  return table;
}

#undef ALPHACC_UNSIGNED
#undef ALPHACC_REAL
#undef ALPHACC_BOOL
#undef ALPHACC_ENUM

const Entry& entry(const std::string& key) {
  for (const Entry& e : entries()) {
    if (key == e.key) return e;
  }
  throw ConfigError("unknown config key '" + key + "'");
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void sync(Config& cfg) {
  cfg.embed.dim = cfg.train.dim;
  cfg.embed.seed = cfg.train.seed;
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const Entry& e : entries()) keys.emplace_back(e.key);
  return keys;
}

void set_config_value(Config& cfg, const std::string& key, const std::string& value) {
  entry(key).set(cfg, value);
  sync(cfg);
}

std::string get_config_value(const Config& cfg, const std::string& key) { return entry(key).get(cfg); }

std::pair<std::string, std::string> split_assignment(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + assignment + "'");
  return {trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1))};
}

KeyValues parse_key_values(const std::string& text, const std::string& origin) {
  KeyValues out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    try {
      out.push_back(split_assignment(line));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Config resolve_config(const Config& defaults, const std::optional<std::filesystem::path>& file,
                      const KeyValues& flags) {
  Config cfg = defaults;
  if (file) {
    for (const auto& [key, value] : parse_key_values(detail::read_file(*file), file->string())) {
      set_config_value(cfg, key, value);
    }
  }
  for (const auto& [key, value] : flags) set_config_value(cfg, key, value);
  sync(cfg);
  cfg.train.validate();
  if (cfg.ngram == 0) throw ConfigError("config key 'ngram' must be >= 1");
  if (cfg.buckets == 0) throw ConfigError("config key 'buckets' must be >= 1");
  return cfg;
}

std::string config_json(const Config& cfg) {
  detail::Json out = detail::Json::object();
  for (const Entry& e : entries()) {
    const std::string v = e.get(cfg);
    switch (e.kind) {
      case Kind::Unsigned: out[e.key] = std::stoull(v); break;
      case Kind::Real: out[e.key] = std::stod(v); break;
      case Kind::Boolean: out[e.key] = v == "true"; break;
      case Kind::Text: out[e.key] = v; break;
    }
  }
  return out.dump();
}

}  // namespace alphacc
