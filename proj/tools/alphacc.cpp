// alphacc: command-line front end for the clone detection pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 data or configuration error,
// 3 numerical failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alphacc/config.hpp"
#include "alphacc/corpus.hpp"
#include "alphacc/error.hpp"
#include "alphacc/evaluate.hpp"
#include "alphacc/lexer.hpp"
#include "alphacc/msa.hpp"
#include "alphacc/ngram_index.hpp"
#include "alphacc/synthetic.hpp"
#include "alphacc/trainer.hpp"
#include "alphacc/word2vec.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;
using namespace alphacc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

bool g_quiet = false;

// logfmt-style lines on stderr.
void log(const std::string& event, const std::string& fields = {}) {
  if (g_quiet) return;
  std::cerr << "level=info event=" << event;
  if (!fields.empty()) std::cerr << ' ' << fields;
  std::cerr << '\n';
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Globals {
  unsigned threads = 1;
  std::string config_file;
  std::vector<std::string> sets;
};

Config resolve(const Globals& g, const KeyValues& extra = {}) {
  KeyValues flags;
  for (const auto& s : g.sets) flags.push_back(split_assignment(s));
  flags.insert(flags.end(), extra.begin(), extra.end());
  std::optional<fs::path> file;
  if (!g.config_file.empty()) file = g.config_file;
  Config cfg = resolve_config(Config{}, file, flags);
  cfg.train.threads = std::max(1u, g.threads);
  return cfg;
}

std::string provenance(const std::string& command, const Config& cfg, unsigned threads,
                       const std::vector<std::pair<std::string, std::uint64_t>>& inputs) {
  Json in = Json::object();
  for (const auto& [name, digest] : inputs) in[name] = hex(digest);
  Json out = {{"tool", "alphacc"},
              {"version", ALPHACC_VERSION},
              {"command", command},
              {"threads", threads},
              {"config", Json::parse(config_json(cfg))},
              {"inputs", in}};
  return out.dump();
}

Language language(const std::string& name) {
  const auto lang = parse_language(name);
  if (!lang) throw ConfigError("unknown language '" + name + "' (expected java or c)");
  return *lang;
}

FunctionStore load_corpus(const std::string& path, Language lang, const Config& cfg) {
  IngestResult r = ingest(path, lang, cfg.context);
  for (const auto& s : r.skipped) log("ingest.skip", "path=\"" + s.path + "\" reason=\"" + s.reason + "\"");
  log("ingest.done", "functions=" + std::to_string(r.store.size()) + " skipped=" + std::to_string(r.skipped.size()));
  return std::move(r.store);
}

NGramIndex load_or_build_index(const std::string& path, const FunctionStore& corpus, const Config& cfg,
                               unsigned threads) {
  if (path.empty()) return NGramIndex::build(corpus, cfg.ngram, cfg.buckets, threads);
  NGramIndex index = NGramIndex::load(path);
  if (index.store_digest() != corpus.digest()) {
    throw DataError("index " + path + " was built from a different corpus");
  }
  return index;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

int levenshtein(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Closest long flag name of the active subcommand chain, or empty.
std::string suggest(const CLI::App& app, const std::string& arg) {
  std::string flag = arg.substr(0, arg.find('='));
  std::string best;
  int best_d = 4;
  const CLI::App* cur = &app;
  while (cur) {
    for (const CLI::Option* opt : cur->get_options()) {
      for (const auto& name : opt->get_lnames()) {
        const int d = levenshtein(flag, "--" + name);
        if (d < best_d) {
          best_d = d;
          best = "--" + name;
        }
      }
    }
    const auto subs = cur->get_subcommands();
    cur = subs.empty() ? nullptr : subs.front();
  }
  return best;
}

int cmd_version() {
  std::cout << "alphacc " << ALPHACC_VERSION << '\n';
  return kExitOk;
}

struct IndexArgs {
  std::string corpus, lang = "java", out;
};

int cmd_index_build(const Globals& g, const IndexArgs& a) {
  const Config cfg = resolve(g);
  const FunctionStore corpus = load_corpus(a.corpus, language(a.lang), cfg);
  const NGramIndex index = NGramIndex::build(corpus, cfg.ngram, cfg.buckets, g.threads);
  if (fs::path(a.out).has_parent_path()) fs::create_directories(fs::path(a.out).parent_path());
  index.save(a.out, provenance("index build", cfg, g.threads, {{"corpus", corpus.digest()}}));
  log("index.saved", "out=" + a.out + " functions=" + std::to_string(index.function_count()) +
                         " postings=" + std::to_string(index.posting_count()) + " digest=" + hex(index.digest()));
  return kExitOk;
}

struct EmbedArgs {
  std::string corpus, dataset, lang = "java", out;
  bool exclude_dataset = false;
  std::optional<std::size_t> dim;
  std::optional<std::uint64_t> seed;
};

int cmd_embed_train(const Globals& g, const EmbedArgs& a) {
  KeyValues extra;
  if (a.dim) extra.emplace_back("dim", std::to_string(*a.dim));
  if (a.seed) extra.emplace_back("seed", std::to_string(*a.seed));
  const Config cfg = resolve(g, extra);
  const FunctionStore corpus = load_corpus(a.corpus, language(a.lang), cfg);
  // dataset functions always enter the vocabulary; their text is skipped with --exclude-dataset
  std::optional<FunctionStore> dataset;
  if (!a.dataset.empty()) dataset = load_corpus((fs::path(a.dataset) / "functions.jsonl").string(), language(a.lang), cfg);
  std::vector<const FunctionStore*> vocab_stores = {&corpus};
  if (dataset) vocab_stores.push_back(&*dataset);
  std::vector<const FunctionStore*> text_stores = {&corpus};
  if (dataset && !a.exclude_dataset) text_stores.push_back(&*dataset);
  const Vocabulary vocab = Vocabulary::build(vocab_stores);
  Word2VecConfig w2v = cfg.embed;
  w2v.threads = g.threads;
  log("embed.start", "vocab=" + std::to_string(vocab.size()) + " dim=" + std::to_string(w2v.dim) +
                         " text_stores=" + std::to_string(text_stores.size()));
  const EmbeddingTable table = train_embeddings(text_stores, vocab, w2v);
  if (fs::path(a.out).has_parent_path()) fs::create_directories(fs::path(a.out).parent_path());
  std::vector<std::pair<std::string, std::uint64_t>> digests = {{"corpus", corpus.digest()}};
  if (dataset) digests.emplace_back(a.exclude_dataset ? "dataset_vocab_only" : "dataset", dataset->digest());
  save_embeddings(a.out, vocab, table, provenance("embed train", cfg, g.threads, digests));
  log("embed.saved", "out=" + a.out);
  return kExitOk;
}

struct MsaArgs {
  std::string corpus, index, lang = "java", out;
  std::vector<std::string> ids;
};

int cmd_msa(const Globals& g, const MsaArgs& a) {
  const Config cfg = resolve(g);
  const FunctionStore corpus = load_corpus(a.corpus, language(a.lang), cfg);
  const NGramIndex index = load_or_build_index(a.index, corpus, cfg, g.threads);
  std::vector<std::string> ids = a.ids;
  if (ids.empty()) {
    for (const auto& [id, fn] : corpus) ids.push_back(id);
  }
  std::ofstream out = open_out(a.out);
  for (const auto& id : ids) {
    if (!corpus.contains(id)) throw DataError("unknown function id '" + id + "'");
    const CodeMSA msa = build_msa(corpus.at(id), corpus, index, cfg.train.msa_depth, cfg.train.msa_length);
    Json rows = Json::array();
    for (std::size_t r = 0; r < msa.depth; ++r) {
      Json cells = Json::array();
      for (std::size_t c = 0; c < msa.valid_length(r); ++c) cells.push_back(msa.at(r, c).text);
      rows.push_back(std::move(cells));
    }
    out << Json{{"id", id}, {"row_ids", msa.row_ids}, {"length", msa.length}, {"rows", rows}}.dump() << '\n';
  }
  log("msa.done", "count=" + std::to_string(ids.size()) + " out=" + a.out);
  return kExitOk;
}

struct TrainArgs {
  std::string dataset, corpus, index, embed, lang = "java", out;
};

int cmd_train(const Globals& g, const TrainArgs& a) {
  const Config cfg = resolve(g);
  const Language lang = language(a.lang);
  const DatasetSplits splits = load_splits(a.dataset, lang);
  const FunctionStore corpus = a.corpus.empty() ? splits.train.functions : load_corpus(a.corpus, lang, cfg);
  const NGramIndex index = load_or_build_index(a.index, corpus, cfg, g.threads);

  std::optional<EmbeddingFile> embed;
  if (!a.embed.empty()) embed = load_embeddings(a.embed);
  const Vocabulary vocab = embed ? embed->vocab : Vocabulary::build({&corpus, &splits.train.functions});

  MsaCache cache(corpus, index, vocab, cfg.train.msa_depth, cfg.train.msa_length);
  log("train.start", "pairs=" + std::to_string(splits.train.pairs.size()) +
                         " validation=" + std::to_string(splits.validation.pairs.size()) +
                         " vocab=" + std::to_string(vocab.size()));
  Checkpoint ckpt = train(splits.train, cache, vocab, embed ? &embed->table : nullptr, cfg.train,
                          splits.validation.pairs.empty() ? nullptr : &splits.validation,
                          [](const TrainProgress& p) {
                            log("train.batch", "epoch=" + std::to_string(p.epoch) + " batch=" +
                                                   std::to_string(p.batch + 1) + "/" + std::to_string(p.batches) +
                                                   " loss=" + std::to_string(p.mean_loss));
                          });
  std::vector<std::pair<std::string, std::uint64_t>> inputs = {
      {"dataset", splits.train.digest()}, {"corpus", corpus.digest()}, {"index", index.digest()},
      {"vocab", vocab.digest()}};
  ckpt.provenance = provenance("train", cfg, g.threads, inputs);
  if (fs::path(a.out).has_parent_path()) fs::create_directories(fs::path(a.out).parent_path());
  save_checkpoint(a.out, ckpt);
  log("train.saved", "out=" + a.out + " tau=" + std::to_string(ckpt.tau));
  return kExitOk;
}

struct DetectArgs {
  std::string model, pairs, corpus, functions, index, lang = "java", out;
  std::optional<double> threshold;
};

int cmd_detect(const Globals& g, const DetectArgs& a) {
  const Config cfg = resolve(g);
  const Language lang = language(a.lang);
  const Checkpoint ckpt = load_checkpoint(a.model);
  const FunctionStore corpus = load_corpus(a.corpus, lang, cfg);
  const FunctionStore functions = a.functions.empty() ? corpus : load_corpus(a.functions, lang, cfg);
  const NGramIndex index = load_or_build_index(a.index, corpus, cfg, g.threads);
  const std::vector<ClonePair> pairs = load_pairs(a.pairs, false);
  for (const auto& p : pairs) {
    for (const auto* id : {&p.id1, &p.id2}) {
      if (!functions.contains(*id)) throw DataError("pair (" + p.id1 + ", " + p.id2 + "): unknown function id '" + *id + "'");
    }
  }

  MsaCache cache(corpus, index, ckpt.vocab, ckpt.config.msa_depth, ckpt.config.msa_length);
  const std::vector<double> scores = score_pairs(ckpt.params, ckpt.config.similarity, cache, functions, pairs, g.threads);
  const double tau = a.threshold.value_or(ckpt.tau);
  const Polarity polarity = polarity_of(ckpt.config.similarity.measure);
  const std::string measure(measure_name(ckpt.config.similarity.measure));
  std::ofstream out = open_out(a.out);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out << Json{{"id1", pairs[i].id1},
                {"id2", pairs[i].id2},
                {"score", scores[i]},
                {"measure", measure},
                {"clone", classify({scores[i], polarity}, tau) ? 1 : 0}}
               .dump()
        << '\n';
  }
  std::ofstream side = open_out(a.out + ".provenance.json");
  side << provenance("detect", cfg, g.threads, {{"corpus", corpus.digest()}, {"index", index.digest()}}) << '\n';
  log("detect.done", "pairs=" + std::to_string(pairs.size()) + " tau=" + std::to_string(tau) + " out=" + a.out);
  return kExitOk;
}

struct EvalArgs {
  std::string model, dataset, split = "test", corpus, index, lang = "java", out;
  std::optional<double> threshold;
};

int cmd_eval(const Globals& g, const EvalArgs& a) {
  const Config cfg = resolve(g);
  const Language lang = language(a.lang);
  const auto split = parse_split(a.split);
  if (!split) throw ConfigError("unknown split '" + a.split + "'");
  const Checkpoint ckpt = load_checkpoint(a.model);
  const ClonePairDataset data = load_dataset(a.dataset, *split, lang);
  const FunctionStore corpus = a.corpus.empty() ? data.functions : load_corpus(a.corpus, lang, cfg);
  const NGramIndex index = load_or_build_index(a.index, corpus, cfg, g.threads);
  MsaCache cache(corpus, index, ckpt.vocab, ckpt.config.msa_depth, ckpt.config.msa_length);
  const EvalReport report = evaluate(ckpt, cache, data, a.threshold, g.threads);
  const std::string json =
      report_json(report, provenance("eval", cfg, g.threads, {{"dataset", data.digest()}, {"corpus", corpus.digest()}}));
  if (a.out.empty()) {
    std::cout << json << '\n';
  } else {
    open_out(a.out) << json << '\n';
  }
  log("eval.done", "f1=" + std::to_string(report.metrics.f1) + " pairs=" + std::to_string(report.n_pairs));
  return kExitOk;
}

struct SynthArgs {
  SynthConfig cfg;
  std::string out;
};

int cmd_synth(const Globals& g, const SynthArgs& a) {
  const Config cfg = resolve(g);
  const SyntheticBenchmark bench = generate_synthetic(a.cfg);
  const fs::path dir = a.out;
  fs::create_directories(dir);
  write_functions(dir / "functions.jsonl", bench.functions);
  write_pairs(dir / "train.jsonl", bench.train);
  write_pairs(dir / "validation.jsonl", bench.validation);
  write_pairs(dir / "test.jsonl", bench.test);
  Json manifest = {{"seed", a.cfg.seed},
                   {"problems", a.cfg.problems},
                   {"variants", a.cfg.variants},
                   {"negative_ratio", a.cfg.negative_ratio},
                   {"test_fraction", a.cfg.test_fraction},
                   {"validation_fraction", a.cfg.validation_fraction},
                   {"functions", bench.functions.size()},
                   {"pairs", {{"train", bench.train.size()}, {"validation", bench.validation.size()}, {"test", bench.test.size()}}},
                   {"digest", hex(bench.digest())},
                   {"provenance", Json::parse(provenance("synth", cfg, g.threads, {}))}};
  open_out(dir / "manifest.json") << manifest.dump(2) << '\n';
  log("synth.done", "functions=" + std::to_string(bench.functions.size()) + " digest=" + hex(bench.digest()));
  return kExitOk;
}

struct GradArgs {
  std::size_t probes = 64;
  std::string loss = "both";
  std::uint64_t seed = 1;
};

int cmd_gradcheck(const Globals& g, const GradArgs& a) {
  const Config cfg = resolve(g);
  std::vector<LossKind> losses;
  if (a.loss == "both") {
    losses = {LossKind::Margin, LossKind::Bce};
  } else if (const auto k = parse_loss(a.loss)) {
    losses = {*k};
  } else {
    throw ConfigError("unknown loss '" + a.loss + "'");
  }
  double worst = 0.0;
  for (LossKind kind : losses) {
    PairObjective objective = cfg.train.objective();
    objective.loss = kind;
    const ToyProblem toy = make_toy_problem(a.seed, objective);
    const GradCheckReport r = grad_check(toy.params, objective, toy.a, toy.b, toy.label, a.probes, a.seed);
    std::cout << "loss=" << loss_name(kind) << " probes=" << r.probes.size() << " value=" << r.loss
              << " max_rel_err=" << r.max_rel_error << '\n';
    worst = std::max(worst, r.max_rel_error);
  }
  if (!(worst < 1e-4)) {
    std::cerr << "gradcheck failed: max relative error " << worst << " >= 1e-4\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alphacc: token-sequence code clone detection with code MSAs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads; 1 is fully deterministic")->capture_default_str();
  app.add_option("--config", g.config_file, "Flat key=value configuration file");
  app.add_option("--set", g.sets, "Override one configuration key (key=value), repeatable");
  app.add_flag("--quiet", g_quiet, "Suppress log lines on stderr");

  auto* version = app.add_subcommand("version", "Print the version");

  auto* index = app.add_subcommand("index", "N-gram index commands");
  index->require_subcommand(1);
  IndexArgs ia;
  auto* index_build = index->add_subcommand("build", "Build the n-gram index over a corpus");
  index_build->add_option("--corpus", ia.corpus, "Directory of sources or functions JSONL")->required();
  index_build->add_option("--lang", ia.lang, "java or c")->capture_default_str();
  index_build->add_option("--out", ia.out, "Index file")->required();

  auto* embed = app.add_subcommand("embed", "Token embedding commands");
  embed->require_subcommand(1);
  EmbedArgs ea;
  auto* embed_train = embed->add_subcommand("train", "Train skip-gram token embeddings");
  embed_train->add_option("--corpus", ea.corpus, "Directory of sources or functions JSONL")->required();
  embed_train->add_option("--dataset", ea.dataset, "Dataset directory whose functions join the vocabulary and text");
  embed_train->add_flag("--exclude-dataset", ea.exclude_dataset, "Keep dataset text out of training (vocabulary only)");
  embed_train->add_option("--lang", ea.lang, "java or c")->capture_default_str();
  embed_train->add_option("--dim", ea.dim, "Embedding dimension (config key dim, default 256)");
  embed_train->add_option("--seed", ea.seed, "Random seed (config key seed, default 1)");
  embed_train->add_option("--out", ea.out, "Embedding file")->required();

  MsaArgs ma;
  auto* msa = app.add_subcommand("msa", "Build code MSAs and write them as JSONL");
  msa->add_option("--corpus", ma.corpus, "Directory of sources or functions JSONL")->required();
  msa->add_option("--index", ma.index, "Prebuilt index (built in memory when omitted)");
  msa->add_option("--lang", ma.lang, "java or c")->capture_default_str();
  msa->add_option("--id", ma.ids, "Function id, repeatable (default: every function)");
  msa->add_option("--out", ma.out, "Output JSONL")->required();

  TrainArgs ta;
  auto* train_cmd = app.add_subcommand("train", "Train a model on a pair dataset");
  train_cmd->add_option("--dataset", ta.dataset, "Dataset directory (functions.jsonl, train.jsonl, ...)")->required();
  train_cmd->add_option("--corpus", ta.corpus, "Retrieval corpus (default: the dataset's functions)");
  train_cmd->add_option("--index", ta.index, "Prebuilt index over the corpus");
  train_cmd->add_option("--embed", ta.embed, "Pretrained embedding file");
  train_cmd->add_option("--lang", ta.lang, "java or c")->capture_default_str();
  train_cmd->add_option("--out", ta.out, "Checkpoint file")->required();

  DetectArgs da;
  auto* detect = app.add_subcommand("detect", "Score and classify function pairs");
  detect->add_option("--model", da.model, "Checkpoint file")->required();
  detect->add_option("--pairs", da.pairs, "Pairs JSONL {\"id1\",\"id2\"}")->required();
  detect->add_option("--corpus", da.corpus, "Retrieval corpus")->required();
  detect->add_option("--functions", da.functions, "Functions referenced by the pairs (default: the corpus)");
  detect->add_option("--index", da.index, "Prebuilt index over the corpus");
  detect->add_option("--lang", da.lang, "java or c")->capture_default_str();
  detect->add_option("--threshold", da.threshold, "Decision threshold (default: the checkpoint's tau)");
  detect->add_option("--out", da.out, "Output JSONL")->required();

  EvalArgs va;
  auto* eval = app.add_subcommand("eval", "Evaluate a checkpoint on a labeled split");
  eval->add_option("--model", va.model, "Checkpoint file")->required();
  eval->add_option("--dataset", va.dataset, "Dataset directory")->required();
  eval->add_option("--split", va.split, "train, validation or test")->capture_default_str();
  eval->add_option("--corpus", va.corpus, "Retrieval corpus (default: the dataset's functions)");
  eval->add_option("--index", va.index, "Prebuilt index over the corpus");
  eval->add_option("--lang", va.lang, "java or c")->capture_default_str();
  eval->add_option("--threshold", va.threshold, "Decision threshold (default: the checkpoint's tau)");
  eval->add_option("--out", va.out, "Report file (default: stdout)");

  SynthArgs sa;
  sa.cfg.test_fraction = 0.2;
  sa.cfg.validation_fraction = 0.1;
  auto* synth = app.add_subcommand("synth", "Generate the synthetic clone benchmark");
  synth->add_option("--seed", sa.cfg.seed, "Generator seed")->capture_default_str();
  synth->add_option("--problems", sa.cfg.problems, "Number of problems")->capture_default_str();
  synth->add_option("--variants", sa.cfg.variants, "Variants per problem")->capture_default_str();
  synth->add_option("--negative-ratio", sa.cfg.negative_ratio, "Negatives per positive")->capture_default_str();
  synth->add_option("--test-fraction", sa.cfg.test_fraction, "Share of problems held out for test")->capture_default_str();
  synth->add_option("--validation-fraction", sa.cfg.validation_fraction, "Share of problems for validation")
      ->capture_default_str();
  synth->add_option("--out", sa.out, "Output directory")->required();

  GradArgs ga;
  auto* gradcheck = app.add_subcommand("gradcheck", "Finite-difference gradient check on the toy model");
  gradcheck->add_option("--probes", ga.probes, "Scalar parameters probed per loss")->capture_default_str();
  gradcheck->add_option("--loss", ga.loss, "margin, bce or both")->capture_default_str();
  gradcheck->add_option("--seed", ga.seed, "Toy model seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    bool unknown = false;
    for (const auto& arg : app.remaining(true)) {
      if (!arg.starts_with("-")) continue;
      unknown = true;
      std::cerr << "unknown option " << arg;
      if (const std::string s = suggest(app, arg); !s.empty()) std::cerr << "; did you mean " << s << "?";
      std::cerr << '\n';
    }
    if (unknown) {
      std::cerr << "Run with --help for more information.\n";
    } else {
      app.exit(e);
    }
    return kExitUsage;
  }

  try {
    if (version->parsed()) return cmd_version();
    if (index_build->parsed()) return cmd_index_build(g, ia);
    if (embed_train->parsed()) return cmd_embed_train(g, ea);
    if (msa->parsed()) return cmd_msa(g, ma);
    if (train_cmd->parsed()) return cmd_train(g, ta);
    if (detect->parsed()) return cmd_detect(g, da);
    if (eval->parsed()) return cmd_eval(g, va);
    if (synth->parsed()) return cmd_synth(g, sa);
    if (gradcheck->parsed()) return cmd_gradcheck(g, ga);
  } catch (const NumericalError& e) {
    std::cerr << "level=error kind=numerical msg=\"" << e.what() << "\"\n";
    return kExitNumeric;
  } catch (const ConfigError& e) {
    std::cerr << "level=error kind=config msg=\"" << e.what() << "\"\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "level=error kind=data msg=\"" << e.what() << "\"\n";
    return kExitData;
  }
  return kExitUsage;
}
