#include "alphacc/word2vec.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "alphacc/binary_io.hpp"
#include "alphacc/error.hpp"
#include "alphacc/rng.hpp"

namespace alphacc {

namespace {

constexpr std::uint32_t kEmbeddingVersion = 1;

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

struct PlainAccess {
  static float load(const float& x) { return x; }
  static void store(float& x, float v) { x = v; }
};

// Lock-free shared updates for the concurrent mode. Lost updates are accepted.
struct RelaxedAccess {
  static float load(const float& x) { return std::atomic_ref<const float>(x).load(std::memory_order_relaxed); }
  static void store(float& x, float v) { std::atomic_ref<float>(x).store(v, std::memory_order_relaxed); }
};

class NegativeSampler {
 public:
  explicit NegativeSampler(const Vocabulary& vocab) {
    double total = 0.0;
    for (std::size_t id = 2; id < vocab.size(); ++id) {
      total += std::pow(static_cast<double>(vocab.frequency(static_cast<std::int32_t>(id))), 0.75);
      cumulative_.push_back(total);
    }
  }

  bool empty() const { return cumulative_.empty() || cumulative_.back() <= 0.0; }

  std::int32_t sample(Rng& rng) const {
    const double x = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
    return static_cast<std::int32_t>(idx + 2);
  }

 private:
  std::vector<double> cumulative_;
};

struct Trainer {
  const Word2VecConfig& cfg;
  const NegativeSampler& sampler;
  FloatMatrix& input;
  FloatMatrix& output;
  std::uint64_t total_steps;
  std::atomic<std::uint64_t>& progress;

  double lr_at(std::uint64_t step) const {
    const double frac = total_steps ? std::min(1.0, static_cast<double>(step) / static_cast<double>(total_steps)) : 1.0;
    return cfg.start_lr - (cfg.start_lr - cfg.end_lr) * frac;
  }

  template <class Access>
  void pair_update(std::int32_t center, std::int32_t target, double label, double lr, std::vector<float>& center_grad) {
    const std::size_t d = cfg.dim;
    float* v = input.row(center).data();
    float* u = output.row(target).data();
    double dotp = 0.0;
    for (std::size_t k = 0; k < d; ++k) dotp += static_cast<double>(Access::load(v[k])) * Access::load(u[k]);
    // d/d(dot) of the negative log-likelihood is (sigma(dot) - label).
    const double g = (sigmoid(dotp) - label) * lr;
    for (std::size_t k = 0; k < d; ++k) {
      const float vk = Access::load(v[k]);
      const float uk = Access::load(u[k]);
      center_grad[k] += static_cast<float>(g * uk);
      Access::store(u[k], static_cast<float>(uk - g * vk));
    }
  }

  template <class Access>
  void run(const std::vector<std::vector<std::int32_t>>& seqs, std::size_t first, std::size_t stride, Rng& rng) {
    const std::size_t d = cfg.dim;
    std::vector<float> center_grad(d);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
      for (std::size_t s = first; s < seqs.size(); s += stride) {
        const auto& seq = seqs[s];
        for (std::size_t i = 0; i < seq.size(); ++i) {
          const double lr = lr_at(progress.fetch_add(1, std::memory_order_relaxed));
          const std::size_t lo = i >= cfg.window ? i - cfg.window : 0;
          const std::size_t hi = std::min(seq.size(), i + cfg.window + 1);
          for (std::size_t j = lo; j < hi; ++j) {
            if (j == i) continue;
            std::fill(center_grad.begin(), center_grad.end(), 0.0f);
            pair_update<Access>(seq[i], seq[j], 1.0, lr, center_grad);
            for (std::size_t n = 0; n < cfg.negatives; ++n) {
              const std::int32_t neg = sampler.sample(rng);
              if (neg == seq[j]) continue;
              pair_update<Access>(seq[i], neg, 0.0, lr, center_grad);
            }
            float* v = input.row(seq[i]).data();
            for (std::size_t k = 0; k < d; ++k) Access::store(v[k], Access::load(v[k]) - center_grad[k]);
          }
        }
      }
    }
  }
};

}  // namespace

EmbeddingTable initial_embeddings(std::size_t vocab_size, std::size_t dim, std::uint64_t seed) {
  EmbeddingTable table;
  table.matrix.resize(static_cast<Eigen::Index>(vocab_size), static_cast<Eigen::Index>(dim));
  Rng rng(seed);
  const double half = 0.5 / static_cast<double>(dim);
  for (Eigen::Index r = 0; r < table.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.matrix.cols(); ++c) table.matrix(r, c) = static_cast<float>(rng.uniform(-half, half));
  }
  if (vocab_size > 0) table.matrix.row(Vocabulary::kPad).setZero();
  return table;
}

EmbeddingTable train_embeddings(const std::vector<const FunctionStore*>& stores, const Vocabulary& vocab,
                                const Word2VecConfig& cfg) {
  if (vocab.size() < 2) throw ConfigError("vocabulary must contain at least PAD and UNK");
  if (cfg.dim == 0) throw ConfigError("embedding dimension must be >= 1");
  EmbeddingTable table = initial_embeddings(vocab.size(), cfg.dim, cfg.seed);
  if (cfg.epochs == 0) return table;

  std::vector<std::vector<std::int32_t>> seqs;
  std::uint64_t words = 0;
  for (const FunctionStore* store : stores) {
    for (const auto& [id, fn] : *store) {
      std::vector<std::int32_t> ids;
      for (const Token& t : fn.tokens) {
        const std::int32_t tid = vocab.id(t.text);
        if (tid >= 2) ids.push_back(tid);
      }
      words += ids.size();
      if (ids.size() > 1) seqs.push_back(std::move(ids));
    }
  }
  const NegativeSampler sampler(vocab);
  if (seqs.empty() || sampler.empty()) return table;

  FloatMatrix output = FloatMatrix::Zero(table.matrix.rows(), table.matrix.cols());
  std::atomic<std::uint64_t> progress{0};
  Trainer trainer{cfg, sampler, table.matrix, output, words * cfg.epochs, progress};
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    Rng rng(cfg.seed ^ 0x5eed5eedULL);
    trainer.run<PlainAccess>(seqs, 0, 1, rng);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Rng rng(cfg.seed ^ (0x5eed5eedULL + t));
        trainer.run<RelaxedAccess>(seqs, t, threads, rng);
      });
    }
    for (auto& th : pool) th.join();
  }
  table.matrix.row(Vocabulary::kPad).setZero();
  return table;
}

std::span<const float> lookup(const Vocabulary& vocab, const EmbeddingTable& table, std::string_view text) {
  const std::int32_t id = vocab.id(text);
  return {table.matrix.row(id).data(), table.dim()};
}

double sgns_loss(std::span<const double> center, std::span<const double> context,
                 const std::vector<std::vector<double>>& negatives, std::span<double> grad_center,
                 std::span<double> grad_context, std::vector<std::vector<double>>* grad_negatives) {
  const std::size_t d = center.size();
  auto dotp = [d](std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += a[k] * b[k];
    return s;
  };
  std::fill(grad_center.begin(), grad_center.end(), 0.0);
  const double pos = dotp(center, context);
  double loss = -std::log(sigmoid(pos));
  const double gpos = sigmoid(pos) - 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    grad_center[k] += gpos * context[k];
    grad_context[k] = gpos * center[k];
  }
  if (grad_negatives) grad_negatives->assign(negatives.size(), std::vector<double>(d, 0.0));
  for (std::size_t n = 0; n < negatives.size(); ++n) {
    const double neg = dotp(center, negatives[n]);
    loss -= std::log(sigmoid(-neg));
    const double gneg = sigmoid(neg);
    for (std::size_t k = 0; k < d; ++k) {
      grad_center[k] += gneg * negatives[n][k];
      if (grad_negatives) (*grad_negatives)[n][k] = gneg * center[k];
    }
  }
  return loss;
}

void save_embeddings(const std::filesystem::path& path, const Vocabulary& vocab, const EmbeddingTable& table,
                     const std::string& provenance_json) {
  if (vocab.size() != table.vocab_size()) throw ConfigError("vocabulary and embedding table sizes differ");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  io::Writer w(out);
  w.magic("ACCE");
  w.u32(kEmbeddingVersion);
  w.u32(static_cast<std::uint32_t>(table.vocab_size()));
  w.u32(static_cast<std::uint32_t>(table.dim()));
  for (const auto& text : vocab.texts()) w.str(text);
  w.f32_array(table.matrix.data(), static_cast<std::size_t>(table.matrix.size()));
  w.str(provenance_json);
  if (!out) throw DataError("write failed: " + path.string());
}

EmbeddingFile load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  io::Reader r(in, path.string());
  r.expect_magic("ACCE");
  if (const auto v = r.u32(); v != kEmbeddingVersion) throw DataError("unsupported embedding version " + std::to_string(v));
  const std::uint32_t vocab_size = r.u32();
  const std::uint32_t dim = r.u32();
  std::vector<std::string> texts;
  texts.reserve(vocab_size);
  for (std::uint32_t i = 0; i < vocab_size; ++i) texts.push_back(r.str());
  EmbeddingFile file;
  file.vocab = Vocabulary::from_texts(std::move(texts));
  file.table.matrix.resize(vocab_size, dim);
  r.f32_array(file.table.matrix.data(), static_cast<std::size_t>(file.table.matrix.size()));
  file.provenance = r.str();
  return file;
}

}  // namespace alphacc
