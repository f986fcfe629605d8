#include "alphacc/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "alphacc/error.hpp"
#include "alphacc/metrics.hpp"
#include "alphacc/synthetic.hpp"
#include "parallel.hpp"

namespace alphacc {

namespace {

constexpr std::uint64_t kShuffleStream = 0x9e3779b97f4a7c15ULL;

template <class S>
void set_zero(ModelParams<S>& p) {
  for (auto& [name, m] : p.tensors()) m->setZero();
}

template <class S>
void add_into(ModelParams<S>& dst, const ModelParams<S>& src) {
  const auto d = dst.tensors();
  const auto s = src.tensors();
  for (std::size_t i = 0; i < d.size(); ++i) *d[i].second += *s[i].second;
}

}  // namespace

Adam::Adam(const ModelShape& shape, double learning_rate, double beta1, double beta2, double eps)
    : m_(zero_params<float>(shape)), v_(zero_params<float>(shape)), lr_(learning_rate), beta1_(beta1), beta2_(beta2),
      eps_(eps) {}

void Adam::step(ModelParams<float>& params, const ModelParams<float>& grad, bool freeze_embeddings) {
  ++t_;
  const auto b1 = static_cast<float>(beta1_);
  const auto b2 = static_cast<float>(beta2_);
  const auto c1 = static_cast<float>(1.0 / (1.0 - std::pow(beta1_, static_cast<double>(t_))));
  const auto c2 = static_cast<float>(1.0 / (1.0 - std::pow(beta2_, static_cast<double>(t_))));
  const auto lr = static_cast<float>(lr_);
  const auto eps = static_cast<float>(eps_);
  const auto p = params.tensors();
  const auto g = grad.tensors();
  const auto m = m_.tensors();
  const auto v = v_.tensors();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (freeze_embeddings && p[i].first == "token_embed") continue;
    auto ga = g[i].second->array();
    auto ma = m[i].second->array();
    auto va = v[i].second->array();
    ma = b1 * ma + (1.0f - b1) * ga;
    va = b2 * va + (1.0f - b2) * ga.square();
    p[i].second->array() -= lr * (ma * c1) / ((va * c2).sqrt() + eps);
  }
}

ModelParams<float> initial_params(const TrainConfig& cfg, const Vocabulary& vocab, const EmbeddingTable* embeddings) {
  cfg.validate();
  ModelParams<float> p = init_params(cfg.shape(vocab.size()), cfg.seed);
  if (embeddings) {
    if (embeddings->vocab_size() != vocab.size() || embeddings->dim() != cfg.dim) {
      throw ConfigError("embedding table is " + std::to_string(embeddings->vocab_size()) + "x" +
                        std::to_string(embeddings->dim()) + ", model expects " + std::to_string(vocab.size()) + "x" +
                        std::to_string(cfg.dim));
    }
    p.token_embed = embeddings->matrix;
    p.token_embed.row(Vocabulary::kPad).setZero();
  }
  return p;
}

std::vector<std::size_t> balanced_order(const std::vector<ClonePair>& pairs, Rng& rng) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < pairs.size(); ++i) (pairs[i].label > 0 ? pos : neg).push_back(i);
  if (pos.empty() || neg.empty()) throw DataError("training needs at least one positive and one negative pair");
  rng.shuffle(pos);
  rng.shuffle(neg);
  auto& minority = pos.size() < neg.size() ? pos : neg;
  const std::size_t target = std::max(pos.size(), neg.size());
  const std::vector<std::size_t> pool = minority;
  while (minority.size() < target) {
    std::vector<std::size_t> again = pool;
    rng.shuffle(again);
    for (std::size_t i = 0; i < again.size() && minority.size() < target; ++i) minority.push_back(again[i]);
  }
  std::vector<std::size_t> order;
  order.reserve(2 * target);
  for (std::size_t i = 0; i < target; ++i) {
    order.push_back(pos[i]);
    order.push_back(neg[i]);
  }
  return order;
}

void train_epochs(ModelParams<float>& params, const TrainConfig& cfg, MsaCache& cache, const ClonePairDataset& data,
                  const ProgressFn& progress) {
  cfg.validate();
  if (cfg.epochs == 0) return;
  const unsigned threads = std::max(1u, cfg.threads);
  cache.prepare(data.functions, data.pairs, threads);
  const PairObjective objective = cfg.objective();
  Adam adam(params.shape, cfg.learning_rate);
  Rng rng(cfg.seed ^ kShuffleStream);
  std::vector<ModelParams<float>> grads(threads, zero_params<float>(params.shape));

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const std::vector<std::size_t> order = balanced_order(data.pairs, rng);
    const std::size_t batches = (order.size() + cfg.batch_size - 1) / cfg.batch_size;
    for (std::size_t b = 0; b < batches; ++b) {
      const std::size_t first = b * cfg.batch_size;
      const std::size_t count = std::min(cfg.batch_size, order.size() - first);
      for (auto& g : grads) set_zero(g);
      std::vector<double> losses(count);
      detail::parallel_for(count, threads, [&](std::size_t i, unsigned worker) {
        const ClonePair& pair = data.pairs[order[first + i]];
        const MsaInput& a = cache.get(data.functions.at(pair.id1));
        const MsaInput& bb = cache.get(data.functions.at(pair.id2));
        losses[i] = static_cast<double>(pair_loss<float>(params, objective, a, bb, pair.label, &grads[worker]).loss);
      });

      double total = 0.0;
      for (double l : losses) total += l;
      if (!std::isfinite(total)) {
        std::ostringstream msg;
        msg << "non-finite loss in epoch " << epoch << " batch " << b << ":";
        for (std::size_t i = 0; i < count; ++i) {
          const ClonePair& pair = data.pairs[order[first + i]];
          msg << "\n  " << pair.id1 << " " << pair.id2 << " label=" << pair.label << " loss=" << losses[i];
        }
        throw NumericalError(msg.str());
      }
      for (unsigned w = 1; w < threads; ++w) add_into(grads[0], grads[w]);
      const float inv = 1.0f / static_cast<float>(count);
      for (auto& [name, m] : grads[0].tensors()) *m *= inv;
      adam.step(params, grads[0], cfg.freeze_embeddings);
      if (progress) progress({epoch, b, batches, total / static_cast<double>(count)});
    }
  }
}

double calibrate_checkpoint(const Checkpoint& ckpt, MsaCache& cache, const ClonePairDataset& validation,
                            unsigned threads) {
  const auto scores = score_pairs(ckpt.params, ckpt.config.similarity, cache, validation.functions, validation.pairs, threads);
  std::vector<int> labels;
  for (const auto& p : validation.pairs) labels.push_back(p.label);
  return calibrate_threshold(scores, labels, polarity_of(ckpt.config.similarity.measure)).tau;
}

Checkpoint train(const ClonePairDataset& data, MsaCache& cache, const Vocabulary& vocab,
                 const EmbeddingTable* embeddings, const TrainConfig& cfg, const ClonePairDataset* validation,
                 const ProgressFn& progress) {
  Checkpoint ckpt;
  ckpt.params = initial_params(cfg, vocab, embeddings);
  ckpt.vocab = vocab;
  ckpt.config = cfg;
  ckpt.tau = cfg.similarity.threshold;
  train_epochs(ckpt.params, cfg, cache, data, progress);
  if (!ckpt.params.all_finite()) throw NumericalError("training produced non-finite parameters");
  if (validation && !validation->pairs.empty()) ckpt.tau = calibrate_checkpoint(ckpt, cache, *validation, cfg.threads);
  return ckpt;
}

GradCheckReport grad_check(const ModelParams<double>& params, const PairObjective& objective, const MsaInput& a,
                           const MsaInput& b, int label, std::size_t n_probes, std::uint64_t seed, double step) {
  ModelParams<double> grad = zero_params<double>(params.shape);
  GradCheckReport report;
  report.loss = pair_loss<double>(params, objective, a, b, label, &grad).loss;

  ModelParams<double> probe = params;
  const auto tensors = probe.tensors();
  const auto grads = grad.tensors();
  Rng rng(seed);
  for (std::size_t i = 0; i < n_probes; ++i) {
    const std::size_t t = i % tensors.size();
    Matrix<double>& m = *tensors[t].second;
    const Matrix<double>& g = *grads[t].second;
    std::vector<Eigen::Index> active;
    for (Eigen::Index k = 0; k < g.size(); ++k) {
      if (g.data()[k] != 0.0) active.push_back(k);
    }
    const Eigen::Index k = active.empty() ? static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(m.size())))
                                          : active[rng.below(active.size())];
    const double saved = m.data()[k];
    m.data()[k] = saved + step;
    const double up = pair_loss<double>(probe, objective, a, b, label, nullptr).loss;
    m.data()[k] = saved - step;
    const double down = pair_loss<double>(probe, objective, a, b, label, nullptr).loss;
    m.data()[k] = saved;

    GradProbe p;
    p.tensor = tensors[t].first;
    p.index = k;
    p.analytic = g.data()[k];
    p.numeric = (up - down) / (2.0 * step);
    p.rel_error = std::abs(p.analytic - p.numeric) / std::max({std::abs(p.analytic), std::abs(p.numeric), 1e-8});
    report.max_rel_error = std::max(report.max_rel_error, p.rel_error);
    report.probes.push_back(std::move(p));
  }
  return report;
}

ToyProblem make_toy_problem(std::uint64_t seed, const PairObjective& objective) {
  SynthConfig synth;
  synth.seed = seed;
  synth.problems = 4;
  synth.variants = 3;
  const SyntheticBenchmark bench = generate_synthetic(synth);
  const FunctionStore& store = bench.functions;
  const NGramIndex index = NGramIndex::build(store);
  const Vocabulary vocab = Vocabulary::build(store);

  TrainConfig cfg;
  cfg.dim = 8;
  cfg.msa_length = 12;
  cfg.msa_depth = 3;
  cfg.blocks = 1;
  cfg.heads = 2;
  cfg.ffn = 16;
  cfg.seed = seed;
  ToyProblem toy;
  toy.params = cast_params<double>(init_params(cfg.shape(vocab.size()), seed));

  MsaCache cache(store, index, vocab, cfg.msa_depth, cfg.msa_length);
  // cross-problem pair, so token distances stay nonzero
  const auto it = std::find_if(bench.train.begin(), bench.train.end(), [](const ClonePair& p) { return p.label < 0; });
  const ClonePair& pair = it != bench.train.end() ? *it : bench.train.front();
  toy.a = cache.get(store.at(pair.id1));
  toy.b = cache.get(store.at(pair.id2));
  const double value = pair_loss<double>(toy.params, objective, toy.a, toy.b, 1, nullptr).score;
  const double dist = loss_distance(objective.similarity.measure, value);
  toy.label = dist > 1.0 - objective.gamma ? 1 : -1;
  return toy;
}

}  // namespace alphacc
