#include "alphacc/model.hpp"

#include <cmath>

#include "alphacc/error.hpp"
#include "alphacc/rng.hpp"

namespace alphacc {

namespace {

template <class P, class F>
void for_each_tensor(P& p, F&& f) {
  f(std::string("token_embed"), p.token_embed);
  auto& e = p.enhancer;
  f(std::string("enhancer.type_embed"), e.type_embed);
  f(std::string("enhancer.pos_embed"), e.pos_embed);
  for (std::size_t t = 0; t < kTokenTypeCount; ++t) f("enhancer.type_proj." + std::to_string(t), e.type_proj[t]);
  f(std::string("enhancer.type_bias"), e.type_bias);
  f(std::string("enhancer.wq"), e.wq);
  f(std::string("enhancer.wk"), e.wk);
  f(std::string("enhancer.wv"), e.wv);
  f(std::string("enhancer.wo"), e.wo);
  f(std::string("enhancer.ln_gain"), e.ln_gain);
  f(std::string("enhancer.ln_bias"), e.ln_bias);
  for (std::size_t b = 0; b < p.codeformer.blocks.size(); ++b) {
    auto& blk = p.codeformer.blocks[b];
    const std::string pre = "block" + std::to_string(b) + ".";
    f(pre + "inner.wq", blk.inner.wq);
    f(pre + "inner.wk", blk.inner.wk);
    f(pre + "inner.wv", blk.inner.wv);
    f(pre + "inner.wo", blk.inner.wo);
    f(pre + "ln1_gain", blk.ln1_gain);
    f(pre + "ln1_bias", blk.ln1_bias);
    f(pre + "inter.wq", blk.inter.wq);
    f(pre + "inter.wk", blk.inter.wk);
    f(pre + "inter.wv", blk.inter.wv);
    f(pre + "inter.wo", blk.inter.wo);
    f(pre + "ln2_gain", blk.ln2_gain);
    f(pre + "ln2_bias", blk.ln2_bias);
    f(pre + "ffn.w1", blk.w1);
    f(pre + "ffn.b1", blk.b1);
    f(pre + "ffn.w2", blk.w2);
    f(pre + "ffn.b2", blk.b2);
    f(pre + "ln3_gain", blk.ln3_gain);
    f(pre + "ln3_bias", blk.ln3_bias);
  }
  f(std::string("bce"), p.bce);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void check_shape(const ModelShape& s) {
  if (s.vocab < 2) throw ConfigError("vocabulary must hold at least PAD and UNK");
  if (s.dim == 0 || s.length == 0 || s.ffn == 0) throw ConfigError("model dimensions must be >= 1");
  if (s.heads == 0 || s.dim % s.heads != 0) {
    throw ConfigError("head count " + std::to_string(s.heads) + " does not divide dimension " + std::to_string(s.dim));
  }
}

}  // namespace

template <class S>
std::vector<std::pair<std::string, Matrix<S>*>> ModelParams<S>::tensors() {
  std::vector<std::pair<std::string, Matrix<S>*>> out;
  for_each_tensor(*this, [&](std::string name, Matrix<S>& m) { out.emplace_back(std::move(name), &m); });
  return out;
}

template <class S>
std::vector<std::pair<std::string, const Matrix<S>*>> ModelParams<S>::tensors() const {
  std::vector<std::pair<std::string, const Matrix<S>*>> out;
  for_each_tensor(*this, [&](std::string name, const Matrix<S>& m) { out.emplace_back(std::move(name), &m); });
  return out;
}

template <class S>
std::size_t ModelParams<S>::parameter_count() const {
  std::size_t n = 0;
  for (const auto& [name, m] : tensors()) n += static_cast<std::size_t>(m->size());
  return n;
}

template <class S>
bool ModelParams<S>::all_finite() const {
  for (const auto& [name, m] : tensors()) {
    if (!m->allFinite()) return false;
  }
  return true;
}

template <class S>
ModelParams<S> zero_params(const ModelShape& shape) {
  check_shape(shape);
  const auto d = static_cast<Eigen::Index>(shape.dim);
  const auto f = static_cast<Eigen::Index>(shape.ffn);
  const auto types = static_cast<Eigen::Index>(kTokenTypeCount);
  auto square = [d] { return Matrix<S>::Zero(d, d); };
  auto row = [](Eigen::Index n) { return Matrix<S>::Zero(1, n); };

  ModelParams<S> p;
  p.shape = shape;
  p.token_embed = Matrix<S>::Zero(static_cast<Eigen::Index>(shape.vocab), d);
  auto& e = p.enhancer;
  e.type_embed = Matrix<S>::Zero(types, d);
  e.pos_embed = Matrix<S>::Zero(static_cast<Eigen::Index>(shape.length), d);
  for (auto& w : e.type_proj) w = square();
  e.type_bias = Matrix<S>::Zero(types, d);
  e.wq = e.wk = e.wv = e.wo = square();
  e.ln_gain = row(d);
  e.ln_bias = row(d);
  p.codeformer.heads = shape.heads;
  p.codeformer.blocks.resize(shape.blocks);
  for (auto& b : p.codeformer.blocks) {
    for (auto* a : {&b.inner, &b.inter}) a->wq = a->wk = a->wv = a->wo = square();
    b.ln1_gain = b.ln1_bias = b.ln2_gain = b.ln2_bias = b.ln3_gain = b.ln3_bias = row(d);
    b.w1 = Matrix<S>::Zero(d, f);
    b.b1 = row(f);
    b.w2 = Matrix<S>::Zero(f, d);
    b.b2 = row(d);
  }
  p.bce = row(2);
  return p;
}

ModelParams<float> init_params(const ModelShape& shape, std::uint64_t seed) {
  ModelParams<float> p = zero_params<float>(shape);
  Rng rng(seed);
  const double embed_scale = 1.0 / std::sqrt(static_cast<double>(shape.dim));
  for (auto& [name, m] : p.tensors()) {
    if (name == "bce") {
      (*m)(0, 0) = static_cast<float>(kBceInitialWeight);
      (*m)(0, 1) = static_cast<float>(kBceInitialBias);
    } else if (ends_with(name, "_gain")) {
      m->setOnes();
    } else if (ends_with(name, "_bias") || ends_with(name, ".b1") || ends_with(name, ".b2")) {
      m->setZero();
    } else {
      const bool embedding = ends_with(name, "_embed");
      const double a = embedding ? embed_scale : 1.0 / std::sqrt(static_cast<double>(m->rows()));
      for (Eigen::Index i = 0; i < m->size(); ++i) m->data()[i] = static_cast<float>(rng.uniform(-a, a));
    }
  }
  p.token_embed.row(Vocabulary::kPad).setZero();
  return p;
}

template <class To, class From>
ModelParams<To> cast_params(const ModelParams<From>& p) {
  ModelParams<To> out = zero_params<To>(p.shape);
  const auto src = p.tensors();
  const auto dst = out.tensors();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i].second->rows() != dst[i].second->rows() || src[i].second->cols() != dst[i].second->cols()) {
      throw ConfigError("tensor " + src[i].first + " does not match the model shape");
    }
    *dst[i].second = src[i].second->template cast<To>();
  }
  return out;
}

template <class S>
MsaTensor<S> encode_msa(const ModelParams<S>& params, const MsaInput& input) {
  MsaTensor<S> x = embed_msa<S>(input, params.token_embed, params.enhancer);
  const EnhancerMode mode = params.shape.mode;
  if (mode == EnhancerMode::Full) x = type_project<S>(x, input.type_ids, params.enhancer);
  if (mode != EnhancerMode::Off) x = type_attention<S>(x, input.type_ids, params.enhancer);
  return codeformer_forward<S>(x, params.codeformer);
}

template <class S>
PooledFragment<S> encode(const ModelParams<S>& params, const MsaInput& input, EncoderCache<S>* cache) {
  if (!cache) return pool_and_normalize<S>(encode_msa<S>(params, input));
  const MsaLayout& layout = input.layout;
  MsaTensor<S> x = embed_msa<S>(input, params.token_embed, params.enhancer);
  const EnhancerMode mode = params.shape.mode;
  if (mode == EnhancerMode::Full) {
    x.values = type_project_forward<S>(layout, x.values, input.type_ids, params.enhancer, &cache->project);
  }
  if (mode != EnhancerMode::Off) {
    x.values = type_attention_forward<S>(layout, x.values, input.type_ids, params.enhancer, &cache->attend);
  }
  cache->pooled = pool_and_normalize<S>(codeformer_forward<S>(x, params.codeformer, &cache->blocks));
  return cache->pooled;
}

template <class S>
void encode_backward(const ModelParams<S>& params, const MsaInput& input, const EncoderCache<S>& cache,
                     const Matrix<S>& dpooled, ModelParams<S>& grad, bool freeze_embeddings) {
  const MsaLayout& layout = input.layout;
  Matrix<S> g = pool_backward<S>(layout, cache.pooled, dpooled);
  g = codeformer_backward<S>(layout, g, params.codeformer, cache.blocks, grad.codeformer);
  const EnhancerMode mode = params.shape.mode;
  if (mode != EnhancerMode::Off) g = type_attention_backward<S>(layout, g, params.enhancer, cache.attend, grad.enhancer);
  if (mode == EnhancerMode::Full) g = type_project_backward<S>(g, input.type_ids, params.enhancer, cache.project, grad.enhancer);
  for (std::size_t i = 0; i < layout.cells(); ++i) {
    const auto row = g.row(static_cast<Eigen::Index>(i));
    const std::int32_t tok = input.token_ids[i];
    if (!freeze_embeddings && tok != Vocabulary::kPad) grad.token_embed.row(tok) += row;
    grad.enhancer.type_embed.row(input.type_ids[i]) += row;
    grad.enhancer.pos_embed.row(static_cast<Eigen::Index>(layout.column_of(i))) += row;
  }
}

template <class S>
PairResult<S> pair_loss(const ModelParams<S>& params, const PairObjective& objective, const MsaInput& a,
                        const MsaInput& b, int label, ModelParams<S>* grad) {
  EncoderCache<S> ca, cb;
  const PooledFragment<S> pa = encode<S>(params, a, grad ? &ca : nullptr);
  const PooledFragment<S> pb = encode<S>(params, b, grad ? &cb : nullptr);
  Matrix<S> da, db;
  const Measure measure = objective.similarity.measure;
  const S value = similarity<S>(objective.similarity, pa.vectors, pb.vectors, grad ? &da : nullptr, grad ? &db : nullptr);
  const S dist = loss_distance(measure, value);
  const LossResult<S> lr = objective.loss == LossKind::Margin
                               ? margin_loss<S>(dist, label, static_cast<S>(objective.gamma))
                               : bce_loss<S>(dist, label, params.bce(0, 0), params.bce(0, 1));
  if (grad) {
    if (objective.loss == LossKind::Bce) {
      grad->bce(0, 0) += lr.dweight;
      grad->bce(0, 1) += lr.dbias;
    }
    const S scale = measure == Measure::Cosine ? -lr.dscore : lr.dscore;
    if (scale != S(0)) {
      encode_backward<S>(params, a, ca, da * scale, *grad, objective.freeze_embeddings);
      encode_backward<S>(params, b, cb, db * scale, *grad, objective.freeze_embeddings);
    }
  }
  return {lr.loss, value};
}

#define ALPHACC_INSTANTIATE_MODEL(S)                                                                           \
  template struct ModelParams<S>;                                                                              \
  template ModelParams<S> zero_params<S>(const ModelShape&);                                                   \
  template MsaTensor<S> encode_msa<S>(const ModelParams<S>&, const MsaInput&);                                 \
  template PooledFragment<S> encode<S>(const ModelParams<S>&, const MsaInput&, EncoderCache<S>*);              \
  template void encode_backward<S>(const ModelParams<S>&, const MsaInput&, const EncoderCache<S>&,             \
                                   const Matrix<S>&, ModelParams<S>&, bool);                                   \
  template PairResult<S> pair_loss<S>(const ModelParams<S>&, const PairObjective&, const MsaInput&,            \
                                      const MsaInput&, int, ModelParams<S>*);

ALPHACC_INSTANTIATE_MODEL(float)
ALPHACC_INSTANTIATE_MODEL(double)

template ModelParams<double> cast_params<double, float>(const ModelParams<float>&);
template ModelParams<float> cast_params<float, double>(const ModelParams<double>&);
template ModelParams<float> cast_params<float, float>(const ModelParams<float>&);
template ModelParams<double> cast_params<double, double>(const ModelParams<double>&);

}  // namespace alphacc
