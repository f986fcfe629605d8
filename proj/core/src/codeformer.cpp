#include "alphacc/codeformer.hpp"

#include <cmath>
#include <string>

#include "alphacc/error.hpp"
#include "nn.hpp"

namespace alphacc {

namespace {

Eigen::Index head_dim(Eigen::Index d, std::size_t heads) {
  if (heads == 0 || d % static_cast<Eigen::Index>(heads) != 0) {
    throw ConfigError("head count " + std::to_string(heads) + " does not divide dimension " + std::to_string(d));
  }
  return d / static_cast<Eigen::Index>(heads);
}

// 1 / (rows valid at both i and j) over the active width.
template <class S>
Matrix<S> shared_row_weights(const MsaLayout& layout) {
  const auto w = static_cast<Eigen::Index>(layout.width());
  Matrix<S> out(w, w);
  for (Eigen::Index i = 0; i < w; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      const std::size_t n = layout.shared_rows(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      out(i, j) = n ? S(1) / static_cast<S>(n) : S(0);
    }
  }
  return out;
}

template <class S>
void store_layer_norm(AttentionCache<S>* cache, nn::LayerNormCache<S>& ln) {
  cache->ln_xhat = std::move(ln.xhat);
  cache->ln_inv_std = std::move(ln.inv_std);
}

}  // namespace

template <class S>
Matrix<S> inner_attention_forward(const MsaLayout& layout, const Matrix<S>& x, const AttentionParams<S>& p,
                                  const Matrix<S>& gain, const Matrix<S>& bias, std::size_t heads,
                                  AttentionCache<S>* cache) {
  const Eigen::Index d = x.cols();
  const Eigen::Index dh = head_dim(d, heads);
  const S scale = S(1) / std::sqrt(static_cast<S>(dh));
  Matrix<S> q = x * p.wq;
  Matrix<S> k = x * p.wk;
  Matrix<S> v = x * p.wv;
  Matrix<S> mixed = Matrix<S>::Zero(x.rows(), d);
  const auto w = static_cast<Eigen::Index>(layout.width());
  const Matrix<S> weights = shared_row_weights<S>(layout) * scale;
  std::vector<Matrix<S>> probs;
  Matrix<S> shared(w, w);

  for (std::size_t h = 0; h < heads; ++h) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(h) * dh;
    shared.setZero();
    for (std::size_t r = 0; r < layout.rows(); ++r) {
      const auto n = static_cast<Eigen::Index>(layout.row_length(r));
      if (n == 0) continue;
      const auto off = static_cast<Eigen::Index>(layout.row_offset(r));
      shared.topLeftCorner(n, n).noalias() += q.block(off, c0, n, dh) * k.block(off, c0, n, dh).transpose();
    }
    shared.array() *= weights.array();
    for (std::size_t r = 0; r < layout.rows(); ++r) {
      const auto n = static_cast<Eigen::Index>(layout.row_length(r));
      Matrix<S> pr = shared.topLeftCorner(n, n);
      if (n > 0) {
        nn::softmax_rows(pr);
        const auto off = static_cast<Eigen::Index>(layout.row_offset(r));
        mixed.block(off, c0, n, dh).noalias() = pr * v.block(off, c0, n, dh);
      }
      if (cache) probs.push_back(std::move(pr));
    }
  }

  const Matrix<S> z = x + mixed * p.wo;
  nn::LayerNormCache<S> ln;
  Matrix<S> y = nn::layer_norm(z, gain, bias, cache ? &ln : nullptr);
  if (cache) {
    cache->input = x;
    cache->q = std::move(q);
    cache->k = std::move(k);
    cache->v = std::move(v);
    cache->mixed = std::move(mixed);
    cache->probs = std::move(probs);
    store_layer_norm(cache, ln);
  }
  return y;
}

template <class S>
Matrix<S> inner_attention_backward(const MsaLayout& layout, const Matrix<S>& dy, const AttentionParams<S>& p,
                                   const Matrix<S>& gain, std::size_t heads, const AttentionCache<S>& cache,
                                   AttentionParams<S>& grad, Matrix<S>& dgain, Matrix<S>& dbias) {
  const Eigen::Index d = dy.cols();
  const Eigen::Index dh = head_dim(d, heads);
  const S scale = S(1) / std::sqrt(static_cast<S>(dh));
  const nn::LayerNormCache<S> ln{cache.ln_xhat, cache.ln_inv_std};
  const Matrix<S> dz = nn::layer_norm_backward(dy, ln, gain, dgain, dbias);

  grad.wo.noalias() += cache.mixed.transpose() * dz;
  const Matrix<S> dmixed = dz * p.wo.transpose();
  Matrix<S> dq = Matrix<S>::Zero(dy.rows(), d);
  Matrix<S> dk = Matrix<S>::Zero(dy.rows(), d);
  Matrix<S> dv = Matrix<S>::Zero(dy.rows(), d);
  const auto w = static_cast<Eigen::Index>(layout.width());
  const Matrix<S> weights = shared_row_weights<S>(layout) * scale;
  Matrix<S> dshared(w, w);

  for (std::size_t h = 0; h < heads; ++h) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(h) * dh;
    dshared.setZero();
    for (std::size_t r = 0; r < layout.rows(); ++r) {
      const auto n = static_cast<Eigen::Index>(layout.row_length(r));
      if (n == 0) continue;
      const auto off = static_cast<Eigen::Index>(layout.row_offset(r));
      const Matrix<S>& pr = cache.probs[h * layout.rows() + r];
      const auto dout = dmixed.block(off, c0, n, dh);
      const Matrix<S> dp = dout * cache.v.block(off, c0, n, dh).transpose();
      dv.block(off, c0, n, dh).noalias() = pr.transpose() * dout;
      dshared.topLeftCorner(n, n) += nn::softmax_rows_backward(pr, dp);
    }
    dshared.array() *= weights.array();
    for (std::size_t r = 0; r < layout.rows(); ++r) {
      const auto n = static_cast<Eigen::Index>(layout.row_length(r));
      if (n == 0) continue;
      const auto off = static_cast<Eigen::Index>(layout.row_offset(r));
      const auto ds = dshared.topLeftCorner(n, n);
      dq.block(off, c0, n, dh).noalias() = ds * cache.k.block(off, c0, n, dh);
      dk.block(off, c0, n, dh).noalias() = ds.transpose() * cache.q.block(off, c0, n, dh);
    }
  }

  grad.wq.noalias() += cache.input.transpose() * dq;
  grad.wk.noalias() += cache.input.transpose() * dk;
  grad.wv.noalias() += cache.input.transpose() * dv;
  Matrix<S> dx = dz;
  dx.noalias() += dq * p.wq.transpose();
  dx.noalias() += dk * p.wk.transpose();
  dx.noalias() += dv * p.wv.transpose();
  return dx;
}

template <class S>
Matrix<S> inter_attention_forward(const MsaLayout& layout, const Matrix<S>& x, const AttentionParams<S>& p,
                                  const Matrix<S>& gain, const Matrix<S>& bias, std::size_t heads,
                                  AttentionCache<S>* cache) {
  const Eigen::Index d = x.cols();
  const Eigen::Index dh = head_dim(d, heads);
  const S scale = S(1) / std::sqrt(static_cast<S>(dh));
  Matrix<S> q = x * p.wq;
  Matrix<S> k = x * p.wk;
  Matrix<S> v = x * p.wv;
  Matrix<S> mixed = Matrix<S>::Zero(x.rows(), d);
  std::vector<Matrix<S>> probs;

  for (std::size_t h = 0; h < heads; ++h) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(h) * dh;
    for (std::size_t c = 0; c < layout.width(); ++c) {
      const auto& cells = layout.column(c);
      const auto n = static_cast<Eigen::Index>(cells.size());
      Matrix<S> pc(n, n);
      for (Eigen::Index a = 0; a < n; ++a) {
        const auto qa = q.row(static_cast<Eigen::Index>(cells[a])).segment(c0, dh);
        for (Eigen::Index b = 0; b < n; ++b) {
          pc(a, b) = qa.dot(k.row(static_cast<Eigen::Index>(cells[b])).segment(c0, dh)) * scale;
        }
      }
      nn::softmax_rows(pc);
      for (Eigen::Index a = 0; a < n; ++a) {
        auto out = mixed.row(static_cast<Eigen::Index>(cells[a])).segment(c0, dh);
        for (Eigen::Index b = 0; b < n; ++b) out += pc(a, b) * v.row(static_cast<Eigen::Index>(cells[b])).segment(c0, dh);
      }
      if (cache) probs.push_back(std::move(pc));
    }
  }

  const Matrix<S> z = x + mixed * p.wo;
  nn::LayerNormCache<S> ln;
  Matrix<S> y = nn::layer_norm(z, gain, bias, cache ? &ln : nullptr);
  if (cache) {
    cache->input = x;
    cache->q = std::move(q);
    cache->k = std::move(k);
    cache->v = std::move(v);
    cache->mixed = std::move(mixed);
    cache->probs = std::move(probs);
    store_layer_norm(cache, ln);
  }
  return y;
}

template <class S>
Matrix<S> inter_attention_backward(const MsaLayout& layout, const Matrix<S>& dy, const AttentionParams<S>& p,
                                   const Matrix<S>& gain, std::size_t heads, const AttentionCache<S>& cache,
                                   AttentionParams<S>& grad, Matrix<S>& dgain, Matrix<S>& dbias) {
  const Eigen::Index d = dy.cols();
  const Eigen::Index dh = head_dim(d, heads);
  const S scale = S(1) / std::sqrt(static_cast<S>(dh));
  const nn::LayerNormCache<S> ln{cache.ln_xhat, cache.ln_inv_std};
  const Matrix<S> dz = nn::layer_norm_backward(dy, ln, gain, dgain, dbias);

  grad.wo.noalias() += cache.mixed.transpose() * dz;
  const Matrix<S> dmixed = dz * p.wo.transpose();
  Matrix<S> dq = Matrix<S>::Zero(dy.rows(), d);
  Matrix<S> dk = Matrix<S>::Zero(dy.rows(), d);
  Matrix<S> dv = Matrix<S>::Zero(dy.rows(), d);

  for (std::size_t h = 0; h < heads; ++h) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(h) * dh;
    for (std::size_t c = 0; c < layout.width(); ++c) {
      const auto& cells = layout.column(c);
      const auto n = static_cast<Eigen::Index>(cells.size());
      const Matrix<S>& pc = cache.probs[h * layout.width() + c];
      Matrix<S> dp(n, n);
      for (Eigen::Index a = 0; a < n; ++a) {
        const auto ia = static_cast<Eigen::Index>(cells[a]);
        const auto da = dmixed.row(ia).segment(c0, dh);
        for (Eigen::Index b = 0; b < n; ++b) {
          const auto ib = static_cast<Eigen::Index>(cells[b]);
          dp(a, b) = da.dot(cache.v.row(ib).segment(c0, dh));
          dv.row(ib).segment(c0, dh) += pc(a, b) * da;
        }
      }
      const Matrix<S> ds = nn::softmax_rows_backward(pc, dp) * scale;
      for (Eigen::Index a = 0; a < n; ++a) {
        const auto ia = static_cast<Eigen::Index>(cells[a]);
        for (Eigen::Index b = 0; b < n; ++b) {
          const auto ib = static_cast<Eigen::Index>(cells[b]);
          dq.row(ia).segment(c0, dh) += ds(a, b) * cache.k.row(ib).segment(c0, dh);
          dk.row(ib).segment(c0, dh) += ds(a, b) * cache.q.row(ia).segment(c0, dh);
        }
      }
    }
  }

  grad.wq.noalias() += cache.input.transpose() * dq;
  grad.wk.noalias() += cache.input.transpose() * dk;
  grad.wv.noalias() += cache.input.transpose() * dv;
  Matrix<S> dx = dz;
  dx.noalias() += dq * p.wq.transpose();
  dx.noalias() += dk * p.wk.transpose();
  dx.noalias() += dv * p.wv.transpose();
  return dx;
}

template <class S>
Matrix<S> feed_forward_forward(const Matrix<S>& x, const BlockParams<S>& p, FeedForwardCache<S>* cache) {
  Matrix<S> pre = x * p.w1;
  pre.rowwise() += p.b1.row(0);
  Matrix<S> hidden = nn::gelu(pre);
  Matrix<S> z = x + hidden * p.w2;
  z.rowwise() += p.b2.row(0);
  nn::LayerNormCache<S> ln;
  Matrix<S> y = nn::layer_norm(z, p.ln3_gain, p.ln3_bias, cache ? &ln : nullptr);
  if (cache) {
    cache->input = x;
    cache->pre = std::move(pre);
    cache->hidden = std::move(hidden);
    cache->ln_xhat = std::move(ln.xhat);
    cache->ln_inv_std = std::move(ln.inv_std);
  }
  return y;
}

template <class S>
Matrix<S> feed_forward_backward(const Matrix<S>& dy, const BlockParams<S>& p, const FeedForwardCache<S>& cache,
                                BlockParams<S>& grad) {
  const nn::LayerNormCache<S> ln{cache.ln_xhat, cache.ln_inv_std};
  const Matrix<S> dz = nn::layer_norm_backward(dy, ln, p.ln3_gain, grad.ln3_gain, grad.ln3_bias);
  grad.w2.noalias() += cache.hidden.transpose() * dz;
  grad.b2.row(0) += dz.colwise().sum();
  Matrix<S> dpre = dz * p.w2.transpose();
  dpre.array() *= nn::gelu_grad(cache.pre).array();
  grad.w1.noalias() += cache.input.transpose() * dpre;
  grad.b1.row(0) += dpre.colwise().sum();
  Matrix<S> dx = dz;
  dx.noalias() += dpre * p.w1.transpose();
  return dx;
}

template <class S>
MsaTensor<S> inner_attention(const MsaTensor<S>& x, const BlockParams<S>& block, std::size_t heads) {
  return {x.layout, inner_attention_forward<S>(x.layout, x.values, block.inner, block.ln1_gain, block.ln1_bias, heads,
                                               nullptr)};
}

template <class S>
MsaTensor<S> inter_attention(const MsaTensor<S>& x, const BlockParams<S>& block, std::size_t heads) {
  return {x.layout, inter_attention_forward<S>(x.layout, x.values, block.inter, block.ln2_gain, block.ln2_bias, heads,
                                               nullptr)};
}

template <class S>
MsaTensor<S> codeformer_forward(const MsaTensor<S>& x, const CodeformerParams<S>& params,
                                std::vector<BlockCache<S>>* caches) {
  MsaTensor<S> h = x;
  if (caches) caches->assign(params.blocks.size(), {});
  for (std::size_t b = 0; b < params.blocks.size(); ++b) {
    const auto& block = params.blocks[b];
    BlockCache<S>* c = caches ? &(*caches)[b] : nullptr;
    h.values = inner_attention_forward<S>(h.layout, h.values, block.inner, block.ln1_gain, block.ln1_bias,
                                          params.heads, c ? &c->inner : nullptr);
    h.values = inter_attention_forward<S>(h.layout, h.values, block.inter, block.ln2_gain, block.ln2_bias,
                                          params.heads, c ? &c->inter : nullptr);
    h.values = feed_forward_forward<S>(h.values, block, c ? &c->ffn : nullptr);
  }
  return h;
}

template <class S>
Matrix<S> codeformer_backward(const MsaLayout& layout, const Matrix<S>& dy, const CodeformerParams<S>& params,
                              const std::vector<BlockCache<S>>& caches, CodeformerParams<S>& grad) {
  Matrix<S> g = dy;
  for (std::size_t b = params.blocks.size(); b-- > 0;) {
    const auto& block = params.blocks[b];
    auto& gb = grad.blocks[b];
    g = feed_forward_backward<S>(g, block, caches[b].ffn, gb);
    g = inter_attention_backward<S>(layout, g, block.inter, block.ln2_gain, params.heads, caches[b].inter, gb.inter,
                                    gb.ln2_gain, gb.ln2_bias);
    g = inner_attention_backward<S>(layout, g, block.inner, block.ln1_gain, params.heads, caches[b].inner, gb.inner,
                                    gb.ln1_gain, gb.ln1_bias);
  }
  return g;
}

#define ALPHACC_INSTANTIATE_CODEFORMER(S)                                                                            \
  template Matrix<S> inner_attention_forward<S>(const MsaLayout&, const Matrix<S>&, const AttentionParams<S>&,       \
                                                const Matrix<S>&, const Matrix<S>&, std::size_t, AttentionCache<S>*); \
  template Matrix<S> inner_attention_backward<S>(const MsaLayout&, const Matrix<S>&, const AttentionParams<S>&,      \
                                                 const Matrix<S>&, std::size_t, const AttentionCache<S>&,            \
                                                 AttentionParams<S>&, Matrix<S>&, Matrix<S>&);                       \
  template Matrix<S> inter_attention_forward<S>(const MsaLayout&, const Matrix<S>&, const AttentionParams<S>&,       \
                                                const Matrix<S>&, const Matrix<S>&, std::size_t, AttentionCache<S>*); \
  template Matrix<S> inter_attention_backward<S>(const MsaLayout&, const Matrix<S>&, const AttentionParams<S>&,      \
                                                 const Matrix<S>&, std::size_t, const AttentionCache<S>&,            \
                                                 AttentionParams<S>&, Matrix<S>&, Matrix<S>&);                       \
  template Matrix<S> feed_forward_forward<S>(const Matrix<S>&, const BlockParams<S>&, FeedForwardCache<S>*);         \
  template Matrix<S> feed_forward_backward<S>(const Matrix<S>&, const BlockParams<S>&, const FeedForwardCache<S>&,   \
                                              BlockParams<S>&);                                                      \
  template MsaTensor<S> inner_attention<S>(const MsaTensor<S>&, const BlockParams<S>&, std::size_t);                 \
  template MsaTensor<S> inter_attention<S>(const MsaTensor<S>&, const BlockParams<S>&, std::size_t);                 \
  template MsaTensor<S> codeformer_forward<S>(const MsaTensor<S>&, const CodeformerParams<S>&,                       \
                                              std::vector<BlockCache<S>>*);                                          \
  template Matrix<S> codeformer_backward<S>(const MsaLayout&, const Matrix<S>&, const CodeformerParams<S>&,          \
                                            const std::vector<BlockCache<S>>&, CodeformerParams<S>&);

ALPHACC_INSTANTIATE_CODEFORMER(float)
ALPHACC_INSTANTIATE_CODEFORMER(double)

}  // namespace alphacc
