#include "alphacc/enhancer.hpp"

#include <cmath>

#include "alphacc/error.hpp"
#include "nn.hpp"

namespace alphacc {

std::string_view enhancer_mode_name(EnhancerMode mode) {
  switch (mode) {
    case EnhancerMode::Full: return "full";
    case EnhancerMode::AttentionOnly: return "attention_only";
    case EnhancerMode::Off: return "off";
  }
  return "full";
}

std::optional<EnhancerMode> parse_enhancer_mode(std::string_view name) {
  if (name == "full") return EnhancerMode::Full;
  if (name == "attention_only") return EnhancerMode::AttentionOnly;
  if (name == "off") return EnhancerMode::Off;
  return std::nullopt;
}

MsaInput make_msa_input(const CodeMSA& msa, const Vocabulary& vocab) {
  const std::size_t width = msa.active_width();
  std::vector<std::size_t> lengths;
  for (std::size_t r = 0; r < msa.depth; ++r) lengths.push_back(msa.valid_length(r));
  MsaInput in{MsaLayout(lengths, width), {}, {}};
  in.token_ids.reserve(in.layout.cells());
  in.type_ids.reserve(in.layout.cells());
  for (std::size_t r = 0; r < msa.depth; ++r) {
    for (std::size_t c = 0; c < lengths[r]; ++c) {
      const MsaCell& cell = msa.at(r, c);
      std::int32_t id = vocab.id(cell.text);
      if (id == Vocabulary::kPad) id = Vocabulary::kUnk;  // a valid cell never reads the PAD row
      in.token_ids.push_back(id);
      in.type_ids.push_back(static_cast<std::uint8_t>(cell.type));
    }
  }
  return in;
}

template <class S>
MsaTensor<S> embed_msa(const MsaInput& input, const Matrix<S>& token_embed, const EnhancerParams<S>& p) {
  const Eigen::Index d = token_embed.cols();
  if (p.type_embed.cols() != d || p.pos_embed.cols() != d || p.type_embed.rows() != static_cast<Eigen::Index>(kTokenTypeCount)) {
    throw ConfigError("embedding tables disagree on dimension");
  }
  if (static_cast<Eigen::Index>(input.layout.width()) > p.pos_embed.rows()) {
    throw ConfigError("MSA width " + std::to_string(input.layout.width()) + " exceeds positional table length " +
                      std::to_string(p.pos_embed.rows()));
  }
  MsaTensor<S> x{input.layout, Matrix<S>(static_cast<Eigen::Index>(input.layout.cells()), d)};
  for (std::size_t i = 0; i < input.layout.cells(); ++i) {
    const auto tok = input.token_ids[i];
    if (tok < 0 || tok >= token_embed.rows()) throw ConfigError("token id out of range of the embedding table");
    const auto row = static_cast<Eigen::Index>(i);
    x.values.row(row) = token_embed.row(tok) + p.type_embed.row(input.type_ids[i]) +
                        p.pos_embed.row(static_cast<Eigen::Index>(input.layout.column_of(i)));
  }
  return x;
}

namespace {

std::array<std::vector<std::size_t>, kTokenTypeCount> cells_by_type(const std::vector<std::uint8_t>& types) {
  std::array<std::vector<std::size_t>, kTokenTypeCount> groups;
  for (std::size_t i = 0; i < types.size(); ++i) groups[types[i]].push_back(i);
  return groups;
}

}  // namespace

template <class S>
Matrix<S> type_project_forward(const MsaLayout&, const Matrix<S>& x, const std::vector<std::uint8_t>& types,
                               const EnhancerParams<S>& p, TypeProjectCache<S>* cache) {
  Matrix<S> h(x.rows(), x.cols());
  const auto groups = cells_by_type(types);
  for (std::size_t t = 0; t < kTokenTypeCount; ++t) {
    if (groups[t].empty()) continue;
    Matrix<S> out = nn::gather_rows(x, groups[t]) * p.type_proj[t];
    out.rowwise() += p.type_bias.row(static_cast<Eigen::Index>(t));
    for (std::size_t i = 0; i < groups[t].size(); ++i) h.row(static_cast<Eigen::Index>(groups[t][i])) = out.row(static_cast<Eigen::Index>(i));
  }
  if (cache) cache->input = x;
  return h;
}

template <class S>
Matrix<S> type_project_backward(const Matrix<S>& dy, const std::vector<std::uint8_t>& types,
                                const EnhancerParams<S>& p, const TypeProjectCache<S>& cache, EnhancerParams<S>& grad) {
  Matrix<S> dx(dy.rows(), dy.cols());
  const auto groups = cells_by_type(types);
  for (std::size_t t = 0; t < kTokenTypeCount; ++t) {
    if (groups[t].empty()) continue;
    const Matrix<S> g = nn::gather_rows(dy, groups[t]);
    const Matrix<S> xin = nn::gather_rows(cache.input, groups[t]);
    grad.type_proj[t].noalias() += xin.transpose() * g;
    grad.type_bias.row(static_cast<Eigen::Index>(t)) += g.colwise().sum();
    const Matrix<S> back = g * p.type_proj[t].transpose();
    for (std::size_t i = 0; i < groups[t].size(); ++i) dx.row(static_cast<Eigen::Index>(groups[t][i])) = back.row(static_cast<Eigen::Index>(i));
  }
  return dx;
}

template <class S>
Matrix<S> type_attention_forward(const MsaLayout& layout, const Matrix<S>& h, const std::vector<std::uint8_t>& types,
                                 const EnhancerParams<S>& p, TypeAttentionCache<S>* cache) {
  const Eigen::Index d = h.cols();
  const S scale = S(1) / std::sqrt(static_cast<S>(d));
  const Matrix<S> queries = h * p.wq;
  Matrix<S> attended = Matrix<S>::Zero(h.rows(), d);
  std::vector<typename TypeAttentionCache<S>::Row> rows(layout.rows());

  for (std::size_t r = 0; r < layout.rows(); ++r) {
    const std::size_t len = layout.row_length(r);
    if (len == 0) continue;
    const auto off = static_cast<Eigen::Index>(layout.row_offset(r));
    auto& row = rows[r];
    std::array<std::int32_t, kTokenTypeCount> slot;
    slot.fill(-1);
    for (std::size_t c = 0; c < len; ++c) {
      const std::uint8_t t = types[layout.cell(r, c)];
      if (slot[t] < 0) {
        slot[t] = static_cast<std::int32_t>(row.present.size());
        row.present.push_back(t);
        row.cells.emplace_back();
      }
      row.cells[static_cast<std::size_t>(slot[t])].push_back(layout.cell(r, c));
    }
    const auto m = static_cast<Eigen::Index>(row.present.size());
    row.summaries = Matrix<S>::Zero(m, d);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (std::size_t idx : row.cells[static_cast<std::size_t>(k)]) row.summaries.row(k) += h.row(static_cast<Eigen::Index>(idx));
      row.summaries.row(k) /= static_cast<S>(row.cells[static_cast<std::size_t>(k)].size());
    }
    row.keys = row.summaries * p.wk;
    row.values = row.summaries * p.wv;
    row.weights = (queries.middleRows(off, static_cast<Eigen::Index>(len)) * row.keys.transpose()) * scale;
    nn::softmax_rows(row.weights);
    attended.middleRows(off, static_cast<Eigen::Index>(len)).noalias() = row.weights * row.values;
  }

  const Matrix<S> z = h + attended * p.wo;
  nn::LayerNormCache<S> ln;
  Matrix<S> y = nn::layer_norm(z, p.ln_gain, p.ln_bias, cache ? &ln : nullptr);
  if (cache) {
    cache->input = h;
    cache->queries = queries;
    cache->attended = std::move(attended);
    cache->rows = std::move(rows);
    cache->ln_xhat = std::move(ln.xhat);
    cache->ln_inv_std = std::move(ln.inv_std);
  }
  return y;
}

template <class S>
Matrix<S> type_attention_backward(const MsaLayout& layout, const Matrix<S>& dy, const EnhancerParams<S>& p,
                                  const TypeAttentionCache<S>& cache, EnhancerParams<S>& grad) {
  const Eigen::Index d = dy.cols();
  const S scale = S(1) / std::sqrt(static_cast<S>(d));
  const nn::LayerNormCache<S> ln{cache.ln_xhat, cache.ln_inv_std};
  const Matrix<S> dz = nn::layer_norm_backward(dy, ln, p.ln_gain, grad.ln_gain, grad.ln_bias);

  Matrix<S> dh = dz;
  grad.wo.noalias() += cache.attended.transpose() * dz;
  const Matrix<S> dattended = dz * p.wo.transpose();
  Matrix<S> dqueries = Matrix<S>::Zero(dy.rows(), d);

  for (std::size_t r = 0; r < layout.rows(); ++r) {
    const std::size_t len = layout.row_length(r);
    if (len == 0) continue;
    const auto off = static_cast<Eigen::Index>(layout.row_offset(r));
    const auto n = static_cast<Eigen::Index>(len);
    const auto& row = cache.rows[r];
    const auto datt = dattended.middleRows(off, n);
    const Matrix<S> dweights = datt * row.values.transpose();
    const Matrix<S> dvalues = row.weights.transpose() * datt;
    const Matrix<S> dscores = nn::softmax_rows_backward(row.weights, dweights) * scale;
    dqueries.middleRows(off, n).noalias() = dscores * row.keys;
    const Matrix<S> dkeys = dscores.transpose() * cache.queries.middleRows(off, n);
    grad.wk.noalias() += row.summaries.transpose() * dkeys;
    grad.wv.noalias() += row.summaries.transpose() * dvalues;
    const Matrix<S> dsummaries = dkeys * p.wk.transpose() + dvalues * p.wv.transpose();
    for (std::size_t k = 0; k < row.present.size(); ++k) {
      const auto& cells = row.cells[k];
      const auto share = dsummaries.row(static_cast<Eigen::Index>(k)) / static_cast<S>(cells.size());
      for (std::size_t idx : cells) dh.row(static_cast<Eigen::Index>(idx)) += share;
    }
  }
  grad.wq.noalias() += cache.input.transpose() * dqueries;
  dh.noalias() += dqueries * p.wq.transpose();
  return dh;
}

template <class S>
MsaTensor<S> type_project(const MsaTensor<S>& x, const std::vector<std::uint8_t>& types, const EnhancerParams<S>& p) {
  return {x.layout, type_project_forward<S>(x.layout, x.values, types, p, nullptr)};
}

template <class S>
MsaTensor<S> type_attention(const MsaTensor<S>& h, const std::vector<std::uint8_t>& types, const EnhancerParams<S>& p) {
  return {h.layout, type_attention_forward<S>(h.layout, h.values, types, p, nullptr)};
}

template <class S>
std::vector<Matrix<S>> type_attention_weights(const MsaTensor<S>& h, const std::vector<std::uint8_t>& types,
                                              const EnhancerParams<S>& p) {
  TypeAttentionCache<S> cache;
  type_attention_forward<S>(h.layout, h.values, types, p, &cache);
  std::vector<Matrix<S>> out;
  for (auto& row : cache.rows) out.push_back(std::move(row.weights));
  return out;
}

#define ALPHACC_INSTANTIATE_ENHANCER(S)                                                                              \
  template MsaTensor<S> embed_msa<S>(const MsaInput&, const Matrix<S>&, const EnhancerParams<S>&);                   \
  template MsaTensor<S> type_project<S>(const MsaTensor<S>&, const std::vector<std::uint8_t>&,                       \
                                        const EnhancerParams<S>&);                                                   \
  template MsaTensor<S> type_attention<S>(const MsaTensor<S>&, const std::vector<std::uint8_t>&,                     \
                                          const EnhancerParams<S>&);                                                 \
  template std::vector<Matrix<S>> type_attention_weights<S>(const MsaTensor<S>&, const std::vector<std::uint8_t>&,   \
                                                            const EnhancerParams<S>&);                               \
  template Matrix<S> type_project_forward<S>(const MsaLayout&, const Matrix<S>&, const std::vector<std::uint8_t>&,   \
                                             const EnhancerParams<S>&, TypeProjectCache<S>*);                        \
  template Matrix<S> type_project_backward<S>(const Matrix<S>&, const std::vector<std::uint8_t>&,                    \
                                              const EnhancerParams<S>&, const TypeProjectCache<S>&,                  \
                                              EnhancerParams<S>&);                                                   \
  template Matrix<S> type_attention_forward<S>(const MsaLayout&, const Matrix<S>&, const std::vector<std::uint8_t>&, \
                                               const EnhancerParams<S>&, TypeAttentionCache<S>*);                    \
  template Matrix<S> type_attention_backward<S>(const MsaLayout&, const Matrix<S>&, const EnhancerParams<S>&,        \
                                                const TypeAttentionCache<S>&, EnhancerParams<S>&);

ALPHACC_INSTANTIATE_ENHANCER(float)
ALPHACC_INSTANTIATE_ENHANCER(double)

}  // namespace alphacc
