#include "alphacc/checkpoint.hpp"

#include <cmath>
#include <fstream>

#include "alphacc/binary_io.hpp"
#include "alphacc/error.hpp"

namespace alphacc {

namespace {
constexpr std::uint32_t kCheckpointVersion = 1;

std::uint32_t narrow(std::size_t v, const char* what) {
  if (v > 0xffffffffULL) throw ConfigError(std::string(what) + " does not fit the checkpoint format");
  return static_cast<std::uint32_t>(v);
}
}  // namespace

void TrainConfig::validate() const {
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  if (!(learning_rate > 0.0)) throw ConfigError("learning rate must be > 0");
  if (batch_size == 0) throw ConfigError("batch size must be >= 1");
  if (msa_depth == 0) throw ConfigError("MSA depth must be >= 1");
  if (msa_length == 0) throw ConfigError("MSA length must be >= 1");
  if (dim == 0 || heads == 0 || dim % heads != 0) throw ConfigError("heads must divide dim");
  if (ffn == 0) throw ConfigError("ffn width must be >= 1");
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  const TrainConfig& c = ckpt.config;
  io::Writer w(out);
  w.magic("ACCM");
  w.u32(kCheckpointVersion);
  w.u32(narrow(c.dim, "dim"));
  w.u32(narrow(c.msa_length, "L"));
  w.u32(narrow(c.msa_depth, "R"));
  w.u32(narrow(c.heads, "heads"));
  w.u32(narrow(c.blocks, "blocks"));
  w.u32(static_cast<std::uint32_t>(c.loss));
  w.u32(static_cast<std::uint32_t>(c.similarity.measure));
  w.f64(ckpt.tau);

  w.u32(narrow(c.ffn, "ffn"));
  w.u32(static_cast<std::uint32_t>(c.mode));
  w.u32(c.similarity.symmetrize ? 1 : 0);
  w.f64(c.similarity.threshold);
  w.f64(c.gamma);
  w.f64(c.learning_rate);
  w.u64(c.epochs);
  w.u64(c.batch_size);
  w.u64(c.seed);
  w.u32(c.freeze_embeddings ? 1 : 0);
  w.u32(c.threads);

  w.u32(narrow(ckpt.vocab.size(), "vocabulary"));
  for (const auto& text : ckpt.vocab.texts()) w.str(text);

  const auto tensors = ckpt.params.tensors();
  w.u32(narrow(tensors.size(), "tensor count"));
  for (const auto& [name, m] : tensors) {
    w.str(name);
    w.u32(narrow(static_cast<std::size_t>(m->rows()), "rows"));
    w.u32(narrow(static_cast<std::size_t>(m->cols()), "cols"));
    w.f32_array(m->data(), static_cast<std::size_t>(m->size()));
  }
  w.str(ckpt.provenance);
  if (!out) throw DataError("write failed: " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  io::Reader r(in, path.string());
  r.expect_magic("ACCM");
  if (const auto v = r.u32(); v != kCheckpointVersion) throw DataError("unsupported checkpoint version " + std::to_string(v));
  Checkpoint ckpt;
  TrainConfig& c = ckpt.config;
  c.dim = r.u32();
  c.msa_length = r.u32();
  c.msa_depth = r.u32();
  c.heads = r.u32();
  c.blocks = r.u32();
  const std::uint32_t loss = r.u32();
  const std::uint32_t measure = r.u32();
  if (loss > 1 || measure > 2) throw DataError(path.string() + ": bad loss or measure code");
  c.loss = static_cast<LossKind>(loss);
  c.similarity.measure = static_cast<Measure>(measure);
  ckpt.tau = r.f64();

  c.ffn = r.u32();
  const std::uint32_t mode = r.u32();
  if (mode > 2) throw DataError(path.string() + ": bad enhancer mode");
  c.mode = static_cast<EnhancerMode>(mode);
  c.similarity.symmetrize = r.u32() != 0;
  c.similarity.threshold = r.f64();
  c.gamma = r.f64();
  c.learning_rate = r.f64();
  c.epochs = r.u64();
  c.batch_size = r.u64();
  c.seed = r.u64();
  c.freeze_embeddings = r.u32() != 0;
  c.threads = r.u32();
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw DataError(path.string() + ": " + e.what());
  }

  const std::uint32_t vocab_size = r.u32();
  std::vector<std::string> texts;
  texts.reserve(vocab_size);
  for (std::uint32_t i = 0; i < vocab_size; ++i) texts.push_back(r.str());
  ckpt.vocab = Vocabulary::from_texts(std::move(texts));

  ckpt.params = zero_params<float>(c.shape(vocab_size));
  const auto tensors = ckpt.params.tensors();
  if (const auto n = r.u32(); n != tensors.size()) {
    throw DataError(path.string() + ": expected " + std::to_string(tensors.size()) + " tensors, found " + std::to_string(n));
  }
  for (const auto& [name, m] : tensors) {
    const std::string stored = r.str();
    const std::uint32_t rows = r.u32();
    const std::uint32_t cols = r.u32();
    if (stored != name || rows != m->rows() || cols != m->cols()) {
      throw DataError(path.string() + ": tensor '" + stored + "' does not match expected '" + name + "'");
    }
    r.f32_array(m->data(), static_cast<std::size_t>(m->size()));
  }
  ckpt.provenance = r.str();
  return ckpt;
}

}  // namespace alphacc
