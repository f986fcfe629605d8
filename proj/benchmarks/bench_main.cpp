#include <benchmark/benchmark.h>

#include <vector>

#include "alphacc/enhancer.hpp"
#include "alphacc/lexer.hpp"
#include "alphacc/model.hpp"
#include "alphacc/msa.hpp"
#include "alphacc/ngram_index.hpp"
#include "alphacc/rng.hpp"
#include "alphacc/scorer.hpp"
#include "alphacc/synthetic.hpp"
#include "alphacc/vocab.hpp"

using namespace alphacc;

namespace {

const SyntheticBenchmark& bench_data() {
  static const SyntheticBenchmark data = [] {
    SynthConfig cfg;
    cfg.problems = 200;
    cfg.variants = 5;
    return generate_synthetic(cfg);
  }();
  return data;
}

std::vector<const StoredFunction*> functions() {
  std::vector<const StoredFunction*> out;
  for (const auto& [id, fn] : bench_data().functions) out.push_back(&fn);
  return out;
}

void BM_Tokenize(benchmark::State& state) {
  const auto fns = functions();
  std::size_t i = 0, bytes = 0;
  for (auto _ : state) {
    const auto& code = fns[i++ % fns.size()]->code;
    benchmark::DoNotOptimize(tokenize(code, Language::JavaLike));
    bytes += code.size();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_Tokenize);

void BM_IndexBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(NGramIndex::build(bench_data().functions));
}
BENCHMARK(BM_IndexBuild)->Unit(benchmark::kMillisecond);

void BM_RetrieveTop4(benchmark::State& state) {
  const NGramIndex index = NGramIndex::build(bench_data().functions);
  const auto fns = functions();
  std::size_t i = 0;
  for (auto _ : state) {
    const StoredFunction& q = *fns[i++ % fns.size()];
    benchmark::DoNotOptimize(retrieve_topk(q.tokens, q.id, index, 4));
  }
}
BENCHMARK(BM_RetrieveTop4);

void BM_LateInteraction(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Rng rng(1);
  Matrix<float> a(n, 256), b(n, 256);
  for (float& v : a.reshaped()) v = static_cast<float>(rng.uniform(-1, 1));
  for (float& v : b.reshaped()) v = static_cast<float>(rng.uniform(-1, 1));
  a.rowwise().normalize();
  b.rowwise().normalize();
  for (auto _ : state) benchmark::DoNotOptimize(late_interaction<float>(a, b, true));
}
BENCHMARK(BM_LateInteraction)->Arg(32)->Arg(128)->Arg(256);

void BM_LateInteractionReference(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Rng rng(1);
  Matrix<double> a(n, 256), b(n, 256);
  for (double& v : a.reshaped()) v = rng.uniform(-1, 1);
  for (double& v : b.reshaped()) v = rng.uniform(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(late_interaction_reference(a, b, true));
}
BENCHMARK(BM_LateInteractionReference)->Arg(32)->Arg(128);

// Default-size encoder (d=256, H=4, B=2, L=256) over MSAs of depth R.
void BM_EncodeForward(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto& data = bench_data();
  const NGramIndex index = NGramIndex::build(data.functions);
  const Vocabulary vocab = Vocabulary::build(data.functions);
  const ModelParams<float> params = init_params({vocab.size(), 256, 256, 4, 2, 512, EnhancerMode::Full}, 1);
  const auto fns = functions();
  std::vector<MsaInput> inputs;
  for (std::size_t i = 0; i < 16; ++i) {
    inputs.push_back(make_msa_input(build_msa(*fns[i * 37 % fns.size()], data.functions, index, depth, 256), vocab));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(encode<float>(params, inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_EncodeForward)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
