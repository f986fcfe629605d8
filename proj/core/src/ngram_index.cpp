#include "alphacc/ngram_index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <thread>
#include <unordered_map>

#include "alphacc/binary_io.hpp"
#include "alphacc/error.hpp"
#include "alphacc/hash.hpp"

namespace alphacc {

namespace {
constexpr std::uint32_t kIndexVersion = 1;
constexpr char kUnitSeparator = '\x1f';

double norm_of(std::uint64_t squared) { return std::sqrt(static_cast<double>(squared)); }

// sqrt of the product, so a vector against itself gives exactly 1
double norm_product(std::uint64_t a, std::uint64_t b) {
  return std::sqrt(static_cast<double>(a) * static_cast<double>(b));
}
}  // namespace

NGramVector ngram_vector(const std::vector<Token>& tokens, std::uint32_t n, std::uint32_t bucket_count) {
  if (n == 0) throw ConfigError("n-gram size must be >= 1");
  if (bucket_count == 0) throw ConfigError("bucket count must be >= 1");
  NGramVector vec;
  if (tokens.size() < n) return vec;

  std::unordered_map<std::uint32_t, std::uint32_t> counts;
  std::string joined;
  for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
    joined.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k) joined.push_back(kUnitSeparator);
      joined += tokens[start + k].text;
    }
    ++counts[static_cast<std::uint32_t>(fnv1a64(joined) % bucket_count)];
  }
  vec.buckets.assign(counts.begin(), counts.end());
  std::sort(vec.buckets.begin(), vec.buckets.end());
  for (const auto& [bucket, count] : vec.buckets) vec.squared_norm += std::uint64_t{count} * count;
  vec.norm = norm_of(vec.squared_norm);
  return vec;
}

std::uint64_t dot(const NGramVector& a, const NGramVector& b) {
  std::uint64_t acc = 0;
  auto ia = a.buckets.begin();
  auto ib = b.buckets.begin();
  while (ia != a.buckets.end() && ib != b.buckets.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc += std::uint64_t{ia->second} * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

double cosine(const NGramVector& a, const NGramVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double c = static_cast<double>(dot(a, b)) / norm_product(a.squared_norm, b.squared_norm);
  return std::min(c, 1.0);
}

NGramIndex NGramIndex::build(const FunctionStore& store, std::uint32_t n, std::uint32_t bucket_count,
                             unsigned threads) {
  NGramIndex index;
  index.n_ = n;
  index.bucket_count_ = bucket_count;
  index.store_digest_ = store.digest();

  std::vector<const StoredFunction*> fns;
  for (const auto& [id, fn] : store) {
    index.ids_.push_back(id);
    fns.push_back(&fn);
  }

  std::vector<NGramVector> vectors(fns.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(fns.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < fns.size(); ++i) vectors[i] = ngram_vector(fns[i]->tokens, n, bucket_count);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < fns.size(); i += threads) vectors[i] = ngram_vector(fns[i]->tokens, n, bucket_count);
      });
    }
    for (auto& th : pool) th.join();
  }

  struct Entry {
    std::uint32_t bucket, function, count;
  };
  std::vector<Entry> entries;
  index.squared_norms_.resize(fns.size());
  for (std::size_t f = 0; f < vectors.size(); ++f) {
    index.squared_norms_[f] = vectors[f].squared_norm;
    for (const auto& [bucket, count] : vectors[f].buckets) {
      entries.push_back({bucket, static_cast<std::uint32_t>(f), count});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.bucket != b.bucket ? a.bucket < b.bucket : a.function < b.function;
  });
  index.postings_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 || entries[i].bucket != entries[i - 1].bucket) {
      index.bucket_keys_.push_back(entries[i].bucket);
      index.bucket_offsets_.push_back(i);
    }
    index.postings_.push_back({entries[i].function, entries[i].count});
  }
  index.bucket_offsets_.push_back(entries.size());
  return index;
}

std::vector<ScoredId> NGramIndex::search(const NGramVector& query, const std::string& exclude_id,
                                         std::size_t k) const {
  std::vector<std::uint64_t> acc(ids_.size(), 0);
  std::vector<std::uint32_t> touched;
  for (const auto& [bucket, count] : query.buckets) {
    const auto it = std::lower_bound(bucket_keys_.begin(), bucket_keys_.end(), bucket);
    if (it == bucket_keys_.end() || *it != bucket) continue;
    const auto b = static_cast<std::size_t>(it - bucket_keys_.begin());
    for (std::uint64_t p = bucket_offsets_[b]; p < bucket_offsets_[b + 1]; ++p) {
      const Posting& post = postings_[p];
      if (acc[post.function] == 0) touched.push_back(post.function);
      acc[post.function] += std::uint64_t{count} * post.count;
    }
  }

  std::vector<ScoredId> scored;
  scored.reserve(touched.size());
  for (std::uint32_t f : touched) {
    if (ids_[f] == exclude_id) continue;
    const double c = std::min(1.0, static_cast<double>(acc[f]) / norm_product(query.squared_norm, squared_norms_[f]));
    if (c > 0.0) scored.push_back({ids_[f], c});
  }
  const auto by_rank = [](const ScoredId& a, const ScoredId& b) {
    return a.score != b.score ? a.score > b.score : a.id < b.id;
  };
  if (scored.size() > k) {
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end(), by_rank);
    scored.resize(k);
  } else {
    std::sort(scored.begin(), scored.end(), by_rank);
  }
  return scored;
}

std::uint64_t NGramIndex::digest() const {
  Fnv1a h;
  h.value(n_).value(bucket_count_).value(store_digest_);
  for (const auto& id : ids_) h.str(id);
  for (std::size_t b = 0; b < bucket_keys_.size(); ++b) {
    h.value(bucket_keys_[b]);
    for (std::uint64_t p = bucket_offsets_[b]; p < bucket_offsets_[b + 1]; ++p) {
      h.value(postings_[p].function).value(postings_[p].count);
    }
  }
  return h.digest();
}

void NGramIndex::save(const std::filesystem::path& path, const std::string& provenance_json) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  io::Writer w(out);
  w.magic("ACCI");
  w.u32(kIndexVersion);
  w.u32(n_);
  w.u32(bucket_count_);
  w.u32(static_cast<std::uint32_t>(ids_.size()));
  w.u64(store_digest_);
  for (const auto& id : ids_) w.str(id);
  w.u64(postings_.size());
  for (std::size_t b = 0; b < bucket_keys_.size(); ++b) {
    for (std::uint64_t p = bucket_offsets_[b]; p < bucket_offsets_[b + 1]; ++p) {
      w.u32(bucket_keys_[b]);
      w.u32(postings_[p].function);
      w.u32(postings_[p].count);
    }
  }
  w.str(provenance_json);
  if (!out) throw DataError("write failed: " + path.string());
}

NGramIndex NGramIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  io::Reader r(in, path.string());
  r.expect_magic("ACCI");
  if (const auto v = r.u32(); v != kIndexVersion) throw DataError("unsupported index version " + std::to_string(v));
  NGramIndex index;
  index.n_ = r.u32();
  index.bucket_count_ = r.u32();
  const std::uint32_t functions = r.u32();
  index.store_digest_ = r.u64();
  index.ids_.reserve(functions);
  for (std::uint32_t i = 0; i < functions; ++i) index.ids_.push_back(r.str());
  index.squared_norms_.assign(functions, 0);
  const std::uint64_t count = r.u64();
  index.postings_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint32_t bucket = r.u32();
    const std::uint32_t function = r.u32();
    const std::uint32_t c = r.u32();
    if (function >= functions) throw DataError(path.string() + ": posting references function " + std::to_string(function));
    if (index.bucket_keys_.empty() || index.bucket_keys_.back() != bucket) {
      if (!index.bucket_keys_.empty() && bucket < index.bucket_keys_.back()) {
        throw DataError(path.string() + ": postings not sorted by bucket");
      }
      index.bucket_keys_.push_back(bucket);
      index.bucket_offsets_.push_back(i);
    }
    index.postings_.push_back({function, c});
    index.squared_norms_[function] += std::uint64_t{c} * c;
  }
  index.bucket_offsets_.push_back(count);
  index.provenance_ = r.str();
  return index;
}

std::vector<std::string> retrieve_topk(const std::vector<Token>& query_tokens, const std::string& query_id,
                                       const NGramIndex& index, std::size_t k) {
  const NGramVector qv = ngram_vector(query_tokens, index.n(), index.bucket_count());
  std::vector<std::string> out;
  out.reserve(k);
  if (!qv.empty()) {
    for (auto& hit : index.search(qv, query_id, k)) out.push_back(std::move(hit.id));
  }
  while (out.size() < k) out.push_back(query_id);
  return out;
}

}  // namespace alphacc
