#pragma once

// Hashed n-gram vectors and an inverted index over a FunctionStore.
//
// Each contiguous window of n token texts is hashed (FNV-1a over the texts
// joined by 0x1F) and reduced modulo the bucket count. Counts are integers,
// so dot products and squared norms are exact and the index and a brute-force
// scan produce bit-identical cosines.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "alphacc/corpus.hpp"

namespace alphacc {

inline constexpr std::uint32_t kDefaultNgram = 5;
inline constexpr std::uint32_t kDefaultBuckets = 1u << 20;

struct NGramVector {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> buckets;  // (bucket, count), ascending bucket
  std::uint64_t squared_norm = 0;
  double norm = 0.0;

  bool empty() const { return buckets.empty(); }
};

NGramVector ngram_vector(const std::vector<Token>& tokens, std::uint32_t n = kDefaultNgram,
                         std::uint32_t bucket_count = kDefaultBuckets);

std::uint64_t dot(const NGramVector& a, const NGramVector& b);

/// dot / (|a| |b|); 0 when either side is empty.
double cosine(const NGramVector& a, const NGramVector& b);

struct ScoredId {
  std::string id;
  double score = 0.0;
};

class NGramIndex {
 public:
  NGramIndex() = default;

  /// Vectors are computed on `threads` workers and merged in id order.
  static NGramIndex build(const FunctionStore& store, std::uint32_t n = kDefaultNgram,
                          std::uint32_t bucket_count = kDefaultBuckets, unsigned threads = 1);

  std::uint32_t n() const { return n_; }
  std::uint32_t bucket_count() const { return bucket_count_; }
  std::size_t function_count() const { return ids_.size(); }
  std::uint64_t store_digest() const { return store_digest_; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t posting_count() const { return postings_.size(); }

  /// Candidates with cosine > 0, excluding `exclude_id`, ordered by
  /// (cosine desc, id asc), truncated to k.
  std::vector<ScoredId> search(const NGramVector& query, const std::string& exclude_id, std::size_t k) const;

  /// Digest of the index contents (parameters, ids, postings).
  std::uint64_t digest() const;

  void save(const std::filesystem::path& path, const std::string& provenance_json = "{}") const;
  static NGramIndex load(const std::filesystem::path& path);
  const std::string& provenance() const { return provenance_; }

 private:
  struct Posting {
    std::uint32_t function = 0;
    std::uint32_t count = 0;
  };

  std::uint32_t n_ = kDefaultNgram;
  std::uint32_t bucket_count_ = kDefaultBuckets;
  std::uint64_t store_digest_ = 0;
  std::vector<std::string> ids_;                // ascending
  std::vector<std::uint64_t> squared_norms_;    // per function
  std::vector<std::uint32_t> bucket_keys_;      // ascending distinct buckets
  std::vector<std::uint64_t> bucket_offsets_;   // size bucket_keys_ + 1
  std::vector<Posting> postings_;               // grouped by bucket, ascending function
  std::string provenance_ = "{}";
};

/// Top-k retrieval with the fill rule: if fewer than k candidates have
/// cosine > 0, the remainder repeats the query's own id.
std::vector<std::string> retrieve_topk(const std::vector<Token>& query_tokens, const std::string& query_id,
                                       const NGramIndex& index, std::size_t k = 4);

}  // namespace alphacc
