#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chunkqe/corpus.hpp"
#include "chunkqe/trec_io.hpp"

namespace chunkqe {

/// splitmix64. Used instead of <random> distributions, whose output is not
/// specified across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t state_;
};

struct SyntheticOptions {
  std::size_t docs = 1000;
  std::size_t queries = 10;
  std::size_t vocabulary = 3000;
  std::size_t min_length = 60;
  std::size_t max_length = 360;
  std::size_t topic_terms = 6;
  std::size_t relevant_per_query = 25;
  std::uint64_t seed = 42;
};

/// A topical collection: each query owns a few topic terms that its relevant
/// documents mention; background words follow a Zipf-like law.
struct SyntheticCollection {
  std::vector<Document> documents;
  std::vector<Query> queries;
  Qrels qrels;

  std::string documents_tsv() const;
  std::string queries_tsv() const;
  std::string qrels_text() const;
};

/// Same options, same collection, on every platform.
SyntheticCollection generate_collection(const SyntheticOptions& options);

}  // namespace chunkqe
