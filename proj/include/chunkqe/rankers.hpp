#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "chunkqe/corpus.hpp"
#include "chunkqe/inverted_index.hpp"
#include "chunkqe/ranked_list.hpp"

namespace chunkqe {

enum class RetrievalModel { dph, bm25, ql };

std::optional<RetrievalModel> parse_retrieval_model(std::string_view name);
std::string_view to_string(RetrievalModel model);

struct Bm25Params {
  double k1 = 0.9;
  double b = 0.4;
};

struct QlParams {
  double mu = 1000.0;  // Dirichlet prior
};

struct RankerParams {
  Bm25Params bm25;
  QlParams ql;
};

/// Query as a bag of weighted terms. Weights are finite and non-negative.
struct WeightedQuery {
  std::string query_id;
  std::map<std::string, double> term_weights;

  /// Stopwords dropped; each remaining term weighted qtf / max qtf, so a
  /// query without repeated terms has every weight 1.0.
  static WeightedQuery from_query(const Query& query);
  double total_weight() const;
  bool empty() const noexcept { return term_weights.empty(); }
};

/// Scores every document that contains at least one positively weighted
/// query term and returns the top `k` (ties by ascending doc_id).
///
/// BM25:  w * ln(1 + (N - df + 0.5)/(df + 0.5)) * tf(k1 + 1)/(tf + k1(1 - b + b dl/avgdl))
/// QL:    w * ln((tf + mu cf/T)/(dl + mu)) summed over every query term with cf > 0
/// DPH:   w * (1 - f)^2/(tf + 1) * (tf log2(tf avgdl/dl * N/cf) + 0.5 log2(2 pi tf (1 - f))),
///        f = tf/dl, taken as 0 when tf == dl
///
/// A query with no indexed terms yields an empty list. Throws if k == 0.
RankedList rank(const InvertedIndex& index, const WeightedQuery& query, RetrievalModel model,
                std::size_t k, const RankerParams& params = {});
RankedList rank(const InvertedIndex& index, const Query& query, RetrievalModel model,
                std::size_t k, const RankerParams& params = {});

}  // namespace chunkqe
