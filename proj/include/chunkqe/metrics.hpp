#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chunkqe/ranked_list.hpp"
#include "chunkqe/trec_io.hpp"

namespace chunkqe {

/// |relevant (grade > 0) in the top min(k, |run|)| / k
double precision_at_k(const RankedList& run, const Qrels& qrels, std::size_t k = 20);

/// Linear gain: DCG_k = sum grade_i / log2(i + 1), normalised by the ideal
/// DCG over the query's judged grades. 0 when the query has no relevant docs.
double ndcg_at_k(const RankedList& run, const Qrels& qrels, std::size_t k = 20);

/// Average precision cut at k. The denominator is the total number of
/// relevant documents, including those ranked below k.
double map_at_k(const RankedList& run, const Qrels& qrels, std::size_t k);

struct Metric {
  enum class Kind { precision, ndcg, map };
  Kind kind = Kind::ndcg;
  std::size_t k = 20;

  /// Canonical name: "P@20", "NDCG@20", "MAP@100", "MAP@1000".
  std::string name() const;
  double evaluate(const RankedList& run, const Qrels& qrels) const;

  /// Accepts e.g. "P@20", "ndcg@20", "map@1k", "P_20", "ndcg_cut_20",
  /// "map_cut_100". Returns nullopt for anything else.
  static std::optional<Metric> parse(std::string_view text);

  friend bool operator==(const Metric&, const Metric&) = default;
};

/// P@20, NDCG@20, MAP@100, MAP@1000.
std::vector<Metric> standard_metrics();

/// Like Metric::parse but throws std::invalid_argument naming the metric.
Metric parse_metric(std::string_view text);

struct MetricReport {
  std::vector<Metric> metrics;
  std::vector<std::string> query_ids;        // evaluated queries, QueryIdLess order
  std::vector<std::vector<double>> values;   // values[metric][query]
  std::vector<std::string> unjudged;         // in the run but absent from qrels

  double mean(std::size_t metric) const;
  std::size_t metric_index(const Metric& metric) const;  // throws if absent
  /// trec_eval-like text: one line per (metric, query) and an "all" line.
  std::string to_text(bool per_query = true) const;
  std::string to_json() const;
};

/// Evaluates every run query that has judgments. Queries without judgments
/// are excluded from means and listed in `unjudged`.
MetricReport evaluate(const RunSet& run, const Qrels& qrels, std::span<const Metric> metrics);

}  // namespace chunkqe
