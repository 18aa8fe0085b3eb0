#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chunkqe {

/// Orders query ids numerically when both are all-digit strings (TREC topic
/// numbers), lexicographically otherwise; numeric ids sort first.
struct QueryIdLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept;
};

struct RunEntry {
  std::string doc_id;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based
};

/// One query's result list. Scores are non-increasing, ranks run 1..n and
/// doc ids are unique.
struct RankedList {
  std::string query_id;
  std::vector<RunEntry> entries;

  /// Sorts by descending score with ascending doc_id as the tie-break, keeps
  /// the first `k` and assigns ranks. Throws on NaN scores or duplicate ids.
  static RankedList from_scores(std::string query_id,
                                std::vector<std::pair<std::string, double>> scored,
                                std::size_t k);

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  RankedList truncated(std::size_t k) const;
  /// Renumbers ranks 1..n in the current entry order.
  void renumber();
};

/// All queries of one run, iterated in QueryIdLess order.
using RunSet = std::map<std::string, RankedList, QueryIdLess>;

}  // namespace chunkqe
