#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "chunkqe/metrics.hpp"
#include "chunkqe/ranked_list.hpp"
#include "chunkqe/trec_io.hpp"

namespace chunkqe {

inline constexpr std::size_t kFoldCount = 5;

/// Five disjoint query-id sets. For test fold f, fold (f + 1) % 5 validates
/// and the remaining three train.
struct FoldPlan {
  std::array<std::vector<std::string>, kFoldCount> folds;

  static constexpr std::size_t validation_fold(std::size_t test) { return (test + 1) % kFoldCount; }
  static std::vector<std::size_t> train_folds(std::size_t test);
  std::vector<std::string> query_ids() const;  // all ids, QueryIdLess order
  std::size_t size() const;
};

/// Sorts ids (numerically when all-digit) and assigns the i-th to fold i % 5.
/// Throws with fewer than 5 ids or on duplicates.
FoldPlan round_robin_folds(std::vector<std::string> query_ids);

/// Builds a plan from an explicit assignment. When `expected` is non-empty the
/// assignment must partition exactly that set; the error lists every missing,
/// unknown or repeated id.
FoldPlan folds_from_assignment(std::span<const FoldAssignment> assignment,
                               std::span<const std::string> expected = {});

/// 0.1, 0.2, ..., 0.9 (computed as i / 10).
std::vector<double> interpolation_grid();

/// Produces the run for one (alpha, beta) cell.
using CellRunner = std::function<RunSet(double alpha, double beta)>;

struct GridChoice {
  double alpha = 0.0;
  double beta = 0.0;
  double score = 0.0;  // mean validation metric
};

/// Mean of `metric` over `query_ids`; judged queries missing from the run
/// score 0, unjudged ids are skipped. Throws if no id is judged.
double mean_over(std::span<const std::string> query_ids, const RunSet& run, const Qrels& qrels,
                 const Metric& metric);

/// Exhaustive search over interpolation_grid()^2 maximising mean validation
/// NDCG@20. Ties go to the smaller alpha, then the smaller beta.
GridChoice grid_search_interpolation(std::span<const std::string> validation_ids, const Qrels& qrels,
                                     const CellRunner& runner);

struct FoldReport {
  std::size_t fold = 0;
  GridChoice choice;
  std::vector<double> test_means;  // per metric over this fold's test queries
};

struct CrossValidationReport {
  std::vector<FoldReport> folds;
  MetricReport pooled;  // per-query values of every test query, pooled

  std::string to_text() const;
  std::string to_json() const;
};

/// Tunes (alpha, beta) on each validation fold, applies it to the test fold
/// and pools the test queries' per-query values. Each grid cell is run once.
CrossValidationReport cross_validate(const FoldPlan& plan, const Qrels& qrels,
                                     const CellRunner& runner, std::span<const Metric> metrics);

}  // namespace chunkqe
