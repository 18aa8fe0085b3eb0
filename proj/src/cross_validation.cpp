#include "chunkqe/cross_validation.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace chunkqe {

namespace {

const Metric kValidationMetric{Metric::Kind::ndcg, 20};

/// Per-query values of one grid cell for every metric; missing queries score 0.
struct CellValues {
  std::vector<std::map<std::string, double, QueryIdLess>> by_metric;
};

CellValues evaluate_cell(const RunSet& run, const Qrels& qrels, std::span<const std::string> ids,
                         std::span<const Metric> metrics) {
  CellValues cell;
  cell.by_metric.resize(metrics.size());
  for (const auto& qid : ids) {
    if (!qrels.has_query(qid)) continue;
    auto it = run.find(qid);
    const RankedList empty{qid, {}};
    const RankedList& list = it == run.end() ? empty : it->second;
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      cell.by_metric[m][qid] = metrics[m].evaluate(list, qrels);
    }
  }
  return cell;
}

double mean_of(const std::map<std::string, double, QueryIdLess>& values,
               std::span<const std::string> ids) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& qid : ids) {
    auto it = values.find(qid);
    if (it == values.end()) continue;
    sum += it->second;
    ++n;
  }
  if (n == 0) throw std::invalid_argument("no judged queries to average over");
  return sum / static_cast<double>(n);
}

}  // namespace

std::vector<std::size_t> FoldPlan::train_folds(std::size_t test) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < kFoldCount; ++f) {
    if (f != test && f != validation_fold(test)) out.push_back(f);
  }
  return out;
}

std::vector<std::string> FoldPlan::query_ids() const {
  std::vector<std::string> ids;
  for (const auto& f : folds) ids.insert(ids.end(), f.begin(), f.end());
  std::sort(ids.begin(), ids.end(), QueryIdLess{});
  return ids;
}

std::size_t FoldPlan::size() const {
  std::size_t n = 0;
  for (const auto& f : folds) n += f.size();
  return n;
}

FoldPlan round_robin_folds(std::vector<std::string> query_ids) {
  if (query_ids.size() < kFoldCount) {
    throw std::invalid_argument(
        fmt::format("round-robin folds need at least {} queries, got {}", kFoldCount, query_ids.size()));
  }
  std::sort(query_ids.begin(), query_ids.end(), QueryIdLess{});
  if (auto dup = std::adjacent_find(query_ids.begin(), query_ids.end()); dup != query_ids.end()) {
    throw std::invalid_argument(fmt::format("duplicate query id {}", *dup));
  }
  FoldPlan plan;
  for (std::size_t i = 0; i < query_ids.size(); ++i) plan.folds[i % kFoldCount].push_back(query_ids[i]);
  return plan;
}

FoldPlan folds_from_assignment(std::span<const FoldAssignment> assignment,
                               std::span<const std::string> expected) {
  FoldPlan plan;
  std::set<std::string, QueryIdLess> seen;
  std::vector<std::string> problems;
  for (const auto& a : assignment) {
    if (a.fold >= kFoldCount) {
      problems.push_back(fmt::format("query {} has fold index {} (must be < {})", a.query_id, a.fold, kFoldCount));
      continue;
    }
    if (!seen.insert(a.query_id).second) {
      problems.push_back(fmt::format("query {} assigned more than once", a.query_id));
      continue;
    }
    plan.folds[a.fold].push_back(a.query_id);
  }
  if (!expected.empty()) {
    const std::set<std::string, QueryIdLess> want(expected.begin(), expected.end());
    for (const auto& qid : want) {
      if (!seen.count(qid)) problems.push_back(fmt::format("query {} is not in any fold", qid));
    }
    for (const auto& qid : seen) {
      if (!want.count(qid)) problems.push_back(fmt::format("query {} is not a known query", qid));
    }
  }
  if (!problems.empty()) {
    std::string msg = "fold assignment is not a partition of the query set:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw std::invalid_argument(msg);
  }
  for (auto& f : plan.folds) std::sort(f.begin(), f.end(), QueryIdLess{});
  return plan;
}

std::vector<double> interpolation_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
  return grid;
}

double mean_over(std::span<const std::string> query_ids, const RunSet& run, const Qrels& qrels,
                 const Metric& metric) {
  const auto cell = evaluate_cell(run, qrels, query_ids, std::span<const Metric>(&metric, 1));
  return mean_of(cell.by_metric[0], query_ids);
}

GridChoice grid_search_interpolation(std::span<const std::string> validation_ids, const Qrels& qrels,
                                     const CellRunner& runner) {
  if (validation_ids.empty()) throw std::invalid_argument("validation set is empty");
  std::optional<GridChoice> best;
  for (double alpha : interpolation_grid()) {
    for (double beta : interpolation_grid()) {
      const double score = mean_over(validation_ids, runner(alpha, beta), qrels, kValidationMetric);
      if (!best || score > best->score) best = GridChoice{alpha, beta, score};
    }
  }
  return *best;
}

CrossValidationReport cross_validate(const FoldPlan& plan, const Qrels& qrels,
                                     const CellRunner& runner, std::span<const Metric> metrics) {
  // Validation NDCG@20 goes last so it is always available.
  std::vector<Metric> all(metrics.begin(), metrics.end());
  all.push_back(kValidationMetric);
  const std::size_t validation_index = all.size() - 1;

  const auto ids = plan.query_ids();
  const auto grid = interpolation_grid();
  std::vector<CellValues> cells;
  cells.reserve(grid.size() * grid.size());
  for (double alpha : grid) {
    for (double beta : grid) cells.push_back(evaluate_cell(runner(alpha, beta), qrels, ids, all));
  }

  CrossValidationReport report;
  report.pooled.metrics.assign(metrics.begin(), metrics.end());
  report.pooled.values.resize(metrics.size());
  std::map<std::string, std::vector<double>, QueryIdLess> pooled;

  for (std::size_t test = 0; test < kFoldCount; ++test) {
    const auto& validation = plan.folds[FoldPlan::validation_fold(test)];
    if (validation.empty()) throw std::invalid_argument(fmt::format("validation fold for test fold {} is empty", test));
    std::size_t best = 0;
    double best_score = 0.0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const double score = mean_of(cells[c].by_metric[validation_index], validation);
      if (c == 0 || score > best_score) {
        best = c;
        best_score = score;
      }
    }
    FoldReport fold;
    fold.fold = test;
    fold.choice = GridChoice{grid[best / grid.size()], grid[best % grid.size()], best_score};
    const auto& test_ids = plan.folds[test];
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      const auto& values = cells[best].by_metric[m];
      fold.test_means.push_back(mean_of(values, test_ids));
      for (const auto& qid : test_ids) {
        if (auto it = values.find(qid); it != values.end()) pooled[qid].push_back(it->second);
      }
    }
    report.folds.push_back(std::move(fold));
  }
  for (const auto& [qid, values] : pooled) {
    report.pooled.query_ids.push_back(qid);
    for (std::size_t m = 0; m < metrics.size(); ++m) report.pooled.values[m].push_back(values[m]);
  }
  return report;
}

std::string CrossValidationReport::to_text() const {
  std::string out = "fold";
  for (const auto& m : pooled.metrics) out += fmt::format("\t{}", m.name());
  out += "\talpha\tbeta\tvalidation NDCG@20\n";
  for (const auto& f : folds) {
    out += fmt::format("{}", f.fold);
    for (double v : f.test_means) out += fmt::format("\t{:.4f}", v);
    out += fmt::format("\t{:.1f}\t{:.1f}\t{:.4f}\n", f.choice.alpha, f.choice.beta, f.choice.score);
  }
  out += "pooled";
  for (std::size_t m = 0; m < pooled.metrics.size(); ++m) out += fmt::format("\t{:.4f}", pooled.mean(m));
  out += fmt::format("\t-\t-\t-\n");
  return out;
}

std::string CrossValidationReport::to_json() const {
  nlohmann::json doc;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& f : folds) {
    nlohmann::json row = {{"fold", f.fold},
                          {"alpha", f.choice.alpha},
                          {"beta", f.choice.beta},
                          {"validation_ndcg@20", f.choice.score}};
    for (std::size_t m = 0; m < pooled.metrics.size(); ++m) row[pooled.metrics[m].name()] = f.test_means[m];
    rows.push_back(std::move(row));
  }
  doc["folds"] = std::move(rows);
  doc["pooled"] = nlohmann::json::parse(pooled.to_json());
  return doc.dump(2);
}

}  // namespace chunkqe
