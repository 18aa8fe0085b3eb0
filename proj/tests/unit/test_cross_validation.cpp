#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <map>
#include <set>

#include "chunkqe/cross_validation.hpp"
#include "test_support.hpp"

using namespace chunkqe;

namespace {

std::vector<std::string> ids_between(int lo, int hi) {
  std::vector<std::string> out;
  for (int i = lo; i <= hi; ++i) out.push_back(std::to_string(i));
  return out;
}

int cell_key(double alpha, double beta) {
  return static_cast<int>(std::lround(alpha * 10)) * 10 + static_cast<int>(std::lround(beta * 10));
}

/// Each (cell, query) places the single relevant document at a random rank.
struct GridFixture {
  std::vector<std::string> queries;
  Qrels qrels;
  std::map<int, RunSet> runs;
  mutable std::size_t calls = 0;

  GridFixture(const std::vector<std::string>& ids, std::uint64_t seed, std::size_t max_rank) : queries(ids) {
    testing::Gen gen(seed);
    for (const auto& q : queries) qrels.add(q, "rel", 1);
    for (double a : interpolation_grid()) {
      for (double b : interpolation_grid()) {
        RunSet run;
        for (const auto& q : queries) {
          const auto pos = gen.below(max_rank);
          std::vector<std::pair<std::string, double>> scored;
          for (std::size_t i = 0; i < max_rank; ++i) {
            scored.emplace_back(i == pos ? "rel" : "x" + std::to_string(i), static_cast<double>(max_rank - i));
          }
          run.emplace(q, RankedList::from_scores(q, scored, max_rank));
        }
        runs.emplace(cell_key(a, b), std::move(run));
      }
    }
  }

  CellRunner runner() const {
    return [this](double a, double b) {
      ++calls;
      return runs.at(cell_key(a, b));
    };
  }
};

}  // namespace

TEST_CASE("round-robin folds for 701..710") {
  const auto plan = round_robin_folds(ids_between(701, 710));
  CHECK(plan.folds[0] == std::vector<std::string>{"701", "706"});
  CHECK(plan.folds[1] == std::vector<std::string>{"702", "707"});
  CHECK(plan.folds[4] == std::vector<std::string>{"705", "710"});
  CHECK(plan.size() == 10);
}

TEST_CASE("round-robin folds follow i mod 5 regardless of input order") {
  auto ids = ids_between(701, 850);
  testing::Gen gen(101);
  for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[gen.below(i)]);
  const auto plan = round_robin_folds(ids);
  for (std::size_t f = 0; f < kFoldCount; ++f) {
    CHECK(plan.folds[f].size() == 30);
    for (const auto& id : plan.folds[f]) CHECK(static_cast<std::size_t>(std::stoi(id) - 701) % 5 == f);
  }
  CHECK(plan.query_ids() == ids_between(701, 850));
}

TEST_CASE("fold roles") {
  for (std::size_t t = 0; t < kFoldCount; ++t) {
    const auto v = FoldPlan::validation_fold(t);
    const auto train = FoldPlan::train_folds(t);
    CHECK(v != t);
    CHECK(train.size() == 3);
    std::set<std::size_t> all(train.begin(), train.end());
    all.insert(t);
    all.insert(v);
    CHECK(all.size() == kFoldCount);
  }
  CHECK(FoldPlan::validation_fold(4) == 0);
}

TEST_CASE("fold construction errors") {
  CHECK_THROWS(round_robin_folds(ids_between(1, 4)));
  CHECK_THROWS(round_robin_folds({"1", "2", "3", "4", "5", "5"}));
  const std::vector<FoldAssignment> assignment{{0, "1"}, {1, "2"}, {2, "3"}, {3, "4"}, {4, "5"}, {4, "5"}, {1, "9"}};
  const auto expected = ids_between(1, 6);
  try {
    folds_from_assignment(assignment, expected);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("6") != std::string::npos);
    CHECK(what.find("9") != std::string::npos);
    CHECK(what.find("5") != std::string::npos);
  }
  const std::vector<FoldAssignment> good{{0, "1"}, {1, "2"}, {2, "3"}, {3, "4"}, {4, "5"}};
  CHECK(folds_from_assignment(good).folds[3] == std::vector<std::string>{"4"});
  CHECK_THROWS(folds_from_assignment(std::vector<FoldAssignment>{{5, "1"}}));
}

TEST_CASE("interpolation grid") {
  const auto g = interpolation_grid();
  REQUIRE(g.size() == 9);
  for (int i = 1; i <= 9; ++i) CHECK(g[i - 1] == i / 10.0);
}

TEST_CASE("grid search returns the exhaustive argmax with the tie-break") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const GridFixture fx(ids_between(1, 6), seed, 4);
    double best = -1, ba = 0, bb = 0;
    for (double a : interpolation_grid()) {
      for (double b : interpolation_grid()) {
        double sum = 0;
        for (const auto& q : fx.queries) {
          const auto& list = fx.runs.at(cell_key(a, b)).at(q);
          for (const auto& e : list.entries) {
            if (e.doc_id == "rel") sum += 1.0 / std::log2(static_cast<double>(e.rank) + 1.0);
          }
        }
        const double mean = sum / static_cast<double>(fx.queries.size());
        if (mean > best) best = mean, ba = a, bb = b;
      }
    }
    const auto choice = grid_search_interpolation(fx.queries, fx.qrels, fx.runner());
    CHECK(choice.alpha == ba);
    CHECK(choice.beta == bb);
    CHECK(std::fabs(choice.score - best) <= 1e-12);
  }
}

TEST_CASE("a flat grid picks the smallest alpha and beta") {
  GridFixture fx(ids_between(1, 3), 3, 1);
  const auto choice = grid_search_interpolation(fx.queries, fx.qrels, fx.runner());
  CHECK(choice.alpha == 0.1);
  CHECK(choice.beta == 0.1);
  CHECK(choice.score == 1.0);
  CHECK_THROWS(grid_search_interpolation(std::vector<std::string>{}, fx.qrels, fx.runner()));
}

TEST_CASE("mean_over counts missing judged queries as zero") {
  Qrels q;
  q.add("1", "a", 1);
  q.add("2", "a", 1);
  RunSet run;
  run.emplace("1", RankedList::from_scores("1", {{"a", 1.0}}, 10));
  const std::vector<std::string> ids{"1", "2", "3"};
  CHECK(mean_over(ids, run, q, parse_metric("P@1")) == 0.5);
  CHECK_THROWS(mean_over(std::vector<std::string>{"3"}, run, q, parse_metric("P@1")));
}

TEST_CASE("cross validation tunes per fold, runs each cell once and pools per query") {
  const GridFixture fx(ids_between(701, 725), 11, 6);
  const auto plan = round_robin_folds(fx.queries);
  const auto metrics = standard_metrics();
  const auto report = cross_validate(plan, fx.qrels, fx.runner(), metrics);
  CHECK(fx.calls == 81);
  REQUIRE(report.folds.size() == kFoldCount);
  CHECK(report.pooled.query_ids.size() == 25);

  const auto ndcg = report.pooled.metric_index(parse_metric("NDCG@20"));
  double weighted = 0;
  for (const auto& f : report.folds) {
    const auto& test_ids = plan.folds[f.fold];
    const auto& validation_ids = plan.folds[FoldPlan::validation_fold(f.fold)];
    const auto expected = grid_search_interpolation(validation_ids, fx.qrels, fx.runner());
    CHECK(f.choice.alpha == expected.alpha);
    CHECK(f.choice.beta == expected.beta);
    const auto& chosen = fx.runs.at(cell_key(f.choice.alpha, f.choice.beta));
    CHECK(f.test_means[ndcg] == doctest::Approx(mean_over(test_ids, chosen, fx.qrels, parse_metric("NDCG@20"))));
    weighted += f.test_means[ndcg] * static_cast<double>(test_ids.size());
  }
  CHECK(report.pooled.mean(ndcg) == doctest::Approx(weighted / 25.0).epsilon(1e-12));
  CHECK(nlohmann::json::parse(report.to_json()).is_object());
  CHECK_FALSE(report.to_text().empty());
}
