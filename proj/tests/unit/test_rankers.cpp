#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/core.h>

#include "chunkqe/rankers.hpp"
#include "chunkqe/text.hpp"
#include "lexical_oracle.hpp"
#include "test_support.hpp"

using namespace chunkqe;

using testing::Collection;

namespace {

void check_matches_oracle(const InvertedIndex& index, const Collection& oracle, const WeightedQuery& q,
                          RetrievalModel model) {
  const auto got = rank(index, q, model, 1000);
  const auto want = oracle.rank(model, q.term_weights);
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got.entries[i].doc_id == want[i].first);
    CHECK(got.entries[i].score == doctest::Approx(want[i].second).epsilon(1e-12));
  }
}

constexpr RetrievalModel kModels[] = {RetrievalModel::bm25, RetrievalModel::ql, RetrievalModel::dph};

}  // namespace

TEST_CASE("toy corpus BM25 scores equal the formula") {
  const auto docs = read_documents(testing::fixture("toy_corpus.tsv"));
  const auto index = InvertedIndex::build(docs);
  const Collection oracle(docs);
  const auto q = Query::make("1", "quick fox");
  const auto run = rank(index, q, RetrievalModel::bm25, 10);
  // d1, d2, d4 contain a query term; d3 and d5 do not.
  REQUIRE(run.size() == 3);
  // Hand evaluation for d4: tf(quick)=3, dl=7, df(quick)=2, N=5, avgdl=37/5.
  const double avgdl = 37.0 / 5.0;
  const double idf_quick = std::log(1 + (5 - 2 + 0.5) / (2 + 0.5));
  const double d4 = idf_quick * 3 * 1.9 / (3 + 0.9 * (0.6 + 0.4 * 7 / avgdl));
  CHECK(oracle.avgdl == doctest::Approx(avgdl));
  for (const auto& e : run.entries) {
    if (e.doc_id == "d4") CHECK(e.score == doctest::Approx(d4).epsilon(1e-12));
  }
  check_matches_oracle(index, oracle, WeightedQuery::from_query(q), RetrievalModel::bm25);
}

TEST_CASE("all models match brute force on the fixture corpus") {
  const auto docs = read_documents(testing::fixture("corpus.tsv"));
  const auto index = InvertedIndex::build(docs);
  const Collection oracle(docs);
  for (const auto& q : read_queries(testing::fixture("queries.tsv"))) {
    for (auto model : kModels) check_matches_oracle(index, oracle, WeightedQuery::from_query(q), model);
  }
}

TEST_CASE("random weighted queries match brute force") {
  testing::Gen gen(21);
  for (int round = 0; round < 30; ++round) {
    std::vector<Document> docs;
    const auto n = gen.between(2, 20);
    for (std::size_t i = 0; i < n; ++i) docs.push_back(Document::make(fmt::format("d{:02}", i), gen.text(gen.between(1, 60), 20)));
    const auto index = InvertedIndex::build(docs);
    const Collection oracle(docs);
    WeightedQuery q{"q", {}};
    const auto terms = gen.between(1, 4);
    for (std::size_t i = 0; i < terms; ++i) q.term_weights[gen.word(24)] = gen.uniform(0.1, 2.0);
    for (auto model : kModels) check_matches_oracle(index, oracle, q, model);
  }
}

TEST_CASE("single matching document ranks first under every model") {
  const auto index = InvertedIndex::build(read_documents(testing::fixture("corpus.tsv")));
  for (auto model : kModels) {
    const auto run = rank(index, Query::make("q", "parrotfish"), model, 10);
    REQUIRE(run.size() == 1);
    CHECK(run.entries[0].doc_id == "doc02");
  }
}

TEST_CASE("identical documents tie and are ordered by doc id") {
  const auto index = InvertedIndex::build(
      {Document::make("b", "red apple"), Document::make("a", "red apple"), Document::make("c", "green pear")});
  for (auto model : kModels) {
    const auto run = rank(index, Query::make("q", "apple"), model, 10);
    REQUIRE(run.size() == 2);
    CHECK(run.entries[0].score == run.entries[1].score);
    CHECK(run.entries[0].doc_id == "a");
  }
}

TEST_CASE("unindexed queries give an empty list; k must be positive") {
  const auto index = InvertedIndex::build(read_documents(testing::fixture("toy_corpus.tsv")));
  CHECK(rank(index, Query::make("q", "zebra"), RetrievalModel::dph, 10).empty());
  CHECK(rank(index, Query::make("q", "the"), RetrievalModel::bm25, 10).empty());  // stopword only
  CHECK_THROWS(rank(index, Query::make("q", "fox"), RetrievalModel::bm25, 0));
  WeightedQuery bad{"q", {{"fox", -1.0}}};
  CHECK_THROWS(rank(index, bad, RetrievalModel::bm25, 10));
}

TEST_CASE("scaling the query weights leaves every ranking unchanged") {
  testing::Gen gen(22);
  const auto index = InvertedIndex::build(read_documents(testing::fixture("corpus.tsv")));
  for (const auto& q : read_queries(testing::fixture("queries.tsv"))) {
    const auto base = WeightedQuery::from_query(q);
    for (int round = 0; round < 5; ++round) {
      auto scaled = base;
      const double c = gen.uniform(0.05, 20.0);
      for (auto& [_, w] : scaled.term_weights) w *= c;
      for (auto model : kModels) {
        const auto a = rank(index, base, model, 100);
        const auto b = rank(index, scaled, model, 100);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.entries[i].doc_id == b.entries[i].doc_id);
      }
    }
  }
}

TEST_CASE("a document without query terms is never retrieved") {
  auto docs = read_documents(testing::fixture("corpus.tsv"));
  const auto before = InvertedIndex::build(docs);
  docs.push_back(Document::make("zz-unrelated", "quantum chromodynamics lattice gauge"));
  const auto after = InvertedIndex::build(docs);
  for (const auto& q : read_queries(testing::fixture("queries.tsv"))) {
    for (auto model : kModels) {
      const auto a = rank(before, q, model, 1000);
      const auto b = rank(after, q, model, 1000);
      CHECK(a.size() == b.size());
      for (const auto& e : b.entries) CHECK(e.doc_id != "zz-unrelated");
    }
  }
}

TEST_CASE("query weights follow qtf over max qtf without stopwords") {
  const auto wq = WeightedQuery::from_query(Query::make("q", "the fox and the fox dog"));
  CHECK(wq.term_weights == std::map<std::string, double>{{"dog", 0.5}, {"fox", 1.0}});
  CHECK(parse_retrieval_model("bm25") == RetrievalModel::bm25);
  CHECK_FALSE(parse_retrieval_model("tfidf"));
}
