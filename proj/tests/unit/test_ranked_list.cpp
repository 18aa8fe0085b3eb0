#include <doctest.h>

#include <cmath>

#include "chunkqe/ranked_list.hpp"
#include "test_support.hpp"

using namespace chunkqe;

TEST_CASE("from_scores sorts and breaks ties by doc id") {
  const auto list = RankedList::from_scores("q", {{"b", 1.0}, {"a", 1.0}, {"c", 2.0}, {"d", 0.5}}, 3);
  REQUIRE(list.size() == 3);
  CHECK(list.entries[0].doc_id == "c");
  CHECK(list.entries[1].doc_id == "a");
  CHECK(list.entries[2].doc_id == "b");
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(list.entries[i].rank == i + 1);
}

TEST_CASE("from_scores rejects NaN and duplicates") {
  CHECK_THROWS(RankedList::from_scores("q", {{"a", std::nan("")}}, 5));
  CHECK_THROWS(RankedList::from_scores("q", {{"a", 1.0}, {"a", 2.0}}, 5));
}

TEST_CASE("truncation keeps ranks") {
  const auto list = RankedList::from_scores("q", {{"a", 3}, {"b", 2}, {"c", 1}}, 10);
  const auto t = list.truncated(2);
  CHECK(t.size() == 2);
  CHECK(t.entries[1].rank == 2);
  CHECK(list.truncated(10).size() == 3);
}

TEST_CASE("query id ordering") {
  QueryIdLess less;
  CHECK(less("9", "10"));
  CHECK_FALSE(less("10", "9"));
  CHECK(less("701", "850"));
  CHECK(less("99", "abc"));
  CHECK(less("abc", "abd"));
  CHECK_FALSE(less("5", "5"));
  RunSet run;
  for (const char* id : {"10", "2", "b", "1", "a"}) run[id].query_id = id;
  std::vector<std::string> order;
  for (const auto& [id, _] : run) order.push_back(id);
  CHECK(order == std::vector<std::string>{"1", "2", "10", "a", "b"});
}

TEST_CASE("random score lists satisfy the ranking invariants") {
  testing::Gen gen(8);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::pair<std::string, double>> scored;
    const auto n = gen.between(1, 50);
    for (std::size_t i = 0; i < n; ++i) scored.emplace_back("d" + std::to_string(i), static_cast<double>(gen.below(6)));
    const auto k = gen.between(1, 60);
    const auto list = RankedList::from_scores("q", scored, k);
    CHECK(list.size() == std::min(k, n));
    for (std::size_t i = 1; i < list.size(); ++i) {
      const auto& a = list.entries[i - 1];
      const auto& b = list.entries[i];
      CHECK(a.score >= b.score);
      if (a.score == b.score) CHECK(a.doc_id < b.doc_id);
      CHECK(b.rank == a.rank + 1);
    }
  }
}
