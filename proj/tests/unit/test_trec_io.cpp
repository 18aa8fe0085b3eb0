#include <doctest.h>

#include <cmath>
#include <fstream>

#include "chunkqe/io_util.hpp"
#include "chunkqe/trec_io.hpp"
#include "test_support.hpp"

using namespace chunkqe;

TEST_CASE("runs are ordered by rank and renumbered") {
  const auto run = parse_run(
      "7 Q0 b 5 1.5 x\n"
      "7 Q0 a 2 2.5 x\n"
      "\n"
      "3 Q0 c 1 0.25 x\n");
  REQUIRE(run.size() == 2);
  CHECK(run.begin()->first == "3");
  const auto& q7 = run.at("7");
  REQUIRE(q7.size() == 2);
  CHECK(q7.entries[0].doc_id == "a");
  CHECK(q7.entries[0].rank == 1);
  CHECK(q7.entries[1].doc_id == "b");
  CHECK(q7.entries[1].rank == 2);
  CHECK(q7.entries[1].score == 1.5);
}

TEST_CASE("malformed runs are rejected with the line number") {
  auto message = [](std::string_view text) {
    try {
      parse_run(text, "r.txt");
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string{};
  };
  CHECK(message("1 Q0 a 1 1.0\n").find("r.txt:1") != std::string::npos);
  CHECK(message("1 Q0 a 1 1.0 t\n1 Q0 b one 1.0 t\n").find("r.txt:2") != std::string::npos);
  CHECK_FALSE(message("1 Q0 a 1 nan t\n").empty());
  CHECK_FALSE(message("1 Q0 a 1 1 t\n1 Q0 a 2 0.5 t\n").empty());
}

TEST_CASE("format and parse round-trip scores exactly") {
  testing::Gen gen(71);
  RunSet run;
  for (int q = 0; q < 5; ++q) {
    std::vector<std::pair<std::string, double>> scored;
    for (int d = 0; d < 40; ++d) {
      scored.emplace_back("doc" + std::to_string(d), (gen.unit() - 0.5) * std::pow(10.0, gen.between(0, 8)));
    }
    run.emplace(std::to_string(100 + q), RankedList::from_scores(std::to_string(100 + q), scored, 30));
  }
  const auto text = format_run(run, "tag");
  const auto back = parse_run(text);
  REQUIRE(back.size() == run.size());
  for (const auto& [qid, list] : run) {
    const auto& other = back.at(qid);
    REQUIRE(other.size() == list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(other.entries[i].doc_id == list.entries[i].doc_id);
      CHECK(other.entries[i].score == list.entries[i].score);
      CHECK(other.entries[i].rank == i + 1);
    }
  }
  CHECK(format_run(back, "tag") == text);
}

TEST_CASE("run files are written and read back") {
  testing::TempDir dir;
  RunSet run;
  run.emplace("1", RankedList::from_scores("1", {{"a", 1.0}, {"b", 0.5}}, 10));
  write_run(dir / "run.txt", run, "t");
  CHECK(read_file(dir / "run.txt") == "1 Q0 a 1 1 t\n1 Q0 b 2 0.5 t\n");
  CHECK(read_run(dir / "run.txt").at("1").size() == 2);
  CHECK_THROWS(read_run(dir / "missing.txt"));
}

TEST_CASE("qrels parsing") {
  const auto qrels = parse_qrels("1 0 a 2\n1 0 b 0\n2 0 c 1\n");
  CHECK(qrels.size() == 2);
  CHECK(qrels.grade("1", "a") == 2);
  CHECK(qrels.grade("1", "b") == 0);
  CHECK(qrels.grade("1", "zzz") == 0);
  CHECK(qrels.grade("9", "a") == 0);
  CHECK(qrels.relevant_count("1") == 1);
  CHECK(qrels.has_query("2"));
  CHECK_FALSE(qrels.has_query("3"));
  CHECK(qrels.judgments("3").empty());
  CHECK(qrels.query_ids() == std::vector<std::string>{"1", "2"});
  CHECK_THROWS(parse_qrels("1 0 a -1\n"));
  CHECK_THROWS(parse_qrels("1 0 a 1\n1 0 a 2\n"));
  CHECK_THROWS(parse_qrels("1 0 a\n"));
}

TEST_CASE("fixture qrels load") {
  const auto qrels = read_qrels(testing::fixture("qrels.txt"));
  CHECK(qrels.size() == 3);
}

TEST_CASE("fold files round-trip") {
  const std::vector<std::vector<std::string>> folds{{"701", "706"}, {"702"}, {"703"}, {"704"}, {"705"}};
  const auto text = format_fold_file(folds);
  const auto parsed = parse_fold_file(text);
  REQUIRE(parsed.size() == 6);
  CHECK(parsed[0].fold == 0);
  CHECK(parsed[0].query_id == "701");
  CHECK(parsed[1].query_id == "706");
  CHECK(parsed[5].fold == 4);
  CHECK_THROWS(parse_fold_file("x 701\n"));
  CHECK_THROWS(parse_fold_file("0\n"));
}
