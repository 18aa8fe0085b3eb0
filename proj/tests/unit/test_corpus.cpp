#include <doctest.h>

#include <fstream>

#include "chunkqe/corpus.hpp"
#include "test_support.hpp"

using namespace chunkqe;

TEST_CASE("document and query construction") {
  const auto d = Document::make("d1", "The quick brown fox");
  CHECK(d.token_count == 4);
  const auto q = Query::make("301", "Coral Reef bleaching");
  CHECK(q.terms == std::vector<std::string>{"coral", "reef", "bleaching"});
}

TEST_CASE("reading TSV records") {
  testing::TempDir dir;
  {
    std::ofstream out(dir / "docs.tsv", std::ios::binary);
    out << "d1\tfirst doc\r\n\nd2\tsecond\tdoc with tab\n";
  }
  const auto docs = read_documents(dir / "docs.tsv");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].doc_id == "d1");
  CHECK(docs[0].text == "first doc");
  CHECK(docs[1].token_count == 4);

  {
    std::ofstream out(dir / "bad.tsv");
    out << "d1 no tab here\n";
  }
  CHECK_THROWS_AS(read_documents(dir / "bad.tsv"), InputError);
  CHECK_THROWS(read_documents(dir / "missing.tsv"));
}

TEST_CASE("duplicate query ids are rejected") {
  testing::TempDir dir;
  {
    std::ofstream out(dir / "q.tsv");
    out << "1\tfoo\n1\tbar\n";
  }
  CHECK_THROWS_AS(read_queries(dir / "q.tsv"), InputError);
}

TEST_CASE("bundled fixture corpus loads") {
  const auto docs = read_documents(testing::fixture("corpus.tsv"));
  CHECK(docs.size() == 12);
  const auto queries = read_queries(testing::fixture("queries.tsv"));
  CHECK(queries.size() == 3);
}
