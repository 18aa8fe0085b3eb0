#include <doctest.h>

#include "chunkqe/decompose.hpp"
#include "test_support.hpp"

using namespace chunkqe;

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back("t" + std::to_string(i));
  return t;
}

std::vector<std::size_t> starts_of(const std::vector<TextSpan>& spans) {
  std::vector<std::size_t> s;
  for (const auto& p : spans) s.push_back(p.start);
  return s;
}

}  // namespace

TEST_CASE("passage examples") {
  auto p = decompose_passages("d", numbered(80));
  REQUIRE(p.size() == 2);
  CHECK(p[0].start == 0);
  CHECK(p[0].end() == 80);
  CHECK(p[1].start == 50);
  CHECK(p[1].end() == 80);

  p = decompose_passages("d", numbered(100));
  REQUIRE(p.size() == 2);
  CHECK(p[1].tokens.size() == 50);

  p = decompose_passages("d", numbered(523));
  REQUIRE(p.size() == 11);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i].start == 50 * i);

  CHECK(decompose_passages("d", numbered(0)).empty());
  CHECK_THROWS(decompose_passages("d", numbered(5), 10, 0));
  CHECK_THROWS(decompose_passages("d", numbered(5), 10, 11));
}

TEST_CASE("chunk examples") {
  auto c = decompose_chunks("d", numbered(7), 10);
  REQUIRE(c.size() == 1);
  CHECK(c[0].tokens.size() == 7);

  c = decompose_chunks("d", numbered(23), 10);
  CHECK(starts_of(c) == std::vector<std::size_t>{0, 5, 10, 15});
  CHECK(c.back().tokens.size() == 8);

  c = decompose_chunks("d", numbered(100), 10);
  REQUIRE(c.size() == 19);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i].start == 5 * i);

  CHECK(decompose_chunks("d", numbered(0), 10).empty());
  CHECK_THROWS(chunk_starts(10, 1));
  CHECK(c[3].text() == "t15 t16 t17 t18 t19 t20 t21 t22 t23 t24");
}

TEST_CASE("passage properties on random lengths") {
  testing::Gen gen(5);
  for (int round = 0; round < 300; ++round) {
    const auto n = gen.between(1, 700);
    const auto window = gen.between(1, 120);
    const auto stride = gen.between(1, window);
    const auto tokens = numbered(n);
    const auto p = decompose_passages("d", tokens, window, stride);
    REQUIRE_FALSE(p.empty());
    std::vector<int> covered(n, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].start == i * stride);
      CHECK(p[i].start < n);
      CHECK(p[i].tokens.size() <= window);
      for (std::size_t j = 0; j < p[i].tokens.size(); ++j) {
        CHECK(p[i].tokens[j] == tokens[p[i].start + j]);
        covered[p[i].start + j] = 1;
      }
    }
    CHECK(std::count(covered.begin(), covered.end(), 0) == 0);
  }
}

TEST_CASE("chunk properties on random lengths") {
  testing::Gen gen(6);
  for (int round = 0; round < 300; ++round) {
    const auto n = gen.between(1, 300);
    const auto m = gen.between(2, 40);
    const auto tokens = numbered(n);
    const auto c = decompose_chunks("d", tokens, m);
    REQUIRE_FALSE(c.empty());
    const auto stride = m / 2;
    const auto min_len = (m + 1) / 2;
    std::size_t covered_to = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c[i].start == i * stride);
      CHECK(c[i].tokens.size() <= m);
      if (n >= m) CHECK(c[i].tokens.size() >= min_len);
      for (std::size_t j = 0; j < c[i].tokens.size(); ++j) CHECK(c[i].tokens[j] == tokens[c[i].start + j]);
      if (i > 0 && m % 2 == 0 && c[i].tokens.size() == m && c[i - 1].tokens.size() == m) {
        CHECK(c[i - 1].end() - c[i].start == m / 2);
      }
      covered_to = std::max(covered_to, c[i].end());
    }
    // Reconstruction: the chunks cover the whole document.
    CHECK(covered_to == n);
    CHECK(c.size() == chunk_starts(n, m).size());
  }
}
