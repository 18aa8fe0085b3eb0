#include <doctest.h>

#include "chunkqe/text.hpp"
#include "test_support.hpp"

using namespace chunkqe;

namespace {

// Character-by-character reference for the tokenizer rule.
std::vector<std::string> reference_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    const bool upper = c >= 'A' && c <= 'Z';
    const bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || upper || c >= 0x80;
    if (keep) {
      cur.push_back(upper ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("tokenize examples") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("International Organized Crime") ==
        std::vector<std::string>{"international", "organized", "crime"});
  CHECK(tokenize("U.S.-based, 2019's\tfigures") ==
        std::vector<std::string>{"u", "s", "based", "2019", "s", "figures"});
  CHECK(tokenize("caf\xc3\xa9 na\xc3\xafve") == std::vector<std::string>{"caf\xc3\xa9", "na\xc3\xafve"});
  CHECK(tokenize("  ...  ").empty());
}

TEST_CASE("tokenize agrees with the reference on random byte strings") {
  testing::Gen gen(11);
  for (int round = 0; round < 500; ++round) {
    std::string text;
    const auto n = gen.below(80);
    for (std::size_t i = 0; i < n; ++i) text.push_back(static_cast<char>(gen.below(256)));
    const auto tokens = tokenize(text);
    CHECK(tokens == reference_tokens(text));
    CHECK(count_tokens(text) == tokens.size());
  }
}

TEST_CASE("stopwords") {
  CHECK(is_stopword("the"));
  CHECK(is_stopword("with"));
  CHECK_FALSE(is_stopword("coral"));
  CHECK_FALSE(is_stopword("The"));  // callers pass tokens, which are lowercase
  CHECK(remove_stopwords({"the", "fox", "and", "a", "dog"}) == std::vector<std::string>{"fox", "dog"});
  CHECK(join_tokens({"a", "b", "c"}) == "a b c");
  CHECK(join_tokens({}).empty());
}
