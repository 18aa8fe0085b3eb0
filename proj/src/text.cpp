#include "chunkqe/text.hpp"

#include <algorithm>
#include <array>

namespace chunkqe {

namespace {

constexpr bool is_token_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

constexpr char lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

// Lucene's classic English stop set, sorted for binary search.
constexpr std::array<std::string_view, 33> kStopwords = {
    "a",     "an",   "and",  "are",   "as",   "at",   "be",    "but",  "by",
    "for",   "if",   "in",   "into",  "is",   "it",   "no",    "not",  "of",
    "on",    "or",   "such", "that",  "the",  "their", "then", "there", "these",
    "they",  "this", "to",   "was",   "will", "with"};

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && !is_token_byte(static_cast<unsigned char>(text[i]))) ++i;
    if (i == n) break;
    std::string token;
    while (i < n && is_token_byte(static_cast<unsigned char>(text[i]))) {
      token.push_back(lower(static_cast<unsigned char>(text[i])));
      ++i;
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::size_t count_tokens(std::string_view text) {
  std::size_t count = 0;
  bool inside = false;
  for (char ch : text) {
    const bool token_byte = is_token_byte(static_cast<unsigned char>(ch));
    if (token_byte && !inside) ++count;
    inside = token_byte;
  }
  return count;
}

bool is_stopword(std::string_view token) {
  return std::binary_search(kStopwords.begin(), kStopwords.end(), token);
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens) {
  std::erase_if(tokens, [](const std::string& t) { return is_stopword(t); });
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace chunkqe
