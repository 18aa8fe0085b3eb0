#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chunkqe {

/// Splits text into lowercase word tokens.
///
/// A token is a maximal run of ASCII letters, ASCII digits, or bytes >= 0x80
/// (so multi-byte UTF-8 words stay intact). ASCII letters are lowercased;
/// every other byte is a separator. The result depends only on the input bytes.
std::vector<std::string> tokenize(std::string_view text);

/// Number of tokens tokenize() would return, without allocating them.
std::size_t count_tokens(std::string_view text);

/// Fixed English stop set used by the lexical rankers.
bool is_stopword(std::string_view token);

/// Removes stopwords in place and returns the same vector.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens);

/// Joins tokens with single spaces.
std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace chunkqe
