#include "chunkqe/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "chunkqe/text.hpp"

namespace chunkqe {

namespace {

TextSpan make_span(const std::string& doc_id, std::span<const std::string> tokens,
                   std::size_t start, std::size_t length) {
  const std::size_t stop = std::min(tokens.size(), start + length);
  return TextSpan{doc_id, start, std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                                                          tokens.begin() + static_cast<std::ptrdiff_t>(stop))};
}

}  // namespace

std::string TextSpan::text() const { return join_tokens(tokens); }

std::vector<Passage> decompose_passages(const std::string& doc_id,
                                        std::span<const std::string> tokens,
                                        std::size_t window, std::size_t stride) {
  if (window == 0 || stride == 0 || stride > window) {
    throw std::invalid_argument("passage decomposition needs 0 < stride <= window");
  }
  std::vector<Passage> passages;
  for (std::size_t start = 0; start < tokens.size(); start += stride) {
    passages.push_back(make_span(doc_id, tokens, start, window));
  }
  return passages;
}

std::vector<Passage> decompose_passages(const Document& doc, std::size_t window,
                                        std::size_t stride) {
  const auto tokens = tokenize(doc.text);
  return decompose_passages(doc.doc_id, tokens, window, stride);
}

std::vector<std::size_t> chunk_starts(std::size_t n, std::size_t m) {
  if (m < 2) throw std::invalid_argument("chunk length m must be at least 2");
  const std::size_t stride = m / 2;
  std::vector<std::size_t> starts;
  for (std::size_t start = 0; start < n; start += stride) {
    starts.push_back(start);
    if (start + m >= n) break;
  }
  return starts;
}

std::vector<Chunk> decompose_chunks(const std::string& doc_id,
                                    std::span<const std::string> tokens, std::size_t m) {
  std::vector<Chunk> chunks;
  for (std::size_t start : chunk_starts(tokens.size(), m)) {
    chunks.push_back(make_span(doc_id, tokens, start, m));
  }
  return chunks;
}

std::vector<Chunk> decompose_chunks(const Document& doc, std::size_t m) {
  const auto tokens = tokenize(doc.text);
  return decompose_chunks(doc.doc_id, tokens, m);
}

}  // namespace chunkqe
