#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chunkqe/corpus.hpp"

namespace chunkqe {

inline constexpr std::size_t kPassageWindow = 100;
inline constexpr std::size_t kPassageStride = 50;

/// A contiguous token window [start, start + tokens.size()) of one document.
/// Passages and chunks share this shape and differ only in how they are cut.
struct TextSpan {
  std::string doc_id;
  std::size_t start = 0;
  std::vector<std::string> tokens;

  std::size_t end() const noexcept { return start + tokens.size(); }
  /// Tokens joined with single spaces; this is what a scorer sees.
  std::string text() const;
};

using Passage = TextSpan;
using Chunk = TextSpan;

/// Overlapping passages starting at 0, stride, 2*stride, ... while the start
/// is inside the document. The tail passages may be shorter than `window`.
/// Requires 0 < stride <= window; an empty document yields no passages.
std::vector<Passage> decompose_passages(const std::string& doc_id,
                                        std::span<const std::string> tokens,
                                        std::size_t window = kPassageWindow,
                                        std::size_t stride = kPassageStride);
std::vector<Passage> decompose_passages(const Document& doc,
                                        std::size_t window = kPassageWindow,
                                        std::size_t stride = kPassageStride);

/// Chunk start offsets for an `n`-token document and chunk length `m` (m >= 2).
///
/// Windows advance by floor(m/2). The sweep stops after the first window that
/// reaches the end of the document, so a trailing window that would lie
/// entirely inside its predecessor is never emitted. A document shorter than
/// `m` yields a single chunk; an empty document yields none.
std::vector<std::size_t> chunk_starts(std::size_t n, std::size_t m);

std::vector<Chunk> decompose_chunks(const std::string& doc_id,
                                    std::span<const std::string> tokens, std::size_t m);
std::vector<Chunk> decompose_chunks(const Document& doc, std::size_t m);

}  // namespace chunkqe
