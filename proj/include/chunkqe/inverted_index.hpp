#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chunkqe/corpus.hpp"

namespace chunkqe {

using TermId = std::uint32_t;
using DocNo = std::uint32_t;

struct Posting {
  DocNo doc;
  std::uint32_t tf;
};

class DuplicateDocumentError : public std::runtime_error {
 public:
  explicit DuplicateDocumentError(const std::string& doc_id);
  const std::string& doc_id() const noexcept { return doc_id_; }

 private:
  std::string doc_id_;
};

struct IndexStats {
  std::size_t num_docs = 0;
  std::uint64_t total_tokens = 0;
  std::size_t vocabulary_size = 0;
  double average_doc_length = 0.0;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

/// Immutable inverted index with a forward (token-order) view per document.
///
/// Documents are numbered in ascending doc_id order, so DocNo order and
/// doc_id order agree and every postings list is sorted by both. Term ids
/// follow lexicographic term order. Safe to share across threads once built.
class InvertedIndex {
 public:
  /// Throws DuplicateDocumentError when two documents share an id.
  static InvertedIndex build(std::vector<Document> docs);

  /// Binary layout: "CQEINDEX" magic, u32 format version, then the vocabulary,
  /// doc ids and forward token ids, all little-endian. Postings and
  /// statistics are rebuilt on load.
  void save(const std::filesystem::path& path) const;
  static InvertedIndex load(const std::filesystem::path& path);
  std::string serialize() const;
  static InvertedIndex deserialize(std::string_view bytes);

  std::size_t num_docs() const noexcept { return doc_ids_.size(); }
  std::uint64_t total_tokens() const noexcept { return total_tokens_; }
  std::size_t vocabulary_size() const noexcept { return terms_.size(); }
  double average_doc_length() const noexcept;
  IndexStats stats() const;

  std::optional<TermId> find_term(std::string_view term) const;
  const std::string& term(TermId id) const { return terms_.at(id); }
  std::uint32_t df(TermId id) const { return df_.at(id); }
  std::uint64_t cf(TermId id) const { return cf_.at(id); }
  /// Zero for terms that are not indexed.
  std::uint32_t df(std::string_view term) const;
  std::uint64_t cf(std::string_view term) const;
  std::span<const Posting> postings(TermId id) const;
  /// Term frequency of `id` in `doc` (binary search over the postings).
  std::uint32_t tf(TermId id, DocNo doc) const;

  std::optional<DocNo> find_doc(std::string_view doc_id) const;
  const std::string& doc_id(DocNo doc) const { return doc_ids_.at(doc); }
  std::uint32_t doc_length(DocNo doc) const;
  std::span<const TermId> doc_terms(DocNo doc) const;
  std::vector<std::string> doc_tokens(DocNo doc) const;

 private:
  void finalize();

  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermId, StringHash, std::equal_to<>> term_lookup_;
  std::vector<std::uint32_t> df_;
  std::vector<std::uint64_t> cf_;
  std::vector<std::uint64_t> posting_offsets_;
  std::vector<Posting> postings_;

  std::vector<std::string> doc_ids_;
  std::unordered_map<std::string, DocNo, StringHash, std::equal_to<>> doc_lookup_;
  std::vector<std::uint64_t> doc_offsets_;
  std::vector<TermId> forward_;
  std::uint64_t total_tokens_ = 0;
};

}  // namespace chunkqe
