#include "chunkqe/inverted_index.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cstring>

#include "chunkqe/io_util.hpp"
#include "chunkqe/text.hpp"

namespace chunkqe {

namespace {

constexpr char kMagic[8] = {'C', 'Q', 'E', 'I', 'N', 'D', 'E', 'X'};
constexpr std::uint32_t kFormatVersion = 1;

class Writer {
 public:
  void bytes(const void* p, std::size_t n) { out_.append(static_cast<const char*>(p), n); }
  template <typename T>
  void integer(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      out_.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
    }
  }
  void string(std::string_view s) {
    integer<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::string_view bytes(std::size_t n) {
    if (n > in_.size() - pos_) throw InputError("index file truncated");
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  template <typename T>
  T integer() {
    auto s = bytes(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[i])) << (8 * i);
    }
    return static_cast<T>(v);
  }
  std::string string() { return std::string(bytes(integer<std::uint32_t>())); }
  bool at_end() const { return pos_ == in_.size(); }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

DuplicateDocumentError::DuplicateDocumentError(const std::string& doc_id)
    : std::runtime_error(fmt::format("duplicate document id '{}'", doc_id)), doc_id_(doc_id) {}

InvertedIndex InvertedIndex::build(std::vector<Document> docs) {
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
  for (std::size_t i = 1; i < docs.size(); ++i) {
    if (docs[i].doc_id == docs[i - 1].doc_id) throw DuplicateDocumentError(docs[i].doc_id);
  }

  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(docs.size());
  std::vector<std::string> vocab;
  for (const auto& d : docs) {
    tokenized.push_back(tokenize(d.text));
    vocab.insert(vocab.end(), tokenized.back().begin(), tokenized.back().end());
  }
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());

  InvertedIndex idx;
  idx.terms_ = std::move(vocab);
  for (TermId t = 0; t < idx.terms_.size(); ++t) idx.term_lookup_.emplace(idx.terms_[t], t);

  idx.doc_offsets_.reserve(docs.size() + 1);
  idx.doc_offsets_.push_back(0);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    idx.doc_ids_.push_back(std::move(docs[d].doc_id));
    for (const auto& tok : tokenized[d]) idx.forward_.push_back(idx.term_lookup_.find(tok)->second);
    idx.doc_offsets_.push_back(idx.forward_.size());
  }
  idx.finalize();
  return idx;
}

// Derives the lookup tables, postings and collection statistics from the
// vocabulary, doc ids and forward index.
void InvertedIndex::finalize() {
  if (term_lookup_.empty()) {
    for (TermId t = 0; t < terms_.size(); ++t) term_lookup_.emplace(terms_[t], t);
  }
  doc_lookup_.clear();
  for (DocNo d = 0; d < doc_ids_.size(); ++d) doc_lookup_.emplace(doc_ids_[d], d);
  total_tokens_ = forward_.size();

  const std::size_t vocab = terms_.size();
  df_.assign(vocab, 0);
  cf_.assign(vocab, 0);

  // Per-document sorted term lists give (term, tf) runs in one pass.
  std::vector<std::vector<std::pair<TermId, std::uint32_t>>> doc_runs(doc_ids_.size());
  for (DocNo d = 0; d < doc_ids_.size(); ++d) {
    std::vector<TermId> sorted(forward_.begin() + static_cast<std::ptrdiff_t>(doc_offsets_[d]),
                               forward_.begin() + static_cast<std::ptrdiff_t>(doc_offsets_[d + 1]));
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      doc_runs[d].emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
      ++df_[sorted[i]];
      cf_[sorted[i]] += j - i;
      i = j;
    }
  }

  posting_offsets_.assign(vocab + 1, 0);
  for (std::size_t t = 0; t < vocab; ++t) posting_offsets_[t + 1] = posting_offsets_[t] + df_[t];
  postings_.assign(posting_offsets_.back(), Posting{0, 0});
  std::vector<std::uint64_t> cursor(posting_offsets_.begin(), posting_offsets_.end() - 1);
  for (DocNo d = 0; d < doc_runs.size(); ++d) {
    for (auto [t, tf] : doc_runs[d]) postings_[cursor[t]++] = Posting{d, tf};
  }
}

double InvertedIndex::average_doc_length() const noexcept {
  return doc_ids_.empty() ? 0.0
                          : static_cast<double>(total_tokens_) / static_cast<double>(doc_ids_.size());
}

IndexStats InvertedIndex::stats() const {
  return IndexStats{num_docs(), total_tokens(), vocabulary_size(), average_doc_length()};
}

std::optional<TermId> InvertedIndex::find_term(std::string_view term) const {
  auto it = term_lookup_.find(term);
  if (it == term_lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t InvertedIndex::df(std::string_view term) const {
  auto id = find_term(term);
  return id ? df_[*id] : 0;
}

std::uint64_t InvertedIndex::cf(std::string_view term) const {
  auto id = find_term(term);
  return id ? cf_[*id] : 0;
}

std::span<const Posting> InvertedIndex::postings(TermId id) const {
  const auto begin = posting_offsets_.at(id);
  const auto end = posting_offsets_.at(id + 1);
  return {postings_.data() + begin, static_cast<std::size_t>(end - begin)};
}

std::uint32_t InvertedIndex::tf(TermId id, DocNo doc) const {
  auto list = postings(id);
  auto it = std::lower_bound(list.begin(), list.end(), doc,
                             [](const Posting& p, DocNo d) { return p.doc < d; });
  return (it != list.end() && it->doc == doc) ? it->tf : 0;
}

std::optional<DocNo> InvertedIndex::find_doc(std::string_view doc_id) const {
  auto it = doc_lookup_.find(doc_id);
  if (it == doc_lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t InvertedIndex::doc_length(DocNo doc) const {
  return static_cast<std::uint32_t>(doc_offsets_.at(doc + 1) - doc_offsets_.at(doc));
}

std::span<const TermId> InvertedIndex::doc_terms(DocNo doc) const {
  const auto begin = doc_offsets_.at(doc);
  return {forward_.data() + begin, static_cast<std::size_t>(doc_offsets_.at(doc + 1) - begin)};
}

std::vector<std::string> InvertedIndex::doc_tokens(DocNo doc) const {
  std::vector<std::string> tokens;
  for (TermId t : doc_terms(doc)) tokens.push_back(terms_[t]);
  return tokens;
}

std::string InvertedIndex::serialize() const {
  Writer w;
  w.bytes(kMagic, sizeof(kMagic));
  w.integer<std::uint32_t>(kFormatVersion);
  w.integer<std::uint64_t>(terms_.size());
  for (const auto& t : terms_) w.string(t);
  w.integer<std::uint64_t>(doc_ids_.size());
  for (DocNo d = 0; d < doc_ids_.size(); ++d) {
    w.string(doc_ids_[d]);
    auto terms = doc_terms(d);
    w.integer<std::uint64_t>(terms.size());
    for (TermId t : terms) w.integer<std::uint32_t>(t);
  }
  return w.take();
}

InvertedIndex InvertedIndex::deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (std::memcmp(r.bytes(sizeof(kMagic)).data(), kMagic, sizeof(kMagic)) != 0) {
    throw InputError("not an index file (bad magic)");
  }
  const auto version = r.integer<std::uint32_t>();
  if (version != kFormatVersion) {
    throw InputError(fmt::format("unsupported index format version {}", version));
  }
  InvertedIndex idx;
  const auto vocab = r.integer<std::uint64_t>();
  for (std::uint64_t i = 0; i < vocab; ++i) {
    idx.terms_.push_back(r.string());
    if (i > 0 && !(idx.terms_[i - 1] < idx.terms_[i])) throw InputError("index vocabulary not sorted");
  }
  const auto ndocs = r.integer<std::uint64_t>();
  idx.doc_offsets_.push_back(0);
  for (std::uint64_t d = 0; d < ndocs; ++d) {
    idx.doc_ids_.push_back(r.string());
    if (d > 0 && !(idx.doc_ids_[d - 1] < idx.doc_ids_[d])) throw InputError("index doc ids not sorted");
    const auto len = r.integer<std::uint64_t>();
    for (std::uint64_t i = 0; i < len; ++i) {
      const auto t = r.integer<std::uint32_t>();
      if (t >= vocab) throw InputError("index term id out of range");
      idx.forward_.push_back(t);
    }
    idx.doc_offsets_.push_back(idx.forward_.size());
  }
  if (!r.at_end()) throw InputError("trailing bytes after index payload");
  idx.finalize();
  return idx;
}

void InvertedIndex::save(const std::filesystem::path& path) const {
  write_file_atomic(path, serialize());
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& path) {
  return deserialize(read_file(path));
}

}  // namespace chunkqe
