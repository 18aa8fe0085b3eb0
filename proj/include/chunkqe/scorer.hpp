#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chunkqe/decompose.hpp"
#include "chunkqe/inverted_index.hpp"

namespace chunkqe {

/// Relevance probability, always inside [kMin, kMax] so its log is finite.
class Probability {
 public:
  static constexpr double kMin = 1e-6;
  static constexpr double kMax = 1.0 - 1e-6;

  constexpr Probability() = default;
  /// Clamps into [kMin, kMax]; throws std::invalid_argument on NaN.
  static Probability clamped(double value);
  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Probability a, Probability b) noexcept {
    return a.value_ == b.value_;
  }
  friend constexpr auto operator<=>(Probability a, Probability b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  constexpr explicit Probability(double v) : value_(v) {}
  double value_ = 0.5;
};

/// Query-side text `a` and document-side text `b` of one relevance judgement.
struct ScorePair {
  std::string a;
  std::string b;
};

inline constexpr std::size_t kDefaultMaxTokens = 384;

/// Word-level truncation to `max_tokens` combined tokens. The document side
/// is cut first; the query side only when it alone exceeds the budget.
ScorePair truncate_pair(const ScorePair& pair, std::size_t max_tokens);

/// A relevance model. Implementations must be deterministic (same scorer,
/// same pair, same probability) and safe to call from several threads.
class Scorer {
 public:
  virtual ~Scorer() = default;
  /// Stable identity string; also the cache namespace.
  virtual std::string id() const = 0;
  /// One probability per pair, in input order.
  virtual std::vector<Probability> score_pairs(std::span<const ScorePair> pairs) const = 0;
};

/// Offline stand-in for a trained cross-encoder.
///
/// s = sum over distinct query terms t present in b of idf(t) (1 + ln tf_b(t)),
/// divided by the idf mass of all distinct query terms; the probability is
/// sigmoid(scale * s + shift). idf(t) = ln(1 + N / max(df, 1)) from the
/// attached index, or 1 for every term when no index is attached.
class MockLexicalScorer final : public Scorer {
 public:
  struct Options {
    double scale = 4.0;
    double shift = -2.0;
    std::size_t max_tokens = kDefaultMaxTokens;
  };

  MockLexicalScorer() : MockLexicalScorer(Options{}) {}
  explicit MockLexicalScorer(Options options, std::shared_ptr<const InvertedIndex> index = nullptr);

  std::string id() const override;
  std::vector<Probability> score_pairs(std::span<const ScorePair> pairs) const override;

  /// The normalised overlap s for an (already truncated) pair.
  double overlap(std::string_view a, std::string_view b) const;
  Probability score(const ScorePair& pair) const;

 private:
  double idf(std::string_view term) const;
  double overlap_tokens(std::vector<std::string> query_terms,
                        const std::vector<std::string>& doc_tokens) const;

  Options options_;
  std::shared_ptr<const InvertedIndex> index_;
};

/// Memoises another scorer by (scorer id, text a, text b). Returned values
/// are identical with or without the cache.
class CachingScorer final : public Scorer {
 public:
  explicit CachingScorer(std::shared_ptr<const Scorer> inner);

  std::string id() const override { return inner_->id(); }
  std::vector<Probability> score_pairs(std::span<const ScorePair> pairs) const override;

  std::size_t hits() const noexcept { return hits_.load(); }
  std::size_t misses() const noexcept { return misses_.load(); }
  std::size_t size() const;

 private:
  struct Key {
    std::string a;
    std::string b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  std::shared_ptr<const Scorer> inner_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Key, Probability, KeyHash> cache_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

/// MaxP: the best passage score of one document for `query_side`.
/// Throws std::invalid_argument when the document has no passages.
Probability score_document_maxp(const Scorer& scorer, std::string_view query_side,
                                std::span<const Passage> passages);

/// MaxP for several documents against the same query side, in one batch.
std::vector<Probability> score_documents_maxp(const Scorer& scorer, std::string_view query_side,
                                              std::span<const std::vector<Passage>> documents);

}  // namespace chunkqe
