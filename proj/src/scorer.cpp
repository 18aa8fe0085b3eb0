#include "chunkqe/scorer.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "chunkqe/text.hpp"

namespace chunkqe {

Probability Probability::clamped(double value) {
  if (std::isnan(value)) throw std::invalid_argument("probability is NaN");
  return Probability(std::clamp(value, kMin, kMax));
}

namespace {

void truncate_tokens(std::vector<std::string>& a, std::vector<std::string>& b,
                     std::size_t max_tokens) {
  if (a.size() + b.size() <= max_tokens) return;
  if (a.size() >= max_tokens) {
    a.resize(max_tokens);
    b.clear();
  } else {
    b.resize(max_tokens - a.size());
  }
}

}  // namespace

ScorePair truncate_pair(const ScorePair& pair, std::size_t max_tokens) {
  auto a = tokenize(pair.a);
  auto b = tokenize(pair.b);
  if (a.size() + b.size() <= max_tokens) return pair;
  truncate_tokens(a, b, max_tokens);
  return ScorePair{join_tokens(a), join_tokens(b)};
}

MockLexicalScorer::MockLexicalScorer(Options options, std::shared_ptr<const InvertedIndex> index)
    : options_(options), index_(std::move(index)) {}

std::string MockLexicalScorer::id() const {
  return fmt::format("mock-lexical(scale={},shift={},max_tokens={},idf={})", options_.scale,
                     options_.shift, options_.max_tokens, index_ ? "index" : "uniform");
}

double MockLexicalScorer::idf(std::string_view term) const {
  if (!index_) return 1.0;
  const double n = static_cast<double>(index_->num_docs());
  const double df = std::max<double>(index_->df(term), 1.0);
  return std::log(1.0 + n / df);
}

double MockLexicalScorer::overlap_tokens(std::vector<std::string> query_terms,
                                         const std::vector<std::string>& doc_tokens) const {
  std::sort(query_terms.begin(), query_terms.end());
  query_terms.erase(std::unique(query_terms.begin(), query_terms.end()), query_terms.end());
  if (query_terms.empty()) return 0.0;

  std::vector<double> tf(query_terms.size(), 0.0);
  for (const auto& tok : doc_tokens) {
    auto it = std::lower_bound(query_terms.begin(), query_terms.end(), tok);
    if (it != query_terms.end() && *it == tok) tf[static_cast<std::size_t>(it - query_terms.begin())] += 1.0;
  }

  double matched = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < query_terms.size(); ++i) {
    const double w = idf(query_terms[i]);
    mass += w;
    if (tf[i] > 0.0) matched += w * (1.0 + std::log(tf[i]));
  }
  return mass > 0.0 ? matched / mass : 0.0;
}

double MockLexicalScorer::overlap(std::string_view a, std::string_view b) const {
  return overlap_tokens(tokenize(a), tokenize(b));
}

Probability MockLexicalScorer::score(const ScorePair& pair) const {
  auto a = tokenize(pair.a);
  auto b = tokenize(pair.b);
  truncate_tokens(a, b, options_.max_tokens);
  const double s = overlap_tokens(std::move(a), b);
  return Probability::clamped(1.0 / (1.0 + std::exp(-(options_.scale * s + options_.shift))));
}

std::vector<Probability> MockLexicalScorer::score_pairs(std::span<const ScorePair> pairs) const {
  std::vector<Probability> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(score(p));
  return out;
}

std::size_t CachingScorer::KeyHash::operator()(const Key& k) const noexcept {
  const std::size_t ha = std::hash<std::string>{}(k.a);
  const std::size_t hb = std::hash<std::string>{}(k.b);
  return ha ^ (hb + 0x9e3779b97f4a7c15ULL + (ha << 6) + (ha >> 2));
}

CachingScorer::CachingScorer(std::shared_ptr<const Scorer> inner) : inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("CachingScorer needs a scorer");
}

std::size_t CachingScorer::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

std::vector<Probability> CachingScorer::score_pairs(std::span<const ScorePair> pairs) const {
  std::vector<Probability> out(pairs.size());
  std::vector<std::size_t> missing;
  {
    std::shared_lock lock(mutex_);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto it = cache_.find(Key{pairs[i].a, pairs[i].b});
      if (it != cache_.end()) {
        out[i] = it->second;
      } else {
        missing.push_back(i);
      }
    }
  }
  hits_ += pairs.size() - missing.size();
  misses_ += missing.size();
  if (missing.empty()) return out;

  std::vector<ScorePair> batch;
  batch.reserve(missing.size());
  for (std::size_t i : missing) batch.push_back(pairs[i]);
  const auto scored = inner_->score_pairs(batch);
  if (scored.size() != batch.size()) {
    throw std::runtime_error("inner scorer returned a batch of the wrong length");
  }
  std::unique_lock lock(mutex_);
  for (std::size_t j = 0; j < missing.size(); ++j) {
    out[missing[j]] = scored[j];
    cache_.insert_or_assign(Key{batch[j].a, batch[j].b}, scored[j]);
  }
  return out;
}

Probability score_document_maxp(const Scorer& scorer, std::string_view query_side,
                                std::span<const Passage> passages) {
  const std::vector<Passage> doc(passages.begin(), passages.end());
  return score_documents_maxp(scorer, query_side, std::span(&doc, 1)).front();
}

std::vector<Probability> score_documents_maxp(const Scorer& scorer, std::string_view query_side,
                                              std::span<const std::vector<Passage>> documents) {
  std::vector<ScorePair> pairs;
  for (const auto& passages : documents) {
    if (passages.empty()) throw std::invalid_argument("document has no passages to score");
    for (const auto& p : passages) pairs.push_back(ScorePair{std::string(query_side), p.text()});
  }
  const auto scores = scorer.score_pairs(pairs);
  if (scores.size() != pairs.size()) throw std::runtime_error("scorer returned wrong batch length");

  std::vector<Probability> best;
  best.reserve(documents.size());
  std::size_t offset = 0;
  for (const auto& passages : documents) {
    auto first = scores.begin() + static_cast<std::ptrdiff_t>(offset);
    best.push_back(*std::max_element(first, first + static_cast<std::ptrdiff_t>(passages.size())));
    offset += passages.size();
  }
  return best;
}

}  // namespace chunkqe
