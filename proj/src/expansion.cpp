#include "chunkqe/expansion.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "chunkqe/text.hpp"

namespace chunkqe {

namespace {

std::vector<DocNo> feedback_docs(const InvertedIndex& index, const RankedList& feedback,
                                 std::size_t fb_docs) {
  if (feedback.empty()) throw std::invalid_argument("feedback list is empty");
  const std::size_t n = std::min(fb_docs, feedback.size());
  std::vector<DocNo> docs;
  for (std::size_t i = 0; i < n; ++i) {
    auto doc = index.find_doc(feedback.entries[i].doc_id);
    if (!doc) {
      throw std::invalid_argument(
          fmt::format("feedback document '{}' is not in the index", feedback.entries[i].doc_id));
    }
    docs.push_back(*doc);
  }
  return docs;
}

// Highest weight first, term text breaks ties.
std::vector<std::pair<TermId, double>> top_terms(std::map<TermId, double> weights,
                                                 std::size_t count, const InvertedIndex& index) {
  std::vector<std::pair<TermId, double>> ranked(weights.begin(), weights.end());
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return index.term(a.first) < index.term(b.first);
  });
  if (ranked.size() > count) ranked.resize(count);
  return ranked;
}

}  // namespace

WeightedQuery rm3_expand(const InvertedIndex& index, const Query& query,
                         const RankedList& feedback, const Rm3Params& params) {
  if (params.original_weight < 0.0 || params.original_weight > 1.0) {
    throw std::invalid_argument("RM3 original_weight must be in [0,1]");
  }
  auto original = WeightedQuery::from_query(query);
  const double query_mass = original.total_weight();
  if (query_mass <= 0.0) throw std::invalid_argument("cannot expand an empty query");

  const auto docs = feedback_docs(index, feedback, params.fb_docs);
  const double doc_weight = 1.0 / static_cast<double>(docs.size());
  std::map<TermId, double> relevance;
  for (DocNo d : docs) {
    const auto terms = index.doc_terms(d);
    if (terms.empty()) continue;
    const double inv_len = 1.0 / static_cast<double>(terms.size());
    for (TermId t : terms) {
      if (params.filter_stopwords && is_stopword(index.term(t))) continue;
      relevance[t] += doc_weight * inv_len;
    }
  }
  const auto kept = top_terms(std::move(relevance), params.fb_terms, index);
  double kept_mass = 0.0;
  for (const auto& [_, w] : kept) kept_mass += w;

  WeightedQuery out{query.query_id, {}};
  if (kept.empty() || kept_mass <= 0.0) {
    for (const auto& [term, w] : original.term_weights) out.term_weights[term] = w / query_mass;
    return out;
  }
  for (const auto& [term, w] : original.term_weights) {
    out.term_weights[term] += params.original_weight * w / query_mass;
  }
  for (const auto& [t, w] : kept) {
    out.term_weights[index.term(t)] += (1.0 - params.original_weight) * w / kept_mass;
  }
  return out;
}

double kl_term_score(double feedback_tf, double feedback_length, double collection_tf,
                     double collection_length) {
  if (feedback_length <= 0.0 || collection_length <= 0.0 || collection_tf <= 0.0) return 0.0;
  const double p_fb = feedback_tf / feedback_length;
  const double p_coll = collection_tf / collection_length;
  if (p_fb <= p_coll) return 0.0;
  return p_fb * std::log2(p_fb / p_coll);
}

WeightedQuery kl_expand(const InvertedIndex& index, const Query& query,
                        const RankedList& feedback, const KlParams& params) {
  auto out = WeightedQuery::from_query(query);
  const auto docs = feedback_docs(index, feedback, params.fb_docs);
  if (params.fb_terms == 0) return out;

  std::map<TermId, double> feedback_tf;
  double feedback_length = 0.0;
  for (DocNo d : docs) {
    const auto terms = index.doc_terms(d);
    feedback_length += static_cast<double>(terms.size());
    for (TermId t : terms) feedback_tf[t] += 1.0;
  }

  const double collection_length = static_cast<double>(index.total_tokens());
  std::map<TermId, double> scores;
  for (const auto& [t, tf] : feedback_tf) {
    if (params.filter_stopwords && is_stopword(index.term(t))) continue;
    const double s = kl_term_score(tf, feedback_length, static_cast<double>(index.cf(t)),
                                   collection_length);
    if (s > 0.0) scores.emplace(t, s);
  }
  const auto kept = top_terms(std::move(scores), params.fb_terms, index);
  if (kept.empty()) return out;
  const double max_score = kept.front().second;
  for (const auto& [t, s] : kept) {
    out.term_weights[index.term(t)] += params.expansion_weight * s / max_score;
  }
  return out;
}

RankedList dph_kl_pipeline(const InvertedIndex& index, const Query& query, std::size_t k,
                           const KlParams& params) {
  const auto first = rank(index, query, RetrievalModel::dph, std::max<std::size_t>(params.fb_docs, 1));
  if (first.empty()) return RankedList{query.query_id, {}};
  const auto expanded = kl_expand(index, query, first, params);
  return rank(index, expanded, RetrievalModel::dph, k);
}

RankedList rm3_pipeline(const InvertedIndex& index, const Query& query, RetrievalModel model,
                        std::size_t k, const Rm3Params& rm3, const RankerParams& params) {
  const auto first = rank(index, query, model, std::max<std::size_t>(rm3.fb_docs, 1), params);
  if (first.empty()) return RankedList{query.query_id, {}};
  const auto expanded = rm3_expand(index, query, first, rm3);
  return rank(index, expanded, model, k, params);
}

}  // namespace chunkqe
