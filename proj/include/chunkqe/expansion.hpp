#pragma once

#include <cstddef>

#include "chunkqe/corpus.hpp"
#include "chunkqe/inverted_index.hpp"
#include "chunkqe/ranked_list.hpp"
#include "chunkqe/rankers.hpp"

namespace chunkqe {

struct Rm3Params {
  std::size_t fb_docs = 10;
  std::size_t fb_terms = 10;
  double original_weight = 0.5;  // weight of the original query distribution
  bool filter_stopwords = true;
};

struct KlParams {
  std::size_t fb_docs = 10;
  std::size_t fb_terms = 10;
  double expansion_weight = 0.4;  // Rocchio beta
  bool filter_stopwords = true;
};

/// RM3: a relevance model estimated from the top `fb_docs` feedback documents
/// (uniform document weights, P(t|d) = tf/|d|), truncated to `fb_terms`,
/// renormalised and interpolated with the query's own term distribution.
/// The output weights sum to 1. Throws on empty feedback or an empty query.
WeightedQuery rm3_expand(const InvertedIndex& index, const Query& query,
                         const RankedList& feedback, const Rm3Params& params = {});

/// Divergence score used to pick KL expansion terms:
/// p_fb log2(p_fb / p_coll) when p_fb > p_coll, otherwise 0.
double kl_term_score(double feedback_tf, double feedback_length, double collection_tf,
                     double collection_length);

/// Rocchio expansion with KL term selection. Original terms keep their
/// WeightedQuery::from_query weight; each of the top `fb_terms` positively
/// divergent feedback terms adds expansion_weight * score / max score.
WeightedQuery kl_expand(const InvertedIndex& index, const Query& query,
                        const RankedList& feedback, const KlParams& params = {});

/// DPH first pass, KL expansion over its top fb_docs, DPH re-run of the
/// expanded query. This is the canonical initial ranking.
RankedList dph_kl_pipeline(const InvertedIndex& index, const Query& query, std::size_t k,
                           const KlParams& params = {});

/// `model` first pass, RM3 expansion, `model` re-run (BM25+RM3, QL+RM3).
RankedList rm3_pipeline(const InvertedIndex& index, const Query& query, RetrievalModel model,
                        std::size_t k, const Rm3Params& rm3 = {},
                        const RankerParams& params = {});

}  // namespace chunkqe
