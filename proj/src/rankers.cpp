#include "chunkqe/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "chunkqe/text.hpp"

namespace chunkqe {

namespace {

struct QueryTerm {
  TermId id;
  double weight;
  double df;
  double cf;
};

class DocumentScorer {
 public:
  DocumentScorer(const InvertedIndex& index, RetrievalModel model, const RankerParams& params)
      : index_(index),
        model_(model),
        params_(params),
        n_(static_cast<double>(index.num_docs())),
        total_(static_cast<double>(index.total_tokens())),
        avgdl_(index.average_doc_length()) {}

  double score(const std::vector<QueryTerm>& terms, DocNo doc) const {
    const double dl = index_.doc_length(doc);
    double sum = 0.0;
    for (const auto& t : terms) {
      const double tf = index_.tf(t.id, doc);
      sum += t.weight * term_score(t, tf, dl);
    }
    return sum;
  }

 private:
  double term_score(const QueryTerm& t, double tf, double dl) const {
    switch (model_) {
      case RetrievalModel::bm25: {
        if (tf == 0.0) return 0.0;
        const auto& p = params_.bm25;
        const double idf = std::log(1.0 + (n_ - t.df + 0.5) / (t.df + 0.5));
        return idf * tf * (p.k1 + 1.0) / (tf + p.k1 * (1.0 - p.b + p.b * dl / avgdl_));
      }
      case RetrievalModel::ql: {
        const double mu = params_.ql.mu;
        const double background = t.cf / total_;
        return std::log((tf + mu * background) / (dl + mu));
      }
      case RetrievalModel::dph: {
        if (tf == 0.0 || tf >= dl) return 0.0;
        const double f = tf / dl;
        const double norm = (1.0 - f) * (1.0 - f) / (tf + 1.0);
        return norm * (tf * std::log2((tf * avgdl_ / dl) * (n_ / t.cf)) +
                       0.5 * std::log2(2.0 * std::numbers::pi * tf * (1.0 - f)));
      }
    }
    return 0.0;
  }

  const InvertedIndex& index_;
  RetrievalModel model_;
  RankerParams params_;
  double n_;
  double total_;
  double avgdl_;
};

}  // namespace

std::optional<RetrievalModel> parse_retrieval_model(std::string_view name) {
  if (name == "dph") return RetrievalModel::dph;
  if (name == "bm25") return RetrievalModel::bm25;
  if (name == "ql") return RetrievalModel::ql;
  return std::nullopt;
}

std::string_view to_string(RetrievalModel model) {
  switch (model) {
    case RetrievalModel::dph: return "dph";
    case RetrievalModel::bm25: return "bm25";
    case RetrievalModel::ql: return "ql";
  }
  return "unknown";
}

WeightedQuery WeightedQuery::from_query(const Query& query) {
  WeightedQuery wq{query.query_id, {}};
  for (const auto& term : query.terms) {
    if (!is_stopword(term)) wq.term_weights[term] += 1.0;
  }
  double max_tf = 0.0;
  for (const auto& [_, w] : wq.term_weights) max_tf = std::max(max_tf, w);
  for (auto& [_, w] : wq.term_weights) w /= max_tf;
  return wq;
}

double WeightedQuery::total_weight() const {
  double sum = 0.0;
  for (const auto& [_, w] : term_weights) sum += w;
  return sum;
}

RankedList rank(const InvertedIndex& index, const WeightedQuery& query, RetrievalModel model,
                std::size_t k, const RankerParams& params) {
  if (k == 0) throw std::invalid_argument("ranking depth k must be at least 1");

  std::vector<QueryTerm> terms;
  for (const auto& [term, weight] : query.term_weights) {
    if (!std::isfinite(weight) || weight < 0.0) {
      throw std::invalid_argument("query term weights must be finite and non-negative");
    }
    if (weight == 0.0) continue;
    if (auto id = index.find_term(term)) {
      terms.push_back({*id, weight, static_cast<double>(index.df(*id)),
                       static_cast<double>(index.cf(*id))});
    }
  }

  std::vector<DocNo> candidates;
  for (const auto& t : terms) {
    for (const auto& p : index.postings(t.id)) candidates.push_back(p.doc);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const DocumentScorer scorer(index, model, params);
  std::vector<std::pair<std::string, double>> scored;
  scored.reserve(candidates.size());
  for (DocNo d : candidates) scored.emplace_back(index.doc_id(d), scorer.score(terms, d));
  return RankedList::from_scores(query.query_id, std::move(scored), k);
}

RankedList rank(const InvertedIndex& index, const Query& query, RetrievalModel model,
                std::size_t k, const RankerParams& params) {
  return rank(index, WeightedQuery::from_query(query), model, k, params);
}

}  // namespace chunkqe
