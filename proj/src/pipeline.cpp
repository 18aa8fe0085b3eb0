#include "chunkqe/pipeline.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "chunkqe/parallel.hpp"

namespace chunkqe {

namespace {

std::vector<Passage> passages_for(const InvertedIndex& docs, const std::string& doc_id,
                                  const PipelineConfig& config) {
  auto doc = docs.find_doc(doc_id);
  if (!doc) throw std::invalid_argument(fmt::format("document '{}' is not in the index", doc_id));
  const auto tokens = docs.doc_tokens(*doc);
  return decompose_passages(doc_id, tokens, config.passage_window, config.passage_stride);
}

std::vector<std::vector<Passage>> passages_for(const InvertedIndex& docs, const RankedList& list,
                                               const PipelineConfig& config) {
  std::vector<std::vector<Passage>> out;
  out.reserve(list.size());
  for (const auto& e : list.entries) out.push_back(passages_for(docs, e.doc_id, config));
  return out;
}

PhaseOneResult order_phase_one(const RankedList& head, std::span<const Probability> scores) {
  std::vector<std::size_t> order(head.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  PhaseOneResult result;
  result.ranking.query_id = head.query_id;
  for (std::size_t i : order) {
    result.ranking.entries.push_back(RunEntry{head.entries[i].doc_id, scores[i].value(), 0});
  }
  result.ranking.renumber();
  result.degenerate = scores.size() > 1 &&
                      std::all_of(scores.begin(), scores.end(),
                                  [&](Probability p) { return p == scores.front(); });
  return result;
}

}  // namespace

std::optional<Ablation> parse_ablation(std::string_view name) {
  if (name == "none") return Ablation::none;
  if (name == "remove_qd") return Ablation::remove_qd;
  if (name == "chunks_from_initial") return Ablation::chunks_from_initial;
  return std::nullopt;
}

std::string_view to_string(Ablation ablation) {
  switch (ablation) {
    case Ablation::none: return "none";
    case Ablation::remove_qd: return "remove_qd";
    case Ablation::chunks_from_initial: return "chunks_from_initial";
  }
  return "unknown";
}

void PipelineConfig::validate() const {
  if (kd < 1) throw std::invalid_argument("kd must be at least 1");
  if (kc < 1) throw std::invalid_argument("kc must be at least 1");
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
  if (rerank_depth < 1) throw std::invalid_argument("rerank depth must be at least 1");
  if (passage_window == 0 || passage_stride == 0 || passage_stride > passage_window) {
    throw std::invalid_argument("passages need 0 < stride <= window");
  }
}

std::vector<double> softmax(std::span<const double> values) {
  if (values.empty()) return {};
  const double top = *std::max_element(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size());
  double sum = 0.0;
  for (double v : values) {
    out.push_back(std::exp(v - top));
    sum += out.back();
  }
  for (double& w : out) w /= sum;
  return out;
}

PhaseOneResult phase_one(const InvertedIndex& docs, const Query& query, const RankedList& initial,
                         const Scorer& scorer, const PipelineConfig& config) {
  if (initial.empty()) throw std::invalid_argument("initial ranking is empty");
  const auto head = initial.truncated(config.rerank_depth);
  const auto passages = passages_for(docs, head, config);
  const auto scores = score_documents_maxp(scorer, query.text, passages);
  return order_phase_one(head, scores);
}

ChunkSet select_chunks(const InvertedIndex& docs, const Query& query, const RankedList& ranking,
                       const Scorer& scorer, const PipelineConfig& config) {
  if (ranking.empty()) throw std::invalid_argument("cannot select chunks from an empty ranking");
  std::vector<Chunk> candidates;
  const std::size_t n = std::min(config.kd, ranking.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& doc_id = ranking.entries[i].doc_id;
    auto doc = docs.find_doc(doc_id);
    if (!doc) throw std::invalid_argument(fmt::format("document '{}' is not in the index", doc_id));
    auto chunks = decompose_chunks(doc_id, docs.doc_tokens(*doc), config.m);
    std::move(chunks.begin(), chunks.end(), std::back_inserter(candidates));
  }

  std::vector<ScorePair> pairs;
  pairs.reserve(candidates.size());
  for (const auto& c : candidates) pairs.push_back(ScorePair{query.text, c.text()});
  const auto scores = scorer.score_pairs(pairs);

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (candidates[a].doc_id != candidates[b].doc_id) return candidates[a].doc_id < candidates[b].doc_id;
    return candidates[a].start < candidates[b].start;
  });
  if (order.size() > config.kc) order.resize(config.kc);

  ChunkSet set{query.query_id, {}};
  std::vector<double> relevance;
  for (std::size_t i : order) {
    relevance.push_back(scores[i].value());
    set.chunks.push_back(ScoredChunk{std::move(candidates[i]), scores[i].value(), 0.0});
  }
  const auto weights = softmax(relevance);
  for (std::size_t i = 0; i < weights.size(); ++i) set.chunks[i].weight = weights[i];
  return set;
}

double feedback_score(const ChunkSet& chunks, std::span<const Passage> doc_passages,
                      const Scorer& scorer) {
  if (chunks.chunks.empty()) throw std::invalid_argument("chunk set is empty");
  double sum = 0.0;
  for (const auto& c : chunks.chunks) {
    sum += c.weight * score_document_maxp(scorer, c.chunk.text(), doc_passages).value();
  }
  return sum;
}

double combine(double rel_qd, double rel_cd, double alpha) {
  return (1.0 - alpha) * rel_qd + alpha * rel_cd;
}

double interpolate_initial(Probability model_score, double initial_score, double beta) {
  return beta * std::log(model_score.value()) + (1.0 - beta) * initial_score;
}

RankedList rank_with(const QueryOutcome& outcome, double alpha, double beta) {
  if (outcome.ablation == Ablation::remove_qd) alpha = 1.0;
  std::vector<double> final_scores;
  final_scores.reserve(outcome.documents.size());
  for (const auto& d : outcome.documents) {
    const auto model = Probability::clamped(combine(d.rel_qd, d.rel_cd, alpha));
    final_scores.push_back(interpolate_initial(model, d.initial_score, beta));
  }
  std::vector<std::size_t> order(final_scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return final_scores[a] > final_scores[b]; });
  RankedList list{outcome.query_id, {}};
  list.entries.reserve(order.size());
  for (std::size_t i : order) {
    list.entries.push_back(RunEntry{outcome.documents[i].doc_id, final_scores[i], 0});
  }
  list.renumber();
  return list;
}

QueryOutcome run_query(const InvertedIndex& docs, const Query& query, const RankedList& initial,
                       const PhaseScorers& scorers, const PipelineConfig& config) {
  QueryOutcome outcome;
  outcome.query_id = query.query_id;
  outcome.ablation = config.ablation;
  try {
    config.validate();
    if (!scorers.phase1 || !scorers.phase2 || !scorers.phase3) {
      throw std::invalid_argument("a scorer is required for every phase");
    }
    if (initial.empty()) throw std::invalid_argument("initial ranking is empty");
    const auto head = initial.truncated(config.rerank_depth);
    const auto passages = passages_for(docs, head, config);

    const auto qd = score_documents_maxp(*scorers.phase1, query.text, passages);
    outcome.phase1 = order_phase_one(head, qd);

    const RankedList& source =
        config.ablation == Ablation::chunks_from_initial ? head : outcome.phase1.ranking;
    outcome.chunks = select_chunks(docs, query, source, *scorers.phase2, config);
    if (outcome.chunks.chunks.empty()) throw std::runtime_error("no feedback chunks could be selected");

    // Same summation order as feedback_score(): chunk by chunk, best first.
    std::vector<double> cd(head.size(), 0.0);
    for (const auto& c : outcome.chunks.chunks) {
      const auto maxp = score_documents_maxp(*scorers.phase3, c.chunk.text(), passages);
      for (std::size_t d = 0; d < cd.size(); ++d) cd[d] += c.weight * maxp[d].value();
    }

    for (std::size_t d = 0; d < head.size(); ++d) {
      const auto& e = head.entries[d];
      outcome.documents.push_back(DocumentEvidence{e.doc_id, d + 1, e.score, qd[d].value(), cd[d]});
    }
    outcome.final_ranking = rank_with(outcome, config.alpha, config.beta);
  } catch (const std::exception& e) {
    outcome.error = e.what();
    outcome.documents.clear();
    outcome.final_ranking = RankedList{query.query_id, {}};
  }
  return outcome;
}

RunSet PipelineRun::run() const {
  RunSet out;
  for (const auto& o : outcomes) {
    if (o.ok()) out.emplace(o.query_id, o.final_ranking);
  }
  return out;
}

std::size_t PipelineRun::failures() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const QueryOutcome& o) { return !o.ok(); }));
}

PipelineRun run_pipeline(const InvertedIndex& docs, std::span<const Query> queries,
                         const RunSet& initial, const PhaseScorers& scorers,
                         const PipelineConfig& config, std::size_t threads) {
  config.validate();
  PipelineRun run;
  run.outcomes.resize(queries.size());
  parallel_for(queries.size(), threads, [&](std::size_t i) {
    const auto& q = queries[i];
    auto it = initial.find(q.query_id);
    if (it == initial.end()) {
      run.outcomes[i].query_id = q.query_id;
      run.outcomes[i].ablation = config.ablation;
      run.outcomes[i].error = "no initial ranking for this query";
      run.outcomes[i].final_ranking.query_id = q.query_id;
      return;
    }
    run.outcomes[i] = run_query(docs, q, it->second, scorers, config);
  });
  return run;
}

std::string trace_record(const QueryOutcome& outcome, const PipelineConfig& config) {
  using nlohmann::json;
  json rec;
  rec["query_id"] = outcome.query_id;
  rec["status"] = outcome.ok() ? "ok" : "failed";
  if (outcome.error) rec["error"] = *outcome.error;
  rec["ablation"] = std::string(to_string(outcome.ablation));
  rec["alpha"] = outcome.ablation == Ablation::remove_qd ? 1.0 : config.alpha;
  rec["beta"] = config.beta;
  rec["kd"] = config.kd;
  rec["kc"] = config.kc;
  rec["m"] = config.m;
  rec["phase_one_degenerate"] = outcome.phase1.degenerate;

  json chunks = json::array();
  for (const auto& c : outcome.chunks.chunks) {
    chunks.push_back({{"doc_id", c.chunk.doc_id},
                      {"start", c.chunk.start},
                      {"text", c.chunk.text()},
                      {"score", c.relevance},
                      {"weight", c.weight}});
  }
  rec["chunks"] = std::move(chunks);

  std::unordered_map<std::string, const RunEntry*> final_by_doc;
  for (const auto& e : outcome.final_ranking.entries) final_by_doc.emplace(e.doc_id, &e);
  json documents = json::array();
  for (const auto& d : outcome.documents) {
    json row = {{"doc_id", d.doc_id},
                {"initial_rank", d.initial_rank},
                {"initial_score", d.initial_score},
                {"rel_qd", d.rel_qd},
                {"rel_cd", d.rel_cd}};
    if (auto it = final_by_doc.find(d.doc_id); it != final_by_doc.end()) {
      row["final_score"] = it->second->score;
      row["final_rank"] = it->second->rank;
    }
    documents.push_back(std::move(row));
  }
  rec["documents"] = std::move(documents);
  return rec.dump();
}

}  // namespace chunkqe
