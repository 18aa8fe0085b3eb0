#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chunkqe/corpus.hpp"
#include "chunkqe/decompose.hpp"
#include "chunkqe/inverted_index.hpp"
#include "chunkqe/ranked_list.hpp"
#include "chunkqe/scorer.hpp"

namespace chunkqe {

/// Switches for the first-round re-ranker ablations.
enum class Ablation {
  none,
  remove_qd,            // final score ignores rel(q,d): alpha forced to 1
  chunks_from_initial,  // feedback chunks come from the initial run, not phase one
};

std::optional<Ablation> parse_ablation(std::string_view name);
std::string_view to_string(Ablation ablation);

struct PipelineConfig {
  std::size_t kd = 10;  // feedback documents
  std::size_t kc = 10;  // selected chunks
  std::size_t m = 10;   // chunk length in words
  double alpha = 0.4;   // weight of chunk evidence against rel(q,d)
  double beta = 0.9;    // weight of the model score against the initial score
  std::size_t rerank_depth = 1000;
  std::size_t passage_window = kPassageWindow;
  std::size_t passage_stride = kPassageStride;
  Ablation ablation = Ablation::none;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
  double effective_alpha() const noexcept {
    return ablation == Ablation::remove_qd ? 1.0 : alpha;
  }
};

/// One scorer per phase; the same scorer may serve several phases.
struct PhaseScorers {
  std::shared_ptr<const Scorer> phase1;
  std::shared_ptr<const Scorer> phase2;
  std::shared_ptr<const Scorer> phase3;
};

struct ScoredChunk {
  Chunk chunk;
  double relevance = 0.0;  // rel(q, c)
  double weight = 0.0;     // softmax over the kept set
};

/// Selected feedback chunks, best first; weights sum to 1.
struct ChunkSet {
  std::string query_id;
  std::vector<ScoredChunk> chunks;
};

/// Numerically stable softmax.
std::vector<double> softmax(std::span<const double> values);

struct PhaseOneResult {
  RankedList ranking;
  bool degenerate = false;  // every document received the same score
};

/// Re-scores the top `rerank_depth` documents of `initial` with MaxP over
/// their passages and sorts by that score. Exact ties keep the initial order.
PhaseOneResult phase_one(const InvertedIndex& docs, const Query& query, const RankedList& initial,
                         const Scorer& scorer, const PipelineConfig& config);

/// Cuts the top `kd` documents of `ranking` into m-word chunks, scores each
/// chunk against the query and keeps the best `kc`. Order: descending score,
/// then doc_id, then start offset.
ChunkSet select_chunks(const InvertedIndex& docs, const Query& query, const RankedList& ranking,
                       const Scorer& scorer, const PipelineConfig& config);

/// rel(C, d) = sum_i weight_i * MaxP(chunk_i, d). Requires a non-empty set.
double feedback_score(const ChunkSet& chunks, std::span<const Passage> doc_passages,
                      const Scorer& scorer);

/// (1 - alpha) * rel_qd + alpha * rel_cd
double combine(double rel_qd, double rel_cd, double alpha);

/// beta * ln(model_score) + (1 - beta) * initial_score
double interpolate_initial(Probability model_score, double initial_score, double beta);

/// Intermediate scores of one re-ranked document.
struct DocumentEvidence {
  std::string doc_id;
  std::size_t initial_rank = 0;
  double initial_score = 0.0;
  double rel_qd = 0.0;
  double rel_cd = 0.0;
};

struct QueryOutcome {
  std::string query_id;
  std::optional<std::string> error;  // set when the query failed
  Ablation ablation = Ablation::none;
  PhaseOneResult phase1;
  ChunkSet chunks;
  std::vector<DocumentEvidence> documents;  // initial order, cut at rerank_depth
  RankedList final_ranking;

  bool ok() const noexcept { return !error.has_value(); }
};

/// Final list for any (alpha, beta) from the stored evidence. Ties keep the
/// initial order. The outcome's ablation still applies (remove_qd forces
/// alpha to 1).
RankedList rank_with(const QueryOutcome& outcome, double alpha, double beta);

/// Runs all three phases for one query. Errors are captured in the outcome.
QueryOutcome run_query(const InvertedIndex& docs, const Query& query, const RankedList& initial,
                       const PhaseScorers& scorers, const PipelineConfig& config);

struct PipelineRun {
  std::vector<QueryOutcome> outcomes;  // same order as the input queries

  RunSet run() const;
  std::size_t failures() const;
};

/// Runs every query (concurrently when threads > 1). A query without an
/// initial ranking becomes a failed outcome; other queries still run.
PipelineRun run_pipeline(const InvertedIndex& docs, std::span<const Query> queries,
                         const RunSet& initial, const PhaseScorers& scorers,
                         const PipelineConfig& config, std::size_t threads = 1);

/// One JSON object (no trailing newline) describing the outcome.
std::string trace_record(const QueryOutcome& outcome, const PipelineConfig& config);

}  // namespace chunkqe
