#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chunkqe {

inline constexpr std::size_t kVocabSize = 30522;
inline constexpr std::size_t kMaxPositions = 512;
inline constexpr std::size_t kTokenTypes = 2;
inline constexpr std::size_t kMaxSequenceLength = 384;
/// Attention score and context products: 2 * seq^2 * H FLOPs each per layer.
inline constexpr double kAttentionFactor = 2.0;

/// BERT encoder size.
struct VariantSpec {
  std::string_view name;
  char code;
  std::size_t layers;
  std::size_t hidden;
  std::size_t heads;
};

/// Tiny, Small, Medium, Base, Large.
std::span<const VariantSpec> bert_variants();
/// Looks a variant up by its one-letter code (T, S, M, B, L). Throws otherwise.
const VariantSpec& variant_by_code(char code);

/// (vocab + positions + token types) * H plus the embedding LayerNorm.
std::uint64_t embedding_params(const VariantSpec& v);
/// L * (12 H^2 + 13 H): Q/K/V/output projections, the 4H feed-forward and
/// two LayerNorms per layer, with biases.
std::uint64_t encoder_params(const VariantSpec& v);
/// Dense H x H layer on the [CLS] vector.
std::uint64_t pooler_params(const VariantSpec& v);
std::uint64_t param_count(const VariantSpec& v);

/// One forward pass: 2 * seq * encoder_params + 2 * L * seq^2 * H * c_attn.
/// Embedding lookups are not counted. Requires 1 <= seq <= 384.
double flops_forward(const VariantSpec& v, std::size_t seq_len, double attention_factor = kAttentionFactor);

/// What the pipeline scores for one query.
struct CostWorkload {
  std::size_t docs = 1000;               // documents re-ranked in phases one and three
  std::size_t passages_per_doc = 1;      // scored pairs per (query side, document)
  std::size_t phase1_seq = 384;
  std::size_t feedback_doc_words = 100;  // words of each feedback document cut into chunks
  std::size_t phase2_seq = 384;          // chunk pairs are padded to the model length
  std::size_t phase3_seq = 384;
  double attention_factor = kAttentionFactor;

  void validate() const;
};

/// Model per phase; "LMT" means Large, Medium, Tiny.
struct PhaseVariants {
  const VariantSpec* phase1;
  const VariantSpec* phase2;
  const VariantSpec* phase3;

  /// Accepts "LMT" or "BERT-QE-LMT".
  static PhaseVariants parse(std::string_view name);
  std::string name() const;
};

struct ExpansionShape {
  std::size_t kd = 10;
  std::size_t kc = 10;
  std::size_t m = 10;
};

struct CostReport {
  std::string configuration;
  std::size_t phase1_pairs = 0;
  std::size_t phase2_pairs = 0;
  std::size_t phase3_pairs = 0;
  double phase1 = 0.0;
  double phase2 = 0.0;
  double phase3 = 0.0;
  double total = 0.0;
  double ratio = 0.0;  // total / BERT-Large re-ranking alone
};

/// Phase-one-only FLOPs of the BERT-Large re-ranker; the ratio denominator.
double baseline_flops(const CostWorkload& workload);

/// Re-ranking with a single model and no expansion ("BERT-Base", "BERT-Large").
CostReport rerank_cost(const VariantSpec& v, const CostWorkload& workload);

/// phase1 = docs * passages * F(v1, len1)
/// phase2 = kd * |chunks of feedback_doc_words| * F(v2, len2)
/// phase3 = kc * docs * passages * F(v3, len3)
CostReport pipeline_flops(const PhaseVariants& variants, const ExpansionShape& shape,
                          const CostWorkload& workload);

/// Accepts "BERT-Base", "BERT-Large" (or "base", "large") and pipeline names.
CostReport cost_for(std::string_view configuration, const ExpansionShape& shape,
                    const CostWorkload& workload);

/// Rows in the usual order: BERT-Base, BERT-Large, LLL, LTL, LSL, LML, LBL,
/// LMT, LMS, LMM, LMB, LLT, LLS, LLM, LLB.
std::vector<std::string> standard_cost_configurations();

std::string format_cost_table(std::span<const CostReport> rows);
std::string cost_table_json(std::span<const CostReport> rows, const ExpansionShape& shape,
                            const CostWorkload& workload);

}  // namespace chunkqe
