#include "chunkqe/cost_model.hpp"

#include <fmt/core.h>

#include <array>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

#include "chunkqe/decompose.hpp"

namespace chunkqe {

namespace {

constexpr std::array<VariantSpec, 5> kVariants{{
    {"Tiny", 'T', 2, 128, 2},
    {"Small", 'S', 4, 256, 4},
    {"Medium", 'M', 8, 512, 8},
    {"Base", 'B', 12, 768, 12},
    {"Large", 'L', 24, 1024, 16},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::span<const VariantSpec> bert_variants() { return kVariants; }

const VariantSpec& variant_by_code(char code) {
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(code)));
  for (const auto& v : kVariants) {
    if (v.code == upper) return v;
  }
  throw std::invalid_argument(fmt::format("unknown model size '{}' (expected T, S, M, B or L)", code));
}

std::uint64_t embedding_params(const VariantSpec& v) {
  const std::uint64_t h = v.hidden;
  return (kVocabSize + kMaxPositions + kTokenTypes) * h + 2 * h;
}

std::uint64_t encoder_params(const VariantSpec& v) {
  const std::uint64_t h = v.hidden;
  return v.layers * (12 * h * h + 13 * h);
}

std::uint64_t pooler_params(const VariantSpec& v) {
  const std::uint64_t h = v.hidden;
  return h * h + h;
}

std::uint64_t param_count(const VariantSpec& v) {
  return embedding_params(v) + encoder_params(v) + pooler_params(v);
}

double flops_forward(const VariantSpec& v, std::size_t seq_len, double attention_factor) {
  if (seq_len < 1 || seq_len > kMaxSequenceLength) {
    throw std::invalid_argument(
        fmt::format("sequence length {} outside [1, {}]", seq_len, kMaxSequenceLength));
  }
  const double s = static_cast<double>(seq_len);
  const double linear = 2.0 * s * static_cast<double>(encoder_params(v));
  const double attention = 2.0 * static_cast<double>(v.layers) * s * s *
                           static_cast<double>(v.hidden) * attention_factor;
  return linear + attention;
}

void CostWorkload::validate() const {
  if (docs == 0 || passages_per_doc == 0) throw std::invalid_argument("workload has no documents to score");
  if (feedback_doc_words == 0) throw std::invalid_argument("feedback documents must have words");
  if (attention_factor < 0.0) throw std::invalid_argument("attention factor must be non-negative");
}

PhaseVariants PhaseVariants::parse(std::string_view name) {
  std::string_view code = name;
  for (std::string_view prefix : {"BERT-QE-", "bert-qe-"}) {
    if (code.starts_with(prefix)) code.remove_prefix(prefix.size());
  }
  if (code.size() != 3) throw std::invalid_argument(fmt::format("bad pipeline configuration '{}'", name));
  return PhaseVariants{&variant_by_code(code[0]), &variant_by_code(code[1]), &variant_by_code(code[2])};
}

std::string PhaseVariants::name() const {
  return fmt::format("BERT-QE-{}{}{}", phase1->code, phase2->code, phase3->code);
}

double baseline_flops(const CostWorkload& workload) {
  workload.validate();
  return static_cast<double>(workload.docs * workload.passages_per_doc) *
         flops_forward(variant_by_code('L'), workload.phase1_seq, workload.attention_factor);
}

CostReport rerank_cost(const VariantSpec& v, const CostWorkload& workload) {
  workload.validate();
  CostReport r;
  r.configuration = fmt::format("BERT-{}", v.name);
  r.phase1_pairs = workload.docs * workload.passages_per_doc;
  r.phase1 = static_cast<double>(r.phase1_pairs) * flops_forward(v, workload.phase1_seq, workload.attention_factor);
  r.total = r.phase1;
  r.ratio = r.total / baseline_flops(workload);
  return r;
}

CostReport pipeline_flops(const PhaseVariants& variants, const ExpansionShape& shape,
                          const CostWorkload& workload) {
  workload.validate();
  if (shape.kd == 0 || shape.kc == 0) throw std::invalid_argument("kd and kc must be positive");
  CostReport r;
  r.configuration = variants.name();
  r.phase1_pairs = workload.docs * workload.passages_per_doc;
  r.phase2_pairs = shape.kd * chunk_starts(workload.feedback_doc_words, shape.m).size();
  r.phase3_pairs = shape.kc * workload.docs * workload.passages_per_doc;
  const double a = workload.attention_factor;
  r.phase1 = static_cast<double>(r.phase1_pairs) * flops_forward(*variants.phase1, workload.phase1_seq, a);
  r.phase2 = static_cast<double>(r.phase2_pairs) * flops_forward(*variants.phase2, workload.phase2_seq, a);
  r.phase3 = static_cast<double>(r.phase3_pairs) * flops_forward(*variants.phase3, workload.phase3_seq, a);
  r.total = r.phase1 + r.phase2 + r.phase3;
  r.ratio = r.total / baseline_flops(workload);
  return r;
}

CostReport cost_for(std::string_view configuration, const ExpansionShape& shape,
                    const CostWorkload& workload) {
  const auto name = lower(configuration);
  if (name == "bert-base" || name == "base") return rerank_cost(variant_by_code('B'), workload);
  if (name == "bert-large" || name == "large") return rerank_cost(variant_by_code('L'), workload);
  return pipeline_flops(PhaseVariants::parse(configuration), shape, workload);
}

std::vector<std::string> standard_cost_configurations() {
  return {"BERT-Base", "BERT-Large", "LLL", "LTL", "LSL", "LML", "LBL", "LMT",
          "LMS",       "LMM",        "LMB", "LLT", "LLS", "LLM", "LLB"};
}

std::string format_cost_table(std::span<const CostReport> rows) {
  std::string out = fmt::format("{:<14} {:>12} {:>12} {:>12} {:>12} {:>8}\n", "configuration",
                                "phase1 TF", "phase2 TF", "phase3 TF", "total TF", "FLOPs");
  for (const auto& r : rows) {
    out += fmt::format("{:<14} {:>12.2f} {:>12.2f} {:>12.2f} {:>12.2f} {:>7.2f}x\n", r.configuration,
                       r.phase1 / 1e12, r.phase2 / 1e12, r.phase3 / 1e12, r.total / 1e12, r.ratio);
  }
  return out;
}

std::string cost_table_json(std::span<const CostReport> rows, const ExpansionShape& shape,
                            const CostWorkload& workload) {
  nlohmann::json doc;
  doc["workload"] = {{"docs", workload.docs},
                     {"passages_per_doc", workload.passages_per_doc},
                     {"phase1_seq", workload.phase1_seq},
                     {"feedback_doc_words", workload.feedback_doc_words},
                     {"phase2_seq", workload.phase2_seq},
                     {"phase3_seq", workload.phase3_seq},
                     {"attention_factor", workload.attention_factor},
                     {"kd", shape.kd},
                     {"kc", shape.kc},
                     {"m", shape.m}};
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"configuration", r.configuration},
                   {"phase1_pairs", r.phase1_pairs},
                   {"phase2_pairs", r.phase2_pairs},
                   {"phase3_pairs", r.phase3_pairs},
                   {"phase1_flops", r.phase1},
                   {"phase2_flops", r.phase2},
                   {"phase3_flops", r.phase3},
                   {"total_flops", r.total},
                   {"ratio", r.ratio}});
  }
  doc["rows"] = std::move(out);
  return doc.dump(2);
}

}  // namespace chunkqe
