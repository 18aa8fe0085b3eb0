#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "chunkqe/cost_model.hpp"

using namespace chunkqe;

namespace {

// Published parameter counts (millions) and re-ranking FLOPs ratios.
constexpr std::pair<char, double> kPublishedParams[] = {
    {'T', 4e6}, {'S', 11e6}, {'M', 41e6}, {'B', 109e6}, {'L', 335e6}};

struct PublishedRatio {
  const char* name;
  double ratio;
};
constexpr PublishedRatio kPublishedRatios[] = {
    {"LLL", 11.19}, {"LTL", 11.00}, {"LSL", 11.00}, {"LML", 11.01}, {"LBL", 11.05},
    {"LMT", 1.03},  {"LMS", 1.12},  {"LMM", 1.85},  {"LMB", 3.83},  {"LLT", 1.20},
    {"LLS", 1.30},  {"LLM", 2.03},  {"LLB", 4.01}};

double ratio(std::string_view name) { return cost_for(name, {}, {}).ratio; }

}  // namespace

TEST_CASE("parameter counts by closed form") {
  for (const auto& v : bert_variants()) {
    const std::uint64_t h = v.hidden, l = v.layers;
    CHECK(param_count(v) == (30522 + 512 + 2) * h + 2 * h + l * (12 * h * h + 13 * h) + h * h + h);
  }
  CHECK(param_count(variant_by_code('B')) == 109482240);
  CHECK(param_count(variant_by_code('L')) == 335141888);
  CHECK_THROWS(variant_by_code('X'));
}

TEST_CASE("parameter counts against the published table") {
  for (const auto& [code, published] : kPublishedParams) {
    const double rel = static_cast<double>(param_count(variant_by_code(code))) / published - 1.0;
    CAPTURE(code);
    CAPTURE(rel);
    // Tiny's embedding table dominates; its count is reported separately.
    if (code != 'T') CHECK(std::fabs(rel) <= 0.05);
  }
  CHECK(param_count(variant_by_code('T')) == 4385920);
}

TEST_CASE("doubling H roughly quadruples encoder parameters") {
  const VariantSpec a{"a", 'a', 4, 256, 4}, b{"b", 'b', 4, 512, 8};
  const double r = static_cast<double>(encoder_params(b)) / static_cast<double>(encoder_params(a));
  CHECK(r > 3.9);
  CHECK(r < 4.0);
}

TEST_CASE("forward FLOPs shape") {
  const auto& base = variant_by_code('B');
  const auto& large = variant_by_code('L');
  const double one = flops_forward(base, 1);
  CHECK(one / (2.0 * static_cast<double>(encoder_params(base))) == doctest::Approx(1.0).epsilon(1e-3));
  const double enc_ratio = static_cast<double>(encoder_params(large)) / static_cast<double>(encoder_params(base));
  CHECK(std::fabs(flops_forward(large, 384) / flops_forward(base, 384) / enc_ratio - 1.0) <= 0.15);
  for (std::size_t s : {1u, 16u, 100u, 192u}) {
    const double r = flops_forward(base, 2 * s) / flops_forward(base, s);
    CHECK(r > 2.0);
    CHECK(r < 4.0);
  }
  CHECK_THROWS(flops_forward(base, 0));
  CHECK_THROWS(flops_forward(base, 385));
}

TEST_CASE("published ratios") {
  CHECK(std::fabs(ratio("LLL") / 11.19 - 1.0) <= 0.15);
  CHECK(std::fabs((ratio("LLS") - 1.0) / 0.30 - 1.0) <= 0.25);
  CHECK(std::fabs((ratio("LMT") - 1.0) / 0.03 - 1.0) <= 0.50);
  CHECK(ratio("BERT-Large") == 1.0);
  CHECK(ratio("large") == 1.0);
}

TEST_CASE("ratio order agrees with the published weak order") {
  for (const auto& a : kPublishedRatios) {
    for (const auto& b : kPublishedRatios) {
      const double ra = ratio(a.name), rb = ratio(b.name);
      CAPTURE(a.name);
      CAPTURE(b.name);
      if (a.ratio == b.ratio) {
        CHECK(std::fabs(ra / rb - 1.0) <= 0.02);
      } else if (a.ratio < b.ratio) {
        CHECK((ra < rb || std::fabs(ra / rb - 1.0) <= 0.02));
      }
    }
  }
}

TEST_CASE("a configuration against itself is exactly one") {
  CostWorkload w;
  for (const auto& name : standard_cost_configurations()) {
    const auto r = cost_for(name, {}, w);
    CHECK(r.total / r.total == 1.0);
    CHECK(r.ratio == r.total / baseline_flops(w));
  }
  CHECK(standard_cost_configurations().size() == 15);
}

TEST_CASE("pipeline cost is monotone in every knob") {
  const auto v = PhaseVariants::parse("BERT-QE-LMT");
  CHECK(v.name() == "BERT-QE-LMT");
  const ExpansionShape shape;
  const CostWorkload w;
  const double base = pipeline_flops(v, shape, w).total;
  auto grow_shape = [&](auto field) {
    ExpansionShape s = shape;
    s.*field *= 2;
    return pipeline_flops(v, s, w).total;
  };
  CHECK(grow_shape(&ExpansionShape::kd) > base);
  CHECK(grow_shape(&ExpansionShape::kc) > base);
  auto grow_work = [&](auto field, std::size_t value) {
    CostWorkload x = w;
    x.*field = value;
    return pipeline_flops(v, shape, x).total;
  };
  CHECK(grow_work(&CostWorkload::docs, 2000) > base);
  CHECK(grow_work(&CostWorkload::passages_per_doc, 2) > base);
  CHECK(grow_work(&CostWorkload::feedback_doc_words, 300) > base);
  CHECK(grow_work(&CostWorkload::phase1_seq, 128) < base);
  CHECK(grow_work(&CostWorkload::phase2_seq, 128) < base);
  CHECK(grow_work(&CostWorkload::phase3_seq, 128) < base);
}

TEST_CASE("pair counts") {
  const auto r = pipeline_flops(PhaseVariants::parse("LLL"), {}, {});
  CHECK(r.phase1_pairs == 1000);
  CHECK(r.phase2_pairs == 190);
  CHECK(r.phase3_pairs == 10000);
  CHECK(r.total == r.phase1 + r.phase2 + r.phase3);
}

TEST_CASE("invalid workloads and names") {
  CostWorkload w;
  w.docs = 0;
  CHECK_THROWS(pipeline_flops(PhaseVariants::parse("LLL"), {}, w));
  ExpansionShape s;
  s.kc = 0;
  CHECK_THROWS(pipeline_flops(PhaseVariants::parse("LLL"), s, {}));
  CHECK_THROWS(PhaseVariants::parse("LL"));
  CHECK_THROWS(PhaseVariants::parse("LLX"));
  CHECK_THROWS(cost_for("bert", {}, {}));
}

TEST_CASE("table output") {
  std::vector<CostReport> rows;
  for (const auto& name : standard_cost_configurations()) rows.push_back(cost_for(name, {}, {}));
  const auto text = format_cost_table(rows);
  CHECK(text.find("11.19x") != std::string::npos);
  const auto json = nlohmann::json::parse(cost_table_json(rows, {}, {}));
  CHECK(json.is_object());
}
