#include "chunkqe/metrics.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace chunkqe {

namespace {

void require_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("metric cutoff k must be at least 1");
}

double discount(std::size_t rank) { return std::log2(static_cast<double>(rank) + 1.0); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<std::size_t> parse_cutoff(std::string_view s) {
  std::size_t scale = 1;
  if (!s.empty() && (s.back() == 'k' || s.back() == 'K')) {
    scale = 1000;
    s.remove_suffix(1);
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value == 0) return std::nullopt;
  return value * scale;
}

}  // namespace

double precision_at_k(const RankedList& run, const Qrels& qrels, std::size_t k) {
  require_k(k);
  const auto n = std::min(k, run.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (qrels.grade(run.query_id, run.entries[i].doc_id) > 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

double ndcg_at_k(const RankedList& run, const Qrels& qrels, std::size_t k) {
  require_k(k);
  std::vector<int> ideal;
  for (const auto& [doc, grade] : qrels.judgments(run.query_id)) {
    if (grade > 0) ideal.push_back(grade);
  }
  if (ideal.empty()) return 0.0;
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  double idcg = 0.0;
  for (std::size_t i = 0; i < std::min(k, ideal.size()); ++i) idcg += ideal[i] / discount(i + 1);

  double dcg = 0.0;
  const auto n = std::min(k, run.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int g = qrels.grade(run.query_id, run.entries[i].doc_id);
    if (g > 0) dcg += g / discount(i + 1);
  }
  return dcg / idcg;
}

double map_at_k(const RankedList& run, const Qrels& qrels, std::size_t k) {
  require_k(k);
  const auto total = qrels.relevant_count(run.query_id);
  if (total == 0) return 0.0;
  double sum = 0.0;
  std::size_t hits = 0;
  const auto n = std::min(k, run.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (qrels.grade(run.query_id, run.entries[i].doc_id) > 0) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(total);
}

std::string Metric::name() const {
  switch (kind) {
    case Kind::precision: return fmt::format("P@{}", k);
    case Kind::ndcg: return fmt::format("NDCG@{}", k);
    case Kind::map: return fmt::format("MAP@{}", k);
  }
  return "?";
}

double Metric::evaluate(const RankedList& run, const Qrels& qrels) const {
  switch (kind) {
    case Kind::precision: return precision_at_k(run, qrels, k);
    case Kind::ndcg: return ndcg_at_k(run, qrels, k);
    case Kind::map: return map_at_k(run, qrels, k);
  }
  return 0.0;
}

std::optional<Metric> Metric::parse(std::string_view text) {
  const auto s = lower(text);
  struct Prefix {
    std::string_view text;
    Kind kind;
  };
  static constexpr Prefix kPrefixes[] = {
      {"ndcg_cut_", Kind::ndcg}, {"map_cut_", Kind::map}, {"ndcg@", Kind::ndcg},
      {"map@", Kind::map},       {"p@", Kind::precision}, {"p_", Kind::precision},
  };
  for (const auto& p : kPrefixes) {
    if (std::string_view(s).starts_with(p.text)) {
      auto k = parse_cutoff(std::string_view(s).substr(p.text.size()));
      if (!k) return std::nullopt;
      return Metric{p.kind, *k};
    }
  }
  return std::nullopt;
}

std::vector<Metric> standard_metrics() {
  return {Metric{Metric::Kind::precision, 20}, Metric{Metric::Kind::ndcg, 20},
          Metric{Metric::Kind::map, 100}, Metric{Metric::Kind::map, 1000}};
}

Metric parse_metric(std::string_view text) {
  auto m = Metric::parse(text);
  if (!m) throw std::invalid_argument(fmt::format("unknown metric '{}'", text));
  return *m;
}

double MetricReport::mean(std::size_t metric) const {
  const auto& v = values.at(metric);
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::size_t MetricReport::metric_index(const Metric& metric) const {
  auto it = std::find(metrics.begin(), metrics.end(), metric);
  if (it == metrics.end()) throw std::invalid_argument(fmt::format("metric {} was not evaluated", metric.name()));
  return static_cast<std::size_t>(it - metrics.begin());
}

std::string MetricReport::to_text(bool per_query) const {
  std::string out;
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    const auto name = metrics[m].name();
    if (per_query) {
      for (std::size_t q = 0; q < query_ids.size(); ++q) {
        out += fmt::format("{:<10}\t{}\t{:.4f}\n", name, query_ids[q], values[m][q]);
      }
    }
    out += fmt::format("{:<10}\tall\t{:.4f}\n", name, mean(m));
  }
  out += fmt::format("{:<10}\tall\t{}\n", "num_q", query_ids.size());
  for (const auto& qid : unjudged) out += fmt::format("{:<10}\t{}\n", "unjudged", qid);
  return out;
}

std::string MetricReport::to_json() const {
  nlohmann::json doc;
  doc["queries"] = query_ids;
  doc["unjudged"] = unjudged;
  nlohmann::json ms = nlohmann::json::object();
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    ms[metrics[m].name()] = {{"mean", mean(m)}, {"per_query", values[m]}};
  }
  doc["metrics"] = std::move(ms);
  return doc.dump(2);
}

MetricReport evaluate(const RunSet& run, const Qrels& qrels, std::span<const Metric> metrics) {
  MetricReport report;
  report.metrics.assign(metrics.begin(), metrics.end());
  report.values.resize(metrics.size());
  for (const auto& [qid, list] : run) {
    if (!qrels.has_query(qid)) {
      report.unjudged.push_back(qid);
      continue;
    }
    report.query_ids.push_back(qid);
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      report.values[m].push_back(metrics[m].evaluate(list, qrels));
    }
  }
  return report;
}

}  // namespace chunkqe
