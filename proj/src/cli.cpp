#include "chunkqe/cli.hpp"

#include <fmt/core.h>

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chunkqe/corpus.hpp"
#include "chunkqe/cost_model.hpp"
#include "chunkqe/cross_validation.hpp"
#include "chunkqe/expansion.hpp"
#include "chunkqe/inverted_index.hpp"
#include "chunkqe/io_util.hpp"
#include "chunkqe/metrics.hpp"
#include "chunkqe/parallel.hpp"
#include "chunkqe/pipeline.hpp"
#include "chunkqe/rankers.hpp"
#include "chunkqe/remote_scorer.hpp"
#include "chunkqe/significance.hpp"
#include "chunkqe/synthetic.hpp"
#include "chunkqe/trec_io.hpp"

namespace chunkqe {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kRunTag = "chunkqe";

struct CollectionOptions {
  std::string index;
  std::string corpus;
  std::string queries;
};

struct ExperimentOptions {
  CollectionOptions collection;
  std::string initial;
  std::string initial_model = "dph+kl";
  PipelineConfig config;
  std::string ablation = "none";
  std::string scorer1 = "mock";
  std::string scorer2 = "mock";
  std::string scorer3 = "mock";
  std::string out = "out";
};

struct GlobalOptions {
  std::size_t threads = 1;
  std::uint64_t seed = 42;
};

void add_collection_options(CLI::App* cmd, CollectionOptions& o, bool with_queries) {
  cmd->add_option("--index", o.index, "Index built by 'chunkqe index'");
  cmd->add_option("--corpus", o.corpus, "Corpus TSV (doc_id<TAB>text); indexed in memory");
  if (with_queries) cmd->add_option("--queries", o.queries, "Queries TSV (query_id<TAB>text)")->required();
}

void add_experiment_options(CLI::App* cmd, ExperimentOptions& o) {
  add_collection_options(cmd, o.collection, true);
  cmd->add_option("--initial", o.initial, "Initial TREC run; computed with --initial-model when absent");
  cmd->add_option("--initial-model", o.initial_model, "Lexical model for the initial run")
      ->capture_default_str();
  cmd->add_option("--kd", o.config.kd, "Feedback documents")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--kc", o.config.kc, "Selected chunks")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--m", o.config.m, "Chunk length in words")->capture_default_str()->check(CLI::Range(2, 100000));
  cmd->add_option("--alpha", o.config.alpha, "Chunk evidence weight")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--beta", o.config.beta, "Model score weight against the initial score")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--depth", o.config.rerank_depth, "Documents re-ranked per query")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--scorer-phase1", o.scorer1, "Scorer for phase one (mock, mock:..., remote, http://...)")
      ->capture_default_str();
  cmd->add_option("--scorer-phase2", o.scorer2, "Scorer for chunk selection")->capture_default_str();
  cmd->add_option("--scorer-phase3", o.scorer3, "Scorer for chunk evidence")->capture_default_str();
  cmd->add_option("--ablation", o.ablation, "none, remove_qd or chunks_from_initial")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "remove_qd", "chunks_from_initial"}));
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
}

std::shared_ptr<const InvertedIndex> load_collection(const CollectionOptions& o) {
  if (!o.index.empty() && !o.corpus.empty()) throw std::invalid_argument("give either --index or --corpus, not both");
  if (!o.index.empty()) return std::make_shared<const InvertedIndex>(InvertedIndex::load(o.index));
  if (!o.corpus.empty()) {
    auto docs = read_documents(o.corpus);
    if (docs.empty()) throw std::invalid_argument(fmt::format("corpus {} is empty", o.corpus));
    return std::make_shared<const InvertedIndex>(InvertedIndex::build(std::move(docs)));
  }
  throw std::invalid_argument("one of --index or --corpus is required");
}

/// dph, bm25, ql, dph+kl, bm25+rm3, ql+rm3
RankedList lexical_run(const InvertedIndex& index, const Query& query, std::string_view model, std::size_t k) {
  if (model == "dph+kl") return dph_kl_pipeline(index, query, k);
  for (std::string_view suffix : {"+rm3"}) {
    if (model.ends_with(suffix)) {
      auto base = parse_retrieval_model(model.substr(0, model.size() - suffix.size()));
      if (base) return rm3_pipeline(index, query, *base, k);
    }
  }
  if (auto m = parse_retrieval_model(model)) return rank(index, query, *m, k);
  throw std::invalid_argument(fmt::format("unknown retrieval model '{}'", model));
}

void check_lexical_model(std::string_view model) {
  static const std::vector<std::string_view> known = {"dph", "bm25", "ql", "dph+kl", "bm25+rm3", "ql+rm3"};
  if (std::find(known.begin(), known.end(), model) == known.end()) {
    throw std::invalid_argument(fmt::format("unknown retrieval model '{}' (expected dph, bm25, ql, dph+kl, bm25+rm3 or ql+rm3)", model));
  }
}

RunSet lexical_runs(const InvertedIndex& index, std::span<const Query> queries, std::string_view model,
                    std::size_t k, std::size_t threads) {
  check_lexical_model(model);
  std::vector<RankedList> lists(queries.size());
  parallel_for(queries.size(), threads,
               [&](std::size_t i) { lists[i] = lexical_run(index, queries[i], model, k); });
  RunSet run;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    lists[i].query_id = queries[i].query_id;
    run.emplace(queries[i].query_id, std::move(lists[i]));
  }
  return run;
}

struct Experiment {
  std::shared_ptr<const InvertedIndex> index;
  std::vector<Query> queries;
  RunSet initial;
  PhaseScorers scorers;
};

Experiment prepare_experiment(ExperimentOptions& o, const GlobalOptions& g) {
  auto ablation = parse_ablation(o.ablation);
  if (!ablation) throw std::invalid_argument(fmt::format("unknown ablation '{}'", o.ablation));
  o.config.ablation = *ablation;
  o.config.validate();

  Experiment e;
  e.index = load_collection(o.collection);
  e.queries = read_queries(o.collection.queries);
  if (e.queries.empty()) throw std::invalid_argument(fmt::format("no queries in {}", o.collection.queries));
  e.initial = o.initial.empty()
                  ? lexical_runs(*e.index, e.queries, o.initial_model, o.config.rerank_depth, g.threads)
                  : read_run(o.initial);
  e.scorers.phase1 = make_scorer(o.scorer1, e.index);
  e.scorers.phase2 = o.scorer2 == o.scorer1 ? e.scorers.phase1 : make_scorer(o.scorer2, e.index);
  e.scorers.phase3 = o.scorer3 == o.scorer1   ? e.scorers.phase1
                     : o.scorer3 == o.scorer2 ? e.scorers.phase2
                                              : make_scorer(o.scorer3, e.index);
  return e;
}

std::string traces(const PipelineRun& run, const PipelineConfig& config) {
  std::string out;
  for (const auto& o : run.outcomes) out += trace_record(o, config) + "\n";
  return out;
}

/// Writes the failure list next to partial outputs; removes a stale one.
void write_failures(const fs::path& dir, const PipelineRun& run) {
  const auto path = dir / "FAILED.txt";
  if (run.failures() == 0) {
    fs::remove(path);
    return;
  }
  std::string text = "# partial output: these queries failed and are missing from run.txt\n";
  for (const auto& o : run.outcomes) {
    if (!o.ok()) text += fmt::format("{}\t{}\n", o.query_id, *o.error);
  }
  write_file_atomic(path, text);
  std::cerr << fmt::format("{} of {} queries failed; see {}\n", run.failures(), run.outcomes.size(),
                           path.string());
}

int command_index(const std::string& corpus, const std::string& out) {
  auto docs = read_documents(corpus);
  if (docs.empty()) throw std::invalid_argument(fmt::format("corpus {} is empty", corpus));
  const auto index = InvertedIndex::build(std::move(docs));
  index.save(out);
  const auto s = index.stats();
  std::cout << fmt::format("docs {}\ntokens {}\nvocabulary {}\navg_doc_length {:.4f}\n", s.num_docs,
                           s.total_tokens, s.vocabulary_size, s.average_doc_length);
  return kExitOk;
}

int command_rank(const CollectionOptions& c, const std::string& model, std::size_t k, const std::string& out,
                 const GlobalOptions& g) {
  check_lexical_model(model);
  const auto index = load_collection(c);
  const auto queries = read_queries(c.queries);
  const auto run = lexical_runs(*index, queries, model, k, g.threads);
  write_run(out, run, model);
  return kExitOk;
}

int command_qe(ExperimentOptions& o, const GlobalOptions& g) {
  auto e = prepare_experiment(o, g);
  const auto run = run_pipeline(*e.index, e.queries, e.initial, e.scorers, o.config, g.threads);
  const fs::path dir(o.out);
  fs::create_directories(dir);
  write_run(dir / "run.txt", run.run(), kRunTag);
  write_file_atomic(dir / "trace.jsonl", traces(run, o.config));
  write_failures(dir, run);
  std::cout << fmt::format("queries {}\nfailed {}\nrun {}\n", run.outcomes.size(), run.failures(),
                           (dir / "run.txt").string());
  return run.failures() == 0 ? kExitOk : kExitQueryFailures;
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& names) {
  if (names.empty()) return standard_metrics();
  std::vector<Metric> out;
  for (const auto& n : names) out.push_back(parse_metric(n));
  return out;
}

int command_eval(const std::string& run_path, const std::string& qrels_path, const std::vector<std::string>& names,
                 bool per_query, const std::string& json_path) {
  const auto metrics = parse_metrics(names);
  const auto report = evaluate(read_run(run_path), read_qrels(qrels_path), metrics);
  std::cout << report.to_text(per_query);
  if (!json_path.empty()) write_file_atomic(json_path, report.to_json() + "\n");
  return kExitOk;
}

int command_sigtest(const std::string& a_path, const std::string& b_path, const std::string& qrels_path,
                    const std::string& metric_name) {
  const Metric metric = parse_metric(metric_name);
  const auto qrels = read_qrels(qrels_path);
  const std::vector<Metric> metrics{metric};
  const auto a = evaluate(read_run(a_path), qrels, metrics);
  const auto b = evaluate(read_run(b_path), qrels, metrics);
  std::vector<double> va, vb;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.query_ids.size(); ++i) {
    while (j < b.query_ids.size() && QueryIdLess{}(b.query_ids[j], a.query_ids[i])) ++j;
    if (j < b.query_ids.size() && b.query_ids[j] == a.query_ids[i]) {
      va.push_back(a.values[0][i]);
      vb.push_back(b.values[0][j]);
    }
  }
  const auto r = paired_ttest(va, vb);
  const auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
  };
  std::cout << fmt::format("metric {}\nqueries {}\nmean_a {:.4f}\nmean_b {:.4f}\nt {}\np {}\nstars {}\n",
                           metric.name(), r.n, mean(va), mean(vb), r.t, r.p,
                           r.stars().empty() ? "-" : std::string(r.stars()));
  if (r.degenerate) std::cout << "note zero-variance differences: t is infinite\n";
  return kExitOk;
}

FoldPlan load_folds(const std::string& folds_path, const std::vector<Query>& queries, const Qrels& qrels) {
  std::vector<std::string> ids;
  for (const auto& q : queries) {
    if (qrels.has_query(q.query_id)) ids.push_back(q.query_id);
  }
  if (!folds_path.empty()) return folds_from_assignment(read_fold_file(folds_path), ids);
  return round_robin_folds(ids);
}

RunSet rank_all(const PipelineRun& run, double alpha, double beta) {
  RunSet out;
  for (const auto& o : run.outcomes) {
    if (o.ok()) out.emplace(o.query_id, rank_with(o, alpha, beta));
  }
  return out;
}

int command_cv(ExperimentOptions& o, const std::string& qrels_path, const std::string& folds_path,
               const GlobalOptions& g) {
  auto e = prepare_experiment(o, g);
  const auto qrels = read_qrels(qrels_path);
  const auto plan = load_folds(folds_path, e.queries, qrels);
  const auto run = run_pipeline(*e.index, e.queries, e.initial, e.scorers, o.config, g.threads);
  const auto metrics = standard_metrics();
  const auto report =
      cross_validate(plan, qrels, [&](double a, double b) { return rank_all(run, a, b); }, metrics);

  // Each test query ranked with the parameters chosen for its fold.
  RunSet assembled;
  for (const auto& f : report.folds) {
    const auto cell = rank_all(run, f.choice.alpha, f.choice.beta);
    for (const auto& qid : plan.folds[f.fold]) {
      if (auto it = cell.find(qid); it != cell.end()) assembled.emplace(qid, it->second);
    }
  }

  const fs::path dir(o.out);
  fs::create_directories(dir);
  write_run(dir / "run.txt", assembled, kRunTag);
  write_file_atomic(dir / "trace.jsonl", traces(run, o.config));
  write_file_atomic(dir / "cv.txt", report.to_text());
  write_file_atomic(dir / "cv.json", report.to_json() + "\n");
  std::vector<std::vector<std::string>> folds(plan.folds.begin(), plan.folds.end());
  write_file_atomic(dir / "folds.txt", format_fold_file(folds));
  write_failures(dir, run);
  std::cout << report.to_text();
  return run.failures() == 0 ? kExitOk : kExitQueryFailures;
}

int command_sweep(ExperimentOptions& o, const std::string& param, const std::vector<long long>& values,
                  const std::string& qrels_path, const GlobalOptions& g) {
  if (param != "kc" && param != "m") throw std::invalid_argument(fmt::format("cannot sweep '{}' (expected kc or m)", param));
  if (values.empty()) throw std::invalid_argument("--values is empty");
  for (auto v : values) {
    if (v <= 0) throw std::invalid_argument(fmt::format("sweep value {} must be positive", v));
  }
  auto e = prepare_experiment(o, g);
  const auto qrels = read_qrels(qrels_path);
  const std::vector<Metric> metrics{{Metric::Kind::precision, 20}, {Metric::Kind::ndcg, 20}, {Metric::Kind::map, 1000}};

  std::string table = fmt::format("{}\tP@20\tNDCG@20\tMAP@1000\tfailed\n", param);
  nlohmann::json rows = nlohmann::json::array();
  std::size_t failures = 0;
  for (auto v : values) {
    auto config = o.config;
    (param == "kc" ? config.kc : config.m) = static_cast<std::size_t>(v);
    config.validate();
    const auto run = run_pipeline(*e.index, e.queries, e.initial, e.scorers, config, g.threads);
    failures += run.failures();
    const auto report = evaluate(run.run(), qrels, metrics);
    table += fmt::format("{}\t{:.4f}\t{:.4f}\t{:.4f}\t{}\n", v, report.mean(0), report.mean(1), report.mean(2),
                         run.failures());
    rows.push_back({{param, v},
                    {"P@20", report.mean(0)},
                    {"NDCG@20", report.mean(1)},
                    {"MAP@1000", report.mean(2)},
                    {"failed", run.failures()}});
  }
  const fs::path dir(o.out);
  fs::create_directories(dir);
  write_file_atomic(dir / "sweep.txt", table);
  write_file_atomic(dir / "sweep.json", nlohmann::json{{"param", param}, {"rows", rows}}.dump(2) + "\n");
  std::cout << table;
  return failures == 0 ? kExitOk : kExitQueryFailures;
}

int command_cost(std::vector<std::string> configurations, const ExpansionShape& shape, const CostWorkload& workload,
                 bool params, const std::string& json_path) {
  if (configurations.empty()) configurations = standard_cost_configurations();
  std::vector<CostReport> rows;
  for (const auto& c : configurations) rows.push_back(cost_for(c, shape, workload));
  std::cout << format_cost_table(rows);
  if (params) {
    std::cout << fmt::format("\n{:<8} {:>3} {:>5} {:>3} {:>12}\n", "variant", "L", "H", "A", "parameters");
    for (const auto& v : bert_variants()) {
      std::cout << fmt::format("{:<8} {:>3} {:>5} {:>3} {:>12}\n", v.name, v.layers, v.hidden, v.heads,
                               param_count(v));
    }
  }
  if (!json_path.empty()) write_file_atomic(json_path, cost_table_json(rows, shape, workload) + "\n");
  return kExitOk;
}

int command_synth(const SyntheticOptions& options, const std::string& out) {
  const auto c = generate_collection(options);
  const fs::path dir(out);
  fs::create_directories(dir);
  write_file_atomic(dir / "corpus.tsv", c.documents_tsv());
  write_file_atomic(dir / "queries.tsv", c.queries_tsv());
  write_file_atomic(dir / "qrels.txt", c.qrels_text());
  std::cout << fmt::format("docs {}\nqueries {}\nseed {}\n", c.documents.size(), c.queries.size(), options.seed);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Chunk-based pseudo-relevance feedback re-ranking toolkit", "chunkqe"};
  app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags override it");
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--threads", global.threads, "Worker threads for per-query work")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for sampling utilities (synth)")->capture_default_str();

  std::string corpus, out;
  auto* index_cmd = app.add_subcommand("index", "Build and save an inverted index");
  index_cmd->add_option("--corpus", corpus, "Corpus TSV")->required();
  index_cmd->add_option("--out", out, "Index file")->required();

  CollectionOptions rank_collection;
  std::string rank_model = "dph+kl";
  std::size_t rank_k = 1000;
  std::string rank_out;
  auto* rank_cmd = app.add_subcommand("rank", "Lexical retrieval to a TREC run");
  add_collection_options(rank_cmd, rank_collection, true);
  rank_cmd->add_option("--model", rank_model, "dph, bm25, ql, dph+kl, bm25+rm3 or ql+rm3")->capture_default_str();
  rank_cmd->add_option("--k", rank_k, "Documents per query")->capture_default_str()->check(CLI::PositiveNumber);
  rank_cmd->add_option("--out", rank_out, "Run file")->required();

  ExperimentOptions qe_opts;
  auto* qe_cmd = app.add_subcommand("qe", "Three-phase chunk expansion re-ranking");
  add_experiment_options(qe_cmd, qe_opts);

  std::string eval_run, eval_qrels, eval_json;
  std::vector<std::string> eval_metrics;
  bool eval_per_query = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a run against qrels");
  eval_cmd->add_option("--run", eval_run, "Run file")->required();
  eval_cmd->add_option("--qrels", eval_qrels, "Qrels file")->required();
  eval_cmd->add_option("--metrics", eval_metrics, "Metrics (default P@20,NDCG@20,MAP@100,MAP@1000)")->delimiter(',');
  eval_cmd->add_flag("--per-query", eval_per_query, "Print per-query values");
  eval_cmd->add_option("--json", eval_json, "Also write the report as JSON");

  std::string sig_a, sig_b, sig_qrels, sig_metric = "NDCG@20";
  auto* sig_cmd = app.add_subcommand("sigtest", "Paired two-tailed t-test between two runs");
  sig_cmd->add_option("--run-a", sig_a, "First run")->required();
  sig_cmd->add_option("--run-b", sig_b, "Second run")->required();
  sig_cmd->add_option("--qrels", sig_qrels, "Qrels file")->required();
  sig_cmd->add_option("--metric", sig_metric, "Metric")->capture_default_str();

  ExperimentOptions cv_opts;
  std::string cv_qrels, cv_folds;
  auto* cv_cmd = app.add_subcommand("cv", "Five-fold cross-validation of alpha and beta");
  add_experiment_options(cv_cmd, cv_opts);
  cv_cmd->add_option("--qrels", cv_qrels, "Qrels file")->required();
  cv_cmd->add_option("--folds", cv_folds, "Fold file (fold_index query_id); round-robin when absent");

  ExperimentOptions sweep_opts;
  std::string sweep_qrels, sweep_param = "kc";
  std::vector<long long> sweep_values{5, 10, 20};
  auto* sweep_cmd = app.add_subcommand("sweep", "Effectiveness over kc or m");
  add_experiment_options(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--qrels", sweep_qrels, "Qrels file")->required();
  sweep_cmd->add_option("--param", sweep_param, "kc or m")->capture_default_str();
  sweep_cmd->add_option("--values", sweep_values, "Values to try")->delimiter(',')->capture_default_str();

  std::vector<std::string> cost_configs;
  ExpansionShape shape;
  CostWorkload workload;
  bool cost_params = false;
  std::string cost_json;
  auto* cost_cmd = app.add_subcommand("cost", "FLOPs of re-ranking configurations relative to BERT-Large");
  cost_cmd->add_option("--configuration", cost_configs, "e.g. LLL, LMT, BERT-Base (default: the standard table)");
  cost_cmd->add_option("--kd", shape.kd, "Feedback documents")->capture_default_str();
  cost_cmd->add_option("--kc", shape.kc, "Selected chunks")->capture_default_str();
  cost_cmd->add_option("--m", shape.m, "Chunk length")->capture_default_str();
  cost_cmd->add_option("--docs", workload.docs, "Documents re-ranked")->capture_default_str();
  cost_cmd->add_option("--passages-per-doc", workload.passages_per_doc, "Scored pairs per document")->capture_default_str();
  cost_cmd->add_option("--feedback-doc-words", workload.feedback_doc_words, "Words chunked per feedback document")
      ->capture_default_str();
  cost_cmd->add_option("--phase1-seq", workload.phase1_seq, "Phase-one sequence length")->capture_default_str();
  cost_cmd->add_option("--phase2-seq", workload.phase2_seq, "Phase-two sequence length")->capture_default_str();
  cost_cmd->add_option("--phase3-seq", workload.phase3_seq, "Phase-three sequence length")->capture_default_str();
  cost_cmd->add_option("--attention-factor", workload.attention_factor, "Attention FLOPs constant")->capture_default_str();
  cost_cmd->add_flag("--params", cost_params, "Also print parameter counts");
  cost_cmd->add_option("--json", cost_json, "Also write the table as JSON");

  SyntheticOptions synth;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic topical collection");
  synth_cmd->add_option("--docs", synth.docs, "Documents")->capture_default_str();
  synth_cmd->add_option("--queries", synth.queries, "Queries")->capture_default_str();
  synth_cmd->add_option("--out", synth_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*index_cmd) return command_index(corpus, out);
    if (*rank_cmd) return command_rank(rank_collection, rank_model, rank_k, rank_out, global);
    if (*qe_cmd) return command_qe(qe_opts, global);
    if (*eval_cmd) return command_eval(eval_run, eval_qrels, eval_metrics, eval_per_query, eval_json);
    if (*sig_cmd) return command_sigtest(sig_a, sig_b, sig_qrels, sig_metric);
    if (*cv_cmd) return command_cv(cv_opts, cv_qrels, cv_folds, global);
    if (*sweep_cmd) return command_sweep(sweep_opts, sweep_param, sweep_values, sweep_qrels, global);
    if (*cost_cmd) return command_cost(cost_configs, shape, workload, cost_params, cost_json);
    if (*synth_cmd) {
      synth.seed = global.seed;
      return command_synth(synth, synth_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"chunkqe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace chunkqe
