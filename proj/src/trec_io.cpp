#include "chunkqe/trec_io.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "chunkqe/corpus.hpp"
#include "chunkqe/io_util.hpp"

namespace chunkqe {

namespace {

const std::unordered_map<std::string, int> kNoJudgments;

/// Splits on runs of spaces/tabs.
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto f = fields(line);
    if (f.empty()) continue;
    fn(line_no, f);
  }
}

template <typename T>
T parse_number(std::string_view s, std::string_view source, std::size_t line, std::string_view what) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError(fmt::format("{}:{}: bad {} '{}'", source, line, what, s));
  }
  return value;
}

}  // namespace

void Qrels::add(const std::string& query_id, const std::string& doc_id, int grade) {
  if (grade < 0) {
    throw std::invalid_argument(fmt::format("negative grade for ({}, {})", query_id, doc_id));
  }
  auto& q = by_query_[query_id];
  if (!q.emplace(doc_id, grade).second) {
    throw std::invalid_argument(fmt::format("duplicate judgment for ({}, {})", query_id, doc_id));
  }
}

bool Qrels::has_query(std::string_view query_id) const {
  return by_query_.find(query_id) != by_query_.end();
}

int Qrels::grade(std::string_view query_id, std::string_view doc_id) const {
  const auto& j = judgments(query_id);
  auto it = j.find(std::string(doc_id));
  return it == j.end() ? 0 : it->second;
}

const std::unordered_map<std::string, int>& Qrels::judgments(std::string_view query_id) const {
  auto it = by_query_.find(query_id);
  return it == by_query_.end() ? kNoJudgments : it->second;
}

std::size_t Qrels::relevant_count(std::string_view query_id) const {
  const auto& j = judgments(query_id);
  return static_cast<std::size_t>(
      std::count_if(j.begin(), j.end(), [](const auto& kv) { return kv.second > 0; }));
}

std::vector<std::string> Qrels::query_ids() const {
  std::vector<std::string> ids;
  ids.reserve(by_query_.size());
  for (const auto& [qid, _] : by_query_) ids.push_back(qid);
  return ids;
}

RunSet parse_run(std::string_view text, std::string_view source) {
  RunSet run;
  std::map<std::string, std::unordered_set<std::string>, QueryIdLess> seen;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& f) {
    if (f.size() != 6) {
      throw InputError(fmt::format("{}:{}: expected 6 fields, got {}", source, line, f.size()));
    }
    const std::string qid(f[0]);
    std::string doc(f[2]);
    const auto rank = parse_number<std::size_t>(f[3], source, line, "rank");
    const auto score = parse_number<double>(f[4], source, line, "score");
    if (!std::isfinite(score)) throw InputError(fmt::format("{}:{}: non-finite score", source, line));
    if (!seen[qid].insert(doc).second) {
      throw InputError(fmt::format("{}:{}: document {} listed twice for query {}", source, line, doc, qid));
    }
    auto& list = run[qid];
    list.query_id = qid;
    list.entries.push_back(RunEntry{std::move(doc), score, rank});
  });
  for (auto& [_, list] : run) {
    std::stable_sort(list.entries.begin(), list.entries.end(),
                     [](const RunEntry& a, const RunEntry& b) { return a.rank < b.rank; });
    list.renumber();
  }
  return run;
}

RunSet read_run(const std::filesystem::path& path) {
  return parse_run(read_file(path), path.string());
}

std::string format_run(const RunSet& run, std::string_view tag) {
  std::string out;
  for (const auto& [qid, list] : run) {
    for (const auto& e : list.entries) {
      out += fmt::format("{} Q0 {} {} {} {}\n", qid, e.doc_id, e.rank, e.score, tag);
    }
  }
  return out;
}

void write_run(const std::filesystem::path& path, const RunSet& run, std::string_view tag) {
  write_file_atomic(path, format_run(run, tag));
}

Qrels parse_qrels(std::string_view text, std::string_view source) {
  Qrels qrels;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& f) {
    if (f.size() != 4) {
      throw InputError(fmt::format("{}:{}: expected 4 fields, got {}", source, line, f.size()));
    }
    const auto grade = parse_number<int>(f[3], source, line, "grade");
    try {
      qrels.add(std::string(f[0]), std::string(f[2]), grade);
    } catch (const std::invalid_argument& e) {
      throw InputError(fmt::format("{}:{}: {}", source, line, e.what()));
    }
  });
  return qrels;
}

Qrels read_qrels(const std::filesystem::path& path) {
  return parse_qrels(read_file(path), path.string());
}

std::vector<FoldAssignment> parse_fold_file(std::string_view text, std::string_view source) {
  std::vector<FoldAssignment> out;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& f) {
    if (f.size() != 2) {
      throw InputError(fmt::format("{}:{}: expected 'fold_index query_id'", source, line));
    }
    out.push_back(FoldAssignment{parse_number<std::size_t>(f[0], source, line, "fold index"),
                                 std::string(f[1])});
  });
  return out;
}

std::vector<FoldAssignment> read_fold_file(const std::filesystem::path& path) {
  return parse_fold_file(read_file(path), path.string());
}

std::string format_fold_file(const std::vector<std::vector<std::string>>& folds) {
  std::string out;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    for (const auto& qid : folds[f]) out += fmt::format("{} {}\n", f, qid);
  }
  return out;
}

}  // namespace chunkqe
