#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chunkqe/ranked_list.hpp"

namespace chunkqe {

/// Relevance judgments: (query_id, doc_id) -> grade >= 0.
class Qrels {
 public:
  /// Throws std::invalid_argument on a negative grade or a repeated pair.
  void add(const std::string& query_id, const std::string& doc_id, int grade);

  bool has_query(std::string_view query_id) const;
  /// 0 for unjudged documents and unknown queries.
  int grade(std::string_view query_id, std::string_view doc_id) const;
  /// Judgments of one query; empty when the query is unknown.
  const std::unordered_map<std::string, int>& judgments(std::string_view query_id) const;
  /// Number of documents with grade > 0.
  std::size_t relevant_count(std::string_view query_id) const;
  std::vector<std::string> query_ids() const;
  std::size_t size() const noexcept { return by_query_.size(); }

 private:
  std::map<std::string, std::unordered_map<std::string, int>, QueryIdLess> by_query_;
};

/// `query_id Q0 doc_id rank score tag` per line. Entries are ordered by the
/// rank column and renumbered 1..n.
RunSet parse_run(std::string_view text, std::string_view source = "<run>");
RunSet read_run(const std::filesystem::path& path);
/// Scores are written in shortest round-trip form.
std::string format_run(const RunSet& run, std::string_view tag);
void write_run(const std::filesystem::path& path, const RunSet& run, std::string_view tag);

/// `query_id 0 doc_id grade` per line.
Qrels parse_qrels(std::string_view text, std::string_view source = "<qrels>");
Qrels read_qrels(const std::filesystem::path& path);

/// `fold_index query_id` per line.
struct FoldAssignment {
  std::size_t fold = 0;
  std::string query_id;
};
std::vector<FoldAssignment> parse_fold_file(std::string_view text, std::string_view source = "<folds>");
std::vector<FoldAssignment> read_fold_file(const std::filesystem::path& path);
std::string format_fold_file(const std::vector<std::vector<std::string>>& folds);

}  // namespace chunkqe
