#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chunkqe {

/// Malformed input file or record. The message names the file and line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Document {
  std::string doc_id;
  std::string text;
  std::size_t token_count = 0;

  static Document make(std::string doc_id, std::string text);
};

struct Query {
  std::string query_id;
  std::string text;
  std::vector<std::string> terms;  // tokenize(text)

  static Query make(std::string query_id, std::string text);
};

/// One `id<TAB>text` record per line. Blank lines are skipped; a trailing CR
/// is stripped. A line without a tab is an InputError.
struct TsvRecord {
  std::string id;
  std::string text;
};
std::vector<TsvRecord> read_tsv_records(const std::filesystem::path& path);

std::vector<Document> read_documents(const std::filesystem::path& path);
std::vector<Query> read_queries(const std::filesystem::path& path);

}  // namespace chunkqe
