#include "chunkqe/corpus.hpp"

#include <fmt/core.h>

#include <fstream>
#include <unordered_set>

#include "chunkqe/text.hpp"

namespace chunkqe {

Document Document::make(std::string doc_id, std::string text) {
  Document doc{std::move(doc_id), std::move(text), 0};
  doc.token_count = count_tokens(doc.text);
  return doc;
}

Query Query::make(std::string query_id, std::string text) {
  Query q{std::move(query_id), std::move(text), {}};
  q.terms = tokenize(q.text);
  return q;
}

std::vector<TsvRecord> read_tsv_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open {}", path.string()));
  std::vector<TsvRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw InputError(fmt::format("{}:{}: expected 'id<TAB>text'", path.string(), line_no));
    }
    records.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return records;
}

std::vector<Document> read_documents(const std::filesystem::path& path) {
  std::vector<Document> docs;
  for (auto& rec : read_tsv_records(path)) {
    docs.push_back(Document::make(std::move(rec.id), std::move(rec.text)));
  }
  return docs;
}

std::vector<Query> read_queries(const std::filesystem::path& path) {
  std::vector<Query> queries;
  std::unordered_set<std::string> seen;
  for (auto& rec : read_tsv_records(path)) {
    if (!seen.insert(rec.id).second) {
      throw InputError(fmt::format("{}: duplicate query id '{}'", path.string(), rec.id));
    }
    queries.push_back(Query::make(std::move(rec.id), std::move(rec.text)));
  }
  return queries;
}

}  // namespace chunkqe
