#include "chunkqe/ranked_list.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chunkqe {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

}  // namespace

bool QueryIdLess::operator()(std::string_view a, std::string_view b) const noexcept {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na && nb) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

RankedList RankedList::from_scores(std::string query_id,
                                   std::vector<std::pair<std::string, double>> scored,
                                   std::size_t k) {
  for (const auto& [doc, score] : scored) {
    if (std::isnan(score)) {
      throw std::invalid_argument(fmt::format("NaN score for document '{}'", doc));
    }
  }
  auto better = [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  };
  const std::size_t keep = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end(), better);
  // Duplicates would sit next to each other only after a full sort by id, so
  // check the complete input.
  {
    std::vector<std::string_view> ids;
    ids.reserve(scored.size());
    for (const auto& s : scored) ids.push_back(s.first);
    std::sort(ids.begin(), ids.end());
    auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end()) {
      throw std::invalid_argument(fmt::format("duplicate document '{}' in ranking", *dup));
    }
  }
  RankedList list{std::move(query_id), {}};
  list.entries.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    list.entries.push_back(RunEntry{std::move(scored[i].first), scored[i].second, i + 1});
  }
  return list;
}

RankedList RankedList::truncated(std::size_t k) const {
  RankedList out{query_id, {}};
  const std::size_t keep = std::min(k, entries.size());
  out.entries.assign(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

void RankedList::renumber() {
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = i + 1;
}

}  // namespace chunkqe
