#include "chunkqe/synthetic.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <stdexcept>

namespace chunkqe {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

constexpr const char* kOnsets[] = {"b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"};
constexpr const char* kVowels[] = {"a", "e", "i", "o", "u"};

/// Pronounceable, collision-free word for an index.
std::string word_for(std::size_t index) {
  std::string w;
  std::size_t i = index;
  do {
    w += kOnsets[i % 14];
    i /= 14;
    w += kVowels[i % 5];
    i /= 5;
  } while (i > 0);
  return w + "x";
}

}  // namespace

SyntheticCollection generate_collection(const SyntheticOptions& o) {
  if (o.docs == 0 || o.queries == 0) throw std::invalid_argument("synthetic collection needs docs and queries");
  if (o.min_length == 0 || o.min_length > o.max_length) throw std::invalid_argument("bad document length range");
  if (o.relevant_per_query > o.docs) throw std::invalid_argument("more relevant docs than docs");
  const std::size_t topic_vocab = o.queries * o.topic_terms;
  if (o.vocabulary <= topic_vocab) throw std::invalid_argument("vocabulary too small for the topics");

  SplitMix64 rng(o.seed);
  std::vector<std::string> words;
  words.reserve(o.vocabulary);
  for (std::size_t i = 0; i < o.vocabulary; ++i) words.push_back(word_for(i));

  // Background words are the ones after the topic block; weight 1/(rank+1).
  const std::size_t background = o.vocabulary - topic_vocab;
  std::vector<double> cumulative(background);
  double total = 0.0;
  for (std::size_t r = 0; r < background; ++r) cumulative[r] = (total += 1.0 / static_cast<double>(r + 1));
  auto background_word = [&]() -> const std::string& {
    const double u = rng.unit() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto r = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), background - 1);
    return words[topic_vocab + r];
  };
  auto topic_word = [&](std::size_t q, std::size_t j) -> const std::string& {
    return words[q * o.topic_terms + j];
  };

  // Relevant documents per query: distinct picks, grade 2 for the first third.
  std::vector<std::vector<std::pair<std::size_t, int>>> doc_topics(o.docs);
  SyntheticCollection out;
  for (std::size_t q = 0; q < o.queries; ++q) {
    std::vector<std::size_t> pool(o.docs);
    for (std::size_t i = 0; i < o.docs; ++i) pool[i] = i;
    for (std::size_t i = 0; i < o.relevant_per_query; ++i) {
      std::swap(pool[i], pool[i + rng.below(o.docs - i)]);
      const int grade = i < o.relevant_per_query / 3 ? 2 : 1;
      doc_topics[pool[i]].emplace_back(q, grade);
    }
  }

  for (std::size_t d = 0; d < o.docs; ++d) {
    const std::size_t length = o.min_length + rng.below(o.max_length - o.min_length + 1);
    std::vector<std::string> tokens;
    tokens.reserve(length);
    for (std::size_t i = 0; i < length; ++i) tokens.push_back(background_word());
    // Topic mentions: several for grade 2, one or two for grade 1, and up to
    // three stray mentions in any document.
    for (auto [q, grade] : doc_topics[d]) {
      const std::size_t mentions = grade == 2 ? 3 + rng.below(5) : 1 + rng.below(2);
      for (std::size_t i = 0; i < mentions; ++i) {
        tokens[rng.below(length)] = topic_word(q, rng.below(o.topic_terms));
      }
    }
    const std::size_t strays = rng.below(4);
    for (std::size_t i = 0; i < strays; ++i) {
      const auto q = rng.below(o.queries);
      tokens[rng.below(length)] = topic_word(q, rng.below(o.topic_terms));
    }
    std::string text;
    for (const auto& t : tokens) {
      if (!text.empty()) text += ' ';
      text += t;
    }
    out.documents.push_back(Document::make(fmt::format("D{:05}", d), std::move(text)));
  }

  for (std::size_t q = 0; q < o.queries; ++q) {
    const auto qid = fmt::format("{}", 301 + q);
    out.queries.push_back(Query::make(
        qid, fmt::format("{} {} {}", topic_word(q, 0), topic_word(q, 1), topic_word(q, 2))));
  }
  for (std::size_t d = 0; d < o.docs; ++d) {
    for (auto [q, grade] : doc_topics[d]) {
      out.qrels.add(out.queries[q].query_id, out.documents[d].doc_id, grade);
    }
  }
  // A few judged non-relevant documents per query.
  for (std::size_t q = 0; q < o.queries; ++q) {
    for (std::size_t i = 0; i < 5; ++i) {
      const auto d = rng.below(o.docs);
      if (out.qrels.grade(out.queries[q].query_id, out.documents[d].doc_id) == 0 &&
          !out.qrels.judgments(out.queries[q].query_id).count(out.documents[d].doc_id)) {
        out.qrels.add(out.queries[q].query_id, out.documents[d].doc_id, 0);
      }
    }
  }
  return out;
}

std::string SyntheticCollection::documents_tsv() const {
  std::string out;
  for (const auto& d : documents) out += fmt::format("{}\t{}\n", d.doc_id, d.text);
  return out;
}

std::string SyntheticCollection::queries_tsv() const {
  std::string out;
  for (const auto& q : queries) out += fmt::format("{}\t{}\n", q.query_id, q.text);
  return out;
}

std::string SyntheticCollection::qrels_text() const {
  std::string out;
  for (const auto& qid : qrels.query_ids()) {
    std::vector<std::pair<std::string, int>> j(qrels.judgments(qid).begin(), qrels.judgments(qid).end());
    std::sort(j.begin(), j.end());
    for (const auto& [doc, grade] : j) out += fmt::format("{} 0 {} {}\n", qid, doc, grade);
  }
  return out;
}

}  // namespace chunkqe
