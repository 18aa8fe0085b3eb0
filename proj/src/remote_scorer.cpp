#include "chunkqe/remote_scorer.hpp"

#include <fmt/core.h>
#include <httplib.h>

#include <cstdlib>
#include <json.hpp>

namespace chunkqe {

using json = nlohmann::json;

RemoteScorer::RemoteScorer(Options options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) throw std::invalid_argument("remote scorer needs an endpoint");
  if (options_.batch_limit == 0) throw std::invalid_argument("batch limit must be positive");
  while (!options_.endpoint.empty() && options_.endpoint.back() == '/') options_.endpoint.pop_back();
}

std::string RemoteScorer::id() const { return fmt::format("remote({})", options_.endpoint); }

std::string RemoteScorer::encode_request(std::span<const ScorePair> pairs) {
  json body = {{"pairs", json::array()}};
  for (const auto& p : pairs) body["pairs"].push_back({{"a", p.a}, {"b", p.b}});
  return body.dump();
}

std::vector<Probability> RemoteScorer::decode_response(std::string_view body, std::size_t expected) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ScorerProtocolError(fmt::format("malformed JSON response: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("scores") || !doc["scores"].is_array()) {
    throw ScorerProtocolError("response has no 'scores' array");
  }
  const auto& scores = doc["scores"];
  if (scores.size() != expected) {
    throw ScorerProtocolError(
        fmt::format("response has {} scores for {} pairs", scores.size(), expected));
  }
  std::vector<Probability> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!scores[i].is_number()) throw ScorerProtocolError(fmt::format("score {} is not a number", i));
    const double v = scores[i].get<double>();
    if (!(v > 0.0 && v < 1.0)) {
      throw ScorerProtocolError(fmt::format("score {} = {} is outside (0,1)", i, v));
    }
    out.push_back(Probability::clamped(v));
  }
  return out;
}

HealthStatus RemoteScorer::decode_health(std::string_view body) {
  try {
    const auto doc = json::parse(body);
    return HealthStatus{doc.at("status").get<std::string>(), doc.value("model", std::string{})};
  } catch (const json::exception& e) {
    throw ScorerProtocolError(fmt::format("malformed health response: {}", e.what()));
  }
}

namespace {

httplib::Client make_client(const std::string& endpoint, std::chrono::milliseconds timeout) {
  httplib::Client client(endpoint);
  const auto sec = static_cast<time_t>(timeout.count() / 1000);
  const auto usec = static_cast<time_t>((timeout.count() % 1000) * 1000);
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
  return client;
}

void check_status(const httplib::Result& res, const std::string& what) {
  if (!res) {
    throw ScorerTransportError(fmt::format("{}: {}", what, httplib::to_string(res.error())));
  }
  if (res->status >= 500) {
    throw ScorerTransportError(fmt::format("{}: HTTP {} {}", what, res->status, res->body));
  }
  if (res->status != 200) {
    throw ScorerProtocolError(fmt::format("{}: HTTP {} {}", what, res->status, res->body));
  }
}

}  // namespace

std::vector<Probability> RemoteScorer::score_batch(std::span<const ScorePair> pairs) const {
  std::vector<ScorePair> truncated;
  truncated.reserve(pairs.size());
  for (const auto& p : pairs) truncated.push_back(truncate_pair(p, options_.max_tokens));
  const auto body = encode_request(truncated);

  for (int attempt = 0;; ++attempt) {
    try {
      auto client = make_client(options_.endpoint, options_.timeout);
      auto res = client.Post("/score", body, "application/json");
      check_status(res, fmt::format("POST {}/score", options_.endpoint));
      return decode_response(res->body, pairs.size());
    } catch (const ScorerTransportError&) {
      if (attempt >= options_.max_retries) throw;
    }
  }
}

std::vector<Probability> RemoteScorer::score_pairs(std::span<const ScorePair> pairs) const {
  std::vector<Probability> out;
  out.reserve(pairs.size());
  for (std::size_t offset = 0; offset < pairs.size(); offset += options_.batch_limit) {
    const auto n = std::min(options_.batch_limit, pairs.size() - offset);
    auto part = score_batch(pairs.subspan(offset, n));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

HealthStatus RemoteScorer::health() const {
  auto client = make_client(options_.endpoint, options_.timeout);
  auto res = client.Get("/health");
  check_status(res, fmt::format("GET {}/health", options_.endpoint));
  return decode_health(res->body);
}

namespace {

MockLexicalScorer::Options parse_mock_options(std::string_view args) {
  MockLexicalScorer::Options opts;
  while (!args.empty()) {
    const auto comma = args.find(',');
    const auto item = args.substr(0, comma);
    args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(fmt::format("bad mock scorer option '{}'", item));
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    try {
      if (key == "scale") {
        opts.scale = std::stod(value);
      } else if (key == "shift") {
        opts.shift = std::stod(value);
      } else if (key == "max_tokens") {
        opts.max_tokens = std::stoul(value);
      } else {
        throw std::invalid_argument(fmt::format("unknown mock scorer option '{}'", key));
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument(fmt::format("bad value for mock scorer option '{}'", key));
    }
  }
  return opts;
}

}  // namespace

std::shared_ptr<const Scorer> make_scorer(std::string_view spec,
                                          std::shared_ptr<const InvertedIndex> index) {
  if (spec == "mock") return std::make_shared<MockLexicalScorer>(MockLexicalScorer::Options{}, index);
  if (spec.starts_with("mock:")) {
    return std::make_shared<MockLexicalScorer>(parse_mock_options(spec.substr(5)), index);
  }
  const char* env = std::getenv(kScorerEndpointEnv);
  const std::string env_endpoint = env ? env : "";
  if (spec == "remote") {
    if (env_endpoint.empty()) {
      throw std::invalid_argument(
          fmt::format("scorer 'remote' needs {} to be set", kScorerEndpointEnv));
    }
    return std::make_shared<RemoteScorer>(RemoteScorer::Options{.endpoint = env_endpoint});
  }
  if (spec.starts_with("http://") || spec.starts_with("https://")) {
    return std::make_shared<RemoteScorer>(
        RemoteScorer::Options{.endpoint = env_endpoint.empty() ? std::string(spec) : env_endpoint});
  }
  throw std::invalid_argument(fmt::format("unknown scorer '{}'", spec));
}

}  // namespace chunkqe
