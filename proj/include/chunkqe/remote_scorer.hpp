#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chunkqe/inverted_index.hpp"
#include "chunkqe/scorer.hpp"

namespace chunkqe {

/// The service could not be reached, timed out, or answered 5xx. Retryable.
class ScorerTransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The service answered, but not according to the wire protocol (bad JSON,
/// wrong length, score outside (0,1), or a 4xx rejection). Not retryable.
class ScorerProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kRemoteBatchLimit = 256;

struct HealthStatus {
  std::string status;
  std::string model;
};

/// Client for a scoring service speaking
///   POST /score  {"pairs": [{"a": ..., "b": ...}, ...]} -> {"scores": [...]}
///   GET  /health -> {"status": "ok", "model": "<name>"}
/// Batches larger than `batch_limit` are split; responses are stitched back
/// together in request order.
class RemoteScorer final : public Scorer {
 public:
  struct Options {
    std::string endpoint;  // e.g. "http://127.0.0.1:8080"
    std::size_t batch_limit = kRemoteBatchLimit;
    std::chrono::milliseconds timeout{30000};
    int max_retries = 2;
    std::size_t max_tokens = kDefaultMaxTokens;
  };

  explicit RemoteScorer(Options options);

  std::string id() const override;
  std::vector<Probability> score_pairs(std::span<const ScorePair> pairs) const override;
  HealthStatus health() const;

  static std::string encode_request(std::span<const ScorePair> pairs);
  /// Validates a /score response body against `expected` pairs.
  static std::vector<Probability> decode_response(std::string_view body, std::size_t expected);
  static HealthStatus decode_health(std::string_view body);

 private:
  std::vector<Probability> score_batch(std::span<const ScorePair> pairs) const;

  Options options_;
};

inline constexpr const char* kScorerEndpointEnv = "CHUNKQE_SCORER_ENDPOINT";

/// Builds a scorer from a command-line spec:
///   "mock"                      lexical mock with index idf
///   "mock:scale=4,shift=-2"     mock with explicit calibration
///   "remote"                    remote service at $CHUNKQE_SCORER_ENDPOINT
///   "http://host:port"          remote service; $CHUNKQE_SCORER_ENDPOINT wins when set
std::shared_ptr<const Scorer> make_scorer(std::string_view spec,
                                          std::shared_ptr<const InvertedIndex> index);

}  // namespace chunkqe
