#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "empathy/analytics.hpp"
#include "empathy/feedback.hpp"
#include "empathy/scorer.hpp"
#include "empathy/segmenter.hpp"

namespace empathy::service {

inline constexpr std::size_t kMaxTextCodePoints = 20000;

enum class ScorerMode { rubric, remote };

std::string_view to_string(ScorerMode mode);
std::optional<ScorerMode> parse_scorer_mode(std::string_view name);

struct RemoteScorerConfig {
  std::string endpoint;  // e.g. http://127.0.0.1:9000/score
  int timeout_ms = 2000;
  bool enabled = false;

  // Throws ValidationError for a non-positive timeout or an enabled config
  // without endpoint.
  void validate() const;
};

// Anything that makes remote results unusable: timeout, connection failure,
// non-2xx status, malformed payload, wrong arity, unknown label.
class RemoteFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RemoteResult {
  ComponentLabel label = ComponentLabel::none;
  scorer::Bucket cognitive = scorer::Bucket::neutral;
  scorer::Bucket emotional = scorer::Bucket::neutral;
};

// Seam for a learned paragraph classifier.
class RemoteScorer {
 public:
  virtual ~RemoteScorer() = default;
  // Exactly one result per paragraph, or RemoteFailure.
  virtual std::vector<RemoteResult> score(const std::vector<std::string>& paragraphs) = 0;
};

// POSTs {"paragraphs":[...]} and expects
// {"results":[{"component":"strength","cognitive":"empathic","emotional":"neutral"},...]}.
class HttpRemoteScorer : public RemoteScorer {
 public:
  explicit HttpRemoteScorer(RemoteScorerConfig config);
  std::vector<RemoteResult> score(const std::vector<std::string>& paragraphs) override;

 private:
  RemoteScorerConfig config_;
};

std::vector<RemoteResult> parse_remote_response(const std::string& body, std::size_t expected);

// Score reported for a remote bucket: 1.5, 3 or 4.5.
double bucket_midpoint(scorer::Bucket bucket);

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  ScorerMode default_mode = ScorerMode::rubric;
  RemoteScorerConfig remote;
  scorer::RubricConfig rubric = scorer::RubricConfig::defaults();
  segmenter::SegmenterConfig segmenter = segmenter::SegmenterConfig::defaults();
  feedback::TemplateTable templates = feedback::TemplateTable::defaults();
  std::string survey_store_path = "survey.jsonl";

  // EMPATHY_PORT, EMPATHY_HOST, EMPATHY_SCORER_MODE, EMPATHY_REMOTE_URL,
  // EMPATHY_REMOTE_TIMEOUT_MS, EMPATHY_RUBRIC_CONFIG, EMPATHY_SEGMENTER_CONFIG,
  // EMPATHY_TEMPLATES, EMPATHY_SURVEY_STORE
  static ServiceConfig from_environment();
};

struct Response {
  int status = 200;
  std::string body;
};

Response error_response(int status, const std::string& code, const std::string& message,
                        const std::string& detail = {});

struct AnalyzeRequest {
  std::string text;
  Language language = Language::de;
  std::optional<ScorerMode> mode;
};

// Segment, score each component (rubric or remote with rubric fallback) and
// build feedback. Returns the response object; throws ValidationError for an
// empty or oversize text (see handle_analyze for status mapping).
nlohmann::ordered_json analyze(const AnalyzeRequest& request, const ServiceConfig& config,
                               RemoteScorer* remote);

// POST /api/analyze body handling. 400 malformed JSON, 422 invalid fields or
// empty text, 413 more than kMaxTextCodePoints code points.
Response handle_analyze(const std::string& body, const ServiceConfig& config, RemoteScorer* remote);

class StorageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Append-only JSON-lines store; appends are serialized and synced before
// they are acknowledged.
class SurveyStore {
 public:
  explicit SurveyStore(std::string path);

  // Returns the total stored count after the append. Throws StorageError.
  std::size_t append(const std::vector<analytics::SurveyResponse>& batch);
  std::vector<analytics::SurveyResponse> load() const;
  std::size_t count() const;
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::size_t count_ = 0;
};

// 422 on any invalid response (nothing stored), 503 on storage failure.
Response handle_survey(const std::string& body, SurveyStore& store);
Response handle_survey_summary(const SurveyStore& store);

class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds to config.port (0 picks a free port); returns the bound port or -1.
  int bind();
  // Blocks until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace empathy::service
