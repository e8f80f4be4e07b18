#include <cstdlib>

#include <httplib.h>

#include "empathy/error.hpp"
#include "empathy/service.hpp"

namespace empathy::service {

using nlohmann::ordered_json;

std::string_view to_string(ScorerMode mode) { return mode == ScorerMode::rubric ? "rubric" : "remote"; }

std::optional<ScorerMode> parse_scorer_mode(std::string_view name) {
  if (name == "rubric") return ScorerMode::rubric;
  if (name == "remote") return ScorerMode::remote;
  return std::nullopt;
}

ServiceConfig ServiceConfig::from_environment() {
  ServiceConfig c;
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  if (auto v = env("EMPATHY_HOST")) c.host = *v;
  if (auto v = env("EMPATHY_PORT")) c.port = std::stoi(*v);
  if (auto v = env("EMPATHY_SCORER_MODE")) {
    const auto mode = parse_scorer_mode(*v);
    if (!mode) throw ValidationError("EMPATHY_SCORER_MODE must be rubric or remote");
    c.default_mode = *mode;
  }
  if (auto v = env("EMPATHY_REMOTE_URL")) {
    c.remote.endpoint = *v;
    c.remote.enabled = true;
  }
  if (auto v = env("EMPATHY_REMOTE_TIMEOUT_MS")) c.remote.timeout_ms = std::stoi(*v);
  if (auto v = env("EMPATHY_RUBRIC_CONFIG")) c.rubric = scorer::RubricConfig::load(*v);
  if (auto v = env("EMPATHY_SEGMENTER_CONFIG")) c.segmenter = segmenter::SegmenterConfig::load(*v);
  if (auto v = env("EMPATHY_TEMPLATES")) c.templates = feedback::TemplateTable::load(*v);
  if (auto v = env("EMPATHY_SURVEY_STORE")) c.survey_store_path = *v;
  c.remote.validate();
  return c;
}

Response error_response(int status, const std::string& code, const std::string& message,
                        const std::string& detail) {
  ordered_json body = {{"code", code}, {"message", message}, {"detail", detail}};
  return {status, body.dump()};
}

namespace {

std::vector<feedback::ScoredComponent> rubric_scores(const std::u32string& cps,
                                                     const std::vector<segmenter::Segment>& segments,
                                                     Language language, const ServiceConfig& config) {
  std::vector<feedback::ScoredComponent> out;
  for (const auto& s : segments) {
    const auto piece = text::encode(std::u32string_view(cps).substr(s.span.begin, s.span.length()));
    const auto score = scorer::score_component(piece, language, config.rubric);
    feedback::ScoredComponent c;
    c.span = s.span;
    c.label = s.label;
    c.cognitive = score.cognitive.value();
    c.emotional = score.emotional.value();
    c.cognitive_bucket = scorer::bucketize(score.cognitive);
    c.emotional_bucket = scorer::bucketize(score.emotional);
    c.cues = score.features.cues;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<feedback::ScoredComponent> remote_scores(const std::u32string& cps,
                                                     const std::vector<segmenter::Segment>& segments,
                                                     RemoteScorer& remote) {
  std::vector<std::string> paragraphs;
  for (const auto& s : segments)
    paragraphs.push_back(text::encode(std::u32string_view(cps).substr(s.span.begin, s.span.length())));
  const auto results = remote.score(paragraphs);
  if (results.size() != segments.size()) throw RemoteFailure("remote scorer arity mismatch");

  std::vector<feedback::ScoredComponent> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    feedback::ScoredComponent c;
    c.span = segments[i].span;
    c.label = results[i].label;
    c.cognitive_bucket = results[i].cognitive;
    c.emotional_bucket = results[i].emotional;
    c.cognitive = bucket_midpoint(results[i].cognitive);
    c.emotional = bucket_midpoint(results[i].emotional);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ordered_json analyze(const AnalyzeRequest& request, const ServiceConfig& config, RemoteScorer* remote) {
  const auto cps = text::decode(request.text);
  if (cps.size() > kMaxTextCodePoints) throw ValidationError("text too long");

  auto segments = segmenter::segment_review(request.text, config.segmenter);
  if (segments.empty()) throw ValidationError("text is empty");

  // Score review components; a text without any recognised component is
  // assessed as a whole so the writer still gets feedback.
  std::vector<segmenter::Segment> components;
  for (const auto& s : segments)
    if (s.label != ComponentLabel::none) components.push_back(s);
  if (components.empty()) components = segments;

  const ScorerMode mode = request.mode.value_or(config.default_mode);
  bool fallback = false;
  std::vector<feedback::ScoredComponent> scored;
  if (mode == ScorerMode::remote) {
    if (remote != nullptr && config.remote.enabled) {
      try {
        scored = remote_scores(cps, components, *remote);
      } catch (const RemoteFailure&) {
        fallback = true;
      }
    } else {
      fallback = true;
    }
  }
  if (mode == ScorerMode::rubric || fallback) scored = rubric_scores(cps, components, request.language, config);

  ordered_json out = feedback::to_json(feedback::build_feedback(scored, config.templates));
  out["language"] = to_string(request.language);
  out["scorer"] = {{"mode", to_string(mode)}, {"fallback", fallback}};
  return out;
}

Response handle_analyze(const std::string& body, const ServiceConfig& config, RemoteScorer* remote) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    return error_response(400, "malformed_json", "request body is not valid JSON", e.what());
  }
  if (!j.is_object()) return error_response(422, "invalid_request", "request must be an object");

  AnalyzeRequest request;
  if (!j.contains("text") || !j["text"].is_string())
    return error_response(422, "missing_text", "'text' must be a string");
  request.text = j["text"].get<std::string>();

  if (j.contains("language") && !j["language"].is_null()) {
    const auto lang = j["language"].is_string() ? parse_language(j["language"].get<std::string>())
                                                : std::nullopt;
    if (!lang) return error_response(422, "invalid_language", "'language' must be de or en");
    request.language = *lang;
  }
  if (j.contains("scorer_mode") && !j["scorer_mode"].is_null()) {
    const auto mode = j["scorer_mode"].is_string()
                          ? parse_scorer_mode(j["scorer_mode"].get<std::string>())
                          : std::nullopt;
    if (!mode) return error_response(422, "invalid_scorer_mode", "'scorer_mode' must be rubric or remote");
    request.mode = *mode;
  }

  const std::size_t length = text::code_point_length(request.text);
  if (length > kMaxTextCodePoints)
    return error_response(413, "text_too_long", "text exceeds 20000 code points",
                          std::to_string(length) + " code points");
  if (text::tokenize(request.text).empty())
    return error_response(422, "empty_text", "text is empty");

  try {
    return {200, analyze(request, config, remote).dump()};
  } catch (const ValidationError& e) {
    return error_response(422, "invalid_text", e.reason());
  }
}

// ---------------------------------------------------------------------------

struct Server::Impl {
  ServiceConfig config;
  SurveyStore store;
  std::unique_ptr<HttpRemoteScorer> remote;
  httplib::Server http;

  explicit Impl(ServiceConfig c) : config(std::move(c)), store(config.survey_store_path) {
    if (config.remote.enabled) remote = std::make_unique<HttpRemoteScorer>(config.remote);
    routes();
  }

  static void send(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  }

  void routes() {
    http.set_payload_max_length(4 * 1024 * 1024);
    http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
      send(res, {200, R"({"status":"ok"})"});
    });
    http.Post("/api/analyze", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, handle_analyze(req.body, config, remote.get()));
    });
    http.Post("/api/survey", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, handle_survey(req.body, store));
    });
    http.Get("/api/survey/summary", [this](const httplib::Request&, httplib::Response& res) {
      send(res, handle_survey_summary(store));
    });
    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string detail;
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        detail = e.what();
      } catch (...) {
        detail = "unknown";
      }
      send(res, error_response(500, "internal_error", "unexpected server error", detail));
    });
  }
};

Server::Server(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

Server::~Server() { stop(); }

int Server::bind() {
  if (impl_->config.port == 0) return impl_->http.bind_to_any_port(impl_->config.host);
  return impl_->http.bind_to_port(impl_->config.host, impl_->config.port) ? impl_->config.port : -1;
}

bool Server::listen_after_bind() { return impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace empathy::service
