#include <regex>

#include <httplib.h>

#include "empathy/error.hpp"
#include "empathy/service.hpp"

namespace empathy::service {

namespace {

struct Endpoint {
  std::string host;
  int port = 80;
  std::string path = "/";
};

std::optional<Endpoint> parse_endpoint(const std::string& url) {
  static const std::regex pattern(R"(^http://([^/:]+)(?::(\d+))?(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, pattern)) return std::nullopt;
  Endpoint e;
  e.host = m[1].str();
  if (m[2].matched) e.port = std::stoi(m[2].str());
  if (m[3].matched) e.path = m[3].str();
  return e;
}

}  // namespace

void RemoteScorerConfig::validate() const {
  if (timeout_ms <= 0) throw ValidationError("remote scorer timeout must be positive");
  if (enabled && !parse_endpoint(endpoint))
    throw ValidationError("remote scorer endpoint must be an http:// URL");
}

double bucket_midpoint(scorer::Bucket bucket) {
  switch (bucket) {
    case scorer::Bucket::non_empathic: return 1.5;
    case scorer::Bucket::neutral: return 3.0;
    case scorer::Bucket::empathic: return 4.5;
  }
  return 3.0;
}

std::vector<RemoteResult> parse_remote_response(const std::string& body, std::size_t expected) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    throw RemoteFailure("remote scorer returned malformed JSON");
  }
  if (!j.is_object() || !j.contains("results") || !j["results"].is_array())
    throw RemoteFailure("remote scorer response lacks a 'results' array");
  const auto& results = j["results"];
  if (results.size() != expected)
    throw RemoteFailure("remote scorer returned " + std::to_string(results.size()) +
                        " results for " + std::to_string(expected) + " paragraphs");

  std::vector<RemoteResult> out;
  out.reserve(expected);
  auto field = [](const nlohmann::json& r, const char* key) {
    if (!r.is_object() || !r.contains(key) || !r[key].is_string())
      throw RemoteFailure(std::string("remote result lacks string field '") + key + "'");
    return r[key].get<std::string>();
  };
  for (const auto& r : results) {
    RemoteResult result;
    const auto label = parse_component_label(field(r, "component"));
    const auto cognitive = scorer::parse_bucket(field(r, "cognitive"));
    const auto emotional = scorer::parse_bucket(field(r, "emotional"));
    if (!label) throw RemoteFailure("unknown component label from remote scorer");
    if (!cognitive || !emotional) throw RemoteFailure("unknown bucket from remote scorer");
    result.label = *label;
    result.cognitive = *cognitive;
    result.emotional = *emotional;
    out.push_back(result);
  }
  return out;
}

HttpRemoteScorer::HttpRemoteScorer(RemoteScorerConfig config) : config_(std::move(config)) {
  config_.validate();
}

std::vector<RemoteResult> HttpRemoteScorer::score(const std::vector<std::string>& paragraphs) {
  if (!config_.enabled) throw RemoteFailure("remote scorer disabled");
  const auto endpoint = parse_endpoint(config_.endpoint);
  if (!endpoint) throw RemoteFailure("invalid remote endpoint");

  httplib::Client client(endpoint->host, endpoint->port);
  const auto seconds = config_.timeout_ms / 1000;
  const auto micros = (config_.timeout_ms % 1000) * 1000;
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);

  const nlohmann::json request = {{"paragraphs", paragraphs}};
  auto res = client.Post(endpoint->path, request.dump(), "application/json");
  if (!res) throw RemoteFailure("remote scorer unreachable: " + httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300)
    throw RemoteFailure("remote scorer returned HTTP " + std::to_string(res->status));
  return parse_remote_response(res->body, paragraphs.size());
}

}  // namespace empathy::service
