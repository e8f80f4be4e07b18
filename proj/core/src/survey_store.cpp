#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

#include "empathy/error.hpp"
#include "empathy/service.hpp"

namespace empathy::service {

namespace {

nlohmann::json to_json(const analytics::SurveyResponse& r) {
  return {{"construct", analytics::to_string(r.construct)}, {"item", r.item}, {"rating", r.rating}};
}

analytics::SurveyResponse from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("survey response must be an object");
  analytics::SurveyResponse r;
  const auto construct = j.contains("construct") && j["construct"].is_string()
                             ? analytics::parse_construct(j["construct"].get<std::string>())
                             : std::nullopt;
  if (!construct) throw ValidationError("construct must be one of ITU, PESL, PFA");
  r.construct = *construct;
  if (!j.contains("item") || !j["item"].is_string()) throw ValidationError("missing item id");
  r.item = j["item"].get<std::string>();
  if (!j.contains("rating") || !j["rating"].is_number_integer())
    throw ValidationError("rating must be an integer");
  r.rating = j["rating"].get<int>();
  analytics::validate(r);
  return r;
}

std::vector<analytics::SurveyResponse> read_lines(const std::string& path) {
  std::vector<analytics::SurveyResponse> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace

SurveyStore::SurveyStore(std::string path) : path_(std::move(path)) {
  try {
    count_ = read_lines(path_).size();
  } catch (const std::exception& e) {
    throw StorageError("survey store " + path_ + " is corrupt: " + e.what());
  }
}

std::size_t SurveyStore::append(const std::vector<analytics::SurveyResponse>& batch) {
  std::string payload;
  for (const auto& r : batch) payload += to_json(r).dump() + "\n";

  std::lock_guard lock(mutex_);
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw StorageError("cannot open " + path_ + ": " + std::strerror(errno));
  std::size_t written = 0;
  while (written < payload.size()) {
    const ssize_t n = ::write(fd, payload.data() + written, payload.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw StorageError("write to " + path_ + " failed: " + std::strerror(err));
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    const int err = errno;
    ::close(fd);
    throw StorageError("fsync of " + path_ + " failed: " + std::strerror(err));
  }
  ::close(fd);
  count_ += batch.size();
  return count_;
}

std::vector<analytics::SurveyResponse> SurveyStore::load() const {
  std::lock_guard lock(mutex_);
  return read_lines(path_);
}

std::size_t SurveyStore::count() const {
  std::lock_guard lock(mutex_);
  return count_;
}

Response handle_survey(const std::string& body, SurveyStore& store) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    return error_response(400, "malformed_json", "request body is not valid JSON", e.what());
  }
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    if (!j.contains("responses")) return error_response(422, "invalid_survey", "missing 'responses'");
    list = &j["responses"];
  }
  if (!list->is_array() || list->empty())
    return error_response(422, "invalid_survey", "'responses' must be a non-empty array");

  std::vector<analytics::SurveyResponse> batch;
  for (std::size_t i = 0; i < list->size(); ++i) {
    try {
      batch.push_back(from_json((*list)[i]));
    } catch (const ValidationError& e) {
      return error_response(422, "invalid_survey", e.reason(), "response " + std::to_string(i));
    }
  }
  try {
    const std::size_t total = store.append(batch);
    nlohmann::ordered_json out = {{"stored", batch.size()}, {"total", total}};
    return {200, out.dump()};
  } catch (const StorageError& e) {
    return error_response(503, "storage_unavailable", "survey could not be stored", e.what());
  }
}

Response handle_survey_summary(const SurveyStore& store) {
  try {
    const auto responses = store.load();
    nlohmann::ordered_json out = {{"count", responses.size()},
                                  {"constructs", analytics::to_json(analytics::survey_summary(responses))}};
    return {200, out.dump()};
  } catch (const std::exception& e) {
    return error_response(503, "storage_unavailable", "survey store could not be read", e.what());
  }
}

}  // namespace empathy::service
