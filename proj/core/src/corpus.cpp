#include "empathy/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "empathy/error.hpp"

namespace empathy {

using nlohmann::ordered_json;

std::string_view to_string(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::strength: return "strength";
    case ComponentLabel::weakness: return "weakness";
    case ComponentLabel::suggestion: return "suggestion";
    case ComponentLabel::none: return "none";
  }
  return "none";
}

std::optional<ComponentLabel> parse_component_label(std::string_view name) {
  if (name == "strength") return ComponentLabel::strength;
  if (name == "weakness") return ComponentLabel::weakness;
  if (name == "suggestion") return ComponentLabel::suggestion;
  if (name == "none") return ComponentLabel::none;
  return std::nullopt;
}

std::string_view to_string(Dimension dimension) {
  return dimension == Dimension::cognitive ? "cognitive" : "emotional";
}

EmpathyScore::EmpathyScore(int value) : value_(value) {
  if (value < kMin || value > kMax) throw ValidationError("score out of range");
}

std::vector<std::string> AnnotatedDocument::annotators() const {
  std::set<std::string> ids;
  for (const auto& a : annotations) ids.insert(a.annotator);
  return {ids.begin(), ids.end()};
}

std::vector<SpanAnnotation> AnnotatedDocument::annotations_of(std::string_view annotator) const {
  std::vector<SpanAnnotation> out;
  for (const auto& a : annotations) {
    if (a.annotator == annotator) out.push_back(a);
  }
  std::sort(out.begin(), out.end(),
            [](const SpanAnnotation& x, const SpanAnnotation& y) { return x.start < y.start; });
  return out;
}

const AnnotatedDocument* AnnotatedCorpus::find(std::string_view id) const {
  for (const auto& d : documents) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

std::size_t AnnotatedCorpus::annotation_count() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.annotations.size();
  return n;
}

void validate_document(const AnnotatedDocument& document) {
  if (document.text.empty()) throw ValidationError("empty document text", document.id);
  const std::size_t length = text::code_point_length(document.text);

  for (std::size_t i = 0; i < document.annotations.size(); ++i) {
    const auto& a = document.annotations[i];
    if (a.start >= a.end) throw ValidationError("empty or inverted span", document.id, i);
    if (a.end > length) throw ValidationError("offset out of range", document.id, i);
    if (a.component == ComponentLabel::none)
      throw ValidationError("label 'none' cannot be stored", document.id, i);
  }

  // Same-annotator overlap check: sort indices by (annotator, start).
  std::vector<std::size_t> order(document.annotations.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& anns = document.annotations;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (anns[x].annotator != anns[y].annotator) return anns[x].annotator < anns[y].annotator;
    return anns[x].start < anns[y].start;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& prev = anns[order[k - 1]];
    const auto& cur = anns[order[k]];
    if (prev.annotator == cur.annotator && cur.start < prev.end)
      throw ValidationError("overlapping spans", document.id, std::max(order[k - 1], order[k]));
  }
}

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view bytes, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  offset = std::min(offset, bytes.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (bytes[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(bytes[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

void check_keys(const ordered_json& object, std::initializer_list<std::string_view> allowed,
                const std::string& where, const std::string& doc_id = {},
                std::size_t index = ValidationError::kNoIndex) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ValidationError("unknown key '" + key + "' in " + where, doc_id, index);
  }
}

const ordered_json& require(const ordered_json& object, const char* key, const std::string& doc_id,
                            std::size_t index = ValidationError::kNoIndex) {
  auto it = object.find(key);
  if (it == object.end()) throw ValidationError(std::string("missing key '") + key + "'", doc_id, index);
  return *it;
}

std::string require_string(const ordered_json& object, const char* key, const std::string& doc_id,
                           std::size_t index = ValidationError::kNoIndex) {
  const auto& v = require(object, key, doc_id, index);
  if (!v.is_string()) throw ValidationError(std::string("'") + key + "' must be a string", doc_id, index);
  return v.get<std::string>();
}

long long require_int(const ordered_json& object, const char* key, const std::string& doc_id,
                      std::size_t index) {
  const auto& v = require(object, key, doc_id, index);
  if (!v.is_number_integer())
    throw ValidationError(std::string("'") + key + "' must be an integer", doc_id, index);
  return v.get<long long>();
}

SpanAnnotation read_annotation(const ordered_json& j, const std::string& doc_id, std::size_t index,
                               const ParseOptions& options) {
  if (!j.is_object()) throw ValidationError("annotation must be an object", doc_id, index);
  if (options.strict)
    check_keys(j, {"annotator", "start", "end", "component", "cognitive", "emotional"}, "annotation",
               doc_id, index);

  SpanAnnotation a;
  a.annotator = require_string(j, "annotator", doc_id, index);
  const long long start = require_int(j, "start", doc_id, index);
  const long long end = require_int(j, "end", doc_id, index);
  if (start < 0 || end < 0) throw ValidationError("offset out of range", doc_id, index);
  a.start = static_cast<std::size_t>(start);
  a.end = static_cast<std::size_t>(end);

  const std::string component = require_string(j, "component", doc_id, index);
  const auto label = parse_component_label(component);
  if (!label || *label == ComponentLabel::none)
    throw ValidationError("unknown component '" + component + "'", doc_id, index);
  a.component = *label;

  const long long cognitive = require_int(j, "cognitive", doc_id, index);
  const long long emotional = require_int(j, "emotional", doc_id, index);
  for (long long s : {cognitive, emotional}) {
    if (s < EmpathyScore::kMin || s > EmpathyScore::kMax)
      throw ValidationError("score out of range", doc_id, index);
  }
  a.cognitive = EmpathyScore(static_cast<int>(cognitive));
  a.emotional = EmpathyScore(static_cast<int>(emotional));
  return a;
}

}  // namespace

AnnotatedCorpus parse_corpus(std::string_view bytes, const ParseOptions& options) {
  ordered_json root;
  try {
    root = ordered_json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_and_column(bytes, offset);
    throw ParseError("malformed corpus", line, column);
  }

  if (!root.is_object()) throw ValidationError("corpus root must be an object");
  if (options.strict) check_keys(root, {"documents"}, "corpus");
  const auto it = root.find("documents");
  if (it == root.end() || !it->is_array()) throw ValidationError("'documents' must be an array");

  AnnotatedCorpus corpus;
  std::set<std::string> seen;
  for (const auto& dj : *it) {
    if (!dj.is_object()) throw ValidationError("document must be an object");
    AnnotatedDocument doc;
    doc.id = require_string(dj, "id", {});
    if (options.strict) check_keys(dj, {"id", "text", "annotations"}, "document", doc.id);
    doc.text = require_string(dj, "text", doc.id);
    if (!seen.insert(doc.id).second) throw ValidationError("duplicate document id", doc.id);

    if (auto ann = dj.find("annotations"); ann != dj.end()) {
      if (!ann->is_array()) throw ValidationError("'annotations' must be an array", doc.id);
      for (std::size_t i = 0; i < ann->size(); ++i)
        doc.annotations.push_back(read_annotation((*ann)[i], doc.id, i, options));
    }
    validate_document(doc);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

AnnotatedCorpus load_corpus(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), options);
}

std::string serialize_corpus(const AnnotatedCorpus& corpus) {
  ordered_json docs = ordered_json::array();
  for (const auto& d : corpus.documents) {
    ordered_json anns = ordered_json::array();
    for (const auto& a : d.annotations) {
      anns.push_back({{"annotator", a.annotator},
                      {"start", a.start},
                      {"end", a.end},
                      {"component", to_string(a.component)},
                      {"cognitive", a.cognitive.value()},
                      {"emotional", a.emotional.value()}});
    }
    docs.push_back({{"id", d.id}, {"text", d.text}, {"annotations", std::move(anns)}});
  }
  ordered_json root;
  root["documents"] = std::move(docs);
  return root.dump(1) + "\n";
}

}  // namespace empathy
