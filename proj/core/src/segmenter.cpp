#include "empathy/segmenter.hpp"

#include <fstream>
#include <optional>
#include <set>

#include "empathy/error.hpp"

namespace empathy::segmenter {

SegmenterConfig SegmenterConfig::defaults() {
  SegmenterConfig c;
  c.headers[ComponentLabel::strength] = {"Stärken", "Stärke", "Strengths", "Strength"};
  c.headers[ComponentLabel::weakness] = {"Schwächen", "Schwäche", "Weaknesses", "Weakness"};
  c.headers[ComponentLabel::suggestion] = {"Verbesserungsvorschläge", "Verbesserungsvorschlag",
                                           "Verbesserungen", "Suggestions for improvement",
                                           "Suggestions", "Suggestion", "Improvements"};

  c.cues[ComponentLabel::strength] = {
      "gut",       "gute",   "gefällt",   "gefallen",  "stark",     "überzeugend", "gelungen",
      "positiv",   "toll",   "super",     "hervorragend", "spannend", "good",      "great",
      "strong",    "convincing", "nice",  "excellent", "brilliant", "well",       "like"};
  c.cues[ComponentLabel::weakness] = {
      "fehlt",   "fehlen",   "fehlende", "leider",  "schwach",  "unklar",     "problem",
      "problematisch", "mangelt", "negativ", "kritisch", "missing", "lacks",   "lack",
      "unclear", "weak",     "problematic", "unfortunately", "confusing"};
  c.cues[ComponentLabel::suggestion] = {
      "sollte",   "solltest", "solltet",  "könnte",  "könntest", "empfehle",  "vorschlag",
      "verbessern", "ergänzen", "hinzufügen", "würde", "should", "could",   "would",
      "recommend", "suggest",  "consider", "improve", "add"};
  return c;
}

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError("'" + where + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ValidationError("'" + where + "' must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

void override_map(std::map<ComponentLabel, Lexicon>& target, const nlohmann::json& j,
                  const std::string& where) {
  if (!j.is_object()) throw ValidationError("'" + where + "' must be an object");
  for (const auto& [name, value] : j.items()) {
    const auto label = parse_component_label(name);
    if (!label || *label == ComponentLabel::none)
      throw ValidationError("unknown component '" + name + "' in " + where);
    target[*label] = Lexicon(string_list(value, where + "." + name));
  }
}

}  // namespace

SegmenterConfig SegmenterConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("segmenter config must be an object");
  SegmenterConfig c = defaults();
  if (auto it = j.find("headers"); it != j.end()) override_map(c.headers, *it, "headers");
  if (auto it = j.find("cues"); it != j.end()) override_map(c.cues, *it, "cues");
  if (auto it = j.find("header_window"); it != j.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() == 0)
      throw ValidationError("'header_window' must be a positive integer");
    c.header_window = it->get<std::size_t>();
  }
  c.validate();
  return c;
}

SegmenterConfig SegmenterConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed segmenter config: ") + e.what());
  }
  return from_json(j);
}

void SegmenterConfig::validate() const {
  std::set<std::string> seen;
  for (ComponentLabel label : kStoredLabels) {
    auto it = headers.find(label);
    if (it == headers.end() || it->second.empty())
      throw ValidationError("header keywords for '" + std::string(to_string(label)) + "' are empty");
    for (const auto& entry : it->second.entries()) {
      if (!seen.insert(text::fold_case(entry)).second)
        throw ValidationError("header keyword '" + entry + "' is used by more than one label");
    }
  }
}

namespace {

// Tokens of one sentence, reusing the document-level tokenization.
TokenizedText sentence_tokens(const TokenizedText& doc, Span sentence) {
  TokenizedText t;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    if (doc.tokens[i].begin >= sentence.begin && doc.tokens[i].end <= sentence.end) {
      t.tokens.push_back(doc.tokens[i]);
      t.folded.push_back(doc.folded[i]);
    }
  }
  return t;
}

std::optional<ComponentLabel> header_label(const TokenizedText& sentence, const SegmenterConfig& config) {
  for (const auto& [label, lexicon] : config.headers) {
    for (const auto& m : lexicon.find_all(sentence)) {
      if (m.first < config.header_window) return label;
    }
  }
  return std::nullopt;
}

ComponentLabel vote(const TokenizedText& sentence, const SegmenterConfig& config) {
  ComponentLabel best = ComponentLabel::none;
  std::size_t best_hits = 0;
  bool tie = false;
  for (ComponentLabel label : kStoredLabels) {
    auto it = config.cues.find(label);
    if (it == config.cues.end()) continue;
    const std::size_t hits = it->second.count(sentence);
    if (hits > best_hits) {
      best = label;
      best_hits = hits;
      tie = false;
    } else if (hits == best_hits && hits > 0) {
      tie = true;
    }
  }
  return tie ? ComponentLabel::none : best;
}

}  // namespace

std::vector<SentenceDecision> label_sentences(std::string_view text, const SegmenterConfig& config) {
  const auto doc = TokenizedText::from(text);
  const auto sentences = text::split_sentences(doc.code_points);
  std::vector<SentenceDecision> out;
  out.reserve(sentences.size());

  std::optional<ComponentLabel> block;
  for (const auto& span : sentences) {
    const auto tokens = sentence_tokens(doc, span);
    SentenceDecision d{span, ComponentLabel::none, false};
    if (auto header = header_label(tokens, config)) {
      block = header;
      d.header = true;
    }
    if (block) {
      d.label = *block;
    } else {
      d.label = vote(tokens, config);
    }
    out.push_back(d);
  }
  return out;
}

std::vector<Segment> segment_review(std::string_view text, const SegmenterConfig& config) {
  std::vector<Segment> segments;
  for (const auto& d : label_sentences(text, config)) {
    if (!segments.empty() && segments.back().label == d.label) {
      segments.back().span.end = d.span.end;
      ++segments.back().sentences;
    } else {
      segments.push_back({d.span, d.label, 1});
    }
  }
  return segments;
}

nlohmann::ordered_json to_json(const std::vector<Segment>& segments, std::string_view text) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  const auto cps = text::decode(text);
  for (const auto& s : segments) {
    out.push_back({{"start", s.span.begin},
                   {"end", s.span.end},
                   {"label", to_string(s.label)},
                   {"sentences", s.sentences},
                   {"text", text::encode(std::u32string_view(cps).substr(s.span.begin, s.span.length()))}});
  }
  return out;
}

}  // namespace empathy::segmenter
