#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "empathy/corpus.hpp"
#include "empathy/lexicon.hpp"

namespace empathy::segmenter {

struct SegmenterConfig {
  // Header keywords per stored label, matched case-insensitively.
  std::map<ComponentLabel, Lexicon> headers;
  // Cue lexicons for sentences before the first header.
  std::map<ComponentLabel, Lexicon> cues;
  // A header keyword must start within the first `header_window` tokens.
  std::size_t header_window = 3;

  static SegmenterConfig defaults();
  // {"headers":{"strength":[...],...},"cues":{...},"header_window":3}; keys
  // present replace the defaults.
  static SegmenterConfig from_json(const nlohmann::json& j);
  static SegmenterConfig load(const std::string& path);

  // Throws ValidationError when a header list is empty or shared across labels.
  void validate() const;
};

struct Segment {
  Span span;
  ComponentLabel label = ComponentLabel::none;
  std::size_t sentences = 0;  // sentences merged into this segment

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SentenceDecision {
  Span span;
  ComponentLabel label = ComponentLabel::none;
  bool header = false;
};

// Per-sentence labels before merging.
std::vector<SentenceDecision> label_sentences(std::string_view text, const SegmenterConfig& config);

// Header blocks first, then cue-lexicon votes for sentences outside any
// block (ties and zero hits -> none). Adjacent sentences with the same label
// are merged. Text without sentences yields no segments.
std::vector<Segment> segment_review(std::string_view text, const SegmenterConfig& config);

nlohmann::ordered_json to_json(const std::vector<Segment>& segments, std::string_view text);

}  // namespace empathy::segmenter
