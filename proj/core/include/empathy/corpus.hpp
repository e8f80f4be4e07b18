#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "empathy/text.hpp"

namespace empathy {

enum class ComponentLabel { strength, weakness, suggestion, none };

// Stable order used for reports: suggestion, weakness, strength, none.
inline constexpr ComponentLabel kReportLabelOrder[] = {
    ComponentLabel::suggestion, ComponentLabel::weakness, ComponentLabel::strength,
    ComponentLabel::none};

inline constexpr ComponentLabel kStoredLabels[] = {
    ComponentLabel::strength, ComponentLabel::weakness, ComponentLabel::suggestion};

std::string_view to_string(ComponentLabel label);
std::optional<ComponentLabel> parse_component_label(std::string_view name);

enum class Dimension { cognitive, emotional };

std::string_view to_string(Dimension dimension);

/// Empathy level on the 1..5 annotation scale.
class EmpathyScore {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 5;

  /// Throws ValidationError("score out of range") outside [1, 5].
  explicit EmpathyScore(int value);

  int value() const noexcept { return value_; }
  friend bool operator==(const EmpathyScore&, const EmpathyScore&) = default;
  friend auto operator<=>(const EmpathyScore&, const EmpathyScore&) = default;

 private:
  int value_;
};

struct SpanAnnotation {
  std::string annotator;
  std::size_t start = 0;  // code point, inclusive
  std::size_t end = 0;    // code point, exclusive
  ComponentLabel component = ComponentLabel::strength;
  EmpathyScore cognitive{1};
  EmpathyScore emotional{1};

  Span span() const noexcept { return {start, end}; }
  friend bool operator==(const SpanAnnotation&, const SpanAnnotation&) = default;
};

struct AnnotatedDocument {
  std::string id;
  std::string text;
  std::vector<SpanAnnotation> annotations;

  /// Distinct annotator ids in lexicographic order.
  std::vector<std::string> annotators() const;
  /// This annotator's spans sorted by start offset.
  std::vector<SpanAnnotation> annotations_of(std::string_view annotator) const;

  friend bool operator==(const AnnotatedDocument&, const AnnotatedDocument&) = default;
};

struct AnnotatedCorpus {
  std::vector<AnnotatedDocument> documents;

  const AnnotatedDocument* find(std::string_view id) const;
  std::size_t annotation_count() const;

  friend bool operator==(const AnnotatedCorpus&, const AnnotatedCorpus&) = default;
};

struct ParseOptions {
  // Reject unknown object keys instead of ignoring them.
  bool strict = false;
};

// Reads the JSON corpus format:
//   {"documents":[{"id","text","annotations":[{"annotator","start","end",
//     "component","cognitive","emotional"}]}]}
// Throws ParseError on malformed syntax, ValidationError on invariant
// violations (offset range, overlap, score range, duplicate ids, empty text).
AnnotatedCorpus parse_corpus(std::string_view bytes, const ParseOptions& options = {});
AnnotatedCorpus load_corpus(const std::string& path, const ParseOptions& options = {});

std::string serialize_corpus(const AnnotatedCorpus& corpus);

void validate_document(const AnnotatedDocument& document);

// ---------------------------------------------------------------------------
// Sentence projection

struct SentenceLabel {
  ComponentLabel component = ComponentLabel::none;
  std::optional<EmpathyScore> cognitive;
  std::optional<EmpathyScore> emotional;

  friend bool operator==(const SentenceLabel&, const SentenceLabel&) = default;
};

struct SentenceView {
  std::vector<Span> sentences;
  std::map<std::string, std::vector<SentenceLabel>> rows;  // annotator -> one label per sentence
};

// A sentence takes the label and scores of the annotator's span covering more
// than half of its non-whitespace code points, otherwise `none`.
std::vector<SentenceLabel> project_to_sentences(const AnnotatedDocument& document,
                                                std::string_view annotator);

SentenceView build_sentence_view(const AnnotatedDocument& document);

}  // namespace empathy
