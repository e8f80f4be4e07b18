#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "empathy/corpus.hpp"
#include "empathy/scorer.hpp"

namespace empathy::feedback {

struct ScoredComponent {
  Span span;
  ComponentLabel label = ComponentLabel::none;
  // Rubric scores are integral; remote scores are bucket midpoints (1.5, 3, 4.5).
  double cognitive = 1.0;
  double emotional = 1.0;
  scorer::Bucket cognitive_bucket = scorer::Bucket::non_empathic;
  scorer::Bucket emotional_bucket = scorer::Bucket::non_empathic;
  std::vector<std::string> cues;
};

struct MessageTemplate {
  std::string id;
  std::string text;  // "{mean}" is replaced by the one-decimal document mean
};

// Keyed by (dimension, bucket).
class TemplateTable {
 public:
  static TemplateTable defaults();
  // {"templates":[{"dimension":"emotional","bucket":"neutral","id":"...","text":"..."}]}
  // Entries replace the defaults for their key.
  static TemplateTable from_json(const nlohmann::json& j);
  static TemplateTable load(const std::string& path);

  void set(Dimension dimension, scorer::Bucket bucket, MessageTemplate message);
  const MessageTemplate& get(Dimension dimension, scorer::Bucket bucket) const;

 private:
  std::map<std::pair<Dimension, scorer::Bucket>, MessageTemplate> entries_;
};

struct Message {
  Dimension dimension = Dimension::cognitive;
  scorer::Bucket bucket = scorer::Bucket::neutral;
  std::string template_id;
  std::string text;
};

struct FeedbackReport {
  std::vector<ScoredComponent> components;
  double cognitive_mean = 0;  // rounded to one decimal
  double emotional_mean = 0;
  scorer::Bucket cognitive_bucket = scorer::Bucket::neutral;
  scorer::Bucket emotional_bucket = scorer::Bucket::neutral;
  std::vector<Message> messages;  // cognitive first, then emotional
};

double round1(double value);

// mean < 2.5 -> non-empathic, 2.5 <= mean <= 3.5 -> neutral, mean > 3.5 -> empathic
scorer::Bucket document_bucket(double mean);

// Throws ValidationError("nothing to assess") for an empty component list.
FeedbackReport build_feedback(const std::vector<ScoredComponent>& components,
                              const TemplateTable& templates = TemplateTable::defaults());

nlohmann::ordered_json to_json(const FeedbackReport& report);

}  // namespace empathy::feedback
