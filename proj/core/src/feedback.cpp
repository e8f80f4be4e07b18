#include "empathy/feedback.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <tuple>

#include "empathy/error.hpp"

namespace empathy::feedback {

using scorer::Bucket;

TemplateTable TemplateTable::defaults() {
  TemplateTable t;
  t.set(Dimension::cognitive, Bucket::non_empathic,
        {"cognitive.non-empathic",
         "Cognitive empathy {mean}/5: your review states points without elaborating them. Put "
         "yourself in the author's position: add an explanation with \"because\" or \"for "
         "example\" (\"weil\", \"zum Beispiel\"), and ask a question where something is unclear."});
  t.set(Dimension::cognitive, Bucket::neutral,
        {"cognitive.neutral",
         "Cognitive empathy {mean}/5: you elaborate some points, but several are still missing "
         "reasons. Add an explanation with \"because\" or \"for example\" to each strength, weakness "
         "and suggestion, and address the author directly with a question."});
  t.set(Dimension::cognitive, Bucket::empathic,
        {"cognitive.empathic",
         "Cognitive empathy {mean}/5: you argue from the author's perspective and back your points "
         "with explanations and examples. Keep it up."});
  t.set(Dimension::emotional, Bucket::non_empathic,
        {"emotional.non-empathic",
         "Emotional empathy {mean}/5: your review reads objective and distant. Express feelings "
         "using I/you (\"I find your idea ...\", \"Ich finde deine Idee ...\") and say how the idea "
         "affects you, e.g. \"I am impressed\" or \"I am concerned\"."});
  t.set(Dimension::emotional, Bucket::neutral,
        {"emotional.neutral",
         "Emotional empathy {mean}/5: you include some evaluations but mostly in third person. "
         "Express feelings using I/you, e.g. \"I am excited about your idea!\" instead of \"the idea "
         "is good\"."});
  t.set(Dimension::emotional, Bucket::empathic,
        {"emotional.empathic",
         "Emotional empathy {mean}/5: you respond personally and emotionally to the author's work. "
         "Keep it up."});
  return t;
}

void TemplateTable::set(Dimension dimension, Bucket bucket, MessageTemplate message) {
  entries_[{dimension, bucket}] = std::move(message);
}

const MessageTemplate& TemplateTable::get(Dimension dimension, Bucket bucket) const {
  auto it = entries_.find({dimension, bucket});
  if (it == entries_.end())
    throw ValidationError("no message template for " + std::string(to_string(dimension)) + "/" +
                          std::string(scorer::to_string(bucket)));
  return it->second;
}

TemplateTable TemplateTable::from_json(const nlohmann::json& j) {
  TemplateTable t = defaults();
  if (!j.is_object() || !j.contains("templates") || !j["templates"].is_array())
    throw ValidationError("template file must contain a 'templates' array");
  for (const auto& e : j["templates"]) {
    if (!e.is_object()) throw ValidationError("template entry must be an object");
    const std::string dim = e.value("dimension", "");
    const std::string bucket = e.value("bucket", "");
    const auto b = scorer::parse_bucket(bucket);
    if (dim != "cognitive" && dim != "emotional") throw ValidationError("unknown dimension '" + dim + "'");
    if (!b) throw ValidationError("unknown bucket '" + bucket + "'");
    if (!e.contains("text") || !e["text"].is_string()) throw ValidationError("template text missing");
    const Dimension d = dim == "cognitive" ? Dimension::cognitive : Dimension::emotional;
    t.set(d, *b, {e.value("id", dim + "." + bucket), e["text"].get<std::string>()});
  }
  return t;
}

TemplateTable TemplateTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed template file: ") + e.what());
  }
  return from_json(j);
}

double round1(double value) { return std::round(value * 10.0) / 10.0; }

Bucket document_bucket(double mean) {
  if (mean < 2.5) return Bucket::non_empathic;
  if (mean <= 3.5) return Bucket::neutral;
  return Bucket::empathic;
}

namespace {

std::string render(const std::string& text, double mean) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f", mean);
  std::string out = text;
  const std::string key = "{mean}";
  for (auto pos = out.find(key); pos != std::string::npos; pos = out.find(key, pos + 1))
    out.replace(pos, key.size(), buf);
  return out;
}

}  // namespace

FeedbackReport build_feedback(const std::vector<ScoredComponent>& components,
                              const TemplateTable& templates) {
  if (components.empty()) throw ValidationError("nothing to assess");
  FeedbackReport report;
  report.components = components;

  double cognitive = 0.0;
  double emotional = 0.0;
  for (const auto& c : components) {
    cognitive += c.cognitive;
    emotional += c.emotional;
  }
  const auto n = static_cast<double>(components.size());
  report.cognitive_mean = round1(cognitive / n);
  report.emotional_mean = round1(emotional / n);
  // Buckets follow the displayed (rounded) means.
  report.cognitive_bucket = document_bucket(report.cognitive_mean);
  report.emotional_bucket = document_bucket(report.emotional_mean);

  for (auto [dim, mean, bucket] :
       {std::tuple{Dimension::cognitive, report.cognitive_mean, report.cognitive_bucket},
        std::tuple{Dimension::emotional, report.emotional_mean, report.emotional_bucket}}) {
    const auto& t = templates.get(dim, bucket);
    report.messages.push_back({dim, bucket, t.id, render(t.text, mean)});
  }
  return report;
}

nlohmann::ordered_json to_json(const FeedbackReport& report) {
  using nlohmann::ordered_json;
  ordered_json comps = ordered_json::array();
  for (const auto& c : report.components) {
    comps.push_back({{"start", c.span.begin},
                     {"end", c.span.end},
                     {"label", to_string(c.label)},
                     {"cognitive", c.cognitive},
                     {"emotional", c.emotional},
                     {"cognitive_bucket", scorer::to_string(c.cognitive_bucket)},
                     {"emotional_bucket", scorer::to_string(c.emotional_bucket)},
                     {"cues", c.cues}});
  }
  ordered_json messages = ordered_json::array();
  for (const auto& m : report.messages) {
    messages.push_back({{"dimension", to_string(m.dimension)},
                        {"bucket", scorer::to_string(m.bucket)},
                        {"template", m.template_id},
                        {"text", m.text}});
  }
  return {{"components", std::move(comps)},
          {"document",
           {{"cognitive_mean", report.cognitive_mean},
            {"emotional_mean", report.emotional_mean},
            {"cognitive_bucket", scorer::to_string(report.cognitive_bucket)},
            {"emotional_bucket", scorer::to_string(report.emotional_bucket)}}},
          {"messages", std::move(messages)}};
}

}  // namespace empathy::feedback
