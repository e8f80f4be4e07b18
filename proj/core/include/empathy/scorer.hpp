#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "empathy/corpus.hpp"
#include "empathy/lexicon.hpp"

namespace empathy {

enum class Language { de, en };

std::string_view to_string(Language language);
std::optional<Language> parse_language(std::string_view name);

namespace scorer {

// Lexical cue counts for one review component.
struct FeatureVector {
  std::size_t exclam = 0;
  std::size_t pron12 = 0;          // first/second person pronouns
  std::size_t emo_strong = 0;
  std::size_t emo_mild = 0;
  std::size_t hedges = 0;
  std::size_t causal = 0;
  std::size_t example_markers = 0;
  std::size_t questions = 0;
  std::size_t direct_address = 0;  // second person pronouns and verb forms
  std::size_t sentences = 0;
  std::size_t tokens = 0;

  // "<feature>:<matched entry>" in text order, for feedback display.
  std::vector<std::string> cues;

  std::size_t elaboration() const noexcept { return causal + example_markers; }
  std::size_t perspective() const noexcept { return questions + direct_address; }
};

struct Lexicons {
  Lexicon pron12;
  Lexicon direct_address;
  Lexicon emo_strong;
  Lexicon emo_mild;
  Lexicon hedges;
  Lexicon causal;
  Lexicon example_markers;
};

const Lexicons& default_lexicons(Language language);

// Rungs of the emotional ladder; a rung fires when every count reaches its minimum.
struct EmotionalThresholds {
  std::size_t strong_pronouns = 1;
  std::size_t strong_emotion = 1;
  std::size_t strong_exclamations = 1;
  std::size_t personal_pronouns = 1;
  std::size_t personal_emotion = 1;  // emo_strong + emo_mild
  std::size_t stated_emotion = 1;    // emo_strong + emo_mild, third person
  std::size_t hedges = 1;
};

// Rungs of the cognitive ladder. Elaboration = causal + example markers,
// perspective = questions + direct address.
struct CognitiveThresholds {
  std::size_t rich_elaboration = 2;
  std::size_t rich_perspective = 1;
  std::size_t rich_sentences = 3;
  std::size_t affirmed_elaboration = 2;
  std::size_t partial_elaboration = 1;
  std::size_t partial_sentences = 3;
  std::size_t some_elaboration = 1;
  std::size_t plain_sentences = 2;
  std::size_t plain_tokens = 15;
};

struct RubricConfig {
  std::map<Language, Lexicons> lexicons;
  EmotionalThresholds emotional;
  CognitiveThresholds cognitive;

  const Lexicons& lexicons_for(Language language) const;

  static RubricConfig defaults();
  // Keys present in the JSON replace the defaults:
  //   {"thresholds":{"emotional":{...},"cognitive":{...}},
  //    "lexicons":{"de":{"pron12":[...],...},"en":{...}}}
  static RubricConfig from_json(const nlohmann::json& j);
  static RubricConfig load(const std::string& path);
};

// Throws ValidationError for text without tokens.
FeatureVector extract_features(std::string_view component_text, const Lexicons& lexicons);

EmpathyScore score_emotional(const FeatureVector& f, const EmotionalThresholds& t = {});
EmpathyScore score_cognitive(const FeatureVector& f, const CognitiveThresholds& t = {});

enum class Bucket { non_empathic, neutral, empathic };

std::string_view to_string(Bucket bucket);
std::optional<Bucket> parse_bucket(std::string_view name);

// {1,2} -> non-empathic, 3 -> neutral, {4,5} -> empathic. Throws
// ValidationError outside 1..5.
Bucket bucketize(int score);
inline Bucket bucketize(EmpathyScore score) { return bucketize(score.value()); }

struct RubricScore {
  FeatureVector features;
  EmpathyScore cognitive{1};
  EmpathyScore emotional{1};
};

RubricScore score_component(std::string_view component_text, Language language,
                            const RubricConfig& config);

nlohmann::ordered_json to_json(const FeatureVector& f);

}  // namespace scorer
}  // namespace empathy
