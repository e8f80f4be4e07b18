#include "empathy/scorer.hpp"

#include <algorithm>
#include <fstream>

#include "empathy/error.hpp"

namespace empathy {

std::string_view to_string(Language language) { return language == Language::de ? "de" : "en"; }

std::optional<Language> parse_language(std::string_view name) {
  if (name == "de") return Language::de;
  if (name == "en") return Language::en;
  return std::nullopt;
}

namespace scorer {

namespace {

Lexicons german() {
  Lexicons l;
  l.pron12 = {"ich",   "mich",  "mir",   "mein",  "meine", "meiner", "meinen", "meinem",
              "meines", "wir",  "uns",   "unser", "unsere", "du",    "dich",   "dir",
              "dein",  "deine", "deiner", "deinen", "deinem", "deines", "sie",   "ihnen",
              "ihr",   "ihre",  "ihrer", "ihren", "ihrem",  "euch",  "euer",   "eure"};
  l.direct_address = {"du",      "dich",     "dir",      "dein",     "deine",   "deiner",
                      "deinen",  "deinem",   "deines",   "euch",     "euer",    "eure",
                      "ihnen",   "hast",     "bist",     "kannst",   "solltest", "könntest",
                      "würdest", "hättest",  "musst",    "wirst",    "willst",  "weißt",
                      "habt",    "seid",     "könnt",    "solltet"};
  l.emo_strong = {"brillant", "fantastisch", "hervorragend", "exzellent", "begeistert",
                  "großartig", "genial",     "wunderbar",    "überragend", "toll",
                  "super",    "überzeugt",   "sehr überzeugt"};
  l.emo_mild = {"gut",          "gute",       "guter",     "gutes",     "guten",
                "wichtig",      "wichtige",   "wichtigen", "interessant", "interessante",
                "schön",        "schade",     "leider",    "gefällt",   "gefallen",
                "beeindruckt",  "spannend",   "nachvollziehbar", "sinnvoll", "überzeugend",
                "gelungen",     "positiv",    "besorgt",   "unsicher",  "freue",
                "gerne",        "okay"};
  l.hedges = {"könnte", "könnten", "würde",       "würden",   "eher",     "vielleicht",
              "möglicherweise", "eventuell", "wahrscheinlich", "sollte", "sollten",
              "vermutlich", "eigentlich"};
  l.causal = {"weil",   "da",      "denn",   "deshalb", "daher",  "deswegen",
              "darum",  "somit",   "folglich", "aufgrund", "wodurch", "sodass",
              "so dass", "dadurch"};
  l.example_markers = {"z.B.", "zum Beispiel", "beispielsweise", "bspw.", "etwa", "wie zum Beispiel"};
  return l;
}

Lexicons english() {
  Lexicons l;
  l.pron12 = {"i",  "me",   "my",    "mine",  "myself", "we",       "us",
              "our", "you", "your", "yours", "yourself", "yourselves"};
  l.direct_address = {"you", "your", "yours", "yourself", "yourselves"};
  l.emo_strong = {"brilliant", "fantastic", "excellent", "amazing",  "awesome", "outstanding",
                  "wonderful", "superb",    "compelling", "thrilled", "love",   "very convinced"};
  l.emo_mild = {"good",        "great",      "nice",       "important", "interesting",
                "impressed",   "excited",    "concerned",  "unfortunately", "comprehensible",
                "nicely",      "convincing", "glad",      "happy",
                "unsure",      "okay",       "well done"};
  l.hedges = {"might", "could",  "would",    "rather", "maybe",  "perhaps",
              "possibly", "probably", "should", "may"};
  l.causal = {"because", "since",   "therefore", "thus",        "hence", "so that",
              "due to",  "as a result", "consequently", "which is why"};
  l.example_markers = {"e.g.", "for example", "for instance", "such as"};
  return l;
}

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array()) throw ValidationError("lexicon '" + key + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ValidationError("lexicon '" + key + "' must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

void override_lexicons(Lexicons& l, const nlohmann::json& j) {
  const std::pair<const char*, Lexicon*> fields[] = {
      {"pron12", &l.pron12},         {"direct_address", &l.direct_address},
      {"emo_strong", &l.emo_strong}, {"emo_mild", &l.emo_mild},
      {"hedges", &l.hedges},         {"causal", &l.causal},
      {"example_markers", &l.example_markers}};
  for (const auto& [key, lexicon] : fields) {
    if (auto it = j.find(key); it != j.end()) *lexicon = Lexicon(string_list(*it, key));
  }
}

void read_threshold(const nlohmann::json& j, const char* key, std::size_t& target) {
  if (auto it = j.find(key); it != j.end()) {
    if (!it->is_number_unsigned()) throw ValidationError(std::string("threshold '") + key + "' must be a non-negative integer");
    target = it->get<std::size_t>();
  }
}

}  // namespace

const Lexicons& default_lexicons(Language language) {
  static const Lexicons de = german();
  static const Lexicons en = english();
  return language == Language::de ? de : en;
}

const Lexicons& RubricConfig::lexicons_for(Language language) const {
  if (auto it = lexicons.find(language); it != lexicons.end()) return it->second;
  return default_lexicons(language);
}

RubricConfig RubricConfig::defaults() {
  RubricConfig c;
  c.lexicons[Language::de] = default_lexicons(Language::de);
  c.lexicons[Language::en] = default_lexicons(Language::en);
  return c;
}

RubricConfig RubricConfig::from_json(const nlohmann::json& j) {
  RubricConfig c = defaults();
  if (!j.is_object()) throw ValidationError("rubric config must be an object");
  if (auto t = j.find("thresholds"); t != j.end()) {
    if (auto e = t->find("emotional"); e != t->end()) {
      auto& x = c.emotional;
      read_threshold(*e, "strong_pronouns", x.strong_pronouns);
      read_threshold(*e, "strong_emotion", x.strong_emotion);
      read_threshold(*e, "strong_exclamations", x.strong_exclamations);
      read_threshold(*e, "personal_pronouns", x.personal_pronouns);
      read_threshold(*e, "personal_emotion", x.personal_emotion);
      read_threshold(*e, "stated_emotion", x.stated_emotion);
      read_threshold(*e, "hedges", x.hedges);
    }
    if (auto g = t->find("cognitive"); g != t->end()) {
      auto& x = c.cognitive;
      read_threshold(*g, "rich_elaboration", x.rich_elaboration);
      read_threshold(*g, "rich_perspective", x.rich_perspective);
      read_threshold(*g, "rich_sentences", x.rich_sentences);
      read_threshold(*g, "affirmed_elaboration", x.affirmed_elaboration);
      read_threshold(*g, "partial_elaboration", x.partial_elaboration);
      read_threshold(*g, "partial_sentences", x.partial_sentences);
      read_threshold(*g, "some_elaboration", x.some_elaboration);
      read_threshold(*g, "plain_sentences", x.plain_sentences);
      read_threshold(*g, "plain_tokens", x.plain_tokens);
    }
  }
  if (auto l = j.find("lexicons"); l != j.end()) {
    for (const auto& [name, value] : l->items()) {
      const auto language = parse_language(name);
      if (!language) throw ValidationError("unknown lexicon language '" + name + "'");
      override_lexicons(c.lexicons[*language], value);
    }
  }
  return c;
}

RubricConfig RubricConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed rubric config: ") + e.what());
  }
  return from_json(j);
}

FeatureVector extract_features(std::string_view component_text, const Lexicons& lexicons) {
  const auto t = TokenizedText::from(component_text);
  if (t.tokens.empty()) throw ValidationError("component text is empty");

  FeatureVector f;
  f.tokens = t.tokens.size();
  f.sentences = text::split_sentences(t.code_points).size();

  struct Hit {
    std::size_t token;
    std::string cue;
  };
  std::vector<Hit> hits;
  auto count = [&](const Lexicon& lexicon, const char* name) {
    const auto matches = lexicon.find_all(t);
    for (const auto& m : matches) hits.push_back({m.first, std::string(name) + ":" + lexicon.entries()[m.entry]});
    return matches.size();
  };
  f.pron12 = count(lexicons.pron12, "pron12");
  f.direct_address = count(lexicons.direct_address, "direct_address");
  f.emo_strong = count(lexicons.emo_strong, "emo_strong");
  f.emo_mild = count(lexicons.emo_mild, "emo_mild");
  f.hedges = count(lexicons.hedges, "hedges");
  f.causal = count(lexicons.causal, "causal");
  f.example_markers = count(lexicons.example_markers, "example_markers");

  for (std::size_t i = 0; i < t.tokens.size(); ++i) {
    if (t.tokens[i].length() != 1) continue;
    const char32_t c = t.code_points[t.tokens[i].begin];
    if (c == U'!') {
      ++f.exclam;
      hits.push_back({i, "exclam:!"});
    } else if (c == U'?') {
      ++f.questions;
      hits.push_back({i, "questions:?"});
    }
  }

  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.token < b.token; });
  for (auto& h : hits) f.cues.push_back(std::move(h.cue));
  return f;
}

EmpathyScore score_emotional(const FeatureVector& f, const EmotionalThresholds& t) {
  const std::size_t emotion = f.emo_strong + f.emo_mild;
  if (f.pron12 >= t.strong_pronouns && f.emo_strong >= t.strong_emotion &&
      f.exclam >= t.strong_exclamations)
    return EmpathyScore(5);
  if (f.pron12 >= t.personal_pronouns && emotion >= t.personal_emotion) return EmpathyScore(4);
  if (emotion >= t.stated_emotion) return EmpathyScore(3);
  if (f.hedges >= t.hedges) return EmpathyScore(2);
  return EmpathyScore(1);
}

EmpathyScore score_cognitive(const FeatureVector& f, const CognitiveThresholds& t) {
  const std::size_t e = f.elaboration();
  const std::size_t p = f.perspective();
  if (e >= t.rich_elaboration && p >= t.rich_perspective && f.sentences >= t.rich_sentences)
    return EmpathyScore(5);
  if (e >= t.affirmed_elaboration || (e >= t.partial_elaboration && f.sentences >= t.partial_sentences))
    return EmpathyScore(4);
  if (e >= t.some_elaboration) return EmpathyScore(3);
  if (f.sentences >= t.plain_sentences || f.tokens >= t.plain_tokens) return EmpathyScore(2);
  return EmpathyScore(1);
}

std::string_view to_string(Bucket bucket) {
  switch (bucket) {
    case Bucket::non_empathic: return "non-empathic";
    case Bucket::neutral: return "neutral";
    case Bucket::empathic: return "empathic";
  }
  return "neutral";
}

std::optional<Bucket> parse_bucket(std::string_view name) {
  if (name == "non-empathic") return Bucket::non_empathic;
  if (name == "neutral") return Bucket::neutral;
  if (name == "empathic") return Bucket::empathic;
  return std::nullopt;
}

Bucket bucketize(int score) {
  if (score < EmpathyScore::kMin || score > EmpathyScore::kMax)
    throw ValidationError("score out of range");
  if (score <= 2) return Bucket::non_empathic;
  if (score == 3) return Bucket::neutral;
  return Bucket::empathic;
}

RubricScore score_component(std::string_view component_text, Language language,
                            const RubricConfig& config) {
  RubricScore s;
  s.features = extract_features(component_text, config.lexicons_for(language));
  s.cognitive = score_cognitive(s.features, config.cognitive);
  s.emotional = score_emotional(s.features, config.emotional);
  return s;
}

nlohmann::ordered_json to_json(const FeatureVector& f) {
  return {{"exclam", f.exclam},
          {"pron12", f.pron12},
          {"emo_strong", f.emo_strong},
          {"emo_mild", f.emo_mild},
          {"hedges", f.hedges},
          {"causal", f.causal},
          {"example_markers", f.example_markers},
          {"questions", f.questions},
          {"direct_address", f.direct_address},
          {"sentences", f.sentences},
          {"tokens", f.tokens}};
}

}  // namespace scorer
}  // namespace empathy
