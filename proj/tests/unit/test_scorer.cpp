#include <gtest/gtest.h>

#include "empathy/error.hpp"
#include "empathy/random.hpp"
#include "empathy/scorer.hpp"

using namespace empathy;
using namespace empathy::scorer;

namespace {

FeatureVector features(const std::string& text, Language lang = Language::en) {
  return extract_features(text, default_lexicons(lang));
}

int emotional(const std::string& text, Language lang = Language::en) {
  return score_emotional(features(text, lang)).value();
}

int cognitive(const std::string& text, Language lang = Language::en) {
  return score_cognitive(features(text, lang)).value();
}

// Manual ladder evaluation used as the oracle for random feature vectors.
int emotional_ladder(const FeatureVector& f) {
  const auto emo = f.emo_strong + f.emo_mild;
  if (f.pron12 >= 1 && f.emo_strong >= 1 && f.exclam >= 1) return 5;
  if (f.pron12 >= 1 && emo >= 1) return 4;
  if (emo >= 1) return 3;
  if (f.hedges >= 1) return 2;
  return 1;
}

int cognitive_ladder(const FeatureVector& f) {
  const auto e = f.causal + f.example_markers;
  const auto p = f.questions + f.direct_address;
  if (e >= 2 && p >= 1 && f.sentences >= 3) return 5;
  if (e >= 2 || (e >= 1 && f.sentences >= 3)) return 4;
  if (e >= 1) return 3;
  if (f.sentences >= 2 || f.tokens >= 15) return 2;
  return 1;
}

}  // namespace

TEST(Features, ExemplarCounts) {
  const auto f = features("I think your idea is brilliant!");
  EXPECT_GE(f.pron12, 2u);
  EXPECT_GE(f.emo_strong, 1u);
  EXPECT_EQ(f.exclam, 1u);

  const auto g = features("Add a picture.");
  EXPECT_EQ(g.emo_strong, 0u);
  EXPECT_EQ(g.emo_mild, 0u);
  EXPECT_EQ(g.hedges, 0u);
  EXPECT_EQ(g.exclam, 0u);
  EXPECT_EQ(g.tokens, 4u);
  EXPECT_EQ(g.sentences, 1u);
}

TEST(Features, SingleCausalToken) {
  EXPECT_EQ(features("weil", Language::de).causal, 1u);
  EXPECT_THROW(features(""), ValidationError);
  EXPECT_THROW(features("   "), ValidationError);
}

TEST(Features, CaseInsensitiveAndCuesInOrder) {
  const auto f = features("WEIL du das z.B. gut machst?", Language::de);
  EXPECT_EQ(f.causal, 1u);
  EXPECT_EQ(f.example_markers, 1u);
  EXPECT_EQ(f.questions, 1u);
  EXPECT_GE(f.direct_address, 1u);
  ASSERT_FALSE(f.cues.empty());
  EXPECT_EQ(f.cues.front(), "causal:weil");
  EXPECT_EQ(f.cues.back(), "questions:?");
}

TEST(Emotional, Examples) {
  EXPECT_EQ(emotional("I think your idea is brilliant!"), 5);
  EXPECT_EQ(emotional("Die Idee ist sehr gut.", Language::de), 3);
  EXPECT_EQ(emotional("Add a picture."), 1);
  EXPECT_EQ(emotional("Ich finde deine Idee brillant!", Language::de), 5);
  EXPECT_EQ(emotional("I find your idea good."), 4);
  EXPECT_EQ(emotional("The price might be lower."), 2);
}

TEST(Cognitive, Examples) {
  EXPECT_EQ(cognitive("Add a picture."), 1);
  EXPECT_EQ(cognitive("The model is clear. The market is large."), 2);
  EXPECT_EQ(cognitive("The model works because the costs are low."), 3);
  EXPECT_EQ(cognitive("You could, for example, say it like this: since the segments overlap, two "
                      "areas result... And due to the scope you focus on one of them. After that "
                      "you treat only this one."),
            5);
  EXPECT_EQ(cognitive("Because it is cheap, for example for students."), 4);
}

TEST(Ladders, MatchManualEvaluationOnRandomFeatures) {
  Rng rng(21);
  for (int i = 0; i < 5000; ++i) {
    FeatureVector f;
    for (auto* field : {&f.exclam, &f.pron12, &f.emo_strong, &f.emo_mild, &f.hedges, &f.causal,
                        &f.example_markers, &f.questions, &f.direct_address, &f.sentences})
      *field = uniform_below(rng, 4);
    f.tokens = uniform_below(rng, 30);
    EXPECT_EQ(score_emotional(f).value(), emotional_ladder(f));
    EXPECT_EQ(score_cognitive(f).value(), cognitive_ladder(f));
  }
}

TEST(Ladders, MonotoneInEveryCount) {
  Rng rng(22);
  for (int i = 0; i < 2000; ++i) {
    FeatureVector f;
    for (auto* field : {&f.exclam, &f.pron12, &f.emo_strong, &f.emo_mild, &f.hedges, &f.causal,
                        &f.example_markers, &f.questions, &f.direct_address, &f.sentences, &f.tokens})
      *field = uniform_below(rng, 3);
    auto g = f;
    for (auto* field : {&g.exclam, &g.pron12, &g.emo_strong, &g.emo_mild, &g.hedges, &g.causal,
                        &g.example_markers, &g.questions, &g.direct_address, &g.sentences, &g.tokens})
      *field += uniform_below(rng, 2);
    EXPECT_LE(score_emotional(f).value(), score_emotional(g).value());
    EXPECT_LE(score_cognitive(f).value(), score_cognitive(g).value());
  }
}

TEST(Ladders, NoLexiconHitsStaysLow) {
  FeatureVector f;
  f.exclam = 3;
  f.sentences = 5;
  f.tokens = 50;
  EXPECT_LE(score_emotional(f).value(), 2);
}

TEST(Bucket, Mapping) {
  const Bucket want[] = {Bucket::non_empathic, Bucket::non_empathic, Bucket::neutral, Bucket::empathic,
                         Bucket::empathic};
  for (int s = 1; s <= 5; ++s) EXPECT_EQ(bucketize(s), want[s - 1]);
  EXPECT_THROW(bucketize(0), ValidationError);
  EXPECT_THROW(bucketize(6), ValidationError);
  EXPECT_EQ(to_string(Bucket::non_empathic), "non-empathic");
  EXPECT_EQ(parse_bucket("neutral"), Bucket::neutral);
  EXPECT_FALSE(parse_bucket("high"));
}

TEST(Bucket, SurjectiveOverExamples) {
  std::set<Bucket> seen;
  for (const char* t : {"I think your idea is brilliant!", "The idea is good.", "Add a picture."})
    seen.insert(bucketize(score_emotional(features(t))));
  EXPECT_EQ(seen.size(), 3u);
}

TEST(RubricConfig, ThresholdAndLexiconOverrides) {
  const auto config = RubricConfig::from_json(nlohmann::json::parse(
      R"({"thresholds":{"cognitive":{"plain_tokens":3}},"lexicons":{"en":{"hedges":["kinda"]}}})"));
  EXPECT_EQ(config.cognitive.plain_tokens, 3u);
  const auto s = score_component("Add a picture kinda.", Language::en, config);
  EXPECT_EQ(s.cognitive.value(), 2);
  EXPECT_EQ(s.emotional.value(), 2);
  EXPECT_THROW(RubricConfig::from_json(nlohmann::json::parse(R"({"lexicons":{"fr":{}}})")),
               ValidationError);
  EXPECT_THROW(RubricConfig::from_json(
                   nlohmann::json::parse(R"({"thresholds":{"emotional":{"hedges":-1}}})")),
               ValidationError);
}

TEST(Scorer, Deterministic) {
  const std::string t = "Ich finde, du solltest z.B. mehr erklären, weil es wichtig ist!";
  const auto a = score_component(t, Language::de, RubricConfig::defaults());
  const auto b = score_component(t, Language::de, RubricConfig::defaults());
  EXPECT_EQ(a.cognitive, b.cognitive);
  EXPECT_EQ(a.emotional, b.emotional);
  EXPECT_EQ(a.features.cues, b.features.cues);
}
