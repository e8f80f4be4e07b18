#include <gtest/gtest.h>

#include <algorithm>

#include "empathy/error.hpp"
#include "empathy/feedback.hpp"
#include "empathy/random.hpp"

using namespace empathy;
using namespace empathy::feedback;
using scorer::Bucket;

namespace {

ScoredComponent component(double cognitive, double emotional) {
  ScoredComponent c;
  c.cognitive = cognitive;
  c.emotional = emotional;
  return c;
}

}  // namespace

TEST(Feedback, EmotionalMeanAndBucket) {
  const auto r = build_feedback({component(3, 4), component(3, 5)});
  EXPECT_EQ(r.emotional_mean, 4.5);
  EXPECT_EQ(r.emotional_bucket, Bucket::empathic);
  EXPECT_EQ(r.components.size(), 2u);
}

TEST(Feedback, SingleLowComponent) {
  const auto r = build_feedback({component(1, 1)});
  EXPECT_EQ(r.cognitive_mean, 1.0);
  EXPECT_EQ(r.emotional_mean, 1.0);
  EXPECT_EQ(r.cognitive_bucket, Bucket::non_empathic);
  EXPECT_EQ(r.emotional_bucket, Bucket::non_empathic);
  ASSERT_EQ(r.messages.size(), 2u);
  EXPECT_EQ(r.messages[0].dimension, Dimension::cognitive);
  EXPECT_EQ(r.messages[1].dimension, Dimension::emotional);
  EXPECT_NE(r.messages[1].text.find("I/you"), std::string::npos);
}

TEST(Feedback, MixedCognitiveIsNeutralWithCues) {
  const auto r = build_feedback({component(2, 1), component(3, 1), component(4, 1)});
  EXPECT_EQ(r.cognitive_mean, 3.0);
  EXPECT_EQ(r.cognitive_bucket, Bucket::neutral);
  EXPECT_EQ(r.messages[0].template_id, "cognitive.neutral");
  EXPECT_NE(r.messages[0].text.find("because"), std::string::npos);
  EXPECT_NE(r.messages[0].text.find("3.0/5"), std::string::npos);
}

TEST(Feedback, Thresholds) {
  EXPECT_EQ(document_bucket(2.4), Bucket::non_empathic);
  EXPECT_EQ(document_bucket(2.5), Bucket::neutral);
  EXPECT_EQ(document_bucket(3.5), Bucket::neutral);
  EXPECT_EQ(document_bucket(3.6), Bucket::empathic);
  EXPECT_EQ(round1(2.449), 2.4);
  EXPECT_EQ(round1(2.45), 2.5);
}

TEST(Feedback, RoundedMeanDecidesBucket) {
  // 3.52 is displayed as 3.5, which is neutral.
  std::vector<ScoredComponent> cs;
  for (int i = 0; i < 50; ++i) cs.push_back(component(i < 26 ? 4 : 3, 1));
  const auto r = build_feedback(cs);
  EXPECT_EQ(r.cognitive_mean, 3.5);
  EXPECT_EQ(r.cognitive_bucket, Bucket::neutral);
}

TEST(Feedback, EmptyInput) {
  try {
    build_feedback({});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.reason(), "nothing to assess");
  }
}

TEST(Feedback, PermutationInvariantAndMonotone) {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    std::vector<ScoredComponent> cs;
    const auto n = 1 + uniform_below(rng, 6);
    for (std::size_t i = 0; i < n; ++i)
      cs.push_back(component(1 + double(uniform_below(rng, 5)), 1 + double(uniform_below(rng, 5))));
    const auto base = build_feedback(cs);
    auto shuffled = cs;
    shuffle(shuffled, rng);
    const auto again = build_feedback(shuffled);
    EXPECT_EQ(base.cognitive_mean, again.cognitive_mean);
    EXPECT_EQ(base.emotional_mean, again.emotional_mean);

    auto raised = cs;
    auto& target = raised[uniform_below(rng, n)];
    if (target.cognitive < 5) target.cognitive += 1;
    if (target.emotional < 5) target.emotional += 1;
    const auto up = build_feedback(raised);
    EXPECT_GE(static_cast<int>(up.cognitive_bucket), static_cast<int>(base.cognitive_bucket));
    EXPECT_GE(static_cast<int>(up.emotional_bucket), static_cast<int>(base.emotional_bucket));
  }
}

TEST(Templates, OverridesFromJson) {
  const auto t = TemplateTable::from_json(nlohmann::json::parse(
      R"({"templates":[{"dimension":"emotional","bucket":"empathic","id":"e5","text":"Great: {mean}"}]})"));
  const auto r = build_feedback({component(5, 5)}, t);
  EXPECT_EQ(r.messages[1].template_id, "e5");
  EXPECT_EQ(r.messages[1].text, "Great: 5.0");
  EXPECT_EQ(r.messages[0].template_id, "cognitive.empathic");
  EXPECT_THROW(TemplateTable::from_json(nlohmann::json::parse(
                   R"({"templates":[{"dimension":"social","bucket":"neutral","text":"x"}]})")),
               ValidationError);
}

TEST(Feedback, JsonShape) {
  const auto j = to_json(build_feedback({component(2, 4)}));
  EXPECT_EQ(j["document"]["cognitive_bucket"], "non-empathic");
  EXPECT_EQ(j["messages"].size(), 2u);
  EXPECT_EQ(j["components"][0]["emotional"], 4.0);
}
