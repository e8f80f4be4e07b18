#include <gtest/gtest.h>

#include "empathy/error.hpp"
#include "empathy/segmenter.hpp"
#include "fixtures.hpp"

using namespace empathy;
using namespace empathy::segmenter;

namespace {

const SegmenterConfig& config() {
  static const SegmenterConfig c = SegmenterConfig::defaults();
  return c;
}

std::vector<std::pair<std::string, ComponentLabel>> segments(const std::string& text) {
  std::vector<std::pair<std::string, ComponentLabel>> out;
  for (const auto& s : segment_review(text, config())) out.emplace_back(text::slice(text, s.span), s.label);
  return out;
}

}  // namespace

TEST(Segmenter, HeaderBlocks) {
  const auto got = segments("Stärken: Die Idee ist gut. Schwächen: Es fehlt ein Bild.");
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0], std::make_pair(std::string("Stärken: Die Idee ist gut."), ComponentLabel::strength));
  EXPECT_EQ(got[1], std::make_pair(std::string("Schwächen: Es fehlt ein Bild."), ComponentLabel::weakness));
}

TEST(Segmenter, EnglishHeader) {
  const auto got = segments("Strengths: good idea.");
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].second, ComponentLabel::strength);
}

TEST(Segmenter, NoCuesGivesNone) {
  const auto got = segments("xyzzy.");
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].second, ComponentLabel::none);
  EXPECT_TRUE(segment_review("", config()).empty());
}

TEST(Segmenter, CueVoteOutsideBlocks) {
  const auto got = segments("Das Konzept ist gut. Leider fehlt der Preis. Du solltest Bilder ergänzen. Hallo.");
  ASSERT_EQ(got.size(), 4u);
  EXPECT_EQ(got[0].second, ComponentLabel::strength);
  EXPECT_EQ(got[1].second, ComponentLabel::weakness);
  EXPECT_EQ(got[2].second, ComponentLabel::suggestion);
  EXPECT_EQ(got[3].second, ComponentLabel::none);
}

TEST(Segmenter, TieIsNone) {
  const auto got = segments("Gut, aber leider unvollständig.");
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].second, ComponentLabel::none);
}

TEST(Segmenter, HeaderMustBeNearSentenceStart) {
  const auto decisions = label_sentences("Hier sind ein paar kleine Stärken genannt.", config());
  ASSERT_EQ(decisions.size(), 1u);
  EXPECT_FALSE(decisions[0].header);
}

TEST(Segmenter, HeaderInsertionOnlyChangesLabels) {
  const std::string body = "Das ist gut. Es fehlt etwas. Du könntest mehr zeigen.";
  const auto before = label_sentences(body, config());
  const std::string with_header = "Schwächen: " + body;
  const auto after = label_sentences(with_header, config());
  ASSERT_EQ(after.size(), before.size() + 1);
  for (std::size_t i = 0; i < before.size(); ++i) {
    EXPECT_EQ(after[i + 1].span.begin, before[i].span.begin + 11);
    EXPECT_EQ(after[i + 1].span.end, before[i].span.end + 11);
    EXPECT_EQ(after[i + 1].label, ComponentLabel::weakness);
  }
}

TEST(Segmenter, SpansAreDisjointOrderedAndCoverEverySentence) {
  const auto text = fixtures::long_review();
  const auto segs = segment_review(text, config());
  const auto sentences = text::split_sentences(text);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i) {
      EXPECT_LE(segs[i - 1].span.end, segs[i].span.begin);
      EXPECT_NE(segs[i - 1].label, segs[i].label);
    }
    covered += segs[i].sentences;
  }
  EXPECT_EQ(covered, sentences.size());
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[0].label, ComponentLabel::strength);
  EXPECT_EQ(segs[1].label, ComponentLabel::weakness);
  EXPECT_EQ(segs[2].label, ComponentLabel::suggestion);
}

TEST(SegmenterConfig, OverridesAndValidation) {
  const auto c = SegmenterConfig::from_json(
      nlohmann::json::parse(R"({"headers":{"strength":["Pro"]},"header_window":1})"));
  EXPECT_EQ(c.header_window, 1u);
  const auto d = label_sentences("Pro: schön. Stärken: ok.", c);
  EXPECT_TRUE(d[0].header);
  EXPECT_FALSE(d[2].header);
  EXPECT_THROW(SegmenterConfig::from_json(nlohmann::json::parse(R"({"headers":{"strength":[]}})")),
               ValidationError);
  EXPECT_THROW(
      SegmenterConfig::from_json(nlohmann::json::parse(R"({"headers":{"strength":["Schwächen"]}})")),
      ValidationError);
}

TEST(Segmenter, JsonCarriesText) {
  const std::string text = "Stärken: Größe passt.";
  const auto j = to_json(segment_review(text, config()), text);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["text"], text);
  EXPECT_EQ(j[0]["end"], 21);
}
