#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "empathy/analytics.hpp"
#include "empathy/error.hpp"
#include "empathy/random.hpp"
#include "fixtures.hpp"

using namespace empathy;
using namespace empathy::analytics;

TEST(Describe, SampleStatistics) {
  const auto d = describe({2, 4, 4, 4, 5, 5, 7, 9});
  EXPECT_EQ(d.total, 40);
  EXPECT_EQ(d.mean, 5);
  EXPECT_NEAR(d.std_dev, std::sqrt(32.0 / 7.0), 1e-12);
  EXPECT_EQ(d.median, 4.5);
  EXPECT_EQ(d.min, 2);
  EXPECT_EQ(d.max, 9);
  EXPECT_EQ(describe({3}).std_dev, 0);
  EXPECT_EQ(describe({}).mean, 0);
}

TEST(CorpusStats, SmallDocument) {
  AnnotatedCorpus c;
  c.documents.push_back({"d", "Eins zwei drei vier. Fünf sechs sieben acht!", {}});
  c.documents[0].annotations.push_back(
      {"A", 0, 20, ComponentLabel::strength, EmpathyScore(2), EmpathyScore(3)});
  const auto r = corpus_stats(c);
  EXPECT_EQ(r.sentences.total, 2);
  EXPECT_EQ(r.tokens.total, 10);
  EXPECT_EQ(r.components[0].label, ComponentLabel::strength);
  EXPECT_EQ(r.components[0].per_document.total, 1);
  EXPECT_EQ(r.components[0].per_document.mean, 1.0);
  EXPECT_EQ(r.components[0].share, 1.0);
  EXPECT_FALSE(r.correlation);
}

TEST(CorpusStats, DocumentWithoutAnnotations) {
  AnnotatedCorpus c;
  c.documents.push_back({"d", "Nur Text.", {}});
  const auto r = corpus_stats(c);
  for (const auto& comp : r.components) {
    EXPECT_EQ(comp.per_document.total, 0);
    EXPECT_EQ(comp.per_document.median, 0);
    EXPECT_EQ(comp.per_document.min, 0);
    EXPECT_EQ(comp.share, 0);
  }
  EXPECT_THROW(corpus_stats(AnnotatedCorpus{}), ValidationError);
}

TEST(CorpusStats, InvariantsOnFixture) {
  const auto corpus = load_corpus(fixtures::data_path("fixture.json"));
  const auto r = corpus_stats(corpus);
  double shares = 0;
  double total = 0;
  for (const auto& c : r.components) {
    shares += c.share;
    total += c.per_document.total;
  }
  EXPECT_NEAR(shares, 1.0, 1e-9);
  EXPECT_EQ(total, static_cast<double>(corpus.annotation_count()));
  for (const auto& d : r.dimensions) {
    std::size_t n = 0;
    for (auto h : d.histogram) n += h;
    EXPECT_EQ(n, corpus.annotation_count());
  }
  std::size_t sentences = 0;
  for (const auto& d : corpus.documents) sentences += text::split_sentences(d.text).size();
  EXPECT_EQ(r.sentences.total, static_cast<double>(sentences));
}

TEST(Pearson, Examples) {
  EXPECT_NEAR(pearson({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}), -1.0, 1e-15);
  EXPECT_NEAR(pearson({1, 2, 3}, {1, 2, 3}), 1.0, 1e-15);
  EXPECT_THROW(pearson({1, 1, 1}, {1, 2, 3}), UndefinedMetricError);
  EXPECT_THROW(pearson({1}, {1}), UndefinedMetricError);
}

TEST(Pearson, MatchesSumFormulaAndAffineInvariance) {
  Rng rng(2);
  for (int round = 0; round < 50; ++round) {
    std::vector<double> x, y;
    for (int i = 0; i < 20; ++i) {
      x.push_back(1 + double(uniform_below(rng, 5)));
      y.push_back(1 + double(uniform_below(rng, 5)));
    }
    const double n = 20;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < 20; ++i) {
      sx += x[i];
      sy += y[i];
      sxx += x[i] * x[i];
      syy += y[i] * y[i];
      sxy += x[i] * y[i];
    }
    const double want = (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
    const double got = pearson(x, y);
    EXPECT_NEAR(got, want, 1e-12);
    std::vector<double> scaled;
    for (double v : x) scaled.push_back(3 * v + 7);
    EXPECT_NEAR(pearson(scaled, y), got, 1e-12);
  }
}

// ---------------------------------------------------------------------------

namespace {

// Oracle: per-class counts straight from the item lists.
struct Counts {
  int tp = 0, fp = 0, fn = 0;
};

}  // namespace

TEST(ClassificationReport, PerfectPrediction) {
  const std::vector<LabelSet> gold{{"a"}, {"b"}, {"a", "c"}};
  const auto r = classification_report(gold, gold);
  for (const auto& c : r.classes) {
    EXPECT_EQ(c.precision, 1.0);
    EXPECT_EQ(c.recall, 1.0);
    EXPECT_EQ(c.f1, 1.0);
  }
  for (const auto* m : {&r.micro, &r.macro, &r.weighted, &r.samples}) {
    EXPECT_EQ(m->precision, 1.0);
    EXPECT_EQ(m->f1, 1.0);
  }
}

TEST(ClassificationReport, OneMisclassification) {
  const std::vector<LabelSet> gold{{"x"}, {"x"}, {"y"}, {"y"}};
  const std::vector<LabelSet> pred{{"x"}, {"y"}, {"y"}, {"y"}};
  const auto r = classification_report(gold, pred);
  std::map<std::string, Counts> counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (const auto& l : pred[i]) (gold[i].count(l) ? counts[l].tp : counts[l].fp)++;
    for (const auto& l : gold[i])
      if (!pred[i].count(l)) counts[l].fn++;
  }
  for (const auto& c : r.classes) {
    const auto& k = counts[c.label];
    EXPECT_DOUBLE_EQ(c.precision, double(k.tp) / (k.tp + k.fp));
    EXPECT_DOUBLE_EQ(c.recall, double(k.tp) / (k.tp + k.fn));
  }
  EXPECT_DOUBLE_EQ(r.micro.f1, 0.75);  // accuracy for single-label data
  EXPECT_DOUBLE_EQ(r.samples.f1, 0.75);
}

TEST(ClassificationReport, ZeroDivisionFlagged) {
  const auto r = classification_report({{"a"}}, {{"a"}}, {"a", "b"});
  ASSERT_EQ(r.classes.size(), 2u);
  EXPECT_EQ(r.classes[1].label, "b");
  EXPECT_TRUE(r.classes[1].undefined);
  EXPECT_EQ(r.classes[1].precision, 0.0);
  EXPECT_THROW(classification_report({{"a"}}, {}), std::exception);
}

TEST(ClassificationReport, MicroF1EqualsAccuracyForSingleLabels) {
  Rng rng(8);
  std::vector<LabelSet> gold, pred;
  int correct = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = "c" + std::to_string(uniform_below(rng, 4));
    const auto p = "c" + std::to_string(uniform_below(rng, 4));
    correct += g == p;
    gold.push_back({g});
    pred.push_back({p});
  }
  EXPECT_NEAR(classification_report(gold, pred).micro.f1, correct / 200.0, 1e-12);
}

TEST(ClassificationReport, Averages) {
  std::vector<ClassMetrics> rows{{"a", 0.5, 0.25, 0.4, 10}, {"b", 1.0, 0.75, 0.8, 30}};
  const auto macro = macro_average(rows);
  EXPECT_DOUBLE_EQ(macro.precision, 0.75);
  EXPECT_EQ(macro.support, 40u);
  EXPECT_DOUBLE_EQ(weighted_average(rows).precision, (0.5 * 10 + 1.0 * 30) / 40);
  rows[1].support = 10;
  EXPECT_DOUBLE_EQ(weighted_average(rows).recall, macro_average(rows).recall);
}

// ---------------------------------------------------------------------------

TEST(Split, Sizes) {
  for (auto [n, train, val, test] : {std::tuple{500u, 350u, 100u, 50u}, std::tuple{10u, 7u, 2u, 1u}}) {
    const auto s = split_corpus(fixtures::numbered_corpus(n), {}, 42);
    EXPECT_EQ(s.train.documents.size(), train);
    EXPECT_EQ(s.validation.documents.size(), val);
    EXPECT_EQ(s.test.documents.size(), test);
  }
}

TEST(Split, PartitionAndDeterminism) {
  const auto corpus = fixtures::numbered_corpus(97);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const auto a = split_corpus(corpus, {0.6, 0.25, 0.15}, seed);
    const auto b = split_corpus(corpus, {0.6, 0.25, 0.15}, seed);
    EXPECT_EQ(a.train, b.train);
    EXPECT_EQ(a.test, b.test);
    std::set<std::string> ids;
    for (const auto* part : {&a.train, &a.validation, &a.test})
      for (const auto& d : part->documents) EXPECT_TRUE(ids.insert(d.id).second);
    EXPECT_EQ(ids.size(), 97u);
  }
  EXPECT_NE(split_corpus(corpus, {}, 1).test, split_corpus(corpus, {}, 2).test);
}

TEST(Split, Errors) {
  EXPECT_THROW(split_corpus(fixtures::numbered_corpus(2), {}, 1), ValidationError);
  EXPECT_THROW(split_corpus(fixtures::numbered_corpus(10), {0.5, 0.2, 0.2}, 1), ValidationError);
  EXPECT_THROW(split_corpus(fixtures::numbered_corpus(10), {1.0, 0.0, 0.0}, 1), ValidationError);
}

// ---------------------------------------------------------------------------

TEST(Survey, Summary) {
  std::vector<SurveyResponse> rs{{Construct::ITU, "itu1", 5}, {Construct::ITU, "itu2", 5},
                                 {Construct::ITU, "itu3", 6}, {Construct::PFA, "pfa1", 4},
                                 {Construct::PFA, "pfa2", 4}};
  const auto s = survey_summary(rs);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].construct, Construct::ITU);
  EXPECT_NEAR(s[0].mean, 16.0 / 3.0, 1e-12);
  EXPECT_TRUE(s[0].positive);
  EXPECT_EQ(s[1].construct, Construct::PFA);
  EXPECT_EQ(s[1].delta, 0.0);
  EXPECT_FALSE(s[1].positive);
  EXPECT_NE(format_table(s).find("ITU"), std::string::npos);
}

TEST(Survey, Validation) {
  EXPECT_THROW(validate({Construct::ITU, "x", 9}), ValidationError);
  EXPECT_THROW(validate({Construct::ITU, "x", 0}), ValidationError);
  EXPECT_THROW(validate({Construct::ITU, "", 4}), ValidationError);
  EXPECT_NO_THROW(validate({Construct::PESL, "x", 7}));
}
