#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "empathy/corpus.hpp"

namespace empathy::analytics {

struct Distribution {
  double total = 0;
  double mean = 0;
  double std_dev = 0;  // sample (n - 1); 0 for a single value
  double min = 0;
  double max = 0;
  double median = 0;
};

// Empty input yields all zeros.
Distribution describe(const std::vector<double>& values);

struct ComponentStats {
  ComponentLabel label = ComponentLabel::strength;
  Distribution per_document;
  double share = 0;
};

struct ScoreStats {
  Dimension dimension = Dimension::cognitive;
  std::array<std::size_t, 5> histogram{};  // counts of scores 1..5
  Distribution scores;
};

struct StatsReport {
  std::size_t documents = 0;
  Distribution sentences;  // per document
  Distribution tokens;     // per document
  std::vector<ComponentStats> components;  // strength, weakness, suggestion
  std::vector<ScoreStats> dimensions;      // cognitive, emotional
  std::optional<double> correlation;       // empty when undefined
};

// Throws ValidationError on an empty corpus.
StatsReport corpus_stats(const AnnotatedCorpus& corpus);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Pearson correlation of cognitive vs emotional scores over all annotations.
// Throws UndefinedMetricError for fewer than two annotations or zero variance.
double score_correlation(const AnnotatedCorpus& corpus);

// ---------------------------------------------------------------------------
// Classification report

using LabelSet = std::set<std::string>;

struct ClassMetrics {
  std::string label;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t support = 0;
  // Set when a zero division was replaced by 0.
  bool undefined = false;
};

struct AverageMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t support = 0;
};

struct EvalReport {
  std::vector<ClassMetrics> classes;
  AverageMetrics micro;
  AverageMetrics macro;
  AverageMetrics weighted;
  AverageMetrics samples;
};

// Unweighted and support-weighted means of per-class rows.
AverageMetrics macro_average(const std::vector<ClassMetrics>& classes);
AverageMetrics weighted_average(const std::vector<ClassMetrics>& classes);

// `alphabet` fixes the class order; labels outside it are appended sorted.
EvalReport classification_report(const std::vector<LabelSet>& gold,
                                 const std::vector<LabelSet>& predicted,
                                 const std::vector<std::string>& alphabet = {});

// ---------------------------------------------------------------------------
// Dataset split

struct SplitRatios {
  double train = 0.7;
  double validation = 0.2;
  double test = 0.1;
};

struct CorpusSplit {
  AnnotatedCorpus train;
  AnnotatedCorpus validation;
  AnnotatedCorpus test;
};

// Seeded shuffle of document ids; validation and test sizes are floor(n * r),
// the remainder goes to train. Each part keeps corpus order.
CorpusSplit split_corpus(const AnnotatedCorpus& corpus, const SplitRatios& ratios, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Survey

enum class Construct { ITU, PESL, PFA };

std::string_view to_string(Construct construct);
std::optional<Construct> parse_construct(std::string_view name);

struct SurveyResponse {
  Construct construct = Construct::ITU;
  std::string item;
  int rating = 4;  // 1..7 Likert

  friend bool operator==(const SurveyResponse&, const SurveyResponse&) = default;
};

inline constexpr int kLikertMin = 1;
inline constexpr int kLikertMax = 7;
inline constexpr double kLikertMidpoint = 4.0;

// Throws ValidationError when the rating is outside 1..7 or the item is empty.
void validate(const SurveyResponse& response);

struct ConstructSummary {
  Construct construct = Construct::ITU;
  std::size_t n = 0;
  double mean = 0;
  double std_dev = 0;
  double delta = 0;  // mean - 4
  bool positive = false;
};

// Constructs without responses are omitted.
std::vector<ConstructSummary> survey_summary(const std::vector<SurveyResponse>& responses);

// ---------------------------------------------------------------------------
// Serialization

nlohmann::ordered_json to_json(const StatsReport& report);
nlohmann::ordered_json to_json(const EvalReport& report);
nlohmann::ordered_json to_json(const std::vector<ConstructSummary>& summary);
std::string format_table(const StatsReport& report);
std::string format_table(const EvalReport& report);
std::string format_table(const std::vector<ConstructSummary>& summary);

}  // namespace empathy::analytics
