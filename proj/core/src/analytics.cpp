#include "empathy/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "empathy/error.hpp"
#include "empathy/random.hpp"

namespace empathy::analytics {

using nlohmann::ordered_json;

Distribution describe(const std::vector<double>& values) {
  Distribution d;
  if (values.empty()) return d;
  const auto n = static_cast<double>(values.size());
  d.total = std::accumulate(values.begin(), values.end(), 0.0);
  d.mean = d.total / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - d.mean) * (v - d.mean);
    d.std_dev = std::sqrt(ss / (n - 1.0));
  }
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  d.min = sorted.front();
  d.max = sorted.back();
  const std::size_t mid = sorted.size() / 2;
  d.median = sorted.size() % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
  return d;
}

StatsReport corpus_stats(const AnnotatedCorpus& corpus) {
  if (corpus.documents.empty()) throw ValidationError("empty corpus");
  StatsReport report;
  report.documents = corpus.documents.size();

  std::vector<double> sentences;
  std::vector<double> tokens;
  std::map<ComponentLabel, std::vector<double>> per_doc;
  std::map<Dimension, std::vector<double>> scores;
  for (const auto& doc : corpus.documents) {
    const auto cps = text::decode(doc.text);
    sentences.push_back(static_cast<double>(text::split_sentences(cps).size()));
    tokens.push_back(static_cast<double>(text::tokenize(cps).size()));
    std::map<ComponentLabel, double> counts;
    for (const auto& a : doc.annotations) {
      counts[a.component] += 1.0;
      scores[Dimension::cognitive].push_back(a.cognitive.value());
      scores[Dimension::emotional].push_back(a.emotional.value());
    }
    for (ComponentLabel label : kStoredLabels) per_doc[label].push_back(counts[label]);
  }
  report.sentences = describe(sentences);
  report.tokens = describe(tokens);

  const auto all = static_cast<double>(corpus.annotation_count());
  for (ComponentLabel label : kStoredLabels) {
    ComponentStats c;
    c.label = label;
    c.per_document = describe(per_doc[label]);
    c.share = all > 0 ? c.per_document.total / all : 0.0;
    report.components.push_back(c);
  }
  for (Dimension dim : {Dimension::cognitive, Dimension::emotional}) {
    ScoreStats s;
    s.dimension = dim;
    for (double v : scores[dim]) ++s.histogram[static_cast<std::size_t>(v) - 1];
    s.scores = describe(scores[dim]);
    report.dimensions.push_back(s);
  }
  try {
    report.correlation = score_correlation(corpus);
  } catch (const UndefinedMetricError&) {
  }
  return report;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw UndefinedMetricError("pearson: fewer than two pairs");
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedMetricError("pearson: zero variance");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double score_correlation(const AnnotatedCorpus& corpus) {
  std::vector<double> cognitive;
  std::vector<double> emotional;
  for (const auto& doc : corpus.documents) {
    for (const auto& a : doc.annotations) {
      cognitive.push_back(a.cognitive.value());
      emotional.push_back(a.emotional.value());
    }
  }
  return pearson(cognitive, emotional);
}

namespace {

double ratio(std::size_t num, std::size_t den, bool& undefined) {
  if (den == 0) {
    undefined = true;
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

}  // namespace

AverageMetrics macro_average(const std::vector<ClassMetrics>& classes) {
  AverageMetrics avg;
  if (classes.empty()) return avg;
  for (const auto& c : classes) {
    avg.precision += c.precision;
    avg.recall += c.recall;
    avg.f1 += c.f1;
    avg.support += c.support;
  }
  const auto n = static_cast<double>(classes.size());
  avg.precision /= n;
  avg.recall /= n;
  avg.f1 /= n;
  return avg;
}

AverageMetrics weighted_average(const std::vector<ClassMetrics>& classes) {
  AverageMetrics avg;
  for (const auto& c : classes) {
    const auto w = static_cast<double>(c.support);
    avg.precision += w * c.precision;
    avg.recall += w * c.recall;
    avg.f1 += w * c.f1;
    avg.support += c.support;
  }
  if (avg.support == 0) return AverageMetrics{};
  const auto total = static_cast<double>(avg.support);
  avg.precision /= total;
  avg.recall /= total;
  avg.f1 /= total;
  return avg;
}

EvalReport classification_report(const std::vector<LabelSet>& gold,
                                 const std::vector<LabelSet>& predicted,
                                 const std::vector<std::string>& alphabet) {
  if (gold.size() != predicted.size())
    throw ValidationError("gold and predicted lengths differ (" + std::to_string(gold.size()) +
                          " vs " + std::to_string(predicted.size()) + ")");

  std::vector<std::string> labels = alphabet;
  LabelSet extra;
  for (const auto* sets : {&gold, &predicted})
    for (const auto& s : *sets)
      for (const auto& l : s)
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) extra.insert(l);
  labels.insert(labels.end(), extra.begin(), extra.end());

  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Counts> counts;
  EvalReport report;
  double sp = 0.0, sr = 0.0, sf = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    std::size_t common = 0;
    for (const auto& l : predicted[i]) {
      if (gold[i].contains(l)) {
        ++counts[l].tp;
        ++common;
      } else {
        ++counts[l].fp;
      }
    }
    for (const auto& l : gold[i])
      if (!predicted[i].contains(l)) ++counts[l].fn;

    // An item with empty gold and empty prediction counts as fully correct.
    if (gold[i].empty() && predicted[i].empty()) {
      sp += 1.0;
      sr += 1.0;
      sf += 1.0;
      continue;
    }
    const double p = predicted[i].empty() ? 0.0 : double(common) / double(predicted[i].size());
    const double r = gold[i].empty() ? 0.0 : double(common) / double(gold[i].size());
    sp += p;
    sr += r;
    sf += 2.0 * double(common) / double(gold[i].size() + predicted[i].size());
  }

  Counts pooled;
  for (const auto& label : labels) {
    const Counts c = counts[label];
    ClassMetrics m;
    m.label = label;
    m.support = c.tp + c.fn;
    m.precision = ratio(c.tp, c.tp + c.fp, m.undefined);
    m.recall = ratio(c.tp, c.tp + c.fn, m.undefined);
    m.f1 = harmonic(m.precision, m.recall);
    report.classes.push_back(m);
    pooled.tp += c.tp;
    pooled.fp += c.fp;
    pooled.fn += c.fn;
  }

  bool ignored = false;
  report.micro.precision = ratio(pooled.tp, pooled.tp + pooled.fp, ignored);
  report.micro.recall = ratio(pooled.tp, pooled.tp + pooled.fn, ignored);
  report.micro.f1 = harmonic(report.micro.precision, report.micro.recall);
  report.micro.support = pooled.tp + pooled.fn;
  report.macro = macro_average(report.classes);
  report.weighted = weighted_average(report.classes);
  if (!gold.empty()) {
    const auto n = static_cast<double>(gold.size());
    report.samples = {sp / n, sr / n, sf / n, pooled.tp + pooled.fn};
  }
  return report;
}

CorpusSplit split_corpus(const AnnotatedCorpus& corpus, const SplitRatios& ratios, std::uint64_t seed) {
  if (ratios.train <= 0 || ratios.validation <= 0 || ratios.test <= 0)
    throw ValidationError("split ratios must be positive");
  if (std::abs(ratios.train + ratios.validation + ratios.test - 1.0) > 1e-9)
    throw ValidationError("split ratios must sum to 1");
  const std::size_t n = corpus.documents.size();
  if (n < 3) throw ValidationError("corpus needs at least 3 documents to split");

  std::vector<std::string> ids;
  for (const auto& d : corpus.documents) ids.push_back(d.id);
  std::sort(ids.begin(), ids.end());
  Rng rng(seed);
  shuffle(ids, rng);

  // Guard against 0.1 * 10 = 0.9999... style truncation.
  auto part = [n](double r) { return static_cast<std::size_t>(std::floor(double(n) * r + 1e-9)); };
  const std::size_t n_val = part(ratios.validation);
  const std::size_t n_test = part(ratios.test);

  std::map<std::string, int> bucket;
  for (std::size_t i = 0; i < n; ++i) {
    int b = 0;
    if (i < n_val) b = 1;
    else if (i < n_val + n_test) b = 2;
    bucket[ids[i]] = b;
  }

  CorpusSplit split;
  for (const auto& d : corpus.documents) {
    switch (bucket[d.id]) {
      case 1: split.validation.documents.push_back(d); break;
      case 2: split.test.documents.push_back(d); break;
      default: split.train.documents.push_back(d); break;
    }
  }
  return split;
}

std::string_view to_string(Construct construct) {
  switch (construct) {
    case Construct::ITU: return "ITU";
    case Construct::PESL: return "PESL";
    case Construct::PFA: return "PFA";
  }
  return "ITU";
}

std::optional<Construct> parse_construct(std::string_view name) {
  if (name == "ITU") return Construct::ITU;
  if (name == "PESL") return Construct::PESL;
  if (name == "PFA") return Construct::PFA;
  return std::nullopt;
}

void validate(const SurveyResponse& response) {
  if (response.rating < kLikertMin || response.rating > kLikertMax)
    throw ValidationError("rating out of range 1..7");
  if (response.item.empty()) throw ValidationError("missing item id");
}

std::vector<ConstructSummary> survey_summary(const std::vector<SurveyResponse>& responses) {
  std::vector<ConstructSummary> out;
  for (Construct c : {Construct::ITU, Construct::PESL, Construct::PFA}) {
    std::vector<double> ratings;
    for (const auto& r : responses)
      if (r.construct == c) ratings.push_back(r.rating);
    if (ratings.empty()) continue;
    const Distribution d = describe(ratings);
    ConstructSummary s;
    s.construct = c;
    s.n = ratings.size();
    s.mean = d.mean;
    s.std_dev = d.std_dev;
    s.delta = d.mean - kLikertMidpoint;
    s.positive = d.mean > kLikertMidpoint;
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ordered_json to_json(const Distribution& d) {
  return {{"total", d.total}, {"mean", d.mean}, {"std_dev", d.std_dev},
          {"min", d.min},     {"max", d.max},   {"median", d.median}};
}

ordered_json to_json(const AverageMetrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}, {"support", m.support}};
}

std::string num(double v, int decimals = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string cell(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void distribution_row(std::ostringstream& out, const std::string& name, const Distribution& d) {
  out << cell(name, 12) << cell(num(d.total, 0), 10) << cell(num(d.mean), 9)
      << cell(num(d.std_dev), 9) << cell(num(d.min, 0), 7) << cell(num(d.max, 0), 7)
      << cell(num(d.median, 1), 8);
}

}  // namespace

ordered_json to_json(const StatsReport& report) {
  ordered_json j;
  j["documents"] = report.documents;
  j["sentences"] = to_json(report.sentences);
  j["tokens"] = to_json(report.tokens);
  ordered_json comps = ordered_json::array();
  for (const auto& c : report.components) {
    ordered_json row = to_json(c.per_document);
    row["share"] = c.share;
    comps.push_back({{"label", to_string(c.label)}, {"per_document", std::move(row)}});
  }
  j["components"] = std::move(comps);
  ordered_json dims = ordered_json::array();
  for (const auto& s : report.dimensions) {
    dims.push_back({{"dimension", to_string(s.dimension)},
                    {"histogram", s.histogram},
                    {"mean", s.scores.mean},
                    {"std_dev", s.scores.std_dev},
                    {"min", s.scores.min},
                    {"max", s.scores.max},
                    {"median", s.scores.median}});
  }
  j["dimensions"] = std::move(dims);
  j["correlation"] = report.correlation ? ordered_json(*report.correlation) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const EvalReport& report) {
  ordered_json classes = ordered_json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"label", c.label},
                       {"precision", c.precision},
                       {"recall", c.recall},
                       {"f1", c.f1},
                       {"support", c.support},
                       {"undefined", c.undefined}});
  }
  return {{"classes", std::move(classes)},
          {"micro", to_json(report.micro)},
          {"macro", to_json(report.macro)},
          {"weighted", to_json(report.weighted)},
          {"samples", to_json(report.samples)}};
}

ordered_json to_json(const std::vector<ConstructSummary>& summary) {
  ordered_json out = ordered_json::array();
  for (const auto& s : summary) {
    out.push_back({{"construct", to_string(s.construct)},
                   {"n", s.n},
                   {"mean", s.mean},
                   {"std_dev", s.std_dev},
                   {"delta", s.delta},
                   {"positive", s.positive}});
  }
  return out;
}

std::string format_table(const StatsReport& report) {
  std::ostringstream out;
  out << "documents: " << report.documents << "\n\n";
  out << cell("", 12) << cell("total", 10) << cell("mean", 9) << cell("std dev", 9)
      << cell("min", 7) << cell("max", 7) << cell("median", 8) << cell("%", 7) << '\n';
  distribution_row(out, "sentences", report.sentences);
  out << '\n';
  distribution_row(out, "tokens", report.tokens);
  out << '\n';
  for (const auto& c : report.components) {
    distribution_row(out, std::string(to_string(c.label)), c.per_document);
    out << cell(num(c.share), 7) << '\n';
  }
  out << '\n'
      << cell("", 12) << cell("mean", 9) << cell("std dev", 9) << cell("median", 8) << "   histogram 1..5\n";
  for (const auto& s : report.dimensions) {
    out << cell(std::string(to_string(s.dimension)), 12) << cell(num(s.scores.mean), 9)
        << cell(num(s.scores.std_dev), 9) << cell(num(s.scores.median, 1), 8) << "  ";
    for (auto h : s.histogram) out << ' ' << h;
    out << '\n';
  }
  out << "\ncognitive/emotional pearson: " << (report.correlation ? num(*report.correlation, 4) : "n/a")
      << '\n';
  return out.str();
}

std::string format_table(const EvalReport& report) {
  std::ostringstream out;
  out << cell("", 14) << cell("precision", 11) << cell("recall", 9) << cell("f1-score", 10)
      << cell("support", 9) << '\n';
  for (const auto& c : report.classes) {
    out << cell(c.label, 14) << cell(num(c.precision, 4), 11) << cell(num(c.recall, 4), 9)
        << cell(num(c.f1, 4), 10) << cell(std::to_string(c.support), 9)
        << (c.undefined ? "  (undefined)" : "") << '\n';
  }
  const std::pair<const char*, const AverageMetrics*> rows[] = {{"micro avg", &report.micro},
                                                                {"macro avg", &report.macro},
                                                                {"weighted avg", &report.weighted},
                                                                {"samples avg", &report.samples}};
  for (const auto& [name, m] : rows) {
    out << cell(name, 14) << cell(num(m->precision, 4), 11) << cell(num(m->recall, 4), 9)
        << cell(num(m->f1, 4), 10) << cell(std::to_string(m->support), 9) << '\n';
  }
  return out.str();
}

std::string format_table(const std::vector<ConstructSummary>& summary) {
  std::ostringstream out;
  for (const auto& s : summary) {
    out << to_string(s.construct) << ": " << num(s.mean) << " (SD= " << num(s.std_dev)
        << "), n=" << s.n << ", " << (s.positive ? "above" : "not above") << " midpoint 4\n";
  }
  return out.str();
}

}  // namespace empathy::analytics
