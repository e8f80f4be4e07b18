#include "empathy/agreement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "empathy/error.hpp"

namespace empathy::agreement {

double percentage_agreement(const ItemTable& table) {
  double sum = 0.0;
  std::size_t used = 0;
  for (const auto& item : table) {
    const std::size_t n = item.size();
    if (n < 2) continue;
    std::map<Label, std::size_t> freq;
    for (const auto& [annotator, label] : item) ++freq[label];
    std::size_t agreeing = 0;
    for (const auto& [label, k] : freq) agreeing += k * (k - 1) / 2;
    sum += static_cast<double>(agreeing) / static_cast<double>(n * (n - 1) / 2);
    ++used;
  }
  if (used == 0) throw UndefinedMetricError("percentage agreement: no item has two judgments");
  return sum / static_cast<double>(used);
}

double multi_pi(const ItemTable& table) {
  std::set<std::string> annotators;
  for (const auto& item : table)
    for (const auto& [annotator, label] : item) annotators.insert(annotator);
  const std::size_t raters = annotators.size();
  if (raters < 2) throw UndefinedMetricError("multi-pi: fewer than two annotators");

  std::map<Label, std::size_t> pooled;
  std::size_t judgments = 0;
  double observed = 0.0;
  std::size_t items = 0;
  for (const auto& item : table) {
    if (item.size() != raters) continue;
    std::map<Label, std::size_t> freq;
    for (const auto& [annotator, label] : item) ++freq[label];
    double agree = 0.0;
    for (const auto& [label, k] : freq) {
      agree += static_cast<double>(k * (k - 1));
      pooled[label] += k;
    }
    observed += agree / static_cast<double>(raters * (raters - 1));
    judgments += raters;
    ++items;
  }
  if (items == 0) throw UndefinedMetricError("multi-pi: no item judged by all annotators");
  observed /= static_cast<double>(items);

  double expected = 0.0;
  for (const auto& [label, k] : pooled) {
    const double p = static_cast<double>(k) / static_cast<double>(judgments);
    expected += p * p;
  }
  if (expected >= 1.0) {
    if (observed >= 1.0) return 1.0;
    throw UndefinedMetricError("multi-pi: expected agreement is 1");
  }
  return (observed - expected) / (1.0 - expected);
}

double krippendorff_alpha(const ItemTable& table) {
  // Coincidence matrix o[c][k]; only the diagonal and the marginals are needed
  // for the nominal metric.
  std::map<Label, double> diagonal;
  std::map<Label, double> marginal;
  double total = 0.0;
  for (const auto& item : table) {
    const std::size_t m = item.size();
    if (m < 2) continue;
    std::map<Label, std::size_t> freq;
    for (const auto& [annotator, label] : item) ++freq[label];
    const double weight = 1.0 / static_cast<double>(m - 1);
    for (const auto& [label, k] : freq) {
      diagonal[label] += weight * static_cast<double>(k * (k - 1));
      marginal[label] += static_cast<double>(k);  // row sum: k * (m - 1) * weight
    }
    total += static_cast<double>(m);
  }
  if (total == 0.0) throw UndefinedMetricError("alpha: no pairable values");

  double agree_observed = 0.0;
  for (const auto& [label, v] : diagonal) agree_observed += v;
  const double d_observed = (total - agree_observed) / total;

  double sum_sq = 0.0;
  for (const auto& [label, n] : marginal) sum_sq += n * n;
  const double d_expected = (total * total - sum_sq) / (total * (total - 1.0));

  if (d_expected <= 0.0) {
    if (d_observed <= 0.0) return 1.0;
    throw UndefinedMetricError("alpha: expected disagreement is 0");
  }
  return 1.0 - d_observed / d_expected;
}

double ConfusionProbabilityMatrix::at(const Label& row, const Label& col) const {
  const auto r = std::find(labels.begin(), labels.end(), row);
  const auto c = std::find(labels.begin(), labels.end(), col);
  if (r == labels.end() || c == labels.end()) throw std::out_of_range("unknown CPM label");
  return probabilities[static_cast<std::size_t>(r - labels.begin())]
                      [static_cast<std::size_t>(c - labels.begin())];
}

ConfusionProbabilityMatrix confusion_probability_matrix(const ItemTable& table,
                                                        std::vector<Label> label_order) {
  if (table.empty()) throw UndefinedMetricError("confusion probability matrix: empty table");

  std::set<Label> seen;
  for (const auto& item : table)
    for (const auto& [annotator, label] : item) seen.insert(label);
  for (const auto& label : seen) {
    if (std::find(label_order.begin(), label_order.end(), label) == label_order.end())
      label_order.push_back(label);
  }

  ConfusionProbabilityMatrix cpm;
  cpm.labels = std::move(label_order);
  const std::size_t n = cpm.labels.size();
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[cpm.labels[i]] = i;

  cpm.counts.assign(n, std::vector<std::size_t>(n, 0));
  for (const auto& item : table) {
    std::vector<std::size_t> labels;
    labels.reserve(item.size());
    for (const auto& [annotator, label] : item) labels.push_back(index.at(label));
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (i != j) ++cpm.counts[labels[i]][labels[j]];
  }

  cpm.probabilities.assign(n, std::vector<double>(n, 0.0));
  cpm.row_defined.assign(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t row_total = 0;
    for (std::size_t c = 0; c < n; ++c) row_total += cpm.counts[r][c];
    if (row_total == 0) continue;
    cpm.row_defined[r] = true;
    for (std::size_t c = 0; c < n; ++c)
      cpm.probabilities[r][c] =
          static_cast<double>(cpm.counts[r][c]) / static_cast<double>(row_total);
  }
  return cpm;
}

}  // namespace empathy::agreement
