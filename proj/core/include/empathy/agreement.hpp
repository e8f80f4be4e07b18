#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "empathy/text.hpp"

namespace empathy::agreement {

using Label = std::string;
// One judged item: annotator id -> nominal label.
using Item = std::map<std::string, Label>;
using ItemTable = std::vector<Item>;

// Mean over items of agreeing annotator pairs / all annotator pairs.
// Items with fewer than two judgments are skipped; throws
// UndefinedMetricError when nothing is left.
double percentage_agreement(const ItemTable& table);

// Fleiss' multi-pi with pooled label proportions. Only items judged by every
// annotator that appears in the table are used.
double multi_pi(const ItemTable& table);

// Krippendorff's alpha, nominal distance, from the coincidence matrix of
// pairable values. Incomplete items are kept.
double krippendorff_alpha(const ItemTable& table);

struct ConfusionProbabilityMatrix {
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> counts;  // counts[row][col]
  std::vector<std::vector<double>> probabilities;
  std::vector<bool> row_defined;  // false when the row has no support

  double at(const Label& row, const Label& col) const;
};

// Counts every ordered annotator pair (i, j), i != j, on each item as
// counts[label_i][label_j], then normalises rows. `label_order` fixes the
// row/column order; labels missing from it are appended in sorted order.
ConfusionProbabilityMatrix confusion_probability_matrix(const ItemTable& table,
                                                        std::vector<Label> label_order = {});

// ---------------------------------------------------------------------------
// Unitized alpha

// One continuum (a document measured in tokens). Each annotator key maps to
// that annotator's category units: disjoint [begin, end) token ranges. An
// annotator present with an empty list judged the continuum and marked nothing.
struct Continuum {
  std::size_t length = 0;
  std::map<std::string, std::vector<Span>> units;
};

struct UnitizedAlphaOptions {
  std::uint64_t seed = 1;
  std::size_t rounds = 1000;
};

struct UnitizedAlphaResult {
  double alpha = 0.0;
  double observed = 0.0;  // normalised observed disagreement
  double expected = 0.0;  // mean normalised disagreement over random placements
};

// Sum over both orderings of one annotator pair of the unit-pair distances on
// one continuum. Exposed for tests.
double unitized_pair_disagreement(std::span<const Span> a, std::span<const Span> b,
                                  std::size_t length);

UnitizedAlphaResult unitized_alpha(std::span<const Continuum> continua,
                                   const UnitizedAlphaOptions& options = {});

}  // namespace empathy::agreement
