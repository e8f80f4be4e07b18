#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "empathy/agreement.hpp"
#include "empathy/corpus.hpp"

namespace empathy {

enum class AgreementTarget { components, cognitive, emotional };

std::string_view to_string(AgreementTarget target);
std::optional<AgreementTarget> parse_agreement_target(std::string_view name);

struct AgreementConfig {
  std::set<AgreementTarget> targets{AgreementTarget::components, AgreementTarget::cognitive,
                                    AgreementTarget::emotional};
  bool unitized = true;
  agreement::UnitizedAlphaOptions unitized_options;
};

// Undefined metrics are left empty rather than failing the whole report.
struct CategoryAgreement {
  ComponentLabel category = ComponentLabel::none;
  std::optional<double> percentage;
  std::optional<double> multi_pi;
  std::optional<double> alpha;
  std::optional<double> alpha_u;
  std::size_t items_alpha = 0;  // sentences with >= 2 judgments
  std::size_t items_pi = 0;     // sentences judged by every annotator
};

struct ScaleAgreement {
  Dimension dimension = Dimension::cognitive;
  std::optional<double> multi_pi;
  std::size_t items = 0;
  std::optional<agreement::ConfusionProbabilityMatrix> cpm;
};

struct AgreementReport {
  std::vector<std::string> annotators;
  std::size_t documents = 0;  // co-annotated documents
  std::size_t sentences = 0;
  std::vector<CategoryAgreement> categories;  // suggestion, weakness, strength, none
  std::optional<agreement::ConfusionProbabilityMatrix> component_cpm;
  std::vector<ScaleAgreement> scales;
};

// Sentence-level item tables of co-annotated documents (documents with spans
// from at least two annotators), in document id order.
struct AgreementTables {
  std::vector<const AnnotatedDocument*> documents;
  agreement::ItemTable components;  // labels are component names incl. "none"
  agreement::ItemTable cognitive;   // sentences labelled non-none by all annotators
  agreement::ItemTable emotional;
};

AgreementTables build_agreement_tables(const AnnotatedCorpus& corpus);

// Binary view of a component table: category name vs "other".
agreement::ItemTable binary_table(const agreement::ItemTable& components, ComponentLabel category);

// Token-level continua for the unitized alpha of one category. For `none`
// the units are each annotator's maximal uncovered token runs.
std::vector<agreement::Continuum> build_continua(std::span<const AnnotatedDocument* const> documents,
                                                 ComponentLabel category);

// Throws ValidationError when no document is co-annotated.
AgreementReport agreement_report(const AnnotatedCorpus& corpus, const AgreementConfig& config = {});

nlohmann::ordered_json to_json(const agreement::ConfusionProbabilityMatrix& cpm);
nlohmann::ordered_json to_json(const AgreementReport& report);
std::string format_table(const agreement::ConfusionProbabilityMatrix& cpm);
std::string format_table(const AgreementReport& report);

}  // namespace empathy
