#include "empathy/agreement_report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "empathy/error.hpp"

namespace empathy {

using nlohmann::ordered_json;

std::string_view to_string(AgreementTarget target) {
  switch (target) {
    case AgreementTarget::components: return "components";
    case AgreementTarget::cognitive: return "cognitive";
    case AgreementTarget::emotional: return "emotional";
  }
  return "components";
}

std::optional<AgreementTarget> parse_agreement_target(std::string_view name) {
  if (name == "components") return AgreementTarget::components;
  if (name == "cognitive") return AgreementTarget::cognitive;
  if (name == "emotional") return AgreementTarget::emotional;
  return std::nullopt;
}

AgreementTables build_agreement_tables(const AnnotatedCorpus& corpus) {
  AgreementTables tables;
  for (const auto& doc : corpus.documents) {
    if (doc.annotators().size() >= 2) tables.documents.push_back(&doc);
  }
  std::sort(tables.documents.begin(), tables.documents.end(),
            [](const AnnotatedDocument* a, const AnnotatedDocument* b) { return a->id < b->id; });

  for (const auto* doc : tables.documents) {
    const SentenceView view = build_sentence_view(*doc);
    for (std::size_t s = 0; s < view.sentences.size(); ++s) {
      agreement::Item component;
      agreement::Item cognitive;
      agreement::Item emotional;
      bool all_labelled = true;
      for (const auto& [annotator, row] : view.rows) {
        const SentenceLabel& label = row[s];
        component[annotator] = std::string(to_string(label.component));
        if (label.component == ComponentLabel::none) {
          all_labelled = false;
          continue;
        }
        cognitive[annotator] = std::to_string(label.cognitive->value());
        emotional[annotator] = std::to_string(label.emotional->value());
      }
      tables.components.push_back(std::move(component));
      if (all_labelled) {
        tables.cognitive.push_back(std::move(cognitive));
        tables.emotional.push_back(std::move(emotional));
      }
    }
  }
  return tables;
}

agreement::ItemTable binary_table(const agreement::ItemTable& components, ComponentLabel category) {
  const std::string name(to_string(category));
  agreement::ItemTable out;
  out.reserve(components.size());
  for (const auto& item : components) {
    agreement::Item binary;
    for (const auto& [annotator, label] : item) binary[annotator] = label == name ? name : "other";
    out.push_back(std::move(binary));
  }
  return out;
}

namespace {

// Token index range [first token starting at/after begin, first starting at/after end).
Span to_token_range(const std::vector<Span>& tokens, Span span) {
  auto starts_before = [](const Span& token, std::size_t pos) { return token.begin < pos; };
  const auto first = std::lower_bound(tokens.begin(), tokens.end(), span.begin, starts_before);
  const auto last = std::lower_bound(tokens.begin(), tokens.end(), span.end, starts_before);
  return {static_cast<std::size_t>(first - tokens.begin()),
          static_cast<std::size_t>(last - tokens.begin())};
}

}  // namespace

std::vector<agreement::Continuum> build_continua(std::span<const AnnotatedDocument* const> documents,
                                                 ComponentLabel category) {
  std::vector<agreement::Continuum> continua;
  for (const auto* doc : documents) {
    const auto tokens = text::tokenize(doc->text);
    agreement::Continuum c;
    c.length = tokens.size();
    for (const auto& annotator : doc->annotators()) {
      std::vector<Span> covered;
      for (const auto& a : doc->annotations_of(annotator)) {
        if (category != ComponentLabel::none && a.component != category) continue;
        const Span range = to_token_range(tokens, a.span());
        if (range.begin < range.end) covered.push_back(range);
      }
      if (category == ComponentLabel::none) {
        std::vector<Span> gaps;
        std::size_t pos = 0;
        for (const auto& r : covered) {
          if (r.begin > pos) gaps.push_back({pos, r.begin});
          pos = std::max(pos, r.end);
        }
        if (pos < c.length) gaps.push_back({pos, c.length});
        covered = std::move(gaps);
      }
      c.units[annotator] = std::move(covered);
    }
    continua.push_back(std::move(c));
  }
  return continua;
}

namespace {

template <typename F>
std::optional<double> try_metric(F&& f) {
  try {
    return f();
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

std::vector<agreement::Label> score_labels() { return {"1", "2", "3", "4", "5"}; }

std::vector<agreement::Label> component_labels() {
  std::vector<agreement::Label> labels;
  for (auto l : kReportLabelOrder) labels.emplace_back(to_string(l));
  return labels;
}

}  // namespace

AgreementReport agreement_report(const AnnotatedCorpus& corpus, const AgreementConfig& config) {
  const AgreementTables tables = build_agreement_tables(corpus);
  if (tables.documents.empty()) throw ValidationError("no co-annotated documents");

  AgreementReport report;
  std::set<std::string> annotators;
  for (const auto* doc : tables.documents)
    for (const auto& a : doc->annotators()) annotators.insert(a);
  report.annotators.assign(annotators.begin(), annotators.end());
  report.documents = tables.documents.size();
  report.sentences = tables.components.size();

  if (config.targets.contains(AgreementTarget::components)) {
    for (ComponentLabel category : kReportLabelOrder) {
      const auto table = binary_table(tables.components, category);
      CategoryAgreement row;
      row.category = category;
      row.percentage = try_metric([&] { return agreement::percentage_agreement(table); });
      row.multi_pi = try_metric([&] { return agreement::multi_pi(table); });
      row.alpha = try_metric([&] { return agreement::krippendorff_alpha(table); });
      for (const auto& item : table) {
        if (item.size() >= 2) ++row.items_alpha;
        if (item.size() == annotators.size()) ++row.items_pi;
      }
      if (config.unitized) {
        const auto continua = build_continua(tables.documents, category);
        row.alpha_u = try_metric(
            [&] { return agreement::unitized_alpha(continua, config.unitized_options).alpha; });
      }
      report.categories.push_back(row);
    }
    if (!tables.components.empty())
      report.component_cpm =
          agreement::confusion_probability_matrix(tables.components, component_labels());
  }

  for (Dimension dim : {Dimension::cognitive, Dimension::emotional}) {
    const auto target =
        dim == Dimension::cognitive ? AgreementTarget::cognitive : AgreementTarget::emotional;
    if (!config.targets.contains(target)) continue;
    const auto& table = dim == Dimension::cognitive ? tables.cognitive : tables.emotional;
    ScaleAgreement scale;
    scale.dimension = dim;
    scale.items = table.size();
    scale.multi_pi = try_metric([&] { return agreement::multi_pi(table); });
    if (!table.empty()) scale.cpm = agreement::confusion_probability_matrix(table, score_labels());
    report.scales.push_back(std::move(scale));
  }
  return report;
}

namespace {

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string fixed4(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

void format_cpm(std::ostringstream& out, const agreement::ConfusionProbabilityMatrix& cpm) {
  std::size_t width = 8;
  for (const auto& l : cpm.labels) width = std::max(width, l.size() + 1);
  out << pad("", width);
  for (const auto& l : cpm.labels) out << pad(l, width);
  out << '\n';
  for (std::size_t r = 0; r < cpm.labels.size(); ++r) {
    out << pad(cpm.labels[r], width);
    for (std::size_t c = 0; c < cpm.labels.size(); ++c)
      out << pad(cpm.row_defined[r] ? fixed4(cpm.probabilities[r][c]) : "n/a", width);
    out << '\n';
  }
}

}  // namespace

ordered_json to_json(const agreement::ConfusionProbabilityMatrix& cpm) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < cpm.labels.size(); ++r) {
    ordered_json row;
    row["label"] = cpm.labels[r];
    row["defined"] = static_cast<bool>(cpm.row_defined[r]);
    row["counts"] = cpm.counts[r];
    row["probabilities"] = cpm.probabilities[r];
    rows.push_back(std::move(row));
  }
  return {{"labels", cpm.labels}, {"rows", std::move(rows)}};
}

ordered_json to_json(const AgreementReport& report) {
  ordered_json j;
  j["annotators"] = report.annotators;
  j["documents"] = report.documents;
  j["sentences"] = report.sentences;
  ordered_json cats = ordered_json::array();
  for (const auto& c : report.categories) {
    cats.push_back({{"category", to_string(c.category)},
                    {"percentage", optional_number(c.percentage)},
                    {"multi_pi", optional_number(c.multi_pi)},
                    {"alpha", optional_number(c.alpha)},
                    {"alpha_u", optional_number(c.alpha_u)},
                    {"items_alpha", c.items_alpha},
                    {"items_pi", c.items_pi}});
  }
  j["components"] = std::move(cats);
  j["component_cpm"] = report.component_cpm ? to_json(*report.component_cpm) : ordered_json(nullptr);
  ordered_json scales = ordered_json::array();
  for (const auto& s : report.scales) {
    scales.push_back({{"dimension", to_string(s.dimension)},
                      {"multi_pi", optional_number(s.multi_pi)},
                      {"items", s.items},
                      {"cpm", s.cpm ? to_json(*s.cpm) : ordered_json(nullptr)}});
  }
  j["scales"] = std::move(scales);
  return j;
}

std::string format_table(const agreement::ConfusionProbabilityMatrix& cpm) {
  std::ostringstream out;
  format_cpm(out, cpm);
  return out.str();
}

std::string format_table(const AgreementReport& report) {
  std::ostringstream out;
  out << "annotators: ";
  for (std::size_t i = 0; i < report.annotators.size(); ++i)
    out << (i ? ", " : "") << report.annotators[i];
  out << "\ndocuments: " << report.documents << "  sentences: " << report.sentences << "\n";

  if (!report.categories.empty()) {
    out << "\n" << pad("", 12) << pad("%", 10) << pad("multi-pi", 10) << pad("alpha", 10)
        << pad("alpha_U", 10) << '\n';
    for (const auto& c : report.categories) {
      out << pad(std::string(to_string(c.category)), 12) << pad(fixed4(c.percentage), 10)
          << pad(fixed4(c.multi_pi), 10) << pad(fixed4(c.alpha), 10) << pad(fixed4(c.alpha_u), 10)
          << '\n';
    }
  }
  if (report.component_cpm) {
    out << "\ncomponent CPM\n";
    format_cpm(out, *report.component_cpm);
  }
  for (const auto& s : report.scales) {
    out << '\n' << to_string(s.dimension) << " multi-pi: " << fixed4(s.multi_pi) << " (" << s.items
        << " sentences)\n";
    if (s.cpm) format_cpm(out, *s.cpm);
  }
  return out.str();
}

}  // namespace empathy
