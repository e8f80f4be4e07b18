#include "cli.hpp"

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "empathy/agreement_report.hpp"
#include "empathy/analytics.hpp"
#include "empathy/corpus.hpp"
#include "empathy/error.hpp"
#include "empathy/service.hpp"

namespace empathy::cli {

namespace {

using nlohmann::ordered_json;

// Raised inside a handler for a usage problem CLI11 cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format;
  std::string corpus;
  std::string input = "-";
  std::vector<std::string> targets;
  bool alpha_u = false;
  std::uint64_t seed = 1;
  std::size_t rounds = 1000;
  bool strict = false;
  std::string language = "de";
  std::string rubric;
  std::string segmenter;
  std::string templates;
  std::string gold;
  std::string pred;
  std::vector<std::string> labels;
  analytics::SplitRatios ratios;
  std::string out_dir;
  int port = -1;
  std::string store;
};

bool machine(const Options& o, const Streams& io) {
  if (o.format.empty()) return !io.terminal;
  return o.format == "machine";
}

void emit(const Streams& io, const Options& o, const ordered_json& j, const std::string& table) {
  if (machine(o, io))
    io.out << j.dump(2) << '\n';
  else
    io.out << table;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

std::string fixed(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// One label set per line, labels separated by commas; a blank line is an
// empty set.
std::vector<analytics::LabelSet> read_label_sets(const std::string& path, std::istream& in) {
  std::vector<analytics::LabelSet> out;
  std::istringstream lines(read_input(path, in));
  std::string line;
  while (std::getline(lines, line)) {
    analytics::LabelSet set;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto b = field.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = field.find_last_not_of(" \t\r");
      set.insert(field.substr(b, e - b + 1));
    }
    out.push_back(std::move(set));
  }
  return out;
}

service::ServiceConfig service_config(const Options& o) {
  service::ServiceConfig config;
  if (!o.rubric.empty()) config.rubric = scorer::RubricConfig::load(o.rubric);
  if (!o.segmenter.empty()) config.segmenter = segmenter::SegmenterConfig::load(o.segmenter);
  if (!o.templates.empty()) config.templates = feedback::TemplateTable::load(o.templates);
  return config;
}

Language language_option(const Options& o) {
  auto lang = parse_language(o.language);
  if (!lang) throw UsageError("--lang must be de or en");
  return *lang;
}

AgreementConfig agreement_config(const Options& o) {
  AgreementConfig config;
  if (!o.targets.empty()) {
    config.targets.clear();
    for (const auto& t : o.targets) config.targets.insert(*parse_agreement_target(t));
  }
  config.unitized = o.alpha_u;
  config.unitized_options.seed = o.seed;
  config.unitized_options.rounds = o.rounds;
  return config;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, const Streams& io) {
  try {
    const auto corpus = load_corpus(o.corpus, {o.strict});
    emit(io, o,
         {{"valid", true},
          {"documents", corpus.documents.size()},
          {"annotations", corpus.annotation_count()}},
         "ok: " + o.corpus + ": " + std::to_string(corpus.documents.size()) + " documents, " +
             std::to_string(corpus.annotation_count()) + " annotations\n");
    return kOk;
  } catch (const ParseError& e) {
    if (machine(o, io))
      io.out << ordered_json{{"valid", false},
                             {"error", {{"kind", "parse"}, {"message", e.what()},
                                        {"line", e.line()}, {"column", e.column()}}}}
                    .dump(2)
             << '\n';
    io.err << o.corpus << ": " << e.what() << '\n';
    return kFailure;
  } catch (const ValidationError& e) {
    if (machine(o, io))
      io.out << ordered_json{{"valid", false},
                             {"error", {{"kind", "validation"}, {"message", e.reason()},
                                        {"document", e.document_id()},
                                        {"annotation", e.annotation_index() == ValidationError::kNoIndex
                                                           ? ordered_json(nullptr)
                                                           : ordered_json(e.annotation_index())}}}}
                    .dump(2)
             << '\n';
    io.err << o.corpus << ": " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_stats(const Options& o, const Streams& io) {
  const auto report = analytics::corpus_stats(load_corpus(o.corpus));
  emit(io, o, analytics::to_json(report), analytics::format_table(report));
  return kOk;
}

int cmd_iaa(const Options& o, const Streams& io) {
  const auto report = agreement_report(load_corpus(o.corpus), agreement_config(o));
  emit(io, o, to_json(report), format_table(report));
  return kOk;
}

int cmd_cpm(const Options& o, const Streams& io) {
  auto config = agreement_config(o);
  config.unitized = false;
  const auto report = agreement_report(load_corpus(o.corpus), config);
  const auto target = *parse_agreement_target(o.targets.front());
  std::optional<agreement::ConfusionProbabilityMatrix> cpm;
  if (target == AgreementTarget::components) {
    cpm = report.component_cpm;
  } else if (!report.scales.empty()) {
    cpm = report.scales.front().cpm;
  }
  if (!cpm) throw ValidationError("no sentences to compare for " + o.targets.front());
  emit(io, o, to_json(*cpm), format_table(*cpm));
  return kOk;
}

int cmd_score(const Options& o, const Streams& io) {
  service::AnalyzeRequest request;
  request.text = read_input(o.input, io.in);
  request.language = language_option(o);
  request.mode = service::ScorerMode::rubric;
  const auto result = service::analyze(request, service_config(o), nullptr);

  std::ostringstream table;
  for (const auto& c : result["components"]) {
    table << c["start"].get<std::size_t>() << '-' << c["end"].get<std::size_t>() << "  "
          << c["label"].get<std::string>() << "  cognitive " << fixed(c["cognitive"], 1) << " ("
          << c["cognitive_bucket"].get<std::string>() << ")  emotional " << fixed(c["emotional"], 1)
          << " (" << c["emotional_bucket"].get<std::string>() << ")\n";
  }
  const auto& doc = result["document"];
  table << "\ncognitive " << fixed(doc["cognitive_mean"], 1) << " ("
        << doc["cognitive_bucket"].get<std::string>() << ")  emotional "
        << fixed(doc["emotional_mean"], 1) << " (" << doc["emotional_bucket"].get<std::string>()
        << ")\n\n";
  for (const auto& m : result["messages"]) table << "- " << m["text"].get<std::string>() << '\n';
  emit(io, o, result, table.str());
  return kOk;
}

int cmd_segment(const Options& o, const Streams& io) {
  const auto text = read_input(o.input, io.in);
  auto config = segmenter::SegmenterConfig::defaults();
  if (!o.segmenter.empty()) config = segmenter::SegmenterConfig::load(o.segmenter);
  const auto segments = segmenter::segment_review(text, config);
  const auto j = segmenter::to_json(segments, text);

  std::ostringstream table;
  for (const auto& s : j) {
    table << s["start"].get<std::size_t>() << '-' << s["end"].get<std::size_t>() << "  "
          << s["label"].get<std::string>() << "  " << s["text"].get<std::string>() << '\n';
  }
  emit(io, o, j, table.str());
  return kOk;
}

int cmd_eval(const Options& o, const Streams& io) {
  const auto gold = read_label_sets(o.gold, io.in);
  const auto pred = read_label_sets(o.pred, io.in);
  if (gold.size() != pred.size())
    throw ValidationError("gold has " + std::to_string(gold.size()) + " items, predictions have " +
                          std::to_string(pred.size()));
  const auto report = analytics::classification_report(gold, pred, o.labels);
  emit(io, o, analytics::to_json(report), analytics::format_table(report));
  return kOk;
}

int cmd_split(const Options& o, const Streams& io) {
  const auto split = analytics::split_corpus(load_corpus(o.corpus), o.ratios, o.seed);
  std::filesystem::create_directories(o.out_dir);
  const std::pair<const char*, const AnnotatedCorpus*> parts[] = {
      {"train", &split.train}, {"validation", &split.validation}, {"test", &split.test}};
  ordered_json j;
  std::ostringstream table;
  for (const auto& [name, part] : parts) {
    const auto path = (std::filesystem::path(o.out_dir) / (std::string(name) + ".json")).string();
    std::ofstream out(path, std::ios::binary);
    out << serialize_corpus(*part);
    if (!out) throw std::runtime_error("cannot write " + path);
    j[name] = {{"path", path}, {"documents", part->documents.size()}};
    table << name << ": " << part->documents.size() << " documents -> " << path << '\n';
  }
  emit(io, o, j, table.str());
  return kOk;
}

int cmd_serve(const Options& o, const Streams& io) {
  auto config = service::ServiceConfig::from_environment();
  if (o.port >= 0) config.port = o.port;
  if (!o.store.empty()) config.survey_store_path = o.store;

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Server server(config);
  const int port = server.bind();
  if (port < 0) throw std::runtime_error("cannot bind " + config.host + ":" + std::to_string(config.port));
  io.err << "listening on " << config.host << ':' << port << std::endl;

  std::thread listener([&server] { server.listen_after_bind(); });
  int received = 0;
  sigwait(&signals, &received);
  server.stop();
  listener.join();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Peer-review empathy corpus and feedback toolkit", "empathy"};
  app.require_subcommand(1);
  Options o;

  const auto format_check = CLI::IsMember({"table", "machine"});
  const auto target_check = CLI::IsMember({"components", "cognitive", "emotional"});
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table or machine (default: table on a terminal)")
        ->check(format_check);
  };

  auto* validate = app.add_subcommand("validate", "Check a corpus file");
  validate->add_option("corpus", o.corpus)->required();
  validate->add_flag("--strict", o.strict, "Reject unknown keys");
  add_format(validate);

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("corpus", o.corpus)->required();
  add_format(stats);

  auto* iaa = app.add_subcommand("iaa", "Inter-annotator agreement");
  iaa->add_option("corpus", o.corpus)->required();
  iaa->add_option("--target", o.targets)->check(target_check);
  iaa->add_flag("--alpha-u", o.alpha_u, "Include unitized alpha");
  iaa->add_option("--seed", o.seed);
  iaa->add_option("--rounds", o.rounds, "Sampling rounds for expected unitized disagreement")
      ->check(CLI::PositiveNumber);
  add_format(iaa);

  auto* cpm = app.add_subcommand("cpm", "Confusion probability matrix");
  cpm->add_option("corpus", o.corpus)->required();
  cpm->add_option("--target", o.targets)->required()->expected(1)->check(target_check);
  add_format(cpm);

  auto* score = app.add_subcommand("score", "Rubric scores and feedback for a review");
  score->add_option("file", o.input, "Review text, - for stdin");
  score->add_option("--lang", o.language)->check(CLI::IsMember({"de", "en"}));
  score->add_option("--rubric", o.rubric, "Rubric config JSON");
  score->add_option("--segmenter", o.segmenter, "Segmenter config JSON");
  score->add_option("--templates", o.templates, "Feedback template JSON");
  add_format(score);

  auto* segment = app.add_subcommand("segment", "Split a review into components");
  segment->add_option("file", o.input, "Review text, - for stdin");
  segment->add_option("--segmenter", o.segmenter, "Segmenter config JSON");
  add_format(segment);

  auto* eval = app.add_subcommand("eval", "Multi-label classification report");
  eval->add_option("--gold", o.gold)->required();
  eval->add_option("--pred", o.pred)->required();
  eval->add_option("--labels", o.labels, "Class order")->delimiter(',');
  add_format(eval);

  auto* split = app.add_subcommand("split", "Seeded train/validation/test split");
  split->add_option("corpus", o.corpus)->required();
  split->add_option("--train", o.ratios.train)->required();
  split->add_option("--val", o.ratios.validation)->required();
  split->add_option("--test", o.ratios.test)->required();
  split->add_option("--seed", o.seed)->required();
  split->add_option("--out", o.out_dir)->required();
  add_format(split);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", o.port)->check(CLI::Range(0, 65535));
  serve->add_option("--store", o.store, "Survey store path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n\n";
    const auto selected = app.get_subcommands();
    io.err << (selected.empty() ? app.help() : selected.front()->help());
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(o, io);
    if (*stats) return cmd_stats(o, io);
    if (*iaa) return cmd_iaa(o, io);
    if (*cpm) return cmd_cpm(o, io);
    if (*score) return cmd_score(o, io);
    if (*segment) return cmd_segment(o, io);
    if (*eval) return cmd_eval(o, io);
    if (*split) return cmd_split(o, io);
    if (*serve) return cmd_serve(o, io);
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    io.err << (o.corpus.empty() ? "" : o.corpus + ": ") << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace empathy::cli
