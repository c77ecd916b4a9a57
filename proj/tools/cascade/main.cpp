// cascade: train, classify, evaluate, sweep and ablate from the command line.
//
// Exit codes: 0 success, 1 operational error, 2 acceptance gate failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cascade/error.hpp>
#include <cascade/escalation.hpp>
#include <cascade/evaluation.hpp>
#include <cascade/log.hpp>
#include <cascade/pipeline.hpp>
#include <cascade/remote.hpp>
#include <cascade/report.hpp>
#include <cascade/stats.hpp>
#include <cascade/text.hpp>

#include "config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cascade::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kGateFailed = 2;

struct Flags {
  std::optional<std::string> config;
  std::optional<double> tau;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> primary;
  std::optional<std::string> endpoint;
  std::optional<std::string> out;
  std::optional<std::string> artifacts;
  std::string input = "-";
  bool explain = false;
  bool require_improvement = false;
};

RunConfig resolve_config(const Flags& flags) {
  RunConfig cfg = flags.config ? load_config(*flags.config) : RunConfig{};
  if (flags.tau) cfg.tau = *flags.tau;
  if (flags.seed) cfg.seed = cfg.pipeline.seed = *flags.seed;
  if (flags.primary) {
    if (*flags.primary == "baseline") cfg.primary = PrimaryKind::baseline;
    else if (*flags.primary == "remote") cfg.primary = PrimaryKind::remote;
    else throw Error(ErrorCode::Config, "--primary must be 'baseline' or 'remote'");
  }
  if (flags.endpoint) cfg.endpoint = *flags.endpoint;
  if (flags.out) cfg.out = fs::path(*flags.out);
  if (flags.artifacts) cfg.artifacts = fs::path(*flags.artifacts);
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// Building the system

struct System {
  std::optional<BaselineModel> model;
  std::unique_ptr<RemoteClassifier> remote;
  KeywordMap keywords;
  RuleSet rules;
  AgentWeights weights;
  AgentSuite suite;
  std::optional<CorpusSplit> split;
  std::vector<Document> eval;  // evaluation documents, empty when none configured

  const Classifier& primary() const {
    if (remote) return *remote;
    return *model;
  }
  const LabelSpace& labels() const { return primary().label_space(); }
};

std::unique_ptr<RemoteClassifier> connect_remote(const RunConfig& cfg) {
  RemoteClassifierConfig rc{cfg.endpoint, cfg.timeout_ms, cfg.batch_size};
  return std::make_unique<RemoteClassifier>(RemoteClassifier::connect(rc));
}

void check_same_labels(const LabelSpace& remote, const LabelSpace& local) {
  if (remote.names() != local.names()) {
    throw Error(ErrorCode::Config, "remote label list does not match the corpus label space");
  }
}

System build_system(const RunConfig& cfg) {
  System sys;
  if (cfg.primary == PrimaryKind::remote) sys.remote = connect_remote(cfg);

  if (cfg.artifacts) {
    const fs::path dir = *cfg.artifacts;
    sys.model = BaselineModel::from_json(read_file(dir / "model.json"));
    const LabelSpace& labels = sys.model->label_space();
    sys.keywords = KeywordMap::from_json(read_file(dir / "keyword_map.json"), labels);
    sys.rules = RuleSet::from_json(read_file(dir / "rules.json"), labels);
    sys.weights = AgentWeights::from_json(read_file(dir / "weights.json"));
    sys.suite = make_suite(sys.keywords, sys.rules, sys.weights, cfg.pipeline.contextual,
                           cfg.pipeline.history_capacity);
    if (cfg.corpus && !cfg.eval_corpus) {
      sys.split = split(load_corpus(*cfg.corpus), cfg.pipeline.fractions, cfg.seed, cfg.pipeline.stratify);
    }
  } else {
    if (!cfg.corpus) throw Error(ErrorCode::Config, "no corpus configured (set \"corpus\" or pass --artifacts)");
    const std::vector<Document> corpus = load_corpus(*cfg.corpus);
    std::optional<std::string> rules_json;
    if (cfg.rules) rules_json = read_file(*cfg.rules);
    TrainedSystem trained = train_system(corpus, rules_json, cfg.pipeline, sys.remote.get());
    sys.model = std::move(trained.model);
    sys.keywords = std::move(trained.keywords);
    sys.rules = std::move(trained.rules);
    sys.weights = std::move(trained.weights);
    sys.suite = std::move(trained.suite);
    sys.split = std::move(trained.split);
    log().info("trained on {} documents, validated on {}", sys.split->train.size(), sys.split->validation.size());
  }
  if (sys.remote) check_same_labels(sys.remote->label_space(), sys.model->label_space());

  if (cfg.eval_corpus) sys.eval = load_corpus(*cfg.eval_corpus);
  else if (sys.split) sys.eval = sys.split->test;
  return sys;
}

const std::vector<Document>& require_eval(const System& sys) {
  if (sys.eval.empty()) throw Error(ErrorCode::EmptyInput, "no evaluation documents (empty test split?)");
  return sys.eval;
}

fs::path require_out(const RunConfig& cfg) {
  if (!cfg.out) throw Error(ErrorCode::Config, "no output directory (set \"out\" or pass --out)");
  fs::create_directories(*cfg.out);
  return *cfg.out;
}

void write_json(const fs::path& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

// ---------------------------------------------------------------------------
// Acceptance gate: full cascade at tau vs. the primary alone.

struct Comparison {
  EvaluationReport cascade;
  EvaluationReport primary_only;
  TTestResult significance;
  double improvement = 0.0;
};

Comparison compare(const System& sys, double tau) {
  const auto& docs = require_eval(sys);
  const auto gold = gold_labels(docs, sys.labels());
  std::vector<std::string> texts;
  for (const auto& d : docs) texts.push_back(d.text);
  const auto primaries = sys.primary().classify_batch(texts);

  const auto full = run_cascade(docs, primaries, sys.suite, RouterConfig{tau, true}, sys.labels());
  const auto alone = run_cascade(docs, primaries, sys.suite, RouterConfig{tau, false}, sys.labels());
  Comparison c{evaluate(full, gold, sys.labels()), evaluate(alone, gold, sys.labels()), {}, 0.0};
  c.improvement = c.cascade.metrics.accuracy - c.primary_only.metrics.accuracy;

  std::vector<double> a, b;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    a.push_back(full[i].final.label() == gold[i] ? 1.0 : 0.0);
    b.push_back(alone[i].final.label() == gold[i] ? 1.0 : 0.0);
  }
  if (docs.size() >= 2) c.significance = paired_t_test(a, b);
  return c;
}

json to_json(const Comparison& c) {
  return json{{"cascade_accuracy", c.cascade.metrics.accuracy},
              {"primary_accuracy", c.primary_only.metrics.accuracy},
              {"improvement", c.improvement},
              {"paired_t_test", cascade::to_json(c.significance)}};
}

int gate(const Comparison& c, const RunConfig& cfg) {
  // small slack so that an exact 2-point margin is not lost to rounding
  if (c.improvement + 1e-12 >= cfg.required_improvement) return kOk;
  log().error("acceptance gate failed: cascade accuracy {:.4f} vs primary {:.4f} (improvement {:+.4f}, required {:+.4f})",
              c.cascade.metrics.accuracy, c.primary_only.metrics.accuracy, c.improvement,
              cfg.required_improvement);
  return kGateFailed;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_train(const RunConfig& cfg) {
  if (cfg.artifacts) throw Error(ErrorCode::Config, "train builds artifacts; do not pass --artifacts");
  const System sys = build_system(cfg);
  const fs::path out = require_out(cfg);
  write_file(out / "model.json", sys.model->to_json() + "\n");
  write_file(out / "keyword_map.json", sys.keywords.to_json() + "\n");
  write_file(out / "rules.json", sys.rules.to_json() + "\n");
  write_file(out / "weights.json", sys.weights.to_json() + "\n");

  json summary{{"train", sys.split->train.size()},
               {"validation", sys.split->validation.size()},
               {"test", sys.split->test.size()},
               {"vocabulary", sys.model->vocabulary_size()},
               {"temperature", sys.model->temperature()},
               {"keywords", sys.keywords.size()},
               {"rules", sys.rules.size()},
               {"weights", json::parse(sys.weights.to_json())}};
  std::cout << summary.dump(2) << "\n";
  return kOk;
}

std::vector<Document> read_inputs(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    Document doc;
    doc.id = std::to_string(line_no);
    doc.seq = static_cast<std::int64_t>(line_no);
    if (trimmed.front() == '{') {
      json j;
      try {
        j = json::parse(trimmed);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::Malformed, line_no, std::string("invalid JSON: ") + e.what());
      }
      if (!j.contains("text") || !j.at("text").is_string()) {
        throw Error(ErrorCode::Malformed, line_no, "object has no string \"text\"");
      }
      doc.text = j.at("text").get<std::string>();
      if (j.contains("id")) doc.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
      if (j.contains("user_id") && j.at("user_id").is_string()) doc.user_id = j.at("user_id").get<std::string>();
    } else {
      doc.text = trimmed;
    }
    doc.text = trim(strip_controls(normalize_nfc(doc.text)));
    docs.push_back(std::move(doc));
  }
  if (docs.empty()) throw Error(ErrorCode::EmptyInput, "no input lines to classify");
  return docs;
}

std::string accepted_explanation(const RoutedDecision& d, double tau) {
  return fmt::format("Document {} was accepted: the primary classifier predicts \"{}\" with confidence {:.2f}, "
                     "at or above the threshold {:.2f}.",
                     d.document_id, d.primary.label().name, d.primary.confidence(), tau);
}

int cmd_classify(const RunConfig& cfg, const Flags& flags) {
  std::vector<Document> docs;
  if (flags.input == "-") {
    docs = read_inputs(std::cin);
  } else {
    std::ifstream in(flags.input);
    if (!in) throw Error(ErrorCode::Io, "cannot read input " + flags.input);
    docs = read_inputs(in);
  }
  const System sys = build_system(cfg);
  const auto decisions = run_cascade(docs, sys.primary(), sys.suite, RouterConfig{cfg.tau, true});
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    json j = to_json(decisions[i]);
    if (flags.explain) {
      const auto& d = decisions[i];
      j["explanation"] = d.consensus ? explain(docs[i], d.verdicts, *d.consensus) : accepted_explanation(d, cfg.tau);
    }
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int cmd_evaluate(const RunConfig& cfg, const Flags& flags) {
  const System sys = build_system(cfg);
  const Comparison c = compare(sys, cfg.tau);
  std::cout << render_table(c.cascade);
  std::cout << fmt::format("\nPrimary alone   {:.4f}\nImprovement     {:+.4f}\nPaired t-test   t={:.4f} p={:.4f} df={}{}\n",
                           c.primary_only.metrics.accuracy, c.improvement, c.significance.t, c.significance.p,
                           c.significance.df, c.significance.degenerate_variance ? " (degenerate variance)" : "");
  if (cfg.out) {
    const fs::path out = require_out(cfg);
    json j = to_json(c);
    j["tau"] = cfg.tau;
    j["seed"] = cfg.seed;
    j["report"] = to_json(c.cascade);
    j["primary_only"] = to_json(c.primary_only);
    write_json(out / "evaluation.json", j);
  }
  return flags.require_improvement ? gate(c, cfg) : kOk;
}

int cmd_sweep(const RunConfig& cfg, const Flags& flags) {
  const System sys = build_system(cfg);
  const std::vector<double> taus = cfg.sweep_taus.empty() ? default_sweep_taus() : cfg.sweep_taus;
  const auto rows = sweep_threshold(require_eval(sys), sys.primary(), sys.suite, taus);
  const std::string csv = sweep_to_csv(rows);
  std::cout << csv;
  if (cfg.out) {
    const fs::path out = require_out(cfg);
    write_file(out / "sweep.csv", csv);
    json j = json::array();
    for (const auto& row : rows) j.push_back({{"tau", row.tau}, {"report", to_json(row.report)}});
    write_json(out / "sweep.json", j);
  }
  return flags.require_improvement ? gate(compare(sys, cfg.tau), cfg) : kOk;
}

int cmd_ablate(const RunConfig& cfg, const Flags& flags) {
  const System sys = build_system(cfg);
  const std::vector<AblationSpec> configs = cfg.ablations.empty() ? default_ablations() : cfg.ablations;
  const auto results = run_ablations(require_eval(sys), sys.primary(), sys.suite, cfg.tau, configs, cfg.seed);
  std::cout << render_ablation_table(results);
  if (cfg.out) {
    const fs::path out = require_out(cfg);
    json j = json::array();
    for (const auto& r : results) j.push_back(to_json(r));
    write_json(out / "ablations.json", json{{"tau", cfg.tau}, {"seed", cfg.seed}, {"results", j}});
  }
  return flags.require_improvement ? gate(compare(sys, cfg.tau), cfg) : kOk;
}

}  // namespace
}  // namespace cascade::cli

int main(int argc, char** argv) {
  using namespace cascade::cli;
  CLI::App app{"Confidence-gated text classification with multi-agent escalation"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config, "JSON run configuration");
  app.add_option("--tau", flags.tau, "confidence threshold in [0, 1]");
  app.add_option("--seed", flags.seed, "top-level random seed");
  app.add_option("--primary", flags.primary, "primary classifier")->check(CLI::IsMember({"baseline", "remote"}));
  app.add_option("--endpoint", flags.endpoint, "classify service URL for --primary remote");
  app.add_option("--out", flags.out, "output directory");
  app.add_option("--artifacts", flags.artifacts, "directory written by `train` to load instead of retraining");
  app.add_flag("--explain", flags.explain, "attach an explanation to every decision");
  app.add_flag("--require-improvement", flags.require_improvement,
               "exit 2 unless the cascade beats the primary alone by the configured margin");

  auto* train = app.add_subcommand("train", "train the baseline, keyword map and agent weights");
  auto* classify = app.add_subcommand("classify", "classify text lines (plain or JSONL) from a file or stdin");
  classify->add_option("input", flags.input, "input file, '-' for stdin");
  auto* evaluate = app.add_subcommand("evaluate", "evaluate the cascade on the held-out documents");
  auto* sweep = app.add_subcommand("sweep", "evaluate across thresholds, CSV on stdout");
  auto* ablate = app.add_subcommand("ablate", "agent and escalation ablations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    const RunConfig cfg = resolve_config(flags);
    if (*train) return cmd_train(cfg);
    if (*classify) return cmd_classify(cfg, flags);
    if (*evaluate) return cmd_evaluate(cfg, flags);
    if (*sweep) return cmd_sweep(cfg, flags);
    if (*ablate) return cmd_ablate(cfg, flags);
  } catch (const cascade::Error& e) {
    cascade::log().error("{}", e.what());
  } catch (const std::exception& e) {
    cascade::log().error("{}", e.what());
  }
  return kFailure;
}
