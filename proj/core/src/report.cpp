#include "cascade/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace cascade {

using nlohmann::json;

json to_json(const DecompositionReport& r) {
  return json{{"total", r.total},
              {"accepted", r.accepted},
              {"accepted_correct", r.accepted_correct},
              {"escalated", r.escalated},
              {"escalated_correct", r.escalated_correct},
              {"p_accept", r.p_accept},
              {"acc_accept", r.acc_accept},
              {"acc_accept_defined", r.acc_accept_defined},
              {"p_escalate", r.p_escalate},
              {"acc_escalate", r.acc_escalate},
              {"acc_escalate_defined", r.acc_escalate_defined},
              {"overall", r.overall}};
}

json to_json(const EvaluationReport& r) {
  json per_class = json::object();
  for (std::size_t c = 0; c < r.labels.size(); ++c) {
    const auto& m = r.metrics.per_class[c];
    per_class[r.labels[c]] = {{"precision", m.precision}, {"recall", m.recall},
                              {"f1", m.f1},               {"support", m.support},
                              {"predicted", m.predicted}, {"precision_defined", m.precision_defined},
                              {"recall_defined", m.recall_defined}, {"f1_defined", m.f1_defined}};
  }
  return json{{"labels", r.labels},
              {"total", r.metrics.total},
              {"accuracy", r.metrics.accuracy},
              {"macro_f1", r.metrics.macro_f1},
              {"per_class", per_class},
              {"confusion", r.metrics.confusion},
              {"escalation_rate", r.escalation_rate},
              {"decomposition", to_json(r.decomposition)}};
}

json to_json(const RobustnessReport& r) {
  json per = json::object();
  for (const auto& [kind, f1] : r.per_perturbation) per[std::string(to_string(kind))] = f1;
  return json{{"score", r.score}, {"augmentation_seed", r.augmentation_seed}, {"variants", r.variants},
              {"per_perturbation", per}};
}

json to_json(const AblationResult& r) {
  json agents = json::array();
  for (auto id : r.spec.agents) agents.push_back(std::string(to_string(id)));
  return json{{"name", r.name},
              {"agents", agents},
              {"escalation_enabled", r.spec.escalation_enabled},
              {"evaluation", to_json(r.report)},
              {"robustness", to_json(r.robustness)}};
}

json to_json(const TTestResult& r) {
  json j{{"df", r.df}, {"mean_difference", r.mean_difference}, {"degenerate_variance", r.degenerate_variance},
         {"p", r.p}};
  // JSON has no infinity.
  if (std::isfinite(r.t)) {
    j["t"] = r.t;
  } else {
    j["t"] = r.t > 0 ? "inf" : "-inf";
  }
  return j;
}

json to_json(const AgentVerdict& v) {
  json j{{"agent", std::string(to_string(v.agent()))}, {"abstained", v.abstained()}, {"rationale", v.rationale()}};
  if (!v.abstained()) {
    j["label"] = v.suggestion()->label().name;
    j["confidence"] = v.suggestion()->confidence();
  }
  return j;
}

json to_json(const ConsensusResult& r) {
  json agreed = json::array();
  for (auto id : r.agreed_agents) agreed.push_back(std::string(to_string(id)));
  return json{{"label", r.final.label().name},      {"confidence", r.final.confidence()},
              {"participants", r.participants},      {"agreed_agents", agreed},
              {"per_label_score", r.per_label_score}, {"fallback_used", r.fallback_used}};
}

json to_json(const RoutedDecision& d) {
  json j{{"id", d.document_id},
         {"label", d.final.label().name},
         {"confidence", d.final.confidence()},
         {"path", std::string(to_string(d.path))},
         {"primary", {{"label", d.primary.label().name}, {"confidence", d.primary.confidence()}}}};
  if (d.consensus) {
    j["consensus"] = to_json(*d.consensus);
    json verdicts = json::array();
    for (const auto& v : d.verdicts) verdicts.push_back(to_json(v));
    j["consensus"]["verdicts"] = verdicts;
  }
  return j;
}

std::string render_table(const EvaluationReport& r) {
  std::size_t width = 5;
  for (const auto& l : r.labels) width = std::max(width, l.size());
  std::string out = fmt::format("{:<{}}  {:>9}  {:>9}  {:>9}  {:>7}\n", "Class", width, "Precision", "Recall", "F1",
                                "Support");
  for (std::size_t c = 0; c < r.labels.size(); ++c) {
    const auto& m = r.metrics.per_class[c];
    out += fmt::format("{:<{}}  {:>9.4f}  {:>9.4f}  {:>9.4f}  {:>7}{}\n", r.labels[c], width, m.precision, m.recall,
                       m.f1, m.support, m.f1_defined ? "" : "  (undefined)");
  }
  const auto& d = r.decomposition;
  out += fmt::format("\nAccuracy        {:.4f}  ({} / {})\n", r.metrics.accuracy, r.metrics.correct, r.metrics.total);
  out += fmt::format("Macro F1        {:.4f}\n", r.metrics.macro_f1);
  out += fmt::format("Escalation rate {:.4f}  ({} escalated)\n", r.escalation_rate, d.escalated);
  out += fmt::format("Accepted        p={:.4f}  acc={:.4f}{}\n", d.p_accept, d.acc_accept,
                     d.acc_accept_defined ? "" : " (undefined)");
  out += fmt::format("Escalated       p={:.4f}  acc={:.4f}{}\n", d.p_escalate, d.acc_escalate,
                     d.acc_escalate_defined ? "" : " (undefined)");
  return out;
}

std::string render_ablation_table(std::span<const AblationResult> results) {
  std::size_t width = std::string_view("Configuration").size();
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::string out = fmt::format("{:<{}}  {:>8}  {:>6}  {:>10}  {:>10}\n", "Configuration", width, "Acc (%)", "F1",
                                "Robustness", "Escalated");
  for (const auto& r : results) {
    out += fmt::format("{:<{}}  {:>8.2f}  {:>6.4f}  {:>10.4f}  {:>10.4f}\n", r.name, width,
                       100.0 * r.report.metrics.accuracy, r.report.metrics.macro_f1, r.robustness.score,
                       r.report.escalation_rate);
  }
  return out;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out = "tau,accuracy,macro_f1,escalation_rate,p_accept,acc_accept,acc_escalate,escalated\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out += fmt::format("{:.4f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", row.tau, r.metrics.accuracy,
                       r.metrics.macro_f1, r.escalation_rate, r.decomposition.p_accept, r.decomposition.acc_accept,
                       r.decomposition.acc_escalate, r.decomposition.escalated);
  }
  return out;
}

}  // namespace cascade
