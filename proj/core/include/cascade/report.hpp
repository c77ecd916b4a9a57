#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "cascade/evaluation.hpp"
#include "cascade/stats.hpp"

namespace cascade {

nlohmann::json to_json(const DecompositionReport& r);
nlohmann::json to_json(const EvaluationReport& r);
nlohmann::json to_json(const RobustnessReport& r);
nlohmann::json to_json(const AblationResult& r);
nlohmann::json to_json(const TTestResult& r);
nlohmann::json to_json(const ConsensusResult& r);
nlohmann::json to_json(const AgentVerdict& v);
/// {id, label, confidence, path, primary, consensus?}
nlohmann::json to_json(const RoutedDecision& d);

/// Aligned plain-text table: per-class P/R/F1/support, then the totals.
std::string render_table(const EvaluationReport& r);

/// Table with one row per configuration: Acc (%), F1, Robustness, escalation.
std::string render_ablation_table(std::span<const AblationResult> results);

/// tau,accuracy,macro_f1,escalation_rate,p_accept,acc_accept,acc_escalate,escalated
std::string sweep_to_csv(std::span<const SweepRow> rows);

}  // namespace cascade
