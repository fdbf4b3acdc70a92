#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/engine.hpp"
#include "core/model.hpp"
#include "core/ucp.hpp"

namespace bctp {

enum class FindingKind {
    DuplicateFunctionId,
    EmptyFunctionId,
    DuplicateMemberId,
    EmptyMemberId,
    NoProcesses,
    InvalidStepCount,
    MissingFactor,
    RatingOutOfRange,
    NonPositiveBudget,
    BudgetOrdering,
    BudgetExceedsLevelBound,
    EvaluationFailed,
};

std::string_view to_string(FindingKind kind);
std::optional<FindingKind> parse_finding_kind(std::string_view s);

// One validation problem. Findings are data, not failures: a portfolio with
// findings still parsed, it just is not fit to evaluate.
struct Finding {
    FindingKind kind{};
    std::string function_id;  // empty for portfolio-level findings
    std::string field;        // path of the offending field
    std::string message;

    bool operator==(const Finding&) const = default;
};

// One row of the BIA document: identity, the full computed trace, routing,
// budgets, compliance, and the fingerprint of the config that produced it.
struct BiaRecord {
    std::string function_id;
    std::string function_name;
    double uhw = 0.0;
    double uapw = 0.0;
    double tuaw = 0.0;
    double ubpw = 0.0;
    double ubfrp = 0.0;
    std::optional<double> trf;
    std::optional<double> erf;
    std::optional<double> urf;
    std::optional<double> abfrp;
    std::optional<double> rte_hours;
    ImpactLevel impact_level = ImpactLevel::L4;
    ExerciseCategory exercise_category = ExerciseCategory::Tabletop;
    bool in_mbco = false;
    std::optional<double> desired_rto_hours;
    std::optional<double> desired_mao_hours;
    double budget_rto_hours = 0.0;
    double budget_mao_hours = 0.0;
    double level_mao_hours = 0.0;
    Compliance compliance = Compliance::NotAssessed;
    bool reengineer_flag = false;
    std::string config_fingerprint;

    bool operator==(const BiaRecord&) const = default;
};

struct PortfolioTotals {
    std::array<int, 4> by_level{};       // L1..L4
    std::array<int, 3> by_exercise{};    // Tabletop, Medium, Complex
    std::array<int, 4> by_compliance{};  // MeetsRto, MeetsMaoOnly, Reengineer, NotAssessed

    bool operator==(const PortfolioTotals&) const = default;
};

// Records ordered by (level ascending, ubfrp descending, id ascending).
struct PortfolioReport {
    std::vector<BiaRecord> records;
    PortfolioTotals totals;

    bool operator==(const PortfolioReport&) const = default;
};

PortfolioTotals compute_totals(const std::vector<BiaRecord>& records);

// Copies evaluation fields into a record, resolves flags and level bounds,
// and stamps the config fingerprint. The evaluation must belong to the
// function (same id) or an internal consistency error is raised.
BiaRecord build_record(const BusinessFunctionSpec& function, const FunctionEvaluation& evaluation,
                       const MethodConfig& cfg);

// Collects every finding: duplicate ids, missing factors, out-of-range
// ratings, bad step counts, budget ordering problems, and desired budgets
// inconsistent with the assigned level's bounds. Empty result means valid.
std::vector<Finding> validate_portfolio(const std::vector<BusinessFunctionSpec>& functions,
                                        const MethodConfig& cfg);

// Evaluates every function, sorts the records, and computes totals.
PortfolioReport build_portfolio_report(const std::vector<BusinessFunctionSpec>& functions,
                                       const MethodConfig& cfg);

enum class RenderFormat { Text, Machine };

RenderFormat parse_render_format(std::string_view name);  // "text" | "machine"

// Text: fixed-layout table, hours at 4 decimals, totals footer. Machine:
// canonical JSON that parse_report() reads back losslessly.
std::string render(const PortfolioReport& report, RenderFormat format);
PortfolioReport parse_report(const std::string& machine_text);

std::string render_findings(const std::vector<Finding>& findings, RenderFormat format);
std::string render_whatif(const WhatIfResult& result, RenderFormat format);
std::string render_summary(const SimulationSummary& summary, RenderFormat format);
std::string render_ucp(const UcpBreakdown& breakdown, RenderFormat format);

}  // namespace bctp
