#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "core/json_io.hpp"

namespace bctp {
namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::string fixed4(double value) { return fixed(value, 4); }

std::string fixed4_opt(const std::optional<double>& value) {
    return value ? fixed4(*value) : std::string("-");
}

// Minimal column-aligned table: widths derived from content, numeric
// columns right-aligned. Deterministic for identical input.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header, std::vector<bool> numeric)
        : numeric_(std::move(numeric)) {
        rows_.push_back(std::move(header));
    }

    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> widths(rows_.front().size(), 0);
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                widths[c] = std::max(widths[c], row[c].size());
            }
        }
        std::ostringstream out;
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out << "  ";
                const auto pad = widths[c] - row[c].size();
                if (numeric_[c]) out << std::string(pad, ' ') << row[c];
                else out << row[c] << std::string(pad, ' ');
            }
            out << '\n';
        }
        return out.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
    std::vector<bool> numeric_;
};

void check_member_list(std::vector<Finding>& findings, const std::string& function_id,
                       const std::string& field, const std::vector<std::string>& ids) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::string path = field + "[" + std::to_string(i) + "].id";
        if (ids[i].empty()) {
            findings.push_back({FindingKind::EmptyMemberId, function_id, path, "empty id"});
        } else if (!seen.insert(ids[i]).second) {
            findings.push_back(
                {FindingKind::DuplicateMemberId, function_id, path, "duplicate id \"" + ids[i] + "\""});
        }
    }
}

}  // namespace

std::string_view to_string(FindingKind kind) {
    switch (kind) {
        case FindingKind::DuplicateFunctionId: return "duplicate-function-id";
        case FindingKind::EmptyFunctionId: return "empty-function-id";
        case FindingKind::DuplicateMemberId: return "duplicate-member-id";
        case FindingKind::EmptyMemberId: return "empty-member-id";
        case FindingKind::NoProcesses: return "no-processes";
        case FindingKind::InvalidStepCount: return "invalid-step-count";
        case FindingKind::MissingFactor: return "missing-factor";
        case FindingKind::RatingOutOfRange: return "rating-out-of-range";
        case FindingKind::NonPositiveBudget: return "non-positive-budget";
        case FindingKind::BudgetOrdering: return "budget-ordering";
        case FindingKind::BudgetExceedsLevelBound: return "budget-exceeds-level-bound";
        case FindingKind::EvaluationFailed: return "evaluation-failed";
    }
    return "?";
}

std::optional<FindingKind> parse_finding_kind(std::string_view s) {
    for (const auto kind :
         {FindingKind::DuplicateFunctionId, FindingKind::EmptyFunctionId, FindingKind::DuplicateMemberId,
          FindingKind::EmptyMemberId, FindingKind::NoProcesses, FindingKind::InvalidStepCount,
          FindingKind::MissingFactor, FindingKind::RatingOutOfRange, FindingKind::NonPositiveBudget,
          FindingKind::BudgetOrdering, FindingKind::BudgetExceedsLevelBound,
          FindingKind::EvaluationFailed}) {
        if (to_string(kind) == s) return kind;
    }
    return std::nullopt;
}

PortfolioTotals compute_totals(const std::vector<BiaRecord>& records) {
    PortfolioTotals totals;
    for (const auto& r : records) {
        totals.by_level[static_cast<std::size_t>(static_cast<int>(r.impact_level) - 1)] += 1;
        totals.by_exercise[static_cast<std::size_t>(r.exercise_category)] += 1;
        totals.by_compliance[static_cast<std::size_t>(r.compliance)] += 1;
    }
    return totals;
}

BiaRecord build_record(const BusinessFunctionSpec& function, const FunctionEvaluation& evaluation,
                       const MethodConfig& cfg) {
    if (function.id != evaluation.function_id) {
        raise(ErrorKind::Internal, function.id, "evaluation does not belong to this function");
    }
    BiaRecord record;
    record.function_id = function.id;
    record.function_name = function.name;
    record.uhw = evaluation.actor_weights.uhw;
    record.uapw = evaluation.actor_weights.uapw;
    record.tuaw = evaluation.actor_weights.tuaw;
    record.ubpw = evaluation.ubpw;
    record.ubfrp = evaluation.ubfrp;
    record.trf = evaluation.trf;
    record.erf = evaluation.erf;
    record.urf = evaluation.urf;
    record.abfrp = evaluation.abfrp;
    record.rte_hours = evaluation.rte_hours;
    record.impact_level = evaluation.routing.level;
    record.exercise_category = evaluation.routing.exercise;
    record.in_mbco = evaluation.routing.in_mbco;
    record.desired_rto_hours = function.desired_rto_hours;
    record.desired_mao_hours = function.desired_mao_hours;
    record.budget_rto_hours = evaluation.budget_rto_hours;
    record.budget_mao_hours = evaluation.budget_mao_hours;
    record.level_mao_hours = level_bounds(evaluation.routing.level).mao_hours;
    record.compliance = evaluation.compliance;
    record.reengineer_flag = evaluation.compliance == Compliance::Reengineer;
    record.config_fingerprint = config_fingerprint(cfg);
    return record;
}

std::vector<Finding> validate_portfolio(const std::vector<BusinessFunctionSpec>& functions,
                                        const MethodConfig& cfg) {
    cfg.validate();
    std::vector<Finding> findings;

    std::unordered_set<std::string> function_ids;
    for (std::size_t i = 0; i < functions.size(); ++i) {
        const auto& fn = functions[i];
        const std::string fpath = "functions[" + std::to_string(i) + "]";
        const std::size_t findings_before = findings.size();

        if (fn.id.empty()) {
            findings.push_back({FindingKind::EmptyFunctionId, "", fpath + ".id", "empty function id"});
        } else if (!function_ids.insert(fn.id).second) {
            findings.push_back({FindingKind::DuplicateFunctionId, fn.id, fpath + ".id",
                                "duplicate function id \"" + fn.id + "\""});
        }

        std::vector<std::string> ids;
        for (const auto& h : fn.humans) ids.push_back(h.id);
        check_member_list(findings, fn.id, fpath + ".humans", ids);
        ids.clear();
        for (const auto& a : fn.applications) ids.push_back(a.id);
        check_member_list(findings, fn.id, fpath + ".applications", ids);
        ids.clear();
        for (const auto& p : fn.processes) ids.push_back(p.id);
        check_member_list(findings, fn.id, fpath + ".processes", ids);

        if (fn.processes.empty()) {
            findings.push_back(
                {FindingKind::NoProcesses, fn.id, fpath + ".processes", "at least one process is required"});
        }
        for (std::size_t p = 0; p < fn.processes.size(); ++p) {
            if (fn.processes[p].step_count < 1) {
                findings.push_back({FindingKind::InvalidStepCount, fn.id,
                                    fpath + ".processes[" + std::to_string(p) + "].step_count",
                                    "step_count must be >= 1"});
            }
        }

        for (const auto missing : fn.ratings.unlisted()) {
            findings.push_back({FindingKind::MissingFactor, fn.id,
                                fpath + ".ratings." + to_string(missing), "missing factor rating"});
        }
        for (const auto fid : all_factor_ids()) {
            const int rating = fn.ratings.rating(fid);
            if (rating < kRatingMin || rating > kRatingMax) {
                findings.push_back({FindingKind::RatingOutOfRange, fn.id,
                                    fpath + ".ratings." + to_string(fid),
                                    "rating must be between 0 and 5"});
            }
        }

        for (const auto& [field, value] :
             {std::pair{"desired_rto_hours", fn.desired_rto_hours},
              std::pair{"desired_mao_hours", fn.desired_mao_hours}}) {
            if (value && (!std::isfinite(*value) || *value <= 0.0)) {
                findings.push_back({FindingKind::NonPositiveBudget, fn.id, fpath + "." + field,
                                    "desired budgets must be positive and finite"});
            }
        }
        if (fn.desired_rto_hours && fn.desired_mao_hours &&
            *fn.desired_rto_hours >= *fn.desired_mao_hours) {
            findings.push_back({FindingKind::BudgetOrdering, fn.id, fpath + ".desired_rto_hours",
                                "desired RTO must be strictly below the desired MAO"});
        }

        // Level-consistency checks need an evaluation; skip them when the
        // function already failed structurally.
        if (findings.size() != findings_before) continue;
        try {
            const FunctionEvaluation ev = evaluate(fn, cfg);
            const LevelBounds bounds = level_bounds(ev.routing.level);
            if (fn.desired_mao_hours && *fn.desired_mao_hours > bounds.mao_hours) {
                findings.push_back({FindingKind::BudgetExceedsLevelBound, fn.id,
                                    fpath + ".desired_mao_hours",
                                    "desired MAO exceeds the " +
                                        std::string(to_string(ev.routing.level)) + " bound of " +
                                        fixed(bounds.mao_hours, 0) + "h"});
            }
            if (fn.desired_rto_hours && *fn.desired_rto_hours >= bounds.rto_bound_hours) {
                findings.push_back({FindingKind::BudgetExceedsLevelBound, fn.id,
                                    fpath + ".desired_rto_hours",
                                    "desired RTO must be strictly below the " +
                                        std::string(to_string(ev.routing.level)) + " bound of " +
                                        fixed(bounds.rto_bound_hours, 0) + "h"});
            }
        } catch (const Error& e) {
            findings.push_back({FindingKind::EvaluationFailed, fn.id, fpath, e.what()});
        }
    }
    return findings;
}

PortfolioReport build_portfolio_report(const std::vector<BusinessFunctionSpec>& functions,
                                       const MethodConfig& cfg) {
    PortfolioReport report;
    report.records.reserve(functions.size());
    for (const auto& fn : functions) {
        report.records.push_back(build_record(fn, evaluate(fn, cfg), cfg));
    }
    std::sort(report.records.begin(), report.records.end(),
              [](const BiaRecord& a, const BiaRecord& b) {
                  if (a.impact_level != b.impact_level) return a.impact_level < b.impact_level;
                  if (a.ubfrp != b.ubfrp) return a.ubfrp > b.ubfrp;
                  return a.function_id < b.function_id;
              });
    report.totals = compute_totals(report.records);
    return report;
}

RenderFormat parse_render_format(std::string_view name) {
    if (name == "text") return RenderFormat::Text;
    if (name == "machine") return RenderFormat::Machine;
    raise(ErrorKind::Validation, "format", "expected \"text\" or \"machine\"");
}

std::string render(const PortfolioReport& report, RenderFormat format) {
    if (format == RenderFormat::Machine) {
        return report_to_json(report).dump(2) + "\n";
    }

    TextTable table(
        {"id", "name", "level", "exercise", "mbco", "uhw", "uapw", "tuaw", "ubpw", "ubfrp", "trf",
         "erf", "urf", "abfrp", "rte_h", "rto_budget_h", "mao_budget_h", "level_mao_h", "compliance"},
        {false, false, false, false, false, true, true, true, true, true, true, true, true, true,
         true, true, true, true, false});
    for (const auto& r : report.records) {
        table.add_row({r.function_id, r.function_name, std::string(to_string(r.impact_level)),
                       std::string(to_string(r.exercise_category)), r.in_mbco ? "yes" : "no",
                       fixed4(r.uhw), fixed4(r.uapw), fixed4(r.tuaw), fixed4(r.ubpw), fixed4(r.ubfrp),
                       fixed4_opt(r.trf), fixed4_opt(r.erf), fixed4_opt(r.urf), fixed4_opt(r.abfrp),
                       fixed4_opt(r.rte_hours), fixed4(r.budget_rto_hours), fixed4(r.budget_mao_hours),
                       fixed4(r.level_mao_hours), std::string(to_string(r.compliance))});
    }

    const auto& t = report.totals;
    std::ostringstream out;
    out << table.str();
    out << "functions: " << report.records.size() << '\n';
    out << "levels: L1=" << t.by_level[0] << " L2=" << t.by_level[1] << " L3=" << t.by_level[2]
        << " L4=" << t.by_level[3] << '\n';
    out << "exercises: Tabletop=" << t.by_exercise[0] << " Medium=" << t.by_exercise[1]
        << " Complex=" << t.by_exercise[2] << '\n';
    out << "compliance: MeetsRto=" << t.by_compliance[0] << " MeetsMaoOnly=" << t.by_compliance[1]
        << " Reengineer=" << t.by_compliance[2] << " NotAssessed=" << t.by_compliance[3] << '\n';
    out << "config: " << (report.records.empty() ? "-" : report.records.front().config_fingerprint)
        << '\n';
    return out.str();
}

PortfolioReport parse_report(const std::string& machine_text) {
    nlohmann::json j = nlohmann::json::parse(machine_text, nullptr, false);
    if (j.is_discarded()) raise(ErrorKind::Parse, "", "invalid JSON document");
    return report_from_json(j);
}

std::string render_findings(const std::vector<Finding>& findings, RenderFormat format) {
    if (format == RenderFormat::Machine) {
        return findings_to_json(findings).dump(2) + "\n";
    }
    std::ostringstream out;
    for (const auto& f : findings) {
        out << to_string(f.kind) << ' ' << (f.function_id.empty() ? "-" : f.function_id) << ' '
            << (f.field.empty() ? "-" : f.field) << ": " << f.message << '\n';
    }
    return out.str();
}

std::string render_whatif(const WhatIfResult& result, RenderFormat format) {
    if (format == RenderFormat::Machine) {
        return whatif_to_json(result).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "factor: " << to_string(result.factor) << " (" << factor_description(result.factor) << ")\n";
    out << "rating: " << result.old_rating << " -> " << result.new_rating << '\n';
    out << "delta_abfrp: " << fixed4(result.delta_abfrp) << '\n';
    out << "delta_rte_hours: " << fixed4(result.delta_rte_hours) << '\n';
    out << "level: " << to_string(result.level_before) << " -> " << to_string(result.level_after) << '\n';
    out << "compliance: " << to_string(result.compliance_before) << " -> "
        << to_string(result.compliance_after) << '\n';
    return out.str();
}

std::string render_summary(const SimulationSummary& summary, RenderFormat format) {
    if (format == RenderFormat::Machine) {
        return summary_to_json(summary).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "samples: " << summary.samples << '\n';
    out << "seed: " << summary.seed << '\n';
    out << "rte_mean: " << fixed4(summary.rte_mean) << '\n';
    out << "rte_p95: " << fixed4(summary.rte_p95) << '\n';
    out << "prob_meets_rto: " << fixed(summary.prob_meets_rto, 6) << '\n';
    out << "prob_reengineer: " << fixed(summary.prob_reengineer, 6) << '\n';
    return out.str();
}

std::string render_ucp(const UcpBreakdown& b, RenderFormat format) {
    if (format == RenderFormat::Machine) {
        return ucp_to_json(b).dump(2) + "\n";
    }
    std::ostringstream out;
    out << "uaw: " << fixed4(b.uaw) << '\n';
    out << "uucw: " << fixed4(b.uucw) << '\n';
    out << "uucp: " << fixed4(b.uucp) << '\n';
    out << "tfactor: " << fixed4(b.tfactor) << '\n';
    out << "efactor: " << fixed4(b.efactor) << '\n';
    out << "tcf: " << fixed4(b.tcf) << '\n';
    out << "ef: " << fixed4(b.ef) << '\n';
    out << "ucp: " << fixed4(b.ucp) << '\n';
    out << "effort_hours: " << fixed4(b.effort_hours) << '\n';
    return out.str();
}

}  // namespace bctp
