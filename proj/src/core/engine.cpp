#include "core/engine.hpp"

#include <algorithm>
#include <cmath>

namespace bctp {

ActorWeights actor_weights(const std::vector<HumanActor>& humans,
                           const std::vector<ApplicationActor>& applications,
                           const MethodConfig& cfg) {
    ActorWeights aw;
    for (const auto& human : humans) aw.uhw += cfg.class_weights.of(human.responsibility);
    for (const auto& app : applications) aw.uapw += cfg.class_weights.of(app.task_complexity);
    aw.tuaw = aw.uhw + aw.uapw;
    return aw;
}

double process_weights(const std::vector<BusinessProcess>& processes, const MethodConfig& cfg) {
    double sum = 0.0;
    for (const auto& process : processes) {
        if (process.step_count < 1) {
            raise(ErrorKind::Validation, process.id, "step_count must be >= 1");
        }
        sum += cfg.class_weights.of(classify_count(process.step_count, cfg.transaction_bounds));
    }
    return sum;
}

double unadjusted_points(const ActorWeights& aw, double ubpw) { return aw.tuaw + ubpw; }

RoutingCandidate route(double ubfrp, const MethodConfig& cfg) {
    if (ubfrp >= cfg.theta_mbco) {
        return {true, std::nullopt, ExerciseCategory::Complex};
    }
    if (ubfrp >= cfg.theta_34) {
        return {false, ImpactLevel::L3, ExerciseCategory::Medium};
    }
    return {false, ImpactLevel::L4, ExerciseCategory::Tabletop};
}

double adjusted_points(double ubfrp, double trf, double erf, double urf) {
    for (const double factor : {trf, erf, urf}) {
        if (!std::isfinite(factor)) {
            raise(ErrorKind::Evaluation, "", "adjustment factor is not finite");
        }
        if (factor <= 0.0) {
            raise(ErrorKind::Evaluation, "",
                  "adjustment factor <= 0; check factor weights and coefficients");
        }
    }
    return ubfrp * trf * erf * urf;
}

double recovery_effort_hours(double abfrp, const MethodConfig& cfg) {
    return cfg.effort_rate_hours_per_point * abfrp;
}

ImpactLevel assign_mbco_level(double abfrp, const MethodConfig& cfg) {
    return abfrp >= cfg.theta_12 ? ImpactLevel::L1 : ImpactLevel::L2;
}

Compliance compliance_status(double rte_hours, double budget_rto_hours, double budget_mao_hours) {
    if (budget_rto_hours <= 0.0 || budget_mao_hours <= 0.0) {
        raise(ErrorKind::Validation, "", "budgets must be positive");
    }
    if (budget_rto_hours > budget_mao_hours) {
        raise(ErrorKind::Validation, "", "RTO budget must not exceed MAO budget");
    }
    if (rte_hours <= budget_rto_hours) return Compliance::MeetsRto;
    if (rte_hours <= budget_mao_hours) return Compliance::MeetsMaoOnly;
    return Compliance::Reengineer;
}

FunctionEvaluation evaluate(const BusinessFunctionSpec& function, const MethodConfig& cfg) {
    cfg.validate();
    validate_function_spec(function);

    FunctionEvaluation ev;
    ev.function_id = function.id;
    ev.actor_weights = actor_weights(function.humans, function.applications, cfg);
    ev.ubpw = process_weights(function.processes, cfg);
    ev.ubfrp = unadjusted_points(ev.actor_weights, ev.ubpw);

    const RoutingCandidate candidate = route(ev.ubfrp, cfg);
    const bool adjusted = candidate.in_mbco || cfg.full_evaluation;

    ImpactLevel level = ImpactLevel::L4;
    try {
        if (adjusted) {
            const double trf = technical_recovery_factor(function.ratings, cfg);
            const double erf = environmental_recovery_factor(function.ratings, cfg);
            const double urf = unexpected_recovery_factor(function.ratings, cfg);
            const double abfrp = adjusted_points(ev.ubfrp, trf, erf, urf);
            ev.trf = trf;
            ev.erf = erf;
            ev.urf = urf;
            ev.abfrp = abfrp;
            ev.rte_hours = recovery_effort_hours(abfrp, cfg);
            level = candidate.in_mbco ? assign_mbco_level(abfrp, cfg) : *candidate.level;
        } else {
            level = *candidate.level;
        }
    } catch (const Error& e) {
        // Re-raise with the function id for context.
        raise(e.kind(), function.id + (e.path().empty() ? "" : "." + e.path()),
              "evaluation failed: " + std::string(e.what()));
    }

    // Budgets resolve per field, desired value first, level bound otherwise.
    // The MAO budget caps the RTO budget so a lone desired MAO tighter than
    // the level bound still yields a coherent pair.
    const LevelBounds bounds = level_bounds(level);
    ev.budget_mao_hours = function.desired_mao_hours.value_or(bounds.mao_hours);
    ev.budget_rto_hours =
        std::min(function.desired_rto_hours.value_or(bounds.rto_bound_hours), ev.budget_mao_hours);
    ev.routing = Routing{candidate.in_mbco, level, candidate.exercise};
    ev.compliance = adjusted
                        ? compliance_status(*ev.rte_hours, ev.budget_rto_hours, ev.budget_mao_hours)
                        : Compliance::NotAssessed;
    return ev;
}

}  // namespace bctp
