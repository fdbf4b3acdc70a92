#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/model.hpp"
#include "core/types.hpp"

namespace bctp {

// The recovery-points pipeline: unadjusted points from actors and processes,
// MBCO gating and level routing, adjusted points, recovery-testing effort,
// and the compliance check against the RTO/MAO budgets.

struct ActorWeights {
    double uhw = 0.0;   // human actor weights
    double uapw = 0.0;  // application actor weights
    double tuaw = 0.0;  // uhw + uapw

    bool operator==(const ActorWeights&) const = default;
};

// Routing before the impact level is final: MBCO members defer their level
// to the adjusted-points split.
struct RoutingCandidate {
    bool in_mbco = false;
    std::optional<ImpactLevel> level;
    ExerciseCategory exercise = ExerciseCategory::Tabletop;
};

struct Routing {
    bool in_mbco = false;
    ImpactLevel level = ImpactLevel::L4;
    ExerciseCategory exercise = ExerciseCategory::Tabletop;

    bool operator==(const Routing&) const = default;
};

// The full computed trace for one function. The adjustment factors, adjusted
// points and effort are present only when the function routed into the MBCO
// or the config requested full evaluation.
struct FunctionEvaluation {
    std::string function_id;
    ActorWeights actor_weights;
    double ubpw = 0.0;
    double ubfrp = 0.0;
    std::optional<double> trf;
    std::optional<double> erf;
    std::optional<double> urf;
    std::optional<double> abfrp;
    std::optional<double> rte_hours;
    Routing routing;
    double budget_rto_hours = 0.0;
    double budget_mao_hours = 0.0;
    Compliance compliance = Compliance::NotAssessed;

    bool operator==(const FunctionEvaluation&) const = default;
};

// UHW / UAPW / TUAW sums over the actor lists. Empty lists give zeros.
ActorWeights actor_weights(const std::vector<HumanActor>& humans,
                           const std::vector<ApplicationActor>& applications,
                           const MethodConfig& cfg);

// UBPW: each process classified by step count, class weights summed.
double process_weights(const std::vector<BusinessProcess>& processes, const MethodConfig& cfg);

// UBFRP = TUAW + UBPW.
double unadjusted_points(const ActorWeights& aw, double ubpw);

// MBCO membership and, outside the MBCO, the L3/L4 split. All threshold
// comparisons are inclusive.
RoutingCandidate route(double ubfrp, const MethodConfig& cfg);

// ABFRP = UBFRP * TRF * ERF * URF. A factor <= 0 has no multiplicative
// meaning and raises Error{Evaluation}.
double adjusted_points(double ubfrp, double trf, double erf, double urf);

// Recovery-testing effort in hours: rate * ABFRP.
double recovery_effort_hours(double abfrp, const MethodConfig& cfg);

// L1/L2 split for MBCO members, on adjusted points; ties go to L1.
ImpactLevel assign_mbco_level(double abfrp, const MethodConfig& cfg);

// MeetsRto if rte <= rto budget, else MeetsMaoOnly if rte <= mao budget,
// else Reengineer. Budgets must be positive.
Compliance compliance_status(double rte_hours, double budget_rto_hours, double budget_mao_hours);

// Runs the whole pipeline for one function. Budgets are the desired RTO/MAO
// when the function provides them, otherwise the assigned level's bounds;
// the MAO budget caps the RTO budget. Functions outside the MBCO get
// compliance NotAssessed unless cfg.full_evaluation runs the adjusted path
// for them too.
FunctionEvaluation evaluate(const BusinessFunctionSpec& function, const MethodConfig& cfg);

}  // namespace bctp
