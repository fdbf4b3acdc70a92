#include "core/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/rng.hpp"

namespace bctp {

WhatIfResult whatif(const BusinessFunctionSpec& function, const MethodConfig& cfg,
                    FactorId factor, int delta) {
    const FunctionEvaluation before = evaluate(function, cfg);

    BusinessFunctionSpec changed = function;
    const int old_rating = function.ratings.rating(factor);
    const int new_rating = std::clamp(old_rating + delta, kRatingMin, kRatingMax);
    changed.ratings.set(factor, new_rating);
    const FunctionEvaluation after = evaluate(changed, cfg);

    WhatIfResult result;
    result.factor = factor;
    result.old_rating = old_rating;
    result.new_rating = new_rating;
    result.delta_abfrp = after.abfrp.value_or(0.0) - before.abfrp.value_or(0.0);
    result.delta_rte_hours = after.rte_hours.value_or(0.0) - before.rte_hours.value_or(0.0);
    result.level_before = before.routing.level;
    result.level_after = after.routing.level;
    result.compliance_before = before.compliance;
    result.compliance_after = after.compliance;
    return result;
}

UrfRangeMap full_urf_ranges() {
    UrfRangeMap ranges;
    ranges.fill(RatingRange{kRatingMin, kRatingMax});
    return ranges;
}

UrfRangeMap degenerate_urf_ranges(const FactorRatingSet& ratings) {
    UrfRangeMap ranges;
    for (int i = 1; i <= kUnexpectedFactorCount; ++i) {
        const int value = ratings.rating({FactorFamily::Unexpected, i});
        ranges[static_cast<std::size_t>(i - 1)] = {value, value};
    }
    return ranges;
}

SimulationSummary simulate_urf(const BusinessFunctionSpec& function, const MethodConfig& cfg,
                               std::uint32_t samples, std::uint64_t seed,
                               const UrfRangeMap& ranges) {
    if (samples < 1) {
        raise(ErrorKind::Validation, "samples", "must be >= 1");
    }
    for (int i = 1; i <= kUnexpectedFactorCount; ++i) {
        const auto& range = ranges[static_cast<std::size_t>(i - 1)];
        if (range.lo > range.hi || range.lo < kRatingMin || range.hi > kRatingMax) {
            raise(ErrorKind::Validation, to_string(FactorId{FactorFamily::Unexpected, i}),
                  "range must be a non-empty integer interval within [0,5]");
        }
    }

    const FunctionEvaluation base = evaluate(function, cfg);
    if (!base.routing.in_mbco && !cfg.full_evaluation) {
        raise(ErrorKind::Validation, function.id,
              "function does not route into the MBCO; enable full evaluation to simulate it");
    }

    std::vector<double> rte(samples);
    std::uint32_t meets_rto = 0;
    std::uint32_t reengineer = 0;

    BusinessFunctionSpec draw = function;
    for (std::uint32_t i = 0; i < samples; ++i) {
        for (int slot = 0; slot < kUnexpectedFactorCount; ++slot) {
            const auto& range = ranges[static_cast<std::size_t>(slot)];
            draw.ratings.set({FactorFamily::Unexpected, slot + 1},
                             draw_in_range(seed, i, static_cast<std::uint64_t>(slot), range.lo, range.hi));
        }
        const FunctionEvaluation ev = evaluate(draw, cfg);
        rte[i] = *ev.rte_hours;
        if (ev.compliance == Compliance::MeetsRto) ++meets_rto;
        if (ev.compliance == Compliance::Reengineer) ++reengineer;
    }

    // Mean accumulated relative to the first sample so a degenerate
    // distribution reproduces the point evaluation bit-for-bit.
    double delta_sum = 0.0;
    for (const double value : rte) delta_sum += value - rte[0];
    const double mean = rte[0] + delta_sum / static_cast<double>(samples);

    std::sort(rte.begin(), rte.end());
    const auto n = static_cast<double>(samples);
    const auto p95_rank = static_cast<std::size_t>(std::ceil(0.95 * n));

    SimulationSummary summary;
    summary.samples = samples;
    summary.seed = seed;
    summary.rte_mean = mean;
    summary.rte_p95 = rte[p95_rank - 1];
    summary.prob_meets_rto = static_cast<double>(meets_rto) / n;
    summary.prob_reengineer = static_cast<double>(reengineer) / n;
    return summary;
}

}  // namespace bctp
