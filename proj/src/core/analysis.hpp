#pragma once

#include <array>
#include <cstdint>

#include "core/engine.hpp"

namespace bctp {

// Single-factor sensitivity: re-evaluates the function with one rating
// nudged by delta (clamped to the 0..5 scale) and reports what moved.
struct WhatIfResult {
    FactorId factor;
    int old_rating = 0;
    int new_rating = 0;
    double delta_abfrp = 0.0;
    double delta_rte_hours = 0.0;
    ImpactLevel level_before = ImpactLevel::L4;
    ImpactLevel level_after = ImpactLevel::L4;
    Compliance compliance_before = Compliance::NotAssessed;
    Compliance compliance_after = Compliance::NotAssessed;

    bool operator==(const WhatIfResult&) const = default;
};

WhatIfResult whatif(const BusinessFunctionSpec& function, const MethodConfig& cfg,
                    FactorId factor, int delta);

// Inclusive integer interval for one unexpected-factor rating.
struct RatingRange {
    int lo = kRatingMin;
    int hi = kRatingMax;

    bool operator==(const RatingRange&) const = default;
};

// One range per URF1..URF6, in index order.
using UrfRangeMap = std::array<RatingRange, kUnexpectedFactorCount>;

UrfRangeMap full_urf_ranges();                                        // all [0,5]
UrfRangeMap degenerate_urf_ranges(const FactorRatingSet& ratings);    // pinned at current values

// Monte Carlo summary over unexpected-factor scenarios. Identical
// (function, config, samples, seed, ranges) inputs produce a bit-identical
// summary; each draw is a pure function of (seed, sample index, factor slot).
struct SimulationSummary {
    std::uint32_t samples = 0;
    std::uint64_t seed = 0;
    double rte_mean = 0.0;
    double rte_p95 = 0.0;           // nearest-rank percentile
    double prob_meets_rto = 0.0;
    double prob_reengineer = 0.0;

    bool operator==(const SimulationSummary&) const = default;
};

// Draws each URF rating independently and uniformly from its range,
// evaluates effort and compliance per draw, and summarizes. The function
// must route into the MBCO (or cfg.full_evaluation must be on).
SimulationSummary simulate_urf(const BusinessFunctionSpec& function, const MethodConfig& cfg,
                               std::uint32_t samples, std::uint64_t seed,
                               const UrfRangeMap& ranges);

}  // namespace bctp
