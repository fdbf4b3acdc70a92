#pragma once

#include <string>

#include "core/errors.hpp"
#include "core/factors.hpp"
#include "core/types.hpp"

namespace bctp {

// intercept + slope * weighted_sum
struct AffineCoefficients {
    double intercept = 0.0;
    double slope = 0.0;

    double apply(double sum) const { return intercept + slope * sum; }

    bool operator==(const AffineCoefficients&) const = default;
};

// Weights for the Simple/Average/Complex classes. Must be strictly increasing.
struct ClassWeights {
    double simple = 1.0;
    double average = 2.0;
    double complex_ = 3.0;

    double of(ComplexityClass c) const {
        switch (c) {
            case ComplexityClass::Simple: return simple;
            case ComplexityClass::Average: return average;
            case ComplexityClass::Complex: return complex_;
        }
        return 0.0;
    }

    bool operator==(const ClassWeights&) const = default;
};

// Count-based classification bounds for use cases and business processes:
// count <= simple_max -> Simple, count <= average_max -> Average, else Complex.
struct ClassificationBounds {
    int simple_max = 3;
    int average_max = 7;

    bool operator==(const ClassificationBounds&) const = default;
};

constexpr ComplexityClass classify_count(int count, const ClassificationBounds& bounds) {
    if (count <= bounds.simple_max) return ComplexityClass::Simple;
    if (count <= bounds.average_max) return ComplexityClass::Average;
    return ComplexityClass::Complex;
}

inline constexpr std::string_view kProfilePaperLiteral = "paper-literal";
inline constexpr std::string_view kProfileKarnerClassic = "karner-classic";

// Every tunable constant of the method in one value. A default-constructed
// config is the "paper-literal" profile. The technical coefficients drive
// both the use-case-points TCF and the recovery TRF; likewise the
// environmental pair drives EF and ERF.
//
// The adjustment-factor weight tables and the three routing thresholds are
// organization-calibratable knobs, not fixed constants of the method.
struct MethodConfig {
    ClassWeights class_weights{};
    ClassificationBounds transaction_bounds{};

    AffineCoefficients trf_coefficients{0.6, 0.001};
    AffineCoefficients erf_coefficients{1.4, -0.03};
    AffineCoefficients urf_coefficients{1.0, 0.02};

    FactorWeightTable trf_weights{FactorFamily::Technical};
    FactorWeightTable erf_weights{FactorFamily::Environmental};
    FactorWeightTable urf_weights{FactorFamily::Unexpected};

    // Routing thresholds; every comparison is inclusive (">= passes").
    double theta_mbco = 20.0;  // UBFRP at or above: function is in the MBCO
    double theta_34 = 10.0;    // UBFRP split between L3 and L4 outside the MBCO
    double theta_12 = 25.0;    // ABFRP split between L1 and L2 inside the MBCO

    // Hours of recovery-testing effort per adjusted recovery point.
    double effort_rate_hours_per_point = 0.05;

    // Development man-hours per use-case point (classic rate: 20).
    double ucp_hours_per_point = 20.0;

    std::string profile_name{kProfilePaperLiteral};

    // Run the adjusted pipeline for functions outside the MBCO as well.
    bool full_evaluation = false;

    // Throws Error{Config} on the first violated invariant.
    void validate() const;

    // Overwrites the coefficient(s) the named profile pins, last writer wins.
    // "paper-literal" keeps the printed technical slope 0.001; "karner-classic"
    // uses the customary 0.01.
    void apply_profile(std::string_view name);

    static MethodConfig with_profile(std::string_view name);

    bool operator==(const MethodConfig&) const = default;
};

}  // namespace bctp
