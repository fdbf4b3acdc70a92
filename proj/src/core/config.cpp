#include "core/config.hpp"

#include <cmath>

namespace bctp {
namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) raise(ErrorKind::Config, field, "must be a finite number");
}

}  // namespace

void MethodConfig::validate() const {
    require_finite(class_weights.simple, "class_weights.Simple");
    require_finite(class_weights.average, "class_weights.Average");
    require_finite(class_weights.complex_, "class_weights.Complex");
    if (!(class_weights.simple < class_weights.average &&
          class_weights.average < class_weights.complex_)) {
        raise(ErrorKind::Config, "class_weights", "weights must be strictly increasing Simple < Average < Complex");
    }

    if (transaction_bounds.simple_max < 0) {
        raise(ErrorKind::Config, "transaction_bounds.simple_max", "must be >= 0");
    }
    if (transaction_bounds.simple_max >= transaction_bounds.average_max) {
        raise(ErrorKind::Config, "transaction_bounds", "simple_max must be below average_max");
    }

    for (const auto* coeffs : {&trf_coefficients, &erf_coefficients, &urf_coefficients}) {
        require_finite(coeffs->intercept, "coefficients.intercept");
        require_finite(coeffs->slope, "coefficients.slope");
    }

    for (const auto* table : {&trf_weights, &erf_weights, &urf_weights}) {
        for (int i = 1; i <= family_count(table->family()); ++i) {
            const FactorId id{table->family(), i};
            const double w = table->weight(id);
            if (!std::isfinite(w)) raise(ErrorKind::Config, to_string(id), "weight must be finite");
            if (table->family() == FactorFamily::Unexpected && w < 0.0) {
                raise(ErrorKind::Config, to_string(id), "unexpected-factor weights must be >= 0");
            }
        }
    }

    require_finite(theta_mbco, "theta_mbco");
    require_finite(theta_34, "theta_34");
    require_finite(theta_12, "theta_12");
    if (theta_34 > theta_mbco) {
        raise(ErrorKind::Config, "theta_34", "must not exceed theta_mbco");
    }

    require_finite(effort_rate_hours_per_point, "effort_rate_hours_per_point");
    if (effort_rate_hours_per_point <= 0.0) {
        raise(ErrorKind::Config, "effort_rate_hours_per_point", "must be > 0");
    }
    require_finite(ucp_hours_per_point, "ucp_hours_per_point");
    if (ucp_hours_per_point <= 0.0) {
        raise(ErrorKind::Config, "ucp_hours_per_point", "must be > 0");
    }

    if (profile_name != kProfilePaperLiteral && profile_name != kProfileKarnerClassic) {
        raise(ErrorKind::Config, "profile", "unknown profile \"" + profile_name + "\"");
    }
}

void MethodConfig::apply_profile(std::string_view name) {
    if (name == kProfilePaperLiteral) {
        trf_coefficients.slope = 0.001;
    } else if (name == kProfileKarnerClassic) {
        trf_coefficients.slope = 0.01;
    } else {
        raise(ErrorKind::Config, "profile", "unknown profile \"" + std::string(name) + "\"");
    }
    profile_name = std::string(name);
}

MethodConfig MethodConfig::with_profile(std::string_view name) {
    MethodConfig cfg;
    cfg.apply_profile(name);
    return cfg;
}

}  // namespace bctp
