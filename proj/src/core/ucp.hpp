#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/config.hpp"
#include "core/types.hpp"

namespace bctp {

// Classic use-case-points calculator. Serves as the documented baseline the
// recovery-points pipeline is derived from, and shares the classification
// machinery and adjustment coefficients with it through MethodConfig.

struct UcpActor {
    std::string id;
    ComplexityClass actor_class = ComplexityClass::Simple;

    bool operator==(const UcpActor&) const = default;
};

struct UseCase {
    std::string id;
    int transaction_count = 0;  // >= 0

    bool operator==(const UseCase&) const = default;
};

inline constexpr int kUcpTechnicalCount = 13;   // T1..T13
inline constexpr int kUcpEnvironmentalCount = 8;  // F1..F8

// Fixed catalog weights for T1..T13 and F1..F8. Unlike the recovery factor
// tables these are constants of the classic method, not configuration.
double ucp_technical_weight(int index);
double ucp_environmental_weight(int index);
std::string_view ucp_technical_description(int index);
std::string_view ucp_environmental_description(int index);

// Ratings 0..5 for every technical and environmental key. Tracks which keys
// an input document listed so evaluation can name a missing one.
class UcpRatings {
public:
    UcpRatings() {
        technical_listed_.fill(true);
        environmental_listed_.fill(true);
    }

    static UcpRatings uniform(int technical, int environmental);

    int technical(int index) const { return technical_[check_index(index, kUcpTechnicalCount)]; }
    int environmental(int index) const {
        return environmental_[check_index(index, kUcpEnvironmentalCount)];
    }

    void set_technical(int index, int rating);
    void set_environmental(int index, int rating);

    void mark_all_unlisted();
    std::optional<std::string> first_missing_key() const;  // "T4" / "F7"

    bool operator==(const UcpRatings&) const = default;

private:
    static std::size_t check_index(int index, int count);

    std::array<int, kUcpTechnicalCount> technical_{};
    std::array<int, kUcpEnvironmentalCount> environmental_{};
    std::array<bool, kUcpTechnicalCount> technical_listed_{};
    std::array<bool, kUcpEnvironmentalCount> environmental_listed_{};
};

// UAW: sum of actor class weights. Zero for an empty list.
double unadjusted_actor_weights(const std::vector<UcpActor>& actors, const MethodConfig& cfg);

// UUCW: each use case classified by transaction count, class weights summed.
double unadjusted_use_case_weights(const std::vector<UseCase>& use_cases, const MethodConfig& cfg);

// UUCP = UAW + UUCW.
double unadjusted_use_case_points(double uaw, double uucw);

// Weighted rating sums over the fixed catalogs.
double technical_factor_sum(const UcpRatings& ratings);
double environmental_factor_sum(const UcpRatings& ratings);

// TCF = intercept + slope * TFactor (paper-literal defaults 0.6, 0.001).
double technical_complexity_factor_from_sum(double tfactor, const MethodConfig& cfg);
double technical_complexity_factor(const UcpRatings& ratings, const MethodConfig& cfg);

// EF = intercept + slope * EFactor (defaults 1.4, -0.03).
double environmental_factor_from_sum(double efactor, const MethodConfig& cfg);
double environmental_factor(const UcpRatings& ratings, const MethodConfig& cfg);

// UCP = UUCP * TCF * EF.
double use_case_points(double uucp, double tcf, double ef);

// Effort in man-hours: UCP * hours-per-point rate.
double ucp_effort_hours(double ucp, const MethodConfig& cfg);

struct UcpProject {
    std::string name;
    std::vector<UcpActor> actors;
    std::vector<UseCase> use_cases;
    UcpRatings ratings;

    bool operator==(const UcpProject&) const = default;
};

struct UcpBreakdown {
    double uaw = 0;
    double uucw = 0;
    double uucp = 0;
    double tfactor = 0;
    double efactor = 0;
    double tcf = 0;
    double ef = 0;
    double ucp = 0;
    double effort_hours = 0;

    bool operator==(const UcpBreakdown&) const = default;
};

UcpBreakdown evaluate_ucp(const UcpProject& project, const MethodConfig& cfg);

}  // namespace bctp
