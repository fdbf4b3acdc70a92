#include "core/ucp.hpp"

#include <unordered_set>

namespace bctp {
namespace {

constexpr std::array<double, kUcpTechnicalCount> kTechnicalWeights = {
    2, 2, 1, 1, 1, 0.5, 0.5, 2, 1, 1, 1, 1, 1};
constexpr std::array<double, kUcpEnvironmentalCount> kEnvironmentalWeights = {
    1.5, 0.5, 1, 0.5, 1, 2, -1, 2};

constexpr std::array<std::string_view, kUcpTechnicalCount> kTechnicalNames = {
    "Distributed System",
    "Response adjectives",
    "End-User efficiency",
    "Complex Processing",
    "Reusable Code",
    "Easy to install",
    "Easy to Use",
    "Portable",
    "Easy to change",
    "Concurrent",
    "Security features",
    "Access for third parties",
    "Special Training Required",
};

constexpr std::array<std::string_view, kUcpEnvironmentalCount> kEnvironmentalNames = {
    "Familiar with RUP",
    "Application Experience",
    "Object-Oriented experience",
    "Lead Analyst capability",
    "Motivation",
    "Stable requirements",
    "Part-time workers",
    "Difficult programming language",
};

void check_rating_value(const std::string& key, int rating) {
    if (rating < kRatingMin || rating > kRatingMax) {
        raise(ErrorKind::Validation, key, "rating must be between 0 and 5");
    }
}

}  // namespace

double ucp_technical_weight(int index) {
    return kTechnicalWeights[static_cast<std::size_t>(index - 1)];
}

double ucp_environmental_weight(int index) {
    return kEnvironmentalWeights[static_cast<std::size_t>(index - 1)];
}

std::string_view ucp_technical_description(int index) {
    return kTechnicalNames[static_cast<std::size_t>(index - 1)];
}

std::string_view ucp_environmental_description(int index) {
    return kEnvironmentalNames[static_cast<std::size_t>(index - 1)];
}

std::size_t UcpRatings::check_index(int index, int count) {
    if (index < 1 || index > count) {
        raise(ErrorKind::Validation, "ratings", "factor index out of range");
    }
    return static_cast<std::size_t>(index - 1);
}

UcpRatings UcpRatings::uniform(int technical, int environmental) {
    UcpRatings r;
    for (int i = 1; i <= kUcpTechnicalCount; ++i) r.set_technical(i, technical);
    for (int i = 1; i <= kUcpEnvironmentalCount; ++i) r.set_environmental(i, environmental);
    return r;
}

void UcpRatings::set_technical(int index, int rating) {
    const auto i = check_index(index, kUcpTechnicalCount);
    technical_[i] = rating;
    technical_listed_[i] = true;
}

void UcpRatings::set_environmental(int index, int rating) {
    const auto i = check_index(index, kUcpEnvironmentalCount);
    environmental_[i] = rating;
    environmental_listed_[i] = true;
}

void UcpRatings::mark_all_unlisted() {
    technical_listed_.fill(false);
    environmental_listed_.fill(false);
}

std::optional<std::string> UcpRatings::first_missing_key() const {
    for (int i = 1; i <= kUcpTechnicalCount; ++i) {
        if (!technical_listed_[static_cast<std::size_t>(i - 1)]) return "T" + std::to_string(i);
    }
    for (int i = 1; i <= kUcpEnvironmentalCount; ++i) {
        if (!environmental_listed_[static_cast<std::size_t>(i - 1)]) return "F" + std::to_string(i);
    }
    return std::nullopt;
}

double unadjusted_actor_weights(const std::vector<UcpActor>& actors, const MethodConfig& cfg) {
    double sum = 0.0;
    for (const auto& actor : actors) sum += cfg.class_weights.of(actor.actor_class);
    return sum;
}

double unadjusted_use_case_weights(const std::vector<UseCase>& use_cases, const MethodConfig& cfg) {
    double sum = 0.0;
    for (const auto& uc : use_cases) {
        if (uc.transaction_count < 0) {
            raise(ErrorKind::Validation, uc.id, "transaction_count must be >= 0");
        }
        sum += cfg.class_weights.of(classify_count(uc.transaction_count, cfg.transaction_bounds));
    }
    return sum;
}

double unadjusted_use_case_points(double uaw, double uucw) { return uaw + uucw; }

double technical_factor_sum(const UcpRatings& ratings) {
    if (const auto missing = ratings.first_missing_key()) {
        raise(ErrorKind::Validation, *missing, "missing factor rating");
    }
    double sum = 0.0;
    for (int i = 1; i <= kUcpTechnicalCount; ++i) {
        const int rating = ratings.technical(i);
        check_rating_value("T" + std::to_string(i), rating);
        sum += kTechnicalWeights[static_cast<std::size_t>(i - 1)] * rating;
    }
    return sum;
}

double environmental_factor_sum(const UcpRatings& ratings) {
    if (const auto missing = ratings.first_missing_key()) {
        raise(ErrorKind::Validation, *missing, "missing factor rating");
    }
    double sum = 0.0;
    for (int i = 1; i <= kUcpEnvironmentalCount; ++i) {
        const int rating = ratings.environmental(i);
        check_rating_value("F" + std::to_string(i), rating);
        sum += kEnvironmentalWeights[static_cast<std::size_t>(i - 1)] * rating;
    }
    return sum;
}

double technical_complexity_factor_from_sum(double tfactor, const MethodConfig& cfg) {
    return cfg.trf_coefficients.apply(tfactor);
}

double technical_complexity_factor(const UcpRatings& ratings, const MethodConfig& cfg) {
    return technical_complexity_factor_from_sum(technical_factor_sum(ratings), cfg);
}

double environmental_factor_from_sum(double efactor, const MethodConfig& cfg) {
    return cfg.erf_coefficients.apply(efactor);
}

double environmental_factor(const UcpRatings& ratings, const MethodConfig& cfg) {
    return environmental_factor_from_sum(environmental_factor_sum(ratings), cfg);
}

double use_case_points(double uucp, double tcf, double ef) { return uucp * tcf * ef; }

double ucp_effort_hours(double ucp, const MethodConfig& cfg) {
    return ucp * cfg.ucp_hours_per_point;
}

UcpBreakdown evaluate_ucp(const UcpProject& project, const MethodConfig& cfg) {
    cfg.validate();
    std::unordered_set<std::string> seen;
    for (const auto& actor : project.actors) {
        if (actor.id.empty() || !seen.insert("a:" + actor.id).second) {
            raise(ErrorKind::Validation, "actors." + actor.id, "actor ids must be non-empty and unique");
        }
    }
    for (const auto& uc : project.use_cases) {
        if (uc.id.empty() || !seen.insert("u:" + uc.id).second) {
            raise(ErrorKind::Validation, "use_cases." + uc.id,
                  "use case ids must be non-empty and unique");
        }
    }

    UcpBreakdown out;
    out.uaw = unadjusted_actor_weights(project.actors, cfg);
    out.uucw = unadjusted_use_case_weights(project.use_cases, cfg);
    out.uucp = unadjusted_use_case_points(out.uaw, out.uucw);
    out.tfactor = technical_factor_sum(project.ratings);
    out.efactor = environmental_factor_sum(project.ratings);
    out.tcf = technical_complexity_factor_from_sum(out.tfactor, cfg);
    out.ef = environmental_factor_from_sum(out.efactor, cfg);
    out.ucp = use_case_points(out.uucp, out.tcf, out.ef);
    out.effort_hours = ucp_effort_hours(out.ucp, cfg);
    return out;
}

}  // namespace bctp
