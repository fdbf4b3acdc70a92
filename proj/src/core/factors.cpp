#include "core/factors.hpp"

#include <charconv>

#include "core/config.hpp"

namespace bctp {
namespace {

constexpr std::array<std::string_view, kTechnicalFactorCount> kTechnicalDescriptions = {
    "Application's communication with other systems",
    "Function Type",
    "User's skills",
    "Complex functions",
    "Routine functions",
    "Easy to restore",
    "Easy to process",
    "Installed locally or in remote server",
    "Exists alternative application (i.e. older)",
    "Functional Area",
    "Security features",
    "Utilized by third users",
    "Extreme and special knowledge required",
};

constexpr std::array<std::string_view, kEnvironmentalFactorCount> kEnvironmentalDescriptions = {
    "Familiar with Business Recovery procedures",
    "Users' application experience",
    "Users' recovery task knowledge",
    "Leader's capability",
    "Team's motivation",
    "Stable requirements of system's recovery level (Stable MBCO)",
    "Part-time personnel",
    "Customers' needs direct effect",
};

constexpr std::array<std::string_view, kUnexpectedFactorCount> kUnexpectedDescriptions = {
    "Weather conditions",
    "Disaster Type",
    "Timely Information Distribution of Crisis event",
    "Urban conditions",
    "Staff availability",
    "Network availability",
};

constexpr std::array<double, kTechnicalFactorCount> kDefaultTechnicalWeights = {
    2, 2, 1, 1, 1, 0.5, 0.5, 2, 1, 1, 1, 1, 1};
constexpr std::array<double, kEnvironmentalFactorCount> kDefaultEnvironmentalWeights = {
    1.5, 0.5, 1, 0.5, 1, 2, -1, 2};
constexpr std::array<double, kUnexpectedFactorCount> kDefaultUnexpectedWeights = {
    1, 1, 1, 1, 1, 1};

void require_valid_id(FactorId id) {
    if (id.index < 1 || id.index > family_count(id.family)) {
        raise(ErrorKind::Validation, to_string(id), "factor index out of range");
    }
}

}  // namespace

std::string to_string(FactorId id) {
    return std::string(family_prefix(id.family)) + std::to_string(id.index);
}

std::optional<FactorId> parse_factor_id(std::string_view text) {
    FactorFamily family;
    if (text.starts_with("TRF")) {
        family = FactorFamily::Technical;
    } else if (text.starts_with("ERF")) {
        family = FactorFamily::Environmental;
    } else if (text.starts_with("URF")) {
        family = FactorFamily::Unexpected;
    } else {
        return std::nullopt;
    }
    const std::string_view digits = text.substr(3);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    if (index < 1 || index > family_count(family)) return std::nullopt;
    return FactorId{family, index};
}

std::string_view factor_description(FactorId id) {
    require_valid_id(id);
    switch (id.family) {
        case FactorFamily::Technical: return kTechnicalDescriptions[id.index - 1];
        case FactorFamily::Environmental: return kEnvironmentalDescriptions[id.index - 1];
        case FactorFamily::Unexpected: return kUnexpectedDescriptions[id.index - 1];
    }
    return "?";
}

const std::vector<FactorId>& all_factor_ids() {
    static const std::vector<FactorId> ids = [] {
        std::vector<FactorId> out;
        out.reserve(kTotalFactorCount);
        for (const auto family :
             {FactorFamily::Technical, FactorFamily::Environmental, FactorFamily::Unexpected}) {
            for (int i = 1; i <= family_count(family); ++i) out.push_back({family, i});
        }
        return out;
    }();
    return ids;
}

FactorRatingSet FactorRatingSet::uniform(int rating) {
    FactorRatingSet set;
    for (const auto id : all_factor_ids()) set.set(id, rating);
    return set;
}

int FactorRatingSet::flat_index(FactorId id) {
    require_valid_id(id);
    switch (id.family) {
        case FactorFamily::Technical: return id.index - 1;
        case FactorFamily::Environmental: return kTechnicalFactorCount + id.index - 1;
        case FactorFamily::Unexpected:
            return kTechnicalFactorCount + kEnvironmentalFactorCount + id.index - 1;
    }
    return 0;
}

bool FactorRatingSet::complete() const {
    for (const bool listed : listed_) {
        if (!listed) return false;
    }
    return true;
}

bool FactorRatingSet::complete(FactorFamily family) const {
    for (int i = 1; i <= family_count(family); ++i) {
        if (!listed_[flat_index({family, i})]) return false;
    }
    return true;
}

std::vector<FactorId> FactorRatingSet::unlisted() const {
    std::vector<FactorId> out;
    for (const auto id : all_factor_ids()) {
        if (!listed_[flat_index(id)]) out.push_back(id);
    }
    return out;
}

FactorWeightTable::FactorWeightTable(FactorFamily family) : family_(family) {
    switch (family) {
        case FactorFamily::Technical:
            weights_.assign(kDefaultTechnicalWeights.begin(), kDefaultTechnicalWeights.end());
            break;
        case FactorFamily::Environmental:
            weights_.assign(kDefaultEnvironmentalWeights.begin(), kDefaultEnvironmentalWeights.end());
            break;
        case FactorFamily::Unexpected:
            weights_.assign(kDefaultUnexpectedWeights.begin(), kDefaultUnexpectedWeights.end());
            break;
    }
}

double FactorWeightTable::weight(FactorId id) const {
    require_valid_id(id);
    if (id.family != family_) {
        raise(ErrorKind::Validation, to_string(id), "factor family does not match weight table");
    }
    return weights_[static_cast<std::size_t>(id.index - 1)];
}

void FactorWeightTable::set(FactorId id, double weight) {
    require_valid_id(id);
    if (id.family != family_) {
        raise(ErrorKind::Validation, to_string(id), "factor family does not match weight table");
    }
    weights_[static_cast<std::size_t>(id.index - 1)] = weight;
}

double factor_sum(const FactorRatingSet& ratings, FactorFamily family, const FactorWeightTable& weights) {
    if (!ratings.complete(family)) {
        for (const auto missing : ratings.unlisted()) {
            if (missing.family == family) {
                raise(ErrorKind::Validation, to_string(missing), "missing factor rating");
            }
        }
    }
    double sum = 0.0;
    for (int i = 1; i <= family_count(family); ++i) {
        const FactorId id{family, i};
        const int rating = ratings.rating(id);
        if (rating < kRatingMin || rating > kRatingMax) {
            raise(ErrorKind::Validation, to_string(id), "rating must be between 0 and 5");
        }
        sum += weights.weight(id) * rating;
    }
    return sum;
}

namespace {

double affine(const AffineCoefficients& c, double sum) { return c.intercept + c.slope * sum; }

}  // namespace

double technical_recovery_factor(const FactorRatingSet& ratings, const MethodConfig& cfg) {
    return affine(cfg.trf_coefficients, factor_sum(ratings, FactorFamily::Technical, cfg.trf_weights));
}

double environmental_recovery_factor(const FactorRatingSet& ratings, const MethodConfig& cfg) {
    return affine(cfg.erf_coefficients,
                  factor_sum(ratings, FactorFamily::Environmental, cfg.erf_weights));
}

double unexpected_recovery_factor(const FactorRatingSet& ratings, const MethodConfig& cfg) {
    for (int i = 1; i <= kUnexpectedFactorCount; ++i) {
        const FactorId id{FactorFamily::Unexpected, i};
        if (cfg.urf_weights.weight(id) < 0.0) {
            raise(ErrorKind::Config, to_string(id), "unexpected-factor weights must be >= 0");
        }
    }
    return affine(cfg.urf_coefficients, factor_sum(ratings, FactorFamily::Unexpected, cfg.urf_weights));
}

}  // namespace bctp
