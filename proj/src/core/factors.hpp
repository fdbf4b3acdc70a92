#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace bctp {

struct MethodConfig;

// The three recovery-factor families. Technical and environmental factors
// mirror the classic use-case-points factor catalogs; unexpected factors
// cover adversities that can prolong a recovery (weather, disaster type,
// late alerting, urban conditions, staff and network availability).
enum class FactorFamily { Technical, Environmental, Unexpected };

inline constexpr int kTechnicalFactorCount = 13;
inline constexpr int kEnvironmentalFactorCount = 8;
inline constexpr int kUnexpectedFactorCount = 6;
inline constexpr int kTotalFactorCount =
    kTechnicalFactorCount + kEnvironmentalFactorCount + kUnexpectedFactorCount;

inline constexpr int kRatingMin = 0;
inline constexpr int kRatingMax = 5;

constexpr int family_count(FactorFamily family) {
    switch (family) {
        case FactorFamily::Technical: return kTechnicalFactorCount;
        case FactorFamily::Environmental: return kEnvironmentalFactorCount;
        case FactorFamily::Unexpected: return kUnexpectedFactorCount;
    }
    return 0;
}

constexpr std::string_view family_prefix(FactorFamily family) {
    switch (family) {
        case FactorFamily::Technical: return "TRF";
        case FactorFamily::Environmental: return "ERF";
        case FactorFamily::Unexpected: return "URF";
    }
    return "?";
}

// Identifies one factor, e.g. {Technical, 3} == "TRF3". Index is 1-based.
struct FactorId {
    FactorFamily family{FactorFamily::Technical};
    int index{1};

    auto operator<=>(const FactorId&) const = default;
};

std::string to_string(FactorId id);
std::optional<FactorId> parse_factor_id(std::string_view text);

// Catalog text for the factor, e.g. URF1 -> "Weather conditions".
std::string_view factor_description(FactorId id);

// All 27 ids in canonical order: TRF1..TRF13, ERF1..ERF8, URF1..URF6.
const std::vector<FactorId>& all_factor_ids();

// Ratings for the complete factor catalog. Values live on an integer 0..5
// scale. The set tracks which ids an input document actually listed, so
// portfolio validation can report missing factors; a default-constructed
// set is complete with every rating 0.
class FactorRatingSet {
public:
    FactorRatingSet() { listed_.fill(true); }

    static FactorRatingSet uniform(int rating);

    int rating(FactorId id) const { return ratings_[flat_index(id)]; }

    void set(FactorId id, int rating) {
        ratings_[flat_index(id)] = rating;
        listed_[flat_index(id)] = true;
    }

    // Entry state for parsers that overlay explicit rating maps.
    void mark_all_unlisted() { listed_.fill(false); }

    bool complete() const;
    bool complete(FactorFamily family) const;
    std::vector<FactorId> unlisted() const;

    bool operator==(const FactorRatingSet&) const = default;

    static int flat_index(FactorId id);

private:
    std::array<int, kTotalFactorCount> ratings_{};
    std::array<bool, kTotalFactorCount> listed_{};
};

// Per-family weight table. Defaults mirror the source factor catalogs:
// technical {2,2,1,1,1,0.5,0.5,2,1,1,1,1,1}, environmental
// {1.5,0.5,1,0.5,1,2,-1,2}, unexpected uniform 1. All configurable.
class FactorWeightTable {
public:
    explicit FactorWeightTable(FactorFamily family);

    FactorFamily family() const { return family_; }

    double weight(FactorId id) const;
    void set(FactorId id, double weight);

    bool operator==(const FactorWeightTable&) const = default;

private:
    FactorFamily family_;
    std::vector<double> weights_;
};

// Weighted rating sum over one family: sum of weight_i * rating_i.
// Requires the family's ratings to be complete and within 0..5.
double factor_sum(const FactorRatingSet& ratings, FactorFamily family, const FactorWeightTable& weights);

// Adjustment factors, each affine in its family's weighted rating sum.
// TRF intercept/slope default to (0.6, 0.001), ERF to (1.4, -0.03) and
// URF to (1.0, 0.02); all-zero ratings return exactly the intercepts, so
// an unrated function picks up no unexpected-adversity surcharge.
double technical_recovery_factor(const FactorRatingSet& ratings, const MethodConfig& cfg);
double environmental_recovery_factor(const FactorRatingSet& ratings, const MethodConfig& cfg);
double unexpected_recovery_factor(const FactorRatingSet& ratings, const MethodConfig& cfg);

}  // namespace bctp
