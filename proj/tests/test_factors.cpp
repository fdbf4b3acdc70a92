#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/config.hpp"
#include "core/factors.hpp"
#include "core/rng.hpp"

using namespace bctp;

namespace {
const MethodConfig kDefault;
}

TEST_CASE("factor catalog shape") {
    CHECK(family_count(FactorFamily::Technical) == 13);
    CHECK(family_count(FactorFamily::Environmental) == 8);
    CHECK(family_count(FactorFamily::Unexpected) == 6);
    CHECK(all_factor_ids().size() == 27);
    CHECK(factor_description({FactorFamily::Unexpected, 1}) == "Weather conditions");
    CHECK(factor_description({FactorFamily::Unexpected, 6}) == "Network availability");
    CHECK(factor_description({FactorFamily::Technical, 9}) ==
          "Exists alternative application (i.e. older)");
    CHECK(factor_description({FactorFamily::Environmental, 7}) == "Part-time personnel");
}

TEST_CASE("factor id parsing and printing") {
    for (const auto id : all_factor_ids()) {
        CHECK(parse_factor_id(to_string(id)) == id);
    }
    CHECK(!parse_factor_id("TRF14").has_value());
    CHECK(!parse_factor_id("URF0").has_value());
    CHECK(!parse_factor_id("XYZ1").has_value());
    CHECK(!parse_factor_id("URF").has_value());
    CHECK(!parse_factor_id("URF3x").has_value());
}

TEST_CASE("factor sums") {
    CHECK(factor_sum(FactorRatingSet{}, FactorFamily::Technical, kDefault.trf_weights) == 0.0);
    CHECK(factor_sum(FactorRatingSet::uniform(5), FactorFamily::Technical, kDefault.trf_weights) ==
          75.0);
    CHECK(factor_sum(FactorRatingSet::uniform(5), FactorFamily::Unexpected, kDefault.urf_weights) ==
          30.0);
}

TEST_CASE("missing and out-of-range ratings are reported by id") {
    FactorRatingSet sparse;
    sparse.mark_all_unlisted();
    sparse.set({FactorFamily::Technical, 1}, 2);
    try {
        factor_sum(sparse, FactorFamily::Technical, kDefault.trf_weights);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
        CHECK(e.path() == "TRF2");
    }

    FactorRatingSet out_of_range;
    out_of_range.set({FactorFamily::Environmental, 3}, 6);
    CHECK_THROWS_AS(factor_sum(out_of_range, FactorFamily::Environmental, kDefault.erf_weights), Error);
}

TEST_CASE("technical recovery factor") {
    CHECK(technical_recovery_factor(FactorRatingSet{}, kDefault) == 0.6);
    CHECK(technical_recovery_factor(FactorRatingSet::uniform(3), kDefault) ==
          doctest::Approx(0.645).epsilon(1e-12));
    CHECK(technical_recovery_factor(FactorRatingSet::uniform(5), kDefault) ==
          doctest::Approx(0.675).epsilon(1e-12));
}

TEST_CASE("environmental recovery factor") {
    CHECK(environmental_recovery_factor(FactorRatingSet{}, kDefault) == 1.4);
    FactorRatingSet erf10;  // ERF6 weight 2 rated 5 -> sum 10
    erf10.set({FactorFamily::Environmental, 6}, 5);
    CHECK(environmental_recovery_factor(erf10, kDefault) == doctest::Approx(1.1).epsilon(1e-12));
    CHECK(environmental_recovery_factor(FactorRatingSet::uniform(5), kDefault) ==
          doctest::Approx(0.275).epsilon(1e-12));
}

TEST_CASE("unexpected recovery factor") {
    CHECK(unexpected_recovery_factor(FactorRatingSet{}, kDefault) == 1.0);
    CHECK(unexpected_recovery_factor(FactorRatingSet::uniform(5), kDefault) ==
          doctest::Approx(1.6).epsilon(1e-12));
    FactorRatingSet urf3;
    urf3.set({FactorFamily::Unexpected, 3}, 5);
    CHECK(unexpected_recovery_factor(urf3, kDefault) == doctest::Approx(1.1).epsilon(1e-12));

    MethodConfig negative;
    negative.urf_weights.set({FactorFamily::Unexpected, 2}, -1.0);
    try {
        unexpected_recovery_factor(urf3, negative);
        FAIL("expected a config error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        CHECK(e.path() == "URF2");
    }
}

TEST_CASE("each factor is affine in every single rating") {
    SplitMix64 rng(31);
    for (int round = 0; round < 100; ++round) {
        FactorRatingSet base;
        for (const auto id : all_factor_ids()) base.set(id, rng.range(0, 4));

        const auto& ids = all_factor_ids();
        const FactorId id = ids[rng.below(ids.size())];
        FactorRatingSet bumped = base;
        bumped.set(id, base.rating(id) + 1);

        double slope = 0.0;
        double expected_weight = 0.0;
        double before = 0.0;
        double after = 0.0;
        switch (id.family) {
            case FactorFamily::Technical:
                slope = kDefault.trf_coefficients.slope;
                expected_weight = kDefault.trf_weights.weight(id);
                before = technical_recovery_factor(base, kDefault);
                after = technical_recovery_factor(bumped, kDefault);
                break;
            case FactorFamily::Environmental:
                slope = kDefault.erf_coefficients.slope;
                expected_weight = kDefault.erf_weights.weight(id);
                before = environmental_recovery_factor(base, kDefault);
                after = environmental_recovery_factor(bumped, kDefault);
                break;
            case FactorFamily::Unexpected:
                slope = kDefault.urf_coefficients.slope;
                expected_weight = kDefault.urf_weights.weight(id);
                before = unexpected_recovery_factor(base, kDefault);
                after = unexpected_recovery_factor(bumped, kDefault);
                break;
        }
        CHECK(after - before == doctest::Approx(expected_weight * slope).epsilon(1e-9));
    }
}

TEST_CASE("urf is at least 1 with equality only at all-zero ratings") {
    SplitMix64 rng(77);
    for (int round = 0; round < 200; ++round) {
        FactorRatingSet ratings;
        int total = 0;
        for (int i = 1; i <= kUnexpectedFactorCount; ++i) {
            const int r = rng.range(0, 5);
            total += r;
            ratings.set({FactorFamily::Unexpected, i}, r);
        }
        const double urf = unexpected_recovery_factor(ratings, kDefault);
        CHECK(urf >= 1.0);
        CHECK((urf == 1.0) == (total == 0));
    }
}

TEST_CASE("intercepts are independent of the weight tables") {
    SplitMix64 rng(5150);
    for (int round = 0; round < 20; ++round) {
        MethodConfig cfg;
        for (int i = 1; i <= kTechnicalFactorCount; ++i) {
            cfg.trf_weights.set({FactorFamily::Technical, i}, rng.unit() * 4.0);
        }
        for (int i = 1; i <= kEnvironmentalFactorCount; ++i) {
            cfg.erf_weights.set({FactorFamily::Environmental, i}, rng.unit() * 4.0 - 2.0);
        }
        for (int i = 1; i <= kUnexpectedFactorCount; ++i) {
            cfg.urf_weights.set({FactorFamily::Unexpected, i}, rng.unit() * 4.0);
        }
        CHECK(technical_recovery_factor(FactorRatingSet{}, cfg) == 0.6);
        CHECK(environmental_recovery_factor(FactorRatingSet{}, cfg) == 1.4);
        CHECK(unexpected_recovery_factor(FactorRatingSet{}, cfg) == 1.0);
    }
}

TEST_CASE("factor sum is linear in ratings") {
    SplitMix64 rng(8);
    for (int round = 0; round < 50; ++round) {
        FactorRatingSet a;
        FactorRatingSet b;
        for (const auto id : all_factor_ids()) {
            a.set(id, rng.range(0, 2));
            b.set(id, rng.range(0, 3));
        }
        FactorRatingSet sum;
        for (const auto id : all_factor_ids()) sum.set(id, a.rating(id) + b.rating(id));
        for (const auto family :
             {FactorFamily::Technical, FactorFamily::Environmental, FactorFamily::Unexpected}) {
            const auto& weights = family == FactorFamily::Technical  ? kDefault.trf_weights
                                  : family == FactorFamily::Environmental ? kDefault.erf_weights
                                                                          : kDefault.urf_weights;
            CHECK(factor_sum(sum, family, weights) ==
                  doctest::Approx(factor_sum(a, family, weights) + factor_sum(b, family, weights))
                      .epsilon(1e-12));
        }
    }
}
