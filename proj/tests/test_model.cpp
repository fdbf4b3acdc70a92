#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/config.hpp"
#include "core/model.hpp"
#include "core/types.hpp"

using namespace bctp;

TEST_CASE("level bounds are the fixed outage constants") {
    CHECK(level_bounds(ImpactLevel::L1).mao_hours == 2.0);
    CHECK(level_bounds(ImpactLevel::L1).rto_bound_hours == 2.0);
    CHECK(level_bounds(ImpactLevel::L2).mao_hours == 24.0);
    CHECK(level_bounds(ImpactLevel::L2).rto_bound_hours == 24.0);
    CHECK(level_bounds(ImpactLevel::L3).mao_hours == 72.0);
    CHECK(level_bounds(ImpactLevel::L3).rto_bound_hours == 72.0);
    CHECK(level_bounds(ImpactLevel::L4).mao_hours == 168.0);
    CHECK(level_bounds(ImpactLevel::L4).rto_bound_hours == 168.0);
}

TEST_CASE("level bounds are monotone in urgency") {
    const auto levels = {ImpactLevel::L1, ImpactLevel::L2, ImpactLevel::L3, ImpactLevel::L4};
    double previous = 0.0;
    for (const auto level : levels) {
        const auto bounds = level_bounds(level);
        CHECK(bounds.mao_hours > previous);
        CHECK(bounds.rto_bound_hours == bounds.mao_hours);
        previous = bounds.mao_hours;
    }
}

TEST_CASE("enum round trips") {
    for (const auto level : {ImpactLevel::L1, ImpactLevel::L2, ImpactLevel::L3, ImpactLevel::L4}) {
        CHECK(parse_impact_level(to_string(level)) == level);
    }
    for (const auto e : {ExerciseCategory::Tabletop, ExerciseCategory::Medium, ExerciseCategory::Complex}) {
        CHECK(parse_exercise(to_string(e)) == e);
    }
    for (const auto c : {Compliance::MeetsRto, Compliance::MeetsMaoOnly, Compliance::Reengineer,
                         Compliance::NotAssessed}) {
        CHECK(parse_compliance(to_string(c)) == c);
    }
    CHECK(parse_complexity("Basic") == ComplexityClass::Simple);
    CHECK(parse_complexity("Simple") == ComplexityClass::Simple);
    CHECK(human_label(ComplexityClass::Simple) == "Basic");
    CHECK(!parse_complexity("Huge").has_value());
}

TEST_CASE("default config carries the documented constants") {
    const MethodConfig cfg;
    CHECK(cfg.class_weights.of(ComplexityClass::Simple) == 1.0);
    CHECK(cfg.class_weights.of(ComplexityClass::Average) == 2.0);
    CHECK(cfg.class_weights.of(ComplexityClass::Complex) == 3.0);
    CHECK(cfg.transaction_bounds.simple_max == 3);
    CHECK(cfg.transaction_bounds.average_max == 7);
    CHECK(cfg.trf_coefficients == AffineCoefficients{0.6, 0.001});
    CHECK(cfg.erf_coefficients == AffineCoefficients{1.4, -0.03});
    CHECK(cfg.urf_coefficients == AffineCoefficients{1.0, 0.02});
    CHECK(cfg.theta_mbco == 20.0);
    CHECK(cfg.theta_34 == 10.0);
    CHECK(cfg.theta_12 == 25.0);
    CHECK(cfg.effort_rate_hours_per_point == 0.05);
    CHECK(cfg.ucp_hours_per_point == 20.0);
    CHECK(cfg.profile_name == "paper-literal");
    CHECK(cfg.full_evaluation == false);
    CHECK_NOTHROW(cfg.validate());

    // Default weight tables mirror the source catalogs.
    CHECK(cfg.trf_weights.weight({FactorFamily::Technical, 1}) == 2.0);
    CHECK(cfg.trf_weights.weight({FactorFamily::Technical, 6}) == 0.5);
    CHECK(cfg.erf_weights.weight({FactorFamily::Environmental, 7}) == -1.0);
    CHECK(cfg.urf_weights.weight({FactorFamily::Unexpected, 3}) == 1.0);
}

TEST_CASE("profiles pin the technical slope") {
    MethodConfig cfg;
    cfg.apply_profile("karner-classic");
    CHECK(cfg.trf_coefficients.slope == 0.01);
    CHECK(cfg.profile_name == "karner-classic");
    cfg.apply_profile("paper-literal");
    CHECK(cfg.trf_coefficients.slope == 0.001);
    CHECK_THROWS_AS(cfg.apply_profile("modern"), Error);
}

TEST_CASE("config validation rejects broken invariants") {
    MethodConfig cfg;
    cfg.class_weights.average = 0.5;  // not increasing
    CHECK_THROWS_AS(cfg.validate(), Error);

    cfg = MethodConfig{};
    cfg.theta_34 = 30.0;  // above theta_mbco
    CHECK_THROWS_AS(cfg.validate(), Error);

    cfg = MethodConfig{};
    cfg.effort_rate_hours_per_point = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);

    cfg = MethodConfig{};
    cfg.ucp_hours_per_point = -1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);

    cfg = MethodConfig{};
    cfg.urf_weights.set({FactorFamily::Unexpected, 2}, -0.5);
    CHECK_THROWS_AS(cfg.validate(), Error);

    cfg = MethodConfig{};
    cfg.transaction_bounds = {7, 3};
    CHECK_THROWS_AS(cfg.validate(), Error);

    cfg = MethodConfig{};
    cfg.profile_name = "unknown";
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("config errors carry the offending field") {
    MethodConfig cfg;
    cfg.urf_weights.set({FactorFamily::Unexpected, 4}, -1.0);
    try {
        cfg.validate();
        FAIL("expected a config error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        CHECK(e.path() == "URF4");
    }
}

TEST_CASE("function spec validation") {
    BusinessFunctionSpec fn;
    fn.id = "F1";
    fn.processes.push_back({"p1", 3});
    CHECK_NOTHROW(validate_function_spec(fn));

    SUBCASE("empty id") {
        fn.id = "";
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("no processes") {
        fn.processes.clear();
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("bad step count") {
        fn.processes[0].step_count = 0;
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("duplicate actor ids") {
        fn.humans = {{"h1", ComplexityClass::Simple}, {"h1", ComplexityClass::Complex}};
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("budget ordering") {
        fn.desired_rto_hours = 5.0;
        fn.desired_mao_hours = 2.0;
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("non-positive budget") {
        fn.desired_rto_hours = 0.0;
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("incomplete ratings") {
        fn.ratings.mark_all_unlisted();
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
    SUBCASE("rating out of range") {
        fn.ratings.set({FactorFamily::Unexpected, 1}, 6);
        CHECK_THROWS_AS(validate_function_spec(fn), Error);
    }
}
