// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 5-9 check the engine against independent
// recompositions (see support/oracle.hpp); criterion 10 drives the CLI
// binary through its exit-code contract.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/engine.hpp"
#include "core/json_io.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"
#include "core/ucp.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace bctp;
using namespace bctp::testing;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    const char* name;
    double budget_ms;
};

void run(const Criterion& criterion, const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    const auto end = std::chrono::steady_clock::now();
    const double elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    if (elapsed_ms > criterion.budget_ms) {
        std::ostringstream msg;
        msg << "runtime " << elapsed_ms << " ms exceeds budget " << criterion.budget_ms << " ms";
        problems.push_back(msg.str());
    }

    if (problems.empty()) {
        std::printf("PASS %2d %-28s (%.2f ms)\n", criterion.number, criterion.name, elapsed_ms);
    } else {
        ++g_failures;
        std::printf("FAIL %2d %-28s (%.2f ms)\n", criterion.number, criterion.name, elapsed_ms);
        for (const auto& p : problems) std::printf("       - %s\n", p.c_str());
    }
}

void expect(std::vector<std::string>& problems, bool condition, const std::string& message) {
    if (!condition) problems.push_back(message);
}

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

int run_cli(const std::string& args, const std::string& stdout_path) {
    const std::string cmd =
        std::string(BCTP_CLI_PATH) + " " + args + " > " + stdout_path + " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    if (raw == -1 || !WIFEXITED(raw)) return -1;
    return WEXITSTATUS(raw);
}

// UBFRP 27 with all-zero ratings; ABFRP 22.68, RTE 1.134 h.
BusinessFunctionSpec worked_mbco_function() {
    BusinessFunctionSpec fn;
    fn.id = "F-mbco";
    fn.name = "payments";
    fn.humans = {{"h1", ComplexityClass::Simple}, {"h2", ComplexityClass::Complex}};
    fn.applications = {{"a1", ComplexityClass::Average}};
    for (int i = 0; i < 5; ++i) {
        fn.applications.push_back({"ax" + std::to_string(i), ComplexityClass::Complex});
    }
    fn.processes = {{"p1", 3}, {"p2", 4}, {"p3", 8}};
    return fn;
}

void criterion_level_constants(std::vector<std::string>& problems) {
    const std::pair<ImpactLevel, double> expected[] = {
        {ImpactLevel::L1, 2.0}, {ImpactLevel::L2, 24.0}, {ImpactLevel::L3, 72.0},
        {ImpactLevel::L4, 168.0}};
    for (const auto& [level, hours] : expected) {
        const auto bounds = level_bounds(level);
        expect(problems, bounds.mao_hours == hours,
               std::string(to_string(level)) + " mao != " + std::to_string(hours));
        expect(problems, bounds.rto_bound_hours == hours,
               std::string(to_string(level)) + " rto bound != " + std::to_string(hours));
    }
}

void criterion_classification_boundaries(std::vector<std::string>& problems) {
    const MethodConfig cfg;
    const std::pair<int, double> expected[] = {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2},
                                               {6, 2}, {7, 2}, {8, 3}, {9, 3}, {100, 3}};
    for (const auto& [count, weight] : expected) {
        const double use_case = unadjusted_use_case_weights({{"u", count}}, cfg);
        expect(problems, use_case == weight,
               "use case with " + std::to_string(count) + " transactions -> " + std::to_string(use_case));
        const double process = process_weights({{"p", count}}, cfg);
        expect(problems, process == weight,
               "process with " + std::to_string(count) + " steps -> " + std::to_string(process));
    }
}

void criterion_factor_intercepts(std::vector<std::string>& problems) {
    const MethodConfig cfg;
    const double tol = 1e-12;
    expect(problems, std::abs(technical_complexity_factor(UcpRatings{}, cfg) - 0.6) <= tol,
           "tcf at all-zero ratings != 0.6");
    expect(problems, std::abs(environmental_factor(UcpRatings{}, cfg) - 1.4) <= tol,
           "ef at all-zero ratings != 1.4");
    expect(problems, std::abs(technical_recovery_factor(FactorRatingSet{}, cfg) - 0.6) <= tol,
           "trf at all-zero ratings != 0.6");
    expect(problems, std::abs(environmental_recovery_factor(FactorRatingSet{}, cfg) - 1.4) <= tol,
           "erf at all-zero ratings != 1.4");
    expect(problems, std::abs(unexpected_recovery_factor(FactorRatingSet{}, cfg) - 1.0) <= tol,
           "urf at all-zero ratings != 1.0");
}

void criterion_worked_ucp_chain(std::vector<std::string>& problems) {
    const MethodConfig cfg;  // paper-literal profile by default
    UcpProject project;
    project.actors = {{"a1", ComplexityClass::Simple},
                      {"a2", ComplexityClass::Simple},
                      {"a3", ComplexityClass::Average},
                      {"a4", ComplexityClass::Complex}};
    project.use_cases = {{"u1", 3}, {"u2", 4}, {"u3", 8}};
    project.ratings = UcpRatings::uniform(5, 0);
    project.ratings.set_environmental(6, 5);  // EFactor 10

    const UcpBreakdown b = evaluate_ucp(project, cfg);
    const double tol = 1e-9;
    expect(problems, close(b.uaw, 7.0, tol), "uaw != 7");
    expect(problems, close(b.uucw, 6.0, tol), "uucw != 6");
    expect(problems, close(b.uucp, 13.0, tol), "uucp != 13");
    expect(problems, close(b.tcf, 0.675, tol), "tcf != 0.675");
    expect(problems, close(b.ef, 1.1, tol), "ef != 1.1");
    expect(problems, close(b.ucp, 9.6525, tol), "ucp != 9.6525");
    expect(problems, close(b.effort_hours, 193.05, tol), "effort != 193.05");
}

void criterion_pipeline_oracle(std::vector<std::string>& problems) {
    SplitMix64 rng(0x5eedULL);
    const double tol = 1e-9;
    for (int i = 0; i < 1000 && problems.size() < 5; ++i) {
        MethodConfig cfg;
        cfg.full_evaluation = (i % 3) == 0;
        const auto fn = random_function(rng, "F" + std::to_string(i));
        const auto ev = evaluate(fn, cfg);
        const auto expected = oracle_evaluate(fn, cfg);
        const std::string tag = fn.id + ": ";

        expect(problems, close(ev.actor_weights.uhw, expected.uhw, tol), tag + "uhw mismatch");
        expect(problems, close(ev.actor_weights.uapw, expected.uapw, tol), tag + "uapw mismatch");
        expect(problems, close(ev.actor_weights.tuaw, expected.tuaw, tol), tag + "tuaw mismatch");
        expect(problems, close(ev.ubpw, expected.ubpw, tol), tag + "ubpw mismatch");
        expect(problems, close(ev.ubfrp, expected.ubfrp, tol), tag + "ubfrp mismatch");
        expect(problems, ev.routing.in_mbco == expected.in_mbco, tag + "mbco mismatch");
        expect(problems, ev.routing.level == expected.level, tag + "level mismatch");
        expect(problems, ev.routing.exercise == expected.exercise, tag + "exercise mismatch");
        expect(problems, ev.compliance == expected.compliance, tag + "compliance mismatch");
        expect(problems, ev.abfrp.has_value() == expected.abfrp.has_value(), tag + "abfrp presence");
        if (ev.abfrp && expected.abfrp) {
            expect(problems, close(*ev.trf, *expected.trf, tol), tag + "trf mismatch");
            expect(problems, close(*ev.erf, *expected.erf, tol), tag + "erf mismatch");
            expect(problems, close(*ev.urf, *expected.urf, tol), tag + "urf mismatch");
            expect(problems, close(*ev.abfrp, *expected.abfrp, tol), tag + "abfrp mismatch");
            expect(problems, close(*ev.rte_hours, *expected.rte_hours, tol), tag + "rte mismatch");
        }
        expect(problems, close(ev.budget_rto_hours, expected.budget_rto_hours, tol),
               tag + "rto budget mismatch");
        expect(problems, close(ev.budget_mao_hours, expected.budget_mao_hours, tol),
               tag + "mao budget mismatch");
    }
}

// A rating's influence on ABFRP carries the sign of weight * family slope.
// With default coefficients that is nonnegative for every technical and
// unexpected factor and for ERF7 (listed weight -1, slope -0.03), and
// negative for the positive-weight environmental factors.
void criterion_monotonicity(std::vector<std::string>& problems) {
    SplitMix64 rng(0xa0b0ULL);
    MethodConfig cfg;
    cfg.full_evaluation = true;
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto fn = random_function(rng, "F" + std::to_string(i));
        const auto base = evaluate(fn, cfg);

        BusinessFunctionSpec grown = fn;
        if (rng.range(0, 1) == 0) {
            grown.humans.push_back({"extra-h", random_class(rng)});
        } else {
            grown.processes.push_back({"extra-p", rng.range(1, 20)});
        }
        if (evaluate(grown, cfg).ubfrp < base.ubfrp) ++violations;

        // Nonnegative effective weight: technical, unexpected, or ERF7.
        const FactorId erf7{FactorFamily::Environmental, 7};
        FactorId up = erf7;
        switch (rng.range(0, 2)) {
            case 0: up = {FactorFamily::Technical, rng.range(1, kTechnicalFactorCount)}; break;
            case 1: up = {FactorFamily::Unexpected, rng.range(1, kUnexpectedFactorCount)}; break;
            default: break;  // ERF7 itself
        }
        if (fn.ratings.rating(up) < kRatingMax) {
            BusinessFunctionSpec bumped = fn;
            bumped.ratings.set(up, fn.ratings.rating(up) + 1);
            if (*evaluate(bumped, cfg).abfrp < *base.abfrp - 1e-12) ++violations;
        }

        // Negative effective weight: any other environmental factor.
        FactorId down{FactorFamily::Environmental, rng.range(1, kEnvironmentalFactorCount - 1)};
        if (down.index >= 7) down.index = 8;
        if (fn.ratings.rating(down) < kRatingMax) {
            BusinessFunctionSpec eased = fn;
            eased.ratings.set(down, fn.ratings.rating(down) + 1);
            if (*evaluate(eased, cfg).abfrp > *base.abfrp + 1e-12) ++violations;
        }
    }
    expect(problems, violations == 0, std::to_string(violations) + " monotonicity violations");
}

void criterion_routing_consistency(std::vector<std::string>& problems) {
    SplitMix64 rng(0x707eULL);
    const MethodConfig cfg;
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto ev = evaluate(random_function(rng, "F" + std::to_string(i)), cfg);
        const bool urgent =
            ev.routing.level == ImpactLevel::L1 || ev.routing.level == ImpactLevel::L2;
        const bool complex_exercise = ev.routing.exercise == ExerciseCategory::Complex;
        if (ev.routing.in_mbco != urgent) ++violations;
        if (ev.routing.in_mbco != complex_exercise) ++violations;
        if (ev.routing.level == ImpactLevel::L3 && ev.routing.exercise != ExerciseCategory::Medium) {
            ++violations;
        }
        if (ev.routing.level == ImpactLevel::L4 &&
            ev.routing.exercise != ExerciseCategory::Tabletop) {
            ++violations;
        }
    }
    expect(problems, violations == 0, std::to_string(violations) + " routing violations");
}

void criterion_identity_product(std::vector<std::string>& problems) {
    SplitMix64 rng(0x1dULL);
    MethodConfig cfg;
    cfg.full_evaluation = true;
    for (int i = 0; i < 100; ++i) {
        auto fn = random_function(rng, "F" + std::to_string(i));
        for (const auto id : all_factor_ids()) fn.ratings.set(id, 0);
        const auto ev = evaluate(fn, cfg);
        const double expected = ev.ubfrp * 0.84;
        if (std::abs(*ev.abfrp - expected) > 1e-12 * std::max(1.0, std::abs(expected))) {
            problems.push_back(fn.id + ": abfrp " + std::to_string(*ev.abfrp) + " != ubfrp*0.84");
        }
    }
}

void criterion_simulation_oracle(std::vector<std::string>& problems) {
    auto fn = worked_mbco_function();
    fn.desired_rto_hours = 1.5;
    fn.desired_mao_hours = 2.0;
    const MethodConfig cfg;

    // Exact probability by exhaustive enumeration of all 6^6 rating
    // combinations, evaluated through the independent oracle.
    long meets = 0;
    long total = 0;
    BusinessFunctionSpec probe = fn;
    int ratings[kUnexpectedFactorCount] = {0, 0, 0, 0, 0, 0};
    while (true) {
        for (int slot = 0; slot < kUnexpectedFactorCount; ++slot) {
            probe.ratings.set({FactorFamily::Unexpected, slot + 1}, ratings[slot]);
        }
        const auto oracle = oracle_evaluate(probe, cfg);
        if (oracle.compliance == Compliance::MeetsRto) ++meets;
        ++total;

        int slot = 0;
        while (slot < kUnexpectedFactorCount && ratings[slot] == kRatingMax) {
            ratings[slot] = 0;
            ++slot;
        }
        if (slot == kUnexpectedFactorCount) break;
        ++ratings[slot];
    }
    expect(problems, total == 46656, "enumeration covered " + std::to_string(total) + " != 46656");
    const double exact = static_cast<double>(meets) / static_cast<double>(total);
    expect(problems, exact > 0.0 && exact < 1.0,
           "exact probability is degenerate: " + std::to_string(exact));

    const auto summary = simulate_urf(fn, cfg, 10000, 20240615, full_urf_ranges());
    expect(problems, std::abs(summary.prob_meets_rto - exact) <= 0.02,
           "sampled " + std::to_string(summary.prob_meets_rto) + " vs exact " +
               std::to_string(exact) + " differs by more than 0.02");

    // Degenerate ranges reproduce the point evaluation exactly.
    const auto point = evaluate(fn, cfg);
    const auto pinned = simulate_urf(fn, cfg, 777, 3, degenerate_urf_ranges(fn.ratings));
    expect(problems, pinned.rte_mean == *point.rte_hours, "degenerate mean != point rte");
    expect(problems, pinned.rte_p95 == *point.rte_hours, "degenerate p95 != point rte");
    expect(problems, pinned.prob_meets_rto == 1.0 || pinned.prob_meets_rto == 0.0,
           "degenerate probability not 0 or 1");

    // Bit-identical summary for the same seed.
    const auto again = simulate_urf(fn, cfg, 10000, 20240615, full_urf_ranges());
    expect(problems, again == summary, "same seed did not reproduce the summary bit-for-bit");
}

void criterion_round_trips(std::vector<std::string>& problems) {
    const std::string data_dir = BCTP_TEST_DATA_DIR;

    // Machine render -> parse -> render is byte-identical on the golden
    // 10-function portfolio.
    const PortfolioFile golden = parse_portfolio(read_file(data_dir + "/golden_portfolio.json"));
    expect(problems, golden.functions.size() == 10,
           "golden portfolio has " + std::to_string(golden.functions.size()) + " functions");
    const MethodConfig cfg;
    const auto findings = validate_portfolio(golden.functions, cfg);
    expect(problems, findings.empty(),
           "golden portfolio has " + std::to_string(findings.size()) + " findings");
    const auto report = build_portfolio_report(golden.functions, cfg);
    const std::string machine = render(report, RenderFormat::Machine);
    const auto reparsed = parse_report(machine);
    expect(problems, render(reparsed, RenderFormat::Machine) == machine,
           "machine render -> parse -> render is not byte-identical");

    // CLI exit-code contract on the canned inputs.
    const std::string out_a = "acceptance_cli_a.out";
    const std::string out_b = "acceptance_cli_b.out";
    const int ok = run_cli("evaluate -i " + data_dir + "/valid_portfolio.json", out_a);
    expect(problems, ok == 0, "valid portfolio exited " + std::to_string(ok) + ", want 0");
    const int dup = run_cli("evaluate -i " + data_dir + "/duplicate_id_portfolio.json", out_b);
    expect(problems, dup == 1, "duplicate-id portfolio exited " + std::to_string(dup) + ", want 1");
    const int bad = run_cli("evaluate -i " + data_dir + "/malformed_portfolio.json", out_b);
    expect(problems, bad == 2, "malformed portfolio exited " + std::to_string(bad) + ", want 2");

    // Re-running the same command is byte-identical.
    const int rerun_a = run_cli("evaluate -i " + data_dir + "/golden_portfolio.json --format machine", out_a);
    const int rerun_b = run_cli("evaluate -i " + data_dir + "/golden_portfolio.json --format machine", out_b);
    expect(problems, rerun_a == 0 && rerun_b == 0, "golden evaluate did not exit 0");
    expect(problems, read_file(out_a) == read_file(out_b), "identical commands differed in output");
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());
}

}  // namespace

int main() {
    run({1, "level-constants", 1.0}, criterion_level_constants);
    run({2, "classification-boundaries", 1.0}, criterion_classification_boundaries);
    run({3, "factor-intercepts", 1.0}, criterion_factor_intercepts);
    run({4, "worked-ucp-chain", 1.0}, criterion_worked_ucp_chain);
    run({5, "pipeline-oracle", 1000.0}, criterion_pipeline_oracle);
    run({6, "monotonicity", 1000.0}, criterion_monotonicity);
    run({7, "routing-consistency", 1000.0}, criterion_routing_consistency);
    run({8, "identity-product", 1000.0}, criterion_identity_product);
    run({9, "simulation-oracle", 5000.0}, criterion_simulation_oracle);
    run({10, "round-trips", 5000.0}, criterion_round_trips);

    if (g_failures > 0) {
        std::printf("%d of 10 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
