// bctp command-line front end. Talks to the engine exclusively through the
// public C API in bctp/bctp.h.
//
// Exit codes: 0 success, 1 domain findings or unknown references,
// 2 parse/config/usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bctp/bctp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

int exit_code_for(bctp_status status) {
    switch (status) {
        case BCTP_OK:
            return kExitOk;
        case BCTP_E_VALIDATION:
        case BCTP_E_NOT_FOUND:
        case BCTP_E_EVALUATION:
            return kExitDomain;
        case BCTP_E_ARGUMENT:
        case BCTP_E_PARSE:
        case BCTP_E_CONFIG:
        case BCTP_E_INTERNAL:
        default:
            return kExitParse;
    }
}

struct ConfigDeleter {
    void operator()(bctp_config* p) const { bctp_config_free(p); }
};
struct PortfolioDeleter {
    void operator()(bctp_portfolio* p) const { bctp_portfolio_free(p); }
};
struct ReportDeleter {
    void operator()(bctp_report* p) const { bctp_report_free(p); }
};

using ConfigPtr = std::unique_ptr<bctp_config, ConfigDeleter>;
using PortfolioPtr = std::unique_ptr<bctp_portfolio, PortfolioDeleter>;
using ReportPtr = std::unique_ptr<bctp_report, ReportDeleter>;

// Owned string coming back from the C API.
class ApiString {
public:
    ~ApiString() { bctp_string_free(text_); }
    char** out() { return &text_; }
    const char* get() const { return text_ == nullptr ? "" : text_; }

private:
    char* text_ = nullptr;
};

[[noreturn]] void die(const std::string& context, bctp_status status) {
    std::cerr << "bctp: error: " << context << ": " << bctp_last_error() << '\n';
    std::exit(exit_code_for(status));
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "bctp: error: cannot read " << path << '\n';
        std::exit(kExitParse);
    }
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

struct CommonOptions {
    std::string input_path;
    std::string config_path;
    std::string format = "text";
    std::string profile;
    bool full_eval = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_full_eval = true) {
    cmd->add_option("-i,--input", opts.input_path, "input file")->required();
    cmd->add_option("-c,--config", opts.config_path, "method config file");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    cmd->add_option("--profile", opts.profile, "coefficient profile")
        ->check(CLI::IsMember({"paper-literal", "karner-classic"}));
    if (with_full_eval) {
        cmd->add_flag("--full-eval", opts.full_eval,
                      "run the adjusted pipeline for functions outside the MBCO too");
    }
}

// Builds the effective config: defaults <- config file <- portfolio
// overrides <- command-line flags.
ConfigPtr build_config(const CommonOptions& opts, const bctp_portfolio* portfolio) {
    bctp_config* raw = nullptr;
    bctp_status status;
    if (opts.config_path.empty()) {
        status = bctp_config_create(&raw);
        if (status != BCTP_OK) die("config", status);
    } else {
        status = bctp_config_parse(read_file(opts.config_path).c_str(), &raw);
        if (status != BCTP_OK) die(opts.config_path, status);
    }
    ConfigPtr cfg(raw);

    if (portfolio != nullptr) {
        bctp_config* merged = nullptr;
        status = bctp_portfolio_merge_config(portfolio, cfg.get(), &merged);
        if (status != BCTP_OK) die(opts.input_path, status);
        cfg.reset(merged);
    }
    if (!opts.profile.empty()) {
        status = bctp_config_apply_profile(cfg.get(), opts.profile.c_str());
        if (status != BCTP_OK) die("--profile", status);
    }
    if (opts.full_eval) {
        status = bctp_config_set_full_evaluation(cfg.get(), 1);
        if (status != BCTP_OK) die("--full-eval", status);
    }
    return cfg;
}

PortfolioPtr load_portfolio(const CommonOptions& opts) {
    bctp_portfolio* raw = nullptr;
    const bctp_status status = bctp_portfolio_parse(read_file(opts.input_path).c_str(), &raw);
    if (status != BCTP_OK) die(opts.input_path, status);
    return PortfolioPtr(raw);
}

// Prints findings (if any) and returns the exit code for them.
int run_validation(const bctp_portfolio* portfolio, const bctp_config* cfg,
                   const CommonOptions& opts, bool always_print) {
    ApiString doc;
    size_t count = 0;
    const bctp_status status =
        bctp_validate(portfolio, cfg, opts.format.c_str(), doc.out(), &count);
    if (status != BCTP_OK) die(opts.input_path, status);
    if (count > 0 || always_print) std::cout << doc.get();
    return count > 0 ? kExitDomain : kExitOk;
}

int cmd_evaluate(const CommonOptions& opts) {
    const PortfolioPtr portfolio = load_portfolio(opts);
    const ConfigPtr cfg = build_config(opts, portfolio.get());

    const int validation = run_validation(portfolio.get(), cfg.get(), opts, false);
    if (validation != kExitOk) return validation;

    bctp_report* raw = nullptr;
    bctp_status status = bctp_evaluate(portfolio.get(), cfg.get(), &raw);
    if (status != BCTP_OK) die(opts.input_path, status);
    const ReportPtr report(raw);

    ApiString doc;
    status = bctp_report_render(report.get(), opts.format.c_str(), doc.out());
    if (status != BCTP_OK) die(opts.input_path, status);
    std::cout << doc.get();
    return kExitOk;
}

int cmd_validate(const CommonOptions& opts) {
    const PortfolioPtr portfolio = load_portfolio(opts);
    const ConfigPtr cfg = build_config(opts, portfolio.get());
    return run_validation(portfolio.get(), cfg.get(), opts, true);
}

int cmd_whatif(const CommonOptions& opts, const std::string& function_id,
               const std::string& factor_id, int delta) {
    const PortfolioPtr portfolio = load_portfolio(opts);
    const ConfigPtr cfg = build_config(opts, portfolio.get());

    ApiString doc;
    const bctp_status status = bctp_whatif(portfolio.get(), cfg.get(), function_id.c_str(),
                                           factor_id.c_str(), delta, opts.format.c_str(), doc.out());
    if (status != BCTP_OK) die(opts.input_path, status);
    std::cout << doc.get();
    return kExitOk;
}

int cmd_simulate(const CommonOptions& opts, const std::string& function_id, std::uint32_t samples,
                 std::uint64_t seed) {
    const PortfolioPtr portfolio = load_portfolio(opts);
    const ConfigPtr cfg = build_config(opts, portfolio.get());

    ApiString doc;
    const bctp_status status = bctp_simulate(portfolio.get(), cfg.get(), function_id.c_str(),
                                             samples, seed, opts.format.c_str(), doc.out());
    if (status != BCTP_OK) die(opts.input_path, status);
    std::cout << doc.get();
    return kExitOk;
}

int cmd_ucp(const CommonOptions& opts) {
    const ConfigPtr cfg = build_config(opts, nullptr);
    ApiString doc;
    const bctp_status status =
        bctp_ucp_evaluate(read_file(opts.input_path).c_str(), cfg.get(), opts.format.c_str(), doc.out());
    if (status != BCTP_OK) die(opts.input_path, status);
    std::cout << doc.get();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"business-continuity testing points engine"};
    app.set_version_flag("--version", bctp_version());
    app.require_subcommand(1);

    CommonOptions opts;

    CLI::App* evaluate = app.add_subcommand("evaluate", "score a portfolio and render the BIA report");
    add_common_flags(evaluate, opts);

    CLI::App* validate = app.add_subcommand("validate", "check a portfolio and list findings");
    add_common_flags(validate, opts);

    std::string function_id;
    std::string factor_id;
    int delta = 0;
    CLI::App* whatif = app.add_subcommand("whatif", "single-factor sensitivity on one function");
    add_common_flags(whatif, opts);
    whatif->add_option("--function", function_id, "function id")->required();
    whatif->add_option("--factor", factor_id, "factor id, e.g. URF3")->required();
    whatif->add_option("--delta", delta, "rating change (clamped to 0..5)")->required();

    std::uint32_t samples = 1000;
    std::uint64_t seed = 0;
    CLI::App* simulate = app.add_subcommand("simulate", "seeded scenario simulation on one function");
    add_common_flags(simulate, opts);
    simulate->add_option("--function", function_id, "function id")->required();
    simulate->add_option("--samples", samples, "number of draws")->capture_default_str();
    simulate->add_option("--seed", seed, "random seed")->capture_default_str();

    CLI::App* ucp = app.add_subcommand("ucp", "classic use-case-points baseline on a project file");
    add_common_flags(ucp, opts, /*with_full_eval=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return kExitParse;
    }

    if (evaluate->parsed()) return cmd_evaluate(opts);
    if (validate->parsed()) return cmd_validate(opts);
    if (whatif->parsed()) return cmd_whatif(opts, function_id, factor_id, delta);
    if (simulate->parsed()) return cmd_simulate(opts, function_id, samples, seed);
    if (ucp->parsed()) return cmd_ucp(opts);
    return kExitParse;
}
