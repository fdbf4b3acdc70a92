#include "bctp/bctp.h"

#include <cstring>
#include <new>
#include <string>

#include "core/analysis.hpp"
#include "core/engine.hpp"
#include "core/json_io.hpp"
#include "core/report.hpp"

using namespace bctp;

struct bctp_config {
    ConfigDocument doc;
};

struct bctp_portfolio {
    PortfolioFile file;
};

struct bctp_report {
    PortfolioReport report;
};

namespace {

thread_local std::string g_last_error;

bctp_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return BCTP_E_PARSE;
        case ErrorKind::Config: return BCTP_E_CONFIG;
        case ErrorKind::Validation: return BCTP_E_VALIDATION;
        case ErrorKind::NotFound: return BCTP_E_NOT_FOUND;
        case ErrorKind::Evaluation: return BCTP_E_EVALUATION;
        case ErrorKind::Internal: return BCTP_E_INTERNAL;
    }
    return BCTP_E_INTERNAL;
}

bctp_status fail(bctp_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

bctp_status fail_argument(const char* message) { return fail(BCTP_E_ARGUMENT, message); }

// Runs fn, translating exceptions into status codes and clearing the
// thread-local error on success.
template <typename Fn>
bctp_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return BCTP_OK;
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(BCTP_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BCTP_E_INTERNAL, e.what());
    } catch (...) {
        return fail(BCTP_E_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const BusinessFunctionSpec& find_function(const PortfolioFile& file, const char* function_id) {
    for (const auto& fn : file.functions) {
        if (fn.id == function_id) return fn;
    }
    raise(ErrorKind::NotFound, function_id, "unknown function id");
}

}  // namespace

extern "C" {

const char* bctp_version(void) { return "1.0.0"; }

const char* bctp_status_name(bctp_status status) {
    switch (status) {
        case BCTP_OK: return "ok";
        case BCTP_E_ARGUMENT: return "argument";
        case BCTP_E_PARSE: return "parse";
        case BCTP_E_CONFIG: return "config";
        case BCTP_E_VALIDATION: return "validation";
        case BCTP_E_NOT_FOUND: return "not-found";
        case BCTP_E_EVALUATION: return "evaluation";
        case BCTP_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* bctp_last_error(void) { return g_last_error.c_str(); }

void bctp_string_free(char* text) { delete[] text; }

bctp_status bctp_config_create(bctp_config** out) {
    if (out == nullptr) return fail_argument("out is null");
    return guarded([&] { *out = new bctp_config{}; });
}

bctp_status bctp_config_parse(const char* json_text, bctp_config** out) {
    if (json_text == nullptr || out == nullptr) return fail_argument("null argument");
    return guarded([&] { *out = new bctp_config{parse_config_document(json_text)}; });
}

bctp_status bctp_config_apply_profile(bctp_config* cfg, const char* profile_name) {
    if (cfg == nullptr || profile_name == nullptr) return fail_argument("null argument");
    return guarded([&] { cfg->doc.config.apply_profile(profile_name); });
}

bctp_status bctp_config_set_full_evaluation(bctp_config* cfg, int enabled) {
    if (cfg == nullptr) return fail_argument("cfg is null");
    return guarded([&] { cfg->doc.config.full_evaluation = enabled != 0; });
}

bctp_status bctp_config_fingerprint(const bctp_config* cfg, char** out_hex) {
    if (cfg == nullptr || out_hex == nullptr) return fail_argument("null argument");
    return guarded([&] { *out_hex = copy_string(config_fingerprint(cfg->doc.config)); });
}

void bctp_config_free(bctp_config* cfg) { delete cfg; }

bctp_status bctp_portfolio_parse(const char* json_text, bctp_portfolio** out) {
    if (json_text == nullptr || out == nullptr) return fail_argument("null argument");
    return guarded([&] { *out = new bctp_portfolio{parse_portfolio(json_text)}; });
}

bctp_status bctp_portfolio_merge_config(const bctp_portfolio* portfolio, const bctp_config* base,
                                        bctp_config** out) {
    if (portfolio == nullptr || base == nullptr || out == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] { *out = new bctp_config{effective_config(base->doc, portfolio->file)}; });
}

size_t bctp_portfolio_function_count(const bctp_portfolio* portfolio) {
    return portfolio == nullptr ? 0 : portfolio->file.functions.size();
}

void bctp_portfolio_free(bctp_portfolio* portfolio) { delete portfolio; }

bctp_status bctp_validate(const bctp_portfolio* portfolio, const bctp_config* cfg,
                          const char* format, char** out_doc, size_t* out_finding_count) {
    if (portfolio == nullptr || cfg == nullptr || format == nullptr || out_doc == nullptr ||
        out_finding_count == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] {
        const auto fmt = parse_render_format(format);
        const auto findings = validate_portfolio(portfolio->file.functions, cfg->doc.config);
        *out_doc = copy_string(render_findings(findings, fmt));
        *out_finding_count = findings.size();
    });
}

bctp_status bctp_evaluate(const bctp_portfolio* portfolio, const bctp_config* cfg,
                          bctp_report** out) {
    if (portfolio == nullptr || cfg == nullptr || out == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] {
        *out = new bctp_report{build_portfolio_report(portfolio->file.functions, cfg->doc.config)};
    });
}

bctp_status bctp_report_render(const bctp_report* report, const char* format, char** out_doc) {
    if (report == nullptr || format == nullptr || out_doc == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] { *out_doc = copy_string(render(report->report, parse_render_format(format))); });
}

void bctp_report_free(bctp_report* report) { delete report; }

bctp_status bctp_whatif(const bctp_portfolio* portfolio, const bctp_config* cfg,
                        const char* function_id, const char* factor_id, int delta,
                        const char* format, char** out_doc) {
    if (portfolio == nullptr || cfg == nullptr || function_id == nullptr || factor_id == nullptr ||
        format == nullptr || out_doc == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] {
        const auto fmt = parse_render_format(format);
        const auto& fn = find_function(portfolio->file, function_id);
        const auto factor = parse_factor_id(factor_id);
        if (!factor) raise(ErrorKind::NotFound, factor_id, "unknown factor id");
        *out_doc = copy_string(render_whatif(whatif(fn, cfg->doc.config, *factor, delta), fmt));
    });
}

bctp_status bctp_simulate(const bctp_portfolio* portfolio, const bctp_config* cfg,
                          const char* function_id, uint32_t samples, uint64_t seed,
                          const char* format, char** out_doc) {
    if (portfolio == nullptr || cfg == nullptr || function_id == nullptr || format == nullptr ||
        out_doc == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] {
        const auto fmt = parse_render_format(format);
        const auto& fn = find_function(portfolio->file, function_id);
        const auto ranges = resolve_urf_ranges(cfg->doc, fn.ratings);
        *out_doc = copy_string(
            render_summary(simulate_urf(fn, cfg->doc.config, samples, seed, ranges), fmt));
    });
}

bctp_status bctp_ucp_evaluate(const char* project_json, const bctp_config* cfg, const char* format,
                              char** out_doc) {
    if (project_json == nullptr || cfg == nullptr || format == nullptr || out_doc == nullptr) {
        return fail_argument("null argument");
    }
    return guarded([&] {
        const auto fmt = parse_render_format(format);
        const UcpProject project = parse_ucp_project(project_json);
        *out_doc = copy_string(render_ucp(evaluate_ucp(project, cfg->doc.config), fmt));
    });
}

}  // extern "C"
