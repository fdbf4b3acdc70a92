#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/analysis.hpp"
#include "core/config.hpp"
#include "core/model.hpp"
#include "core/report.hpp"
#include "core/ucp.hpp"

namespace bctp {

// A parsed config file: the method constants plus the optional simulation
// scenario section (per-factor rating ranges for URF draws).
struct ConfigDocument {
    MethodConfig config;
    std::vector<std::pair<FactorId, RatingRange>> urf_ranges;  // listed entries only

    bool operator==(const ConfigDocument&) const = default;
};

// A parsed portfolio file: functions plus optional embedded config
// overrides (applied over whatever base config the caller supplies).
struct PortfolioFile {
    std::optional<nlohmann::json> config_overrides;
    std::vector<BusinessFunctionSpec> functions;
};

// Parsers raise Error{Parse} with the path of the offending field, or
// Error{Config} when a value violates a config invariant. All config keys
// are optional; a "profile" key applies first so explicit keys in the same
// document can override what the profile pins.
ConfigDocument parse_config_document(const std::string& text);
void apply_config_layer(ConfigDocument& doc, const nlohmann::json& layer, const std::string& path);

PortfolioFile parse_portfolio(const std::string& text);

// Base config with the portfolio's embedded overrides applied on top.
ConfigDocument effective_config(ConfigDocument base, const PortfolioFile& portfolio);

// Scenario resolution: no listed ranges means explore the full 0..5 scale
// for every factor; a partial scenario pins unlisted factors at the
// function's current ratings.
UrfRangeMap resolve_urf_ranges(const ConfigDocument& doc, const FactorRatingSet& current);

UcpProject parse_ucp_project(const std::string& text);

nlohmann::json config_to_json(const MethodConfig& cfg);
nlohmann::json config_document_to_json(const ConfigDocument& doc);

// Stable 16-hex-digit FNV-1a digest of the canonical config serialization.
std::string config_fingerprint(const MethodConfig& cfg);

nlohmann::json report_to_json(const PortfolioReport& report);
PortfolioReport report_from_json(const nlohmann::json& j);

nlohmann::json findings_to_json(const std::vector<Finding>& findings);
nlohmann::json whatif_to_json(const WhatIfResult& result);
nlohmann::json summary_to_json(const SimulationSummary& summary);
nlohmann::json ucp_to_json(const UcpBreakdown& breakdown);

}  // namespace bctp
