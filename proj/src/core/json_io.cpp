#include "core/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

namespace bctp {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& message) {
    raise(ErrorKind::Parse, path, message);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string at_index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) parse_fail(path, "expected an object");
    return j;
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) parse_fail(path, "expected an array");
    return j;
}

const json* opt_member(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

const json& member(const json& obj, const char* key, const std::string& path) {
    const json* m = opt_member(obj, key);
    if (m == nullptr) parse_fail(join(path, key), "missing required field");
    return *m;
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) parse_fail(path, "expected a string");
    return j.get<std::string>();
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) parse_fail(path, "expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) parse_fail(path, "expected an integer");
    return j.get<int>();
}

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) parse_fail(path, "expected a boolean");
    return j.get<bool>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        bool found = false;
        for (const char* k : known) {
            if (key == k) {
                found = true;
                break;
            }
        }
        if (!found) parse_fail(join(path, key), "unknown field");
    }
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail("", "invalid JSON document");
    return j;
}

ComplexityClass as_complexity(const json& j, const std::string& path) {
    const auto parsed = parse_complexity(as_string(j, path));
    if (!parsed) parse_fail(path, "expected one of Simple/Basic, Average, Complex");
    return *parsed;
}

void apply_affine(AffineCoefficients& coeffs, const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"intercept", "slope"}, path);
    if (const json* v = opt_member(j, "intercept")) coeffs.intercept = as_number(*v, join(path, "intercept"));
    if (const json* v = opt_member(j, "slope")) coeffs.slope = as_number(*v, join(path, "slope"));
}

void apply_weight_table(FactorWeightTable& table, const json& j, const std::string& path) {
    require_object(j, path);
    for (const auto& [key, value] : j.items()) {
        const auto id = parse_factor_id(key);
        if (!id || id->family != table.family()) parse_fail(join(path, key), "unknown factor id");
        table.set(*id, as_number(value, join(path, key)));
    }
}

// -- portfolio ---------------------------------------------------------------

HumanActor parse_human(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"id", "responsibility"}, path);
    HumanActor actor;
    actor.id = as_string(member(j, "id", path), join(path, "id"));
    actor.responsibility = as_complexity(member(j, "responsibility", path), join(path, "responsibility"));
    return actor;
}

ApplicationActor parse_application(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"id", "task_complexity"}, path);
    ApplicationActor actor;
    actor.id = as_string(member(j, "id", path), join(path, "id"));
    actor.task_complexity =
        as_complexity(member(j, "task_complexity", path), join(path, "task_complexity"));
    return actor;
}

BusinessProcess parse_process(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"id", "step_count"}, path);
    BusinessProcess process;
    process.id = as_string(member(j, "id", path), join(path, "id"));
    process.step_count = as_int(member(j, "step_count", path), join(path, "step_count"));
    return process;
}

FactorRatingSet parse_ratings(const json& j, const std::string& path) {
    require_object(j, path);
    FactorRatingSet ratings;
    ratings.mark_all_unlisted();
    for (const auto& [key, value] : j.items()) {
        const auto id = parse_factor_id(key);
        if (!id) parse_fail(join(path, key), "unknown factor id");
        ratings.set(*id, as_int(value, join(path, key)));
    }
    return ratings;
}

BusinessFunctionSpec parse_function(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j,
                        {"id", "name", "humans", "applications", "processes", "ratings",
                         "desired_rto_hours", "desired_mao_hours"},
                        path);
    BusinessFunctionSpec fn;
    fn.id = as_string(member(j, "id", path), join(path, "id"));
    if (const json* v = opt_member(j, "name")) fn.name = as_string(*v, join(path, "name"));
    if (const json* v = opt_member(j, "humans")) {
        const auto& arr = require_array(*v, join(path, "humans"));
        for (std::size_t i = 0; i < arr.size(); ++i) {
            fn.humans.push_back(parse_human(arr[i], at_index(join(path, "humans"), i)));
        }
    }
    if (const json* v = opt_member(j, "applications")) {
        const auto& arr = require_array(*v, join(path, "applications"));
        for (std::size_t i = 0; i < arr.size(); ++i) {
            fn.applications.push_back(parse_application(arr[i], at_index(join(path, "applications"), i)));
        }
    }
    if (const json* v = opt_member(j, "processes")) {
        const auto& arr = require_array(*v, join(path, "processes"));
        for (std::size_t i = 0; i < arr.size(); ++i) {
            fn.processes.push_back(parse_process(arr[i], at_index(join(path, "processes"), i)));
        }
    }
    // Absent ratings mean "all factors rated 0"; a present map must be
    // complete, and validation reports what it left out.
    if (const json* v = opt_member(j, "ratings")) {
        fn.ratings = parse_ratings(*v, join(path, "ratings"));
    }
    if (const json* v = opt_member(j, "desired_rto_hours")) {
        fn.desired_rto_hours = as_number(*v, join(path, "desired_rto_hours"));
    }
    if (const json* v = opt_member(j, "desired_mao_hours")) {
        fn.desired_mao_hours = as_number(*v, join(path, "desired_mao_hours"));
    }
    return fn;
}

// -- ucp project -------------------------------------------------------------

UcpActor parse_ucp_actor(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"id", "class"}, path);
    UcpActor actor;
    actor.id = as_string(member(j, "id", path), join(path, "id"));
    const std::string cls = as_string(member(j, "class", path), join(path, "class"));
    const auto parsed = parse_complexity(cls);
    if (!parsed || cls == "Basic") {
        parse_fail(join(path, "class"), "expected one of Simple, Average, Complex");
    }
    actor.actor_class = *parsed;
    return actor;
}

UseCase parse_use_case(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"id", "transaction_count"}, path);
    UseCase uc;
    uc.id = as_string(member(j, "id", path), join(path, "id"));
    uc.transaction_count = as_int(member(j, "transaction_count", path), join(path, "transaction_count"));
    if (uc.transaction_count < 0) {
        parse_fail(join(path, "transaction_count"), "must be >= 0");
    }
    return uc;
}

// -- shared small serializers ------------------------------------------------

// "T7" -> 7 when prefix matches and 1 <= index <= max; full-match only.
std::optional<int> parse_indexed_key(std::string_view key, char prefix, int max) {
    if (key.size() < 2 || key[0] != prefix) return std::nullopt;
    const std::string_view digits = key.substr(1);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    if (index < 1 || index > max) return std::nullopt;
    return index;
}

void set_optional(json& obj, const char* key, const std::optional<double>& v) {
    if (v) obj[key] = *v;
}

std::optional<double> opt_number(const json& obj, const char* key, const std::string& path) {
    if (const json* v = opt_member(obj, key)) return as_number(*v, join(path, key));
    return std::nullopt;
}

}  // namespace

// -- config ------------------------------------------------------------------

void apply_config_layer(ConfigDocument& doc, const json& layer, const std::string& path) {
    require_object(layer, path);
    reject_unknown_keys(layer,
                        {"profile", "class_weights", "transaction_bounds", "trf_coefficients",
                         "erf_coefficients", "urf_coefficients", "trf_weights", "erf_weights",
                         "urf_weights", "theta_mbco", "theta_34", "theta_12",
                         "effort_rate_hours_per_point", "ucp_hours_per_point", "full_evaluation",
                         "urf_ranges"},
                        path);
    MethodConfig& cfg = doc.config;

    // Profile first; explicit keys below override what it pins.
    if (const json* v = opt_member(layer, "profile")) {
        cfg.apply_profile(as_string(*v, join(path, "profile")));
    }
    if (const json* v = opt_member(layer, "class_weights")) {
        const std::string p = join(path, "class_weights");
        require_object(*v, p);
        reject_unknown_keys(*v, {"Simple", "Average", "Complex"}, p);
        if (const json* w = opt_member(*v, "Simple")) cfg.class_weights.simple = as_number(*w, join(p, "Simple"));
        if (const json* w = opt_member(*v, "Average")) cfg.class_weights.average = as_number(*w, join(p, "Average"));
        if (const json* w = opt_member(*v, "Complex")) cfg.class_weights.complex_ = as_number(*w, join(p, "Complex"));
    }
    if (const json* v = opt_member(layer, "transaction_bounds")) {
        const std::string p = join(path, "transaction_bounds");
        require_object(*v, p);
        reject_unknown_keys(*v, {"simple_max", "average_max"}, p);
        if (const json* w = opt_member(*v, "simple_max")) cfg.transaction_bounds.simple_max = as_int(*w, join(p, "simple_max"));
        if (const json* w = opt_member(*v, "average_max")) cfg.transaction_bounds.average_max = as_int(*w, join(p, "average_max"));
    }
    if (const json* v = opt_member(layer, "trf_coefficients")) apply_affine(cfg.trf_coefficients, *v, join(path, "trf_coefficients"));
    if (const json* v = opt_member(layer, "erf_coefficients")) apply_affine(cfg.erf_coefficients, *v, join(path, "erf_coefficients"));
    if (const json* v = opt_member(layer, "urf_coefficients")) apply_affine(cfg.urf_coefficients, *v, join(path, "urf_coefficients"));
    if (const json* v = opt_member(layer, "trf_weights")) apply_weight_table(cfg.trf_weights, *v, join(path, "trf_weights"));
    if (const json* v = opt_member(layer, "erf_weights")) apply_weight_table(cfg.erf_weights, *v, join(path, "erf_weights"));
    if (const json* v = opt_member(layer, "urf_weights")) apply_weight_table(cfg.urf_weights, *v, join(path, "urf_weights"));
    if (const json* v = opt_member(layer, "theta_mbco")) cfg.theta_mbco = as_number(*v, join(path, "theta_mbco"));
    if (const json* v = opt_member(layer, "theta_34")) cfg.theta_34 = as_number(*v, join(path, "theta_34"));
    if (const json* v = opt_member(layer, "theta_12")) cfg.theta_12 = as_number(*v, join(path, "theta_12"));
    if (const json* v = opt_member(layer, "effort_rate_hours_per_point")) {
        cfg.effort_rate_hours_per_point = as_number(*v, join(path, "effort_rate_hours_per_point"));
    }
    if (const json* v = opt_member(layer, "ucp_hours_per_point")) {
        cfg.ucp_hours_per_point = as_number(*v, join(path, "ucp_hours_per_point"));
    }
    if (const json* v = opt_member(layer, "full_evaluation")) {
        cfg.full_evaluation = as_bool(*v, join(path, "full_evaluation"));
    }
    if (const json* v = opt_member(layer, "urf_ranges")) {
        const std::string p = join(path, "urf_ranges");
        require_object(*v, p);
        for (const auto& [key, value] : v->items()) {
            const auto id = parse_factor_id(key);
            if (!id || id->family != FactorFamily::Unexpected) parse_fail(join(p, key), "unknown factor id");
            const auto& arr = require_array(value, join(p, key));
            if (arr.size() != 2) parse_fail(join(p, key), "expected [lo, hi]");
            RatingRange range;
            range.lo = as_int(arr[0], join(p, key) + "[0]");
            range.hi = as_int(arr[1], join(p, key) + "[1]");
            bool replaced = false;
            for (auto& entry : doc.urf_ranges) {
                if (entry.first == *id) {
                    entry.second = range;
                    replaced = true;
                    break;
                }
            }
            if (!replaced) doc.urf_ranges.emplace_back(*id, range);
        }
    }
}

ConfigDocument parse_config_document(const std::string& text) {
    ConfigDocument doc;
    apply_config_layer(doc, parse_text(text), "");
    doc.config.validate();
    return doc;
}

PortfolioFile parse_portfolio(const std::string& text) {
    const json j = parse_text(text);
    require_object(j, "");
    reject_unknown_keys(j, {"config", "functions"}, "");
    PortfolioFile file;
    if (const json* v = opt_member(j, "config")) {
        require_object(*v, "config");
        file.config_overrides = *v;
    }
    const auto& functions = require_array(member(j, "functions", ""), "functions");
    for (std::size_t i = 0; i < functions.size(); ++i) {
        file.functions.push_back(parse_function(functions[i], at_index("functions", i)));
    }
    return file;
}

ConfigDocument effective_config(ConfigDocument base, const PortfolioFile& portfolio) {
    if (portfolio.config_overrides) {
        apply_config_layer(base, *portfolio.config_overrides, "config");
        base.config.validate();
    }
    return base;
}

UrfRangeMap resolve_urf_ranges(const ConfigDocument& doc, const FactorRatingSet& current) {
    if (doc.urf_ranges.empty()) return full_urf_ranges();
    UrfRangeMap ranges = degenerate_urf_ranges(current);
    for (const auto& [id, range] : doc.urf_ranges) {
        ranges[static_cast<std::size_t>(id.index - 1)] = range;
    }
    return ranges;
}

UcpProject parse_ucp_project(const std::string& text) {
    const json j = parse_text(text);
    require_object(j, "");
    reject_unknown_keys(j, {"name", "actors", "use_cases", "technical_ratings", "environmental_ratings"}, "");
    UcpProject project;
    if (const json* v = opt_member(j, "name")) project.name = as_string(*v, "name");
    if (const json* v = opt_member(j, "actors")) {
        const auto& arr = require_array(*v, "actors");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            project.actors.push_back(parse_ucp_actor(arr[i], at_index("actors", i)));
        }
    }
    if (const json* v = opt_member(j, "use_cases")) {
        const auto& arr = require_array(*v, "use_cases");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            project.use_cases.push_back(parse_use_case(arr[i], at_index("use_cases", i)));
        }
    }
    const bool any_listed = opt_member(j, "technical_ratings") || opt_member(j, "environmental_ratings");
    if (any_listed) {
        project.ratings.mark_all_unlisted();
        if (const json* v = opt_member(j, "technical_ratings")) {
            require_object(*v, "technical_ratings");
            for (const auto& [key, value] : v->items()) {
                const auto index = parse_indexed_key(key, 'T', kUcpTechnicalCount);
                if (!index) parse_fail(join("technical_ratings", key), "unknown factor key");
                project.ratings.set_technical(*index, as_int(value, join("technical_ratings", key)));
            }
        }
        if (const json* v = opt_member(j, "environmental_ratings")) {
            require_object(*v, "environmental_ratings");
            for (const auto& [key, value] : v->items()) {
                const auto index = parse_indexed_key(key, 'F', kUcpEnvironmentalCount);
                if (!index) parse_fail(join("environmental_ratings", key), "unknown factor key");
                project.ratings.set_environmental(*index, as_int(value, join("environmental_ratings", key)));
            }
        }
    }
    return project;
}

// -- serialization -----------------------------------------------------------

json config_to_json(const MethodConfig& cfg) {
    json weights;
    for (const auto* table : {&cfg.trf_weights, &cfg.erf_weights, &cfg.urf_weights}) {
        json entry;
        for (int i = 1; i <= family_count(table->family()); ++i) {
            const FactorId id{table->family(), i};
            entry[to_string(id)] = table->weight(id);
        }
        weights[std::string(family_prefix(table->family()))] = std::move(entry);
    }
    return json{
        {"profile", cfg.profile_name},
        {"class_weights",
         {{"Simple", cfg.class_weights.simple},
          {"Average", cfg.class_weights.average},
          {"Complex", cfg.class_weights.complex_}}},
        {"transaction_bounds",
         {{"simple_max", cfg.transaction_bounds.simple_max},
          {"average_max", cfg.transaction_bounds.average_max}}},
        {"trf_coefficients", {{"intercept", cfg.trf_coefficients.intercept}, {"slope", cfg.trf_coefficients.slope}}},
        {"erf_coefficients", {{"intercept", cfg.erf_coefficients.intercept}, {"slope", cfg.erf_coefficients.slope}}},
        {"urf_coefficients", {{"intercept", cfg.urf_coefficients.intercept}, {"slope", cfg.urf_coefficients.slope}}},
        {"trf_weights", weights["TRF"]},
        {"erf_weights", weights["ERF"]},
        {"urf_weights", weights["URF"]},
        {"theta_mbco", cfg.theta_mbco},
        {"theta_34", cfg.theta_34},
        {"theta_12", cfg.theta_12},
        {"effort_rate_hours_per_point", cfg.effort_rate_hours_per_point},
        {"ucp_hours_per_point", cfg.ucp_hours_per_point},
        {"full_evaluation", cfg.full_evaluation},
    };
}

json config_document_to_json(const ConfigDocument& doc) {
    json j = config_to_json(doc.config);
    if (!doc.urf_ranges.empty()) {
        json ranges;
        for (const auto& [id, range] : doc.urf_ranges) {
            ranges[to_string(id)] = json::array({range.lo, range.hi});
        }
        j["urf_ranges"] = std::move(ranges);
    }
    return j;
}

std::string config_fingerprint(const MethodConfig& cfg) {
    const std::string canonical = config_to_json(cfg).dump();
    std::uint64_t hash = 0xcbf29ce484222325ull;  // FNV-1a 64
    for (const unsigned char c : canonical) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char out[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xF];
        hash >>= 4;
    }
    out[16] = '\0';
    return std::string(out);
}

json report_to_json(const PortfolioReport& report) {
    json records = json::array();
    for (const auto& r : report.records) {
        json rec{
            {"function_id", r.function_id},
            {"function_name", r.function_name},
            {"uhw", r.uhw},
            {"uapw", r.uapw},
            {"tuaw", r.tuaw},
            {"ubpw", r.ubpw},
            {"ubfrp", r.ubfrp},
            {"impact_level", std::string(to_string(r.impact_level))},
            {"exercise_category", std::string(to_string(r.exercise_category))},
            {"in_mbco", r.in_mbco},
            {"budget_rto_hours", r.budget_rto_hours},
            {"budget_mao_hours", r.budget_mao_hours},
            {"level_mao_hours", r.level_mao_hours},
            {"compliance", std::string(to_string(r.compliance))},
            {"reengineer_flag", r.reengineer_flag},
            {"config_fingerprint", r.config_fingerprint},
        };
        set_optional(rec, "trf", r.trf);
        set_optional(rec, "erf", r.erf);
        set_optional(rec, "urf", r.urf);
        set_optional(rec, "abfrp", r.abfrp);
        set_optional(rec, "rte_hours", r.rte_hours);
        set_optional(rec, "desired_rto_hours", r.desired_rto_hours);
        set_optional(rec, "desired_mao_hours", r.desired_mao_hours);
        records.push_back(std::move(rec));
    }

    const auto& t = report.totals;
    return json{
        {"records", std::move(records)},
        {"totals",
         {{"functions", report.records.size()},
          {"by_level", {{"L1", t.by_level[0]}, {"L2", t.by_level[1]}, {"L3", t.by_level[2]}, {"L4", t.by_level[3]}}},
          {"by_exercise",
           {{"Tabletop", t.by_exercise[0]}, {"Medium", t.by_exercise[1]}, {"Complex", t.by_exercise[2]}}},
          {"by_compliance",
           {{"MeetsRto", t.by_compliance[0]},
            {"MeetsMaoOnly", t.by_compliance[1]},
            {"Reengineer", t.by_compliance[2]},
            {"NotAssessed", t.by_compliance[3]}}}}},
    };
}

PortfolioReport report_from_json(const json& j) {
    require_object(j, "");
    reject_unknown_keys(j, {"records", "totals"}, "");
    PortfolioReport report;
    const auto& records = require_array(member(j, "records", ""), "records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string path = at_index("records", i);
        const json& rec = require_object(records[i], path);
        reject_unknown_keys(rec,
                            {"function_id", "function_name", "uhw", "uapw", "tuaw", "ubpw", "ubfrp",
                             "trf", "erf", "urf", "abfrp", "rte_hours", "impact_level",
                             "exercise_category", "in_mbco", "desired_rto_hours", "desired_mao_hours",
                             "budget_rto_hours", "budget_mao_hours", "level_mao_hours", "compliance",
                             "reengineer_flag", "config_fingerprint"},
                            path);
        BiaRecord r;
        r.function_id = as_string(member(rec, "function_id", path), join(path, "function_id"));
        r.function_name = as_string(member(rec, "function_name", path), join(path, "function_name"));
        r.uhw = as_number(member(rec, "uhw", path), join(path, "uhw"));
        r.uapw = as_number(member(rec, "uapw", path), join(path, "uapw"));
        r.tuaw = as_number(member(rec, "tuaw", path), join(path, "tuaw"));
        r.ubpw = as_number(member(rec, "ubpw", path), join(path, "ubpw"));
        r.ubfrp = as_number(member(rec, "ubfrp", path), join(path, "ubfrp"));
        r.trf = opt_number(rec, "trf", path);
        r.erf = opt_number(rec, "erf", path);
        r.urf = opt_number(rec, "urf", path);
        r.abfrp = opt_number(rec, "abfrp", path);
        r.rte_hours = opt_number(rec, "rte_hours", path);
        const auto level = parse_impact_level(as_string(member(rec, "impact_level", path), join(path, "impact_level")));
        if (!level) parse_fail(join(path, "impact_level"), "expected L1..L4");
        r.impact_level = *level;
        const auto exercise =
            parse_exercise(as_string(member(rec, "exercise_category", path), join(path, "exercise_category")));
        if (!exercise) parse_fail(join(path, "exercise_category"), "expected Tabletop, Medium or Complex");
        r.exercise_category = *exercise;
        r.in_mbco = as_bool(member(rec, "in_mbco", path), join(path, "in_mbco"));
        r.desired_rto_hours = opt_number(rec, "desired_rto_hours", path);
        r.desired_mao_hours = opt_number(rec, "desired_mao_hours", path);
        r.budget_rto_hours = as_number(member(rec, "budget_rto_hours", path), join(path, "budget_rto_hours"));
        r.budget_mao_hours = as_number(member(rec, "budget_mao_hours", path), join(path, "budget_mao_hours"));
        r.level_mao_hours = as_number(member(rec, "level_mao_hours", path), join(path, "level_mao_hours"));
        const auto compliance = parse_compliance(as_string(member(rec, "compliance", path), join(path, "compliance")));
        if (!compliance) parse_fail(join(path, "compliance"), "unknown compliance status");
        r.compliance = *compliance;
        r.reengineer_flag = as_bool(member(rec, "reengineer_flag", path), join(path, "reengineer_flag"));
        r.config_fingerprint =
            as_string(member(rec, "config_fingerprint", path), join(path, "config_fingerprint"));
        if (r.reengineer_flag != (r.compliance == Compliance::Reengineer)) {
            parse_fail(join(path, "reengineer_flag"), "inconsistent with compliance status");
        }
        if (r.level_mao_hours != level_bounds(r.impact_level).mao_hours) {
            parse_fail(join(path, "level_mao_hours"), "does not match the impact level");
        }
        report.records.push_back(std::move(r));
    }

    for (std::size_t i = 1; i < report.records.size(); ++i) {
        const auto& a = report.records[i - 1];
        const auto& b = report.records[i];
        const bool ordered = a.impact_level != b.impact_level ? a.impact_level < b.impact_level
                             : a.ubfrp != b.ubfrp             ? a.ubfrp > b.ubfrp
                                                              : a.function_id <= b.function_id;
        if (!ordered) {
            parse_fail(at_index("records", i), "records are not in report order");
        }
    }

    report.totals = compute_totals(report.records);
    const json expected_totals = report_to_json(report)["totals"];
    if (member(j, "totals", "") != expected_totals) {
        parse_fail("totals", "totals do not match the records");
    }
    return report;
}

json findings_to_json(const std::vector<Finding>& findings) {
    json arr = json::array();
    for (const auto& f : findings) {
        arr.push_back({{"kind", std::string(to_string(f.kind))},
                       {"function_id", f.function_id},
                       {"field", f.field},
                       {"message", f.message}});
    }
    return arr;
}

json whatif_to_json(const WhatIfResult& result) {
    return json{
        {"factor", to_string(result.factor)},
        {"old_rating", result.old_rating},
        {"new_rating", result.new_rating},
        {"delta_abfrp", result.delta_abfrp},
        {"delta_rte_hours", result.delta_rte_hours},
        {"level_before", std::string(to_string(result.level_before))},
        {"level_after", std::string(to_string(result.level_after))},
        {"compliance_before", std::string(to_string(result.compliance_before))},
        {"compliance_after", std::string(to_string(result.compliance_after))},
    };
}

json summary_to_json(const SimulationSummary& summary) {
    return json{
        {"samples", summary.samples},
        {"seed", summary.seed},
        {"rte_mean", summary.rte_mean},
        {"rte_p95", summary.rte_p95},
        {"prob_meets_rto", summary.prob_meets_rto},
        {"prob_reengineer", summary.prob_reengineer},
    };
}

json ucp_to_json(const UcpBreakdown& breakdown) {
    return json{
        {"uaw", breakdown.uaw},
        {"uucw", breakdown.uucw},
        {"uucp", breakdown.uucp},
        {"tfactor", breakdown.tfactor},
        {"efactor", breakdown.efactor},
        {"tcf", breakdown.tcf},
        {"ef", breakdown.ef},
        {"ucp", breakdown.ucp},
        {"effort_hours", breakdown.effort_hours},
    };
}

}  // namespace bctp
