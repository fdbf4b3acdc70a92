#include "core/model.hpp"

#include <cmath>
#include <unordered_set>

namespace bctp {
namespace {

void check_unique_ids(const std::string& function_id, const char* list_name,
                      const std::vector<std::string>& ids) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (id.empty()) {
            raise(ErrorKind::Validation, function_id + "." + list_name, "empty id");
        }
        if (!seen.insert(id).second) {
            raise(ErrorKind::Validation, function_id + "." + list_name,
                  "duplicate id \"" + id + "\"");
        }
    }
}

}  // namespace

void validate_function_spec(const BusinessFunctionSpec& function) {
    if (function.id.empty()) {
        raise(ErrorKind::Validation, "function", "empty function id");
    }

    std::vector<std::string> ids;
    ids.reserve(function.humans.size());
    for (const auto& h : function.humans) ids.push_back(h.id);
    check_unique_ids(function.id, "humans", ids);

    ids.clear();
    for (const auto& a : function.applications) ids.push_back(a.id);
    check_unique_ids(function.id, "applications", ids);

    ids.clear();
    for (const auto& p : function.processes) ids.push_back(p.id);
    check_unique_ids(function.id, "processes", ids);

    if (function.processes.empty()) {
        raise(ErrorKind::Validation, function.id + ".processes", "at least one process is required");
    }
    for (const auto& p : function.processes) {
        if (p.step_count < 1) {
            raise(ErrorKind::Validation, function.id + ".processes." + p.id,
                  "step_count must be >= 1");
        }
    }

    if (!function.ratings.complete()) {
        raise(ErrorKind::Validation, function.id + ".ratings." + to_string(function.ratings.unlisted().front()),
              "missing factor rating");
    }
    for (const auto fid : all_factor_ids()) {
        const int r = function.ratings.rating(fid);
        if (r < kRatingMin || r > kRatingMax) {
            raise(ErrorKind::Validation, function.id + ".ratings." + to_string(fid),
                  "rating must be between 0 and 5");
        }
    }

    for (const auto* budget : {&function.desired_rto_hours, &function.desired_mao_hours}) {
        if (budget->has_value() && (!std::isfinite(**budget) || **budget <= 0.0)) {
            raise(ErrorKind::Validation, function.id, "desired budgets must be positive and finite");
        }
    }
    if (function.desired_rto_hours && function.desired_mao_hours &&
        *function.desired_rto_hours >= *function.desired_mao_hours) {
        raise(ErrorKind::Validation, function.id,
              "desired_rto_hours must be strictly below desired_mao_hours");
    }
}

}  // namespace bctp
