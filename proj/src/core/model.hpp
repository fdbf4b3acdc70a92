#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/factors.hpp"
#include "core/types.hpp"

namespace bctp {

// A person participating in a business function, classified by the
// responsibility their role carries (Basic / Average / Complex).
struct HumanActor {
    std::string id;
    ComplexityClass responsibility = ComplexityClass::Simple;

    bool operator==(const HumanActor&) const = default;
};

// An application involved in the function, classified by task complexity.
struct ApplicationActor {
    std::string id;
    ComplexityClass task_complexity = ComplexityClass::Simple;

    bool operator==(const ApplicationActor&) const = default;
};

struct BusinessProcess {
    std::string id;
    int step_count = 1;

    bool operator==(const BusinessProcess&) const = default;
};

// One IT business function as the BIA intake describes it: its people, its
// applications, its processes, the factor ratings, and (optionally) the
// recovery budgets the organization would like to hold it to. When the
// desired budgets are absent, the assigned impact level's bounds apply.
struct BusinessFunctionSpec {
    std::string id;
    std::string name;
    std::vector<HumanActor> humans;
    std::vector<ApplicationActor> applications;
    std::vector<BusinessProcess> processes;
    FactorRatingSet ratings;
    std::optional<double> desired_rto_hours;
    std::optional<double> desired_mao_hours;

    bool operator==(const BusinessFunctionSpec&) const = default;
};

// Throws Error{Validation} on the first violated invariant, with the
// function id in the error path. The portfolio-level validator in the
// reporting module collects the same conditions as findings instead.
void validate_function_spec(const BusinessFunctionSpec& function);

}  // namespace bctp
