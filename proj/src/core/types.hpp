#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace bctp {

// Complexity classification shared by actors, use cases and business
// processes. Human actors label the first class "Basic", everything else
// labels it "Simple"; both spellings parse.
enum class ComplexityClass { Simple, Average, Complex };

// Criticality tiers keyed to tolerable downtime. L1 is the most urgent.
enum class ImpactLevel { L1 = 1, L2 = 2, L3 = 3, L4 = 4 };

// Recovery-drill classes, from desk walkthrough to full-realism exercise.
enum class ExerciseCategory { Tabletop, Medium, Complex };

enum class Compliance { MeetsRto, MeetsMaoOnly, Reengineer, NotAssessed };

struct LevelBounds {
    double mao_hours;        // maximum acceptable outage
    double rto_bound_hours;  // recovery time objective must stay strictly below this
};

// Fixed outage budgets per impact level: 2h / 24h / 72h / 168h. Not configurable.
constexpr LevelBounds level_bounds(ImpactLevel level) {
    switch (level) {
        case ImpactLevel::L1: return {2.0, 2.0};
        case ImpactLevel::L2: return {24.0, 24.0};
        case ImpactLevel::L3: return {72.0, 72.0};
        case ImpactLevel::L4: return {168.0, 168.0};
    }
    return {0.0, 0.0};  // unreachable for valid enumerators
}

constexpr std::string_view to_string(ComplexityClass c) {
    switch (c) {
        case ComplexityClass::Simple: return "Simple";
        case ComplexityClass::Average: return "Average";
        case ComplexityClass::Complex: return "Complex";
    }
    return "?";
}

// Table label used for human actors ("Basic responsibility tasks").
constexpr std::string_view human_label(ComplexityClass c) {
    return c == ComplexityClass::Simple ? std::string_view{"Basic"} : to_string(c);
}

constexpr std::string_view to_string(ImpactLevel level) {
    switch (level) {
        case ImpactLevel::L1: return "L1";
        case ImpactLevel::L2: return "L2";
        case ImpactLevel::L3: return "L3";
        case ImpactLevel::L4: return "L4";
    }
    return "?";
}

constexpr std::string_view to_string(ExerciseCategory e) {
    switch (e) {
        case ExerciseCategory::Tabletop: return "Tabletop";
        case ExerciseCategory::Medium: return "Medium";
        case ExerciseCategory::Complex: return "Complex";
    }
    return "?";
}

constexpr std::string_view to_string(Compliance c) {
    switch (c) {
        case Compliance::MeetsRto: return "MeetsRto";
        case Compliance::MeetsMaoOnly: return "MeetsMaoOnly";
        case Compliance::Reengineer: return "Reengineer";
        case Compliance::NotAssessed: return "NotAssessed";
    }
    return "?";
}

inline std::optional<ComplexityClass> parse_complexity(std::string_view s) {
    if (s == "Simple" || s == "Basic") return ComplexityClass::Simple;
    if (s == "Average") return ComplexityClass::Average;
    if (s == "Complex") return ComplexityClass::Complex;
    return std::nullopt;
}

inline std::optional<ImpactLevel> parse_impact_level(std::string_view s) {
    if (s == "L1") return ImpactLevel::L1;
    if (s == "L2") return ImpactLevel::L2;
    if (s == "L3") return ImpactLevel::L3;
    if (s == "L4") return ImpactLevel::L4;
    return std::nullopt;
}

inline std::optional<ExerciseCategory> parse_exercise(std::string_view s) {
    if (s == "Tabletop") return ExerciseCategory::Tabletop;
    if (s == "Medium") return ExerciseCategory::Medium;
    if (s == "Complex") return ExerciseCategory::Complex;
    return std::nullopt;
}

inline std::optional<Compliance> parse_compliance(std::string_view s) {
    if (s == "MeetsRto") return Compliance::MeetsRto;
    if (s == "MeetsMaoOnly") return Compliance::MeetsMaoOnly;
    if (s == "Reengineer") return Compliance::Reengineer;
    if (s == "NotAssessed") return Compliance::NotAssessed;
    return std::nullopt;
}

}  // namespace bctp
