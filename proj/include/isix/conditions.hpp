#pragma once

#include "isix/indices.hpp"
#include "isix/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isix {

/// Sufficient-condition catalog audited over a finite degree window.
enum class ConditionId {
    increasing_x,     // f strictly increasing in x
    exchange,         // f(x+1, y-1) > f(x, y) for x >= y >= 2
    pendant_merge,    // f(x+y-1, 1) > f(x, y) for x, y >= 2
    convex_f1,        // first differences of f(1,.) strictly decreasing
    convex_f2,        // first differences of f(2,.) strictly decreasing
    phi_monotone,     // phi(x,y) = f(x,y)-f(x-1,y) increasing in x, decreasing in y
    phi2_decreasing,  // phi(2,x) = f(2,x)-f(1,x) strictly decreasing
    phi3_decreasing,  // phi(3,x) = f(3,x)-f(2,x) strictly decreasing
};

std::string condition_name(ConditionId id);
ConditionId parse_condition_id(const std::string& name);

/// Finite-window verdict. Witnesses, when present, re-evaluate to true
/// violations under exact arithmetic. The tool never claims
/// unbounded-domain proofs.
struct ConditionReport {
    ConditionId id;
    int window = 0;  // X
    bool holds = false;
    std::optional<std::pair<int, int>> witness;  // smallest violating pair
    std::string note;
    /// Recorded sequence for sequence-style rows: f(c,x+1)-f(c,x) for the
    /// convexity rows (x = 1..X-1), phi(c,x) for the phi rows (x = 1..X).
    std::vector<Rational> differences;
};

/// Exhaustive check over the integer window. Requires X >= 4.
ConditionReport check_condition(ConditionId id, const DegreeWeightFunction& f, int window);

/// The seven catalog rows in table order (increasing_x, convex_f1,
/// convex_f2, exchange, pendant_merge, phi2_decreasing, phi3_decreasing)
/// plus phi_monotone.
std::vector<ConditionReport> audit_table1(const DegreeWeightFunction& f, int window);

}  // namespace isix
