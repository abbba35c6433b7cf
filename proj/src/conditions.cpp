#include "isix/conditions.hpp"

#include <stdexcept>

namespace isix {

namespace {

std::string pair_text(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

ConditionReport make_report(ConditionId id, int window) {
    ConditionReport r;
    r.id = id;
    r.window = window;
    r.holds = true;
    return r;
}

// Strictly-greater check; a tie counts as a violation of strictness.
bool violates(const Rational& lhs, const Rational& rhs) { return !(lhs > rhs); }

ConditionReport check_pairwise(ConditionId id, int window, int x_lo, int x_hi, int y_lo,
                               bool triangular,
                               const std::function<Rational(int, int)>& lhs,
                               const std::function<Rational(int, int)>& rhs,
                               const std::string& what) {
    ConditionReport r = make_report(id, window);
    for (int x = x_lo; x <= x_hi && r.holds; ++x) {
        int y_hi = triangular ? x : window;
        for (int y = y_lo; y <= y_hi; ++y) {
            if (violates(lhs(x, y), rhs(x, y))) {
                r.holds = false;
                r.witness = {x, y};
                r.note = what + " violated at " + pair_text(x, y) + ": " +
                         fraction_string(lhs(x, y)) + " <= " + fraction_string(rhs(x, y));
                break;
            }
        }
    }
    if (r.holds) r.note = what + " holds on the window";
    return r;
}

// Strict decrease of seq(x) over x = lo..hi; records the sequence.
ConditionReport check_decreasing_sequence(ConditionId id, int window, int lo, int hi,
                                          const std::function<Rational(int)>& seq,
                                          const std::string& what) {
    ConditionReport r = make_report(id, window);
    for (int x = lo; x <= hi; ++x) r.differences.push_back(seq(x));
    for (int x = lo; x < hi; ++x) {
        if (!(seq(x + 1) < seq(x))) {
            r.holds = false;
            r.witness = {x, x + 1};
            r.note = what + " not strictly decreasing at x=" + std::to_string(x) + ": " +
                     fraction_string(seq(x)) + " -> " + fraction_string(seq(x + 1));
            break;
        }
    }
    if (r.holds) r.note = what + " strictly decreasing on the window";
    return r;
}

}  // namespace

std::string condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::increasing_x: return "increasing_x";
        case ConditionId::exchange: return "exchange";
        case ConditionId::pendant_merge: return "pendant_merge";
        case ConditionId::convex_f1: return "convex_f1";
        case ConditionId::convex_f2: return "convex_f2";
        case ConditionId::phi_monotone: return "phi_monotone";
        case ConditionId::phi2_decreasing: return "phi2_decreasing";
        case ConditionId::phi3_decreasing: return "phi3_decreasing";
    }
    throw std::logic_error("unreachable condition id");
}

ConditionId parse_condition_id(const std::string& name) {
    for (ConditionId id :
         {ConditionId::increasing_x, ConditionId::exchange, ConditionId::pendant_merge,
          ConditionId::convex_f1, ConditionId::convex_f2, ConditionId::phi_monotone,
          ConditionId::phi2_decreasing, ConditionId::phi3_decreasing}) {
        if (condition_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown condition id: " + name);
}

ConditionReport check_condition(ConditionId id, const DegreeWeightFunction& f, int X) {
    if (X < 4) throw std::invalid_argument("check_condition: window bound must be >= 4");
    auto phi = [&](int x, int y) { return f.eval(x, y) - f.eval(x - 1, y); };
    switch (id) {
        case ConditionId::increasing_x:
            return check_pairwise(
                id, X, 1, X - 1, 1, false, [&](int x, int y) { return f.eval(x + 1, y); },
                [&](int x, int y) { return f.eval(x, y); }, "f(x+1,y) > f(x,y)");
        case ConditionId::exchange:
            return check_pairwise(
                id, X, 2, X, 2, true, [&](int x, int y) { return f.eval(x + 1, y - 1); },
                [&](int x, int y) { return f.eval(x, y); }, "f(x+1,y-1) > f(x,y) for x >= y >= 2");
        case ConditionId::pendant_merge:
            return check_pairwise(
                id, X, 2, X, 2, false, [&](int x, int y) { return f.eval(x + y - 1, 1); },
                [&](int x, int y) { return f.eval(x, y); }, "f(x+y-1,1) > f(x,y) for x,y >= 2");
        case ConditionId::convex_f1:
            return check_decreasing_sequence(
                id, X, 1, X - 1, [&](int x) { return f.eval(1, x + 1) - f.eval(1, x); },
                "f(1,x+1)-f(1,x)");
        case ConditionId::convex_f2:
            return check_decreasing_sequence(
                id, X, 1, X - 1, [&](int x) { return f.eval(2, x + 1) - f.eval(2, x); },
                "f(2,x+1)-f(2,x)");
        case ConditionId::phi_monotone: {
            ConditionReport r = make_report(id, X);
            for (int x = 2; x <= X && r.holds; ++x) {
                for (int y = 1; y <= X; ++y) {
                    bool bad_x = x < X && violates(phi(x + 1, y), phi(x, y));
                    bool bad_y = y < X && violates(phi(x, y), phi(x, y + 1));
                    if (bad_x || bad_y) {
                        r.holds = false;
                        r.witness = {x, y};
                        r.note = std::string("phi(x,y) ") +
                                 (bad_x ? "not strictly increasing in x"
                                        : "not strictly decreasing in y") +
                                 " at " + pair_text(x, y);
                        break;
                    }
                }
            }
            if (r.holds) r.note = "phi(x,y) increasing in x and decreasing in y on the window";
            return r;
        }
        case ConditionId::phi2_decreasing:
            return check_decreasing_sequence(id, X, 1, X, [&](int x) { return phi(2, x); },
                                             "phi(2,x)");
        case ConditionId::phi3_decreasing:
            return check_decreasing_sequence(id, X, 1, X, [&](int x) { return phi(3, x); },
                                             "phi(3,x)");
    }
    throw std::logic_error("unreachable condition id");
}

std::vector<ConditionReport> audit_table1(const DegreeWeightFunction& f, int window) {
    std::vector<ConditionReport> out;
    for (ConditionId id :
         {ConditionId::increasing_x, ConditionId::convex_f1, ConditionId::convex_f2,
          ConditionId::exchange, ConditionId::pendant_merge, ConditionId::phi2_decreasing,
          ConditionId::phi3_decreasing, ConditionId::phi_monotone}) {
        out.push_back(check_condition(id, f, window));
    }
    return out;
}

}  // namespace isix
