#include "isix/conditions.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace isix;

namespace {

// Re-evaluate a reported witness against the condition it violates.
void check_witness_violates(const ConditionReport& r, const DegreeWeightFunction& f) {
    REQUIRE(r.witness.has_value());
    auto [x, y] = *r.witness;
    auto phi = [&](int a, int b) { return f.eval(a, b) - f.eval(a - 1, b); };
    switch (r.id) {
        case ConditionId::increasing_x: CHECK(!(f.eval(x + 1, y) > f.eval(x, y))); break;
        case ConditionId::exchange: CHECK(!(f.eval(x + 1, y - 1) > f.eval(x, y))); break;
        case ConditionId::pendant_merge: CHECK(!(f.eval(x + y - 1, 1) > f.eval(x, y))); break;
        case ConditionId::convex_f1:
            CHECK(!(f.eval(1, y + 1) - f.eval(1, y) < f.eval(1, x + 1) - f.eval(1, x)));
            break;
        case ConditionId::convex_f2:
            CHECK(!(f.eval(2, y + 1) - f.eval(2, y) < f.eval(2, x + 1) - f.eval(2, x)));
            break;
        case ConditionId::phi_monotone:
            CHECK((!(phi(x + 1, y) > phi(x, y)) || !(phi(x, y) > phi(x, y + 1))));
            break;
        case ConditionId::phi2_decreasing: CHECK(!(phi(2, y) < phi(2, x))); break;
        case ConditionId::phi3_decreasing: CHECK(!(phi(3, y) < phi(3, x))); break;
    }
}

}  // namespace

TEST_CASE("pinned verdicts for the isi function") {
    const auto& f = isi_function();
    CHECK(check_condition(ConditionId::increasing_x, f, 100).holds);

    auto ex = check_condition(ConditionId::exchange, f, 100);
    CHECK(!ex.holds);
    CHECK(ex.witness == std::pair<int, int>{2, 2});
    CHECK(f.eval(3, 1) == rational(3, 4));  // below f(2,2) = 1

    CHECK(!check_condition(ConditionId::pendant_merge, f, 100).holds);
    CHECK(!check_condition(ConditionId::phi2_decreasing, f, 100).holds);
    CHECK(!check_condition(ConditionId::phi3_decreasing, f, 100).holds);
    CHECK(!check_condition(ConditionId::phi_monotone, f, 100).holds);
    CHECK(check_condition(ConditionId::convex_f1, f, 100).holds);
    CHECK(check_condition(ConditionId::convex_f2, f, 100).holds);
}

TEST_CASE("table audit row order and verdicts") {
    auto rows = audit_table1(isi_function(), 100);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].id == ConditionId::increasing_x);
    CHECK(rows[1].id == ConditionId::convex_f1);
    CHECK(rows[2].id == ConditionId::convex_f2);
    CHECK(rows[3].id == ConditionId::exchange);
    CHECK(rows[4].id == ConditionId::pendant_merge);
    CHECK(rows[5].id == ConditionId::phi2_decreasing);
    CHECK(rows[6].id == ConditionId::phi3_decreasing);
    CHECK(rows[7].id == ConditionId::phi_monotone);

    std::vector<bool> verdicts;
    for (std::size_t i = 0; i < 7; ++i) verdicts.push_back(rows[i].holds);
    CHECK(verdicts == std::vector<bool>{true, true, true, false, false, false, false});
    CHECK(!rows[7].holds);

    for (const auto& r : rows) {
        if (!r.holds) check_witness_violates(r, isi_function());
    }
}

TEST_CASE("recorded difference sequences") {
    auto f1 = check_condition(ConditionId::convex_f1, isi_function(), 100);
    REQUIRE(f1.differences.size() == 99);
    for (int x = 1; x <= 99; ++x)
        CHECK(f1.differences[x - 1] ==
              Rational(1, static_cast<long long>(x + 1) * (x + 2)));

    // The f(2,.) differences come out as 4/((x+2)(x+3)); recorded, not assumed.
    auto f2 = check_condition(ConditionId::convex_f2, isi_function(), 100);
    REQUIRE(f2.differences.size() == 99);
    for (int x = 1; x <= 99; ++x)
        CHECK(f2.differences[x - 1] ==
              Rational(4, static_cast<long long>(x + 2) * (x + 3)));

    // phi(2,x) = x^2/((2+x)(1+x)) is increasing, hence the "fails" verdict.
    auto p2 = check_condition(ConditionId::phi2_decreasing, isi_function(), 100);
    REQUIRE(p2.differences.size() == 100);
    for (int x = 1; x <= 100; ++x)
        CHECK(p2.differences[x - 1] ==
              Rational(static_cast<long long>(x) * x,
                       static_cast<long long>(2 + x) * (1 + x)));
}

TEST_CASE("window stability for isi") {
    std::vector<std::vector<bool>> all;
    for (int X : {4, 10, 50, 100, 200}) {
        std::vector<bool> verdicts;
        for (const auto& r : audit_table1(isi_function(), X)) verdicts.push_back(r.holds);
        all.push_back(verdicts);
    }
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] == all[0]);
}

TEST_CASE("first zagreb cross-check") {
    const auto& z1 = zagreb1_function();
    CHECK(check_condition(ConditionId::increasing_x, z1, 50).holds);
    // Differences are constant, which violates strict decrease.
    CHECK(!check_condition(ConditionId::convex_f1, z1, 50).holds);
    CHECK(!check_condition(ConditionId::convex_f2, z1, 50).holds);
    // Exchange and pendant-merge hold with equality only, so strictness fails.
    CHECK(!check_condition(ConditionId::exchange, z1, 50).holds);
    CHECK(!check_condition(ConditionId::pendant_merge, z1, 50).holds);
}

TEST_CASE("window bound validation") {
    CHECK_THROWS_AS(check_condition(ConditionId::increasing_x, isi_function(), 3),
                    std::invalid_argument);
    CHECK(check_condition(ConditionId::increasing_x, isi_function(), 4).window == 4);
}
