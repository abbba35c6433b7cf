// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include "isix/canonical.hpp"
#include "isix/conditions.hpp"
#include "isix/enumerate.hpp"
#include "isix/families.hpp"
#include "isix/graph6.hpp"
#include "isix/indices.hpp"
#include "isix/transforms.hpp"
#include "isix/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace isix;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure(message);
}

template <typename T>
std::string str(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

// ---- criterion 1: closed forms equal built-graph values, n <= 60 ----------
void criterion_formula_agreement() {
    const auto& f = isi_function();
    long long checked = 0;
    auto check_spec = [&](const FamilySpec& spec) {
        require(closed_form_bid(spec, f) == bid_value(build_family(spec).graph, f),
                "closed form mismatch for " + spec.label());
        ++checked;
    };
    for (int d = 3; d <= 57; ++d) {
        for (int n = d + 3; n <= 60; ++n) {
            for (int i = 2; i <= d; ++i) check_spec(FamilySpec::t_ndi(n, d, i));
        }
    }
    for (int n = 4; n <= 60; ++n) check_spec(FamilySpec::sn_plus(n));
    for (int n = 4; n <= 60; ++n) check_spec(FamilySpec::bn(n, n - 4, 0));
    for (int n = 5; n <= 60; ++n) check_spec(FamilySpec::cn(n, n - 4, 1, 0));
    for (int n = 5; n <= 60; ++n) check_spec(FamilySpec::dn(n, n - 5, 0));
    for (int d = 4; d <= 58; ++d) {
        for (int n = d + 2; n <= 60; ++n) check_spec(FamilySpec::u_nd(n, d));
    }
    require(checked > 30000, "sweep unexpectedly small: " + str(checked));
}

// ---- criterion 2: the condition table reproduces row for row --------------
void criterion_condition_table() {
    auto rows = audit_table1(isi_function(), 100);
    require(rows.size() == 8, "expected 8 audited rows");
    const bool expected[7] = {true, true, true, false, false, false, false};
    for (int i = 0; i < 7; ++i) {
        require(rows[i].holds == expected[i],
                "row " + condition_name(rows[i].id) + " verdict mismatch");
        if (!rows[i].holds)
            require(rows[i].witness.has_value(),
                    "row " + condition_name(rows[i].id) + " lacks a witness");
    }
    // Witnesses re-evaluate to true violations.
    const auto& f = isi_function();
    {
        auto [x, y] = *rows[3].witness;  // exchange
        require(!(f.eval(x + 1, y - 1) > f.eval(x, y)), "exchange witness does not violate");
        auto [px, py] = *rows[4].witness;  // pendant_merge
        require(!(f.eval(px + py - 1, 1) > f.eval(px, py)),
                "pendant_merge witness does not violate");
    }
    // Difference sequence of f(1,.) equals 1/((x+1)(x+2)) on the window.
    const auto& diff = rows[1].differences;
    require(diff.size() == 99, "convex_f1 sequence length");
    for (int x = 1; x <= 99; ++x) {
        require(diff[x - 1] == Rational(1, static_cast<long long>(x + 1) * (x + 2)),
                "convex_f1 difference mismatch at x=" + str(x));
    }
}

// ---- criterion 3: enumeration equals the independent oracles --------------
void criterion_enumeration_oracles() {
    const long long tree_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    const long long uni_counts[] = {1, 2, 5, 13, 33, 89, 240};
    for (int n = 1; n <= 9; ++n) {
        auto sweep = testing::prufer_sweep(n);
        std::set<std::string> generated;
        for (const Graph& g : free_trees(n)) generated.insert(canonical_code(g).bytes);
        require(static_cast<long long>(generated.size()) == tree_counts[n - 1],
                "free tree count at n=" + str(n));
        require(generated == sweep.codes,
                "free trees disagree with the Pruefer oracle at n=" + str(n));
        if (n < 3) continue;
        auto uni_oracle = testing::tree_plus_edge_unicyclic_codes(sweep.representatives);
        std::set<std::string> uni_generated;
        for (const Graph& g : unicyclic_graphs(n)) uni_generated.insert(canonical_code(g).bytes);
        require(static_cast<long long>(uni_generated.size()) == uni_counts[n - 3],
                "unicyclic count at n=" + str(n));
        require(uni_generated == uni_oracle,
                "unicyclic graphs disagree with the tree+edge oracle at n=" + str(n));
    }
}

// ---- criterion 4: the two evaluation routes agree on every graph ----------
void criterion_histogram_equivalence() {
    std::vector<const DegreeWeightFunction*> fns = {&isi_function(), &zagreb1_function(),
                                                    &zagreb2_function()};
    long long checked = 0;
    auto check_graph = [&](const Graph& g) {
        auto h = edge_degree_histogram(g);
        for (auto* f : fns) {
            require(bid_value(g, *f) == bid_from_histogram(h, *f),
                    "edge-sum vs histogram mismatch (" + (*f).id + ") on " + encode_g6(g));
        }
        ++checked;
    };
    for (int n = 1; n <= 9; ++n)
        for (const Graph& g : free_trees(n)) check_graph(g);
    for (int n = 3; n <= 9; ++n)
        for (const Graph& g : unicyclic_graphs(n)) check_graph(g);
    require(checked == 95 + 383, "unexpected graph total: " + str(checked));
}

// ---- criterion 5: pendant moves converge to Bn* in exactly b steps --------
void criterion_transformation_convergence() {
    for (int n = 6; n <= 12; ++n) {
        for (int b = 1; 2 * b <= n - 4; ++b) {
            int a = n - 4 - b;
            auto built = build_family(FamilySpec::bn(n, a, b));
            auto target = canonical_code(build_family(FamilySpec::bn(n, n - 4, 0)).graph);
            Graph g = built.graph;
            int u = built.vertex_names.at("u");
            int v = built.vertex_names.at("v");
            for (int step = 1; step <= b; ++step) {
                require(canonical_code(g) != target,
                        "reached Bn* early at step " + str(step - 1) + " for " +
                            FamilySpec::bn(n, a, b).label());
                int pendant = -1;
                for (int w : g.neighbors(v)) {
                    if (g.degree(w) == 1) {
                        pendant = w;
                        break;
                    }
                }
                require(pendant >= 0, "no pendant left to move on the b-side");
                g = move_pendant(g, pendant, v, u);
            }
            require(canonical_code(g) == target,
                    "did not reach Bn* after b steps for " + FamilySpec::bn(n, a, b).label());
        }
    }
}

// ---- criterion 6: verification runs, determinism, evidence integrity ------
void verify_report_evidence(const VerificationReport& report,
                            const DegreeWeightFunction& f) {
    for (const auto& cell : report.cells) {
        for (const auto& e : cell.argmax)
            require(bid_value(decode_g6(e.g6), f) == e.value, "cell argmax evidence mismatch");
        for (const auto& claim : cell.claims) {
            for (const auto& e : claim.argmax)
                require(bid_value(decode_g6(e.g6), f) == e.value,
                        "claim argmax evidence mismatch");
            for (const auto& m : claim.claimed)
                require(bid_value(decode_g6(m.evidence.g6), f) == m.evidence.value,
                        "claimed-member evidence mismatch");
            if (claim.counterexample)
                require(bid_value(decode_g6(claim.counterexample->g6), f) ==
                            claim.counterexample->value,
                        "counterexample evidence mismatch");
            for (const auto& row : claim.inequalities) {
                require(bid_value(build_family(row.lhs).graph, f) == row.lhs_value,
                        "inequality lhs mismatch");
                require(bid_value(build_family(row.rhs).graph, f) == row.rhs_value,
                        "inequality rhs mismatch");
            }
        }
    }
}

VerificationReport g_tree_report;       // shared with criterion 7
VerificationReport g_unicyclic_report;  // shared with criterion 8

void criterion_verification_runs() {
    const auto& f = isi_function();
    auto timed_run = [&](ClassKind cls, int n_max, int threads) {
        auto start = std::chrono::steady_clock::now();
        auto report = run_verification(cls, n_max, f, threads);
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(elapsed < 120.0, "verification run exceeded 120 s (" +
                                     class_kind_name(cls) + ", threads=" + str(threads) + ")");
        return report;
    };
    g_tree_report = timed_run(ClassKind::trees, 11, 1);
    auto trees_mt = timed_run(ClassKind::trees, 11, 4);
    require(report_to_json(g_tree_report) == report_to_json(trees_mt),
            "tree reports differ across thread counts");

    g_unicyclic_report = timed_run(ClassKind::unicyclic, 9, 1);
    auto uni_mt = timed_run(ClassKind::unicyclic, 9, 4);
    require(report_to_json(g_unicyclic_report) == report_to_json(uni_mt),
            "unicyclic reports differ across thread counts");

    long long tree_cells = 0;
    for (int n = 6; n <= 11; ++n) tree_cells += (n - 3) - 3 + 1;
    require(static_cast<long long>(g_tree_report.cells.size()) == tree_cells,
            "tree cell coverage");
    long long uni_cells = 0;
    for (int n = 4; n <= 9; ++n) uni_cells += (n - 2) - 2 + 1;
    require(static_cast<long long>(g_unicyclic_report.cells.size()) == uni_cells,
            "unicyclic cell coverage");

    verify_report_evidence(g_tree_report, f);
    verify_report_evidence(g_unicyclic_report, f);
}

// ---- criterion 7: the (7,4) fixture and the thm1/thm6_1 conflict ----------
void criterion_competing_tree_claims() {
    const auto& f = isi_function();
    require(bid_value(build_family(FamilySpec::t_ndi(7, 4, 3)).graph, f) == rational(28, 5),
            "ISI(T_{7,4}^3) != 28/5");
    require(bid_value(build_family(FamilySpec::t_ndi(7, 4, 2)).graph, f) == rational(27, 5),
            "ISI(T_{7,4}^2) != 27/5");
    require(closed_form_bid(FamilySpec::t_ndi(7, 4, 3), f) == rational(28, 5),
            "closed form of T_{7,4}^3 != 28/5");
    require(closed_form_bid(FamilySpec::t_ndi(7, 4, 2), f) == rational(27, 5),
            "closed form of T* at (7,4) != 27/5");

    const CellReport* cell = nullptr;
    for (const auto& c : g_tree_report.cells) {
        if (c.n == 7 && c.d == 4) cell = &c;
    }
    require(cell != nullptr, "(7,4) cell missing from the tree report");
    const ClaimOutcome* thm1 = nullptr;
    const ClaimOutcome* thm6 = nullptr;
    for (const auto& claim : cell->claims) {
        if (claim.id == ClaimId::thm1) thm1 = &claim;
        if (claim.id == ClaimId::thm6_1) thm6 = &claim;
    }
    require(thm1 && thm6, "(7,4) claims missing");
    require(thm1->claimed.size() == 1 && thm1->claimed[0].evidence.value == rational(28, 5),
            "thm1 claimed value at (7,4)");
    require(thm6->claimed.size() == 1 && thm6->claimed[0].evidence.value == rational(27, 5),
            "thm6_1 claimed value at (7,4)");
    // The 1/5 gap between the two claimed families is visible in the report.
    require(thm1->claimed[0].evidence.value - thm6->claimed[0].evidence.value ==
                rational(1, 5),
            "gap between competing claims");
    // Both claims are judged against the same brute-force argmax.
    require(cell->max_value.has_value(), "(7,4) max missing");
    require(*cell->max_value >= rational(28, 5), "(7,4) max below the claimed values");
    require(!(thm1->verdict == Verdict::confirmed && thm6->verdict == Verdict::confirmed),
            "claims with different values cannot both be confirmed");
    for (const ClaimOutcome* claim : {thm1, thm6}) {
        require(claim->verdict != Verdict::not_applicable, "claim unexpectedly n/a");
        if (claim->verdict == Verdict::refuted) {
            require(claim->counterexample.has_value(), "refuted claim lacks counterexample");
            require(claim->gap.has_value(), "refuted claim lacks its value gap");
            require(*claim->gap ==
                        *cell->max_value - claim->claimed[0].evidence.value,
                    "gap does not equal max minus claimed");
        }
    }
}

// ---- criterion 8: the d=2 audit enumerates exactly the named shapes -------
void criterion_d2_census() {
    const auto& f = isi_function();
    require(bid_value(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), f) == rational(4),
            "ISI(C_4) != 4");
    require(bid_value(build_family(FamilySpec::sn_plus(4)).graph, f) == rational(83, 20),
            "ISI(S_4^+) != 83/20");
    for (const auto& cell : g_unicyclic_report.cells) {
        if (cell.d != 2) continue;
        std::set<std::string> labels;
        long long total = 0;
        for (const auto& s : cell.shapes) {
            labels.insert(s.label);
            total += s.count;
        }
        require(total == cell.count, "census does not cover the cell");
        require(labels.count("other") == 0,
                "unexpected extra shape in U_{n,2} at n=" + str(cell.n));
        std::set<std::string> expected = {"Sn_plus"};
        if (cell.n == 4) expected.insert("C4");
        if (cell.n == 5) expected.insert("C5");
        require(labels == expected, "shape census mismatch at n=" + str(cell.n));
        // The maximizer is S_n^+ with its exact closed-form value.
        const ClaimOutcome* thm2 = nullptr;
        for (const auto& claim : cell.claims)
            if (claim.id == ClaimId::thm2) thm2 = &claim;
        require(thm2 && thm2->verdict == Verdict::confirmed,
                "thm2 not confirmed at n=" + str(cell.n));
        require(cell.max_value == closed_form_bid(FamilySpec::sn_plus(cell.n), f),
                "maximizer value mismatch at n=" + str(cell.n));
    }
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "closed-form/built-graph agreement, n <= 60", 10.0, criterion_formula_agreement},
        {2, "condition table reproduction at X=100", 1.0, criterion_condition_table},
        {3, "enumeration equals independent oracles, n <= 9", 30.0,
         criterion_enumeration_oracles},
        {4, "edge-sum vs histogram equivalence, n <= 9", 60.0, criterion_histogram_equivalence},
        {5, "pendant-move convergence to Bn*, n <= 12", 5.0,
         criterion_transformation_convergence},
        {6, "verification runs: coverage, determinism, evidence (each run < 120 s)", 500.0,
         criterion_verification_runs},
        {7, "(7,4) fixture and competing tree claims", 10.0, criterion_competing_tree_claims},
        {8, "d=2 unicyclic census and maximizer values", 10.0, criterion_d2_census},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = error.empty() && elapsed <= c.budget_seconds;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
                  << elapsed << "s";
        if (elapsed > c.budget_seconds) std::cout << ", over budget " << c.budget_seconds << "s";
        std::cout << "]";
        if (!error.empty()) std::cout << " -- " << error;
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
