#include "isix/verify.hpp"

#include "isix/enumerate.hpp"
#include "isix/graph6.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace isix {

namespace {

using ordered_json = nlohmann::ordered_json;

// Deterministic parallel map: indices are processed in disjoint chunks, so
// the filled arrays are independent of the schedule.
void parallel_for(std::size_t nitems, int threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || nitems < 2) {
        for (std::size_t i = 0; i < nitems; ++i) fn(i);
        return;
    }
    constexpr std::size_t chunk = 64;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= nitems) return;
            std::size_t end = std::min(nitems, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

struct CellData {
    int n = 0;
    int d = 0;
    std::vector<Graph> graphs;
    std::vector<Rational> values;
    std::vector<CanonicalCode> codes;
};

CellData make_cell(ClassKind cls, int n, int d, const DegreeWeightFunction& f, int threads) {
    CellData cell;
    cell.n = n;
    cell.d = d;
    cell.graphs = cls == ClassKind::trees ? trees_with_diameter(n, d)
                                          : unicyclic_with_diameter(n, d);
    cell.values.resize(cell.graphs.size());
    cell.codes.resize(cell.graphs.size());
    parallel_for(cell.graphs.size(), threads, [&](std::size_t i) {
        cell.values[i] = bid_value(cell.graphs[i], f);
        cell.codes[i] = canonical_code(cell.graphs[i]);
    });
    return cell;
}

GraphEvidence member_evidence(const CellData& cell, std::size_t i) {
    return {cell.codes[i], encode_g6(cell.graphs[i]), cell.values[i]};
}

GraphEvidence graph_evidence(const Graph& g, const DegreeWeightFunction& f) {
    return {canonical_code(g), encode_g6(g), bid_value(g, f)};
}

ArgmaxResult argmax_of(const CellData& cell, const std::set<CanonicalCode>* excluded = nullptr) {
    ArgmaxResult r;
    std::vector<std::size_t> best;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
        if (excluded && excluded->count(cell.codes[i])) continue;
        if (r.class_size == 0 || cell.values[i] > r.max_value) {
            r.max_value = cell.values[i];
            best.assign(1, i);
        } else if (cell.values[i] == r.max_value) {
            best.push_back(i);
        }
        ++r.class_size;
    }
    for (std::size_t i : best) r.argmax.push_back(member_evidence(cell, i));
    return r;
}

ClaimOutcome blank_outcome(ClaimId id, int n, int d) {
    ClaimOutcome out;
    out.id = id;
    out.n = n;
    out.d = d;
    return out;
}

ClaimOutcome not_applicable(ClaimId id, int n, int d, const std::string& why) {
    ClaimOutcome out = blank_outcome(id, n, d);
    out.verdict = Verdict::not_applicable;
    out.notes.push_back(why);
    return out;
}

std::vector<ClaimedMember> build_claimed(const std::vector<FamilySpec>& specs,
                                         const DegreeWeightFunction& f) {
    std::vector<ClaimedMember> out;
    for (const auto& spec : specs) out.push_back({spec, graph_evidence(build_family(spec).graph, f)});
    return out;
}

// Set-equality audit: the claim "the maximum over the cell (minus any
// excluded classes) is attained precisely by the claimed family members".
ClaimOutcome audit_extremal(ClaimId id, const CellData& cell,
                            const std::vector<FamilySpec>& claimed_specs,
                            const DegreeWeightFunction& f,
                            const std::set<CanonicalCode>* excluded = nullptr) {
    ClaimOutcome out = blank_outcome(id, cell.n, cell.d);
    out.claimed = build_claimed(claimed_specs, f);
    ArgmaxResult res = argmax_of(cell, excluded);
    out.argmax = res.argmax;
    if (res.class_size == 0) {
        out.verdict = Verdict::not_applicable;
        out.notes.push_back("cell is empty");
        return out;
    }
    std::set<CanonicalCode> claimed_set, argmax_set;
    Rational claimed_max;
    for (std::size_t k = 0; k < out.claimed.size(); ++k) {
        claimed_set.insert(out.claimed[k].evidence.code);
        if (k == 0 || out.claimed[k].evidence.value > claimed_max)
            claimed_max = out.claimed[k].evidence.value;
    }
    for (const auto& e : res.argmax) argmax_set.insert(e.code);
    if (claimed_set == argmax_set) {
        out.verdict = Verdict::confirmed;
        return out;
    }
    out.verdict = Verdict::refuted;
    out.gap = res.max_value - claimed_max;
    for (const auto& e : res.argmax) {
        if (!claimed_set.count(e.code)) {
            out.counterexample = e;
            break;
        }
    }
    if (*out.gap > 0)
        out.notes.push_back("maximum exceeds the claimed family value by " +
                            fraction_string(*out.gap));
    else
        out.notes.push_back("maximum matches the claimed value but the argmax set differs");
    return out;
}

bool lemma_window(int n, int d) { return d >= 4 && d <= n - 3; }

// |V(C_k) ∩ V(P)| >= 2 for every diameter path P.
ClaimOutcome audit_lem3(const CellData& cell) {
    ClaimOutcome out = blank_outcome(ClaimId::lem3, cell.n, cell.d);
    ArgmaxResult res = argmax_of(cell);
    out.argmax = res.argmax;
    out.verdict = Verdict::confirmed;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
        if (cell.values[i] != res.max_value) continue;
        const Graph& g = cell.graphs[i];
        auto cycle = unique_cycle(g);
        std::vector<bool> on_cycle(g.order(), false);
        for (int v : cycle) on_cycle[v] = true;
        int min_overlap = g.order();
        for (const auto& path : all_diameter_paths(g)) {
            int overlap = 0;
            for (int v : path) overlap += on_cycle[v] ? 1 : 0;
            min_overlap = std::min(min_overlap, overlap);
        }
        if (min_overlap < 2) {
            out.verdict = Verdict::refuted;
            out.counterexample = member_evidence(cell, i);
            out.notes.push_back("maximizer has a diameter path meeting the cycle in " +
                                std::to_string(min_overlap) + " vertices");
            return out;
        }
    }
    out.notes.push_back("every maximizer: all diameter paths meet the cycle in >= 2 vertices");
    return out;
}

bool has_diameter_preserving_pendant(const Graph& g, int d, std::vector<int>* witnesses) {
    bool found = false;
    for (int v : pendant_vertices(g)) {
        if (diameter(remove_vertex(g, v)) == d) {
            found = true;
            if (witnesses) witnesses->push_back(v);
        }
    }
    return found;
}

ClaimOutcome audit_lem4(const CellData& cell) {
    ClaimOutcome out = blank_outcome(ClaimId::lem4, cell.n, cell.d);
    ArgmaxResult res = argmax_of(cell);
    out.argmax = res.argmax;
    out.verdict = Verdict::confirmed;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
        if (cell.values[i] != res.max_value) continue;
        if (!has_diameter_preserving_pendant(cell.graphs[i], cell.d, nullptr)) {
            out.verdict = Verdict::refuted;
            out.counterexample = member_evidence(cell, i);
            out.notes.push_back("maximizer has no pendant whose removal keeps diameter " +
                                std::to_string(cell.d));
            return out;
        }
    }
    out.notes.push_back("every maximizer keeps a pendant whose removal preserves (n-1, d)");
    return out;
}

ClaimOutcome audit_lem5(const CellData& cell) {
    ClaimOutcome out = blank_outcome(ClaimId::lem5, cell.n, cell.d);
    ArgmaxResult res = argmax_of(cell);
    out.argmax = res.argmax;
    out.verdict = Verdict::confirmed;
    for (std::size_t i = 0; i < cell.graphs.size(); ++i) {
        if (cell.values[i] != res.max_value) continue;
        const Graph& g = cell.graphs[i];
        std::vector<int> keep;
        has_diameter_preserving_pendant(g, cell.d, &keep);
        bool ok = false;
        for (int v : keep) {
            int u = g.neighbors(v).front();
            int strong = 0;
            for (int w : g.neighbors(u)) strong += g.degree(w) >= 2 ? 1 : 0;
            if (strong >= 2) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            out.verdict = Verdict::refuted;
            out.counterexample = member_evidence(cell, i);
            out.notes.push_back(
                "no diameter-preserving pendant has a neighbor with >= 2 non-pendant neighbors");
            return out;
        }
    }
    out.notes.push_back("every maximizer admits the required pendant/neighbor configuration");
    return out;
}

ClaimOutcome audit_lem2(int n, int d, const DegreeWeightFunction& f) {
    ClaimOutcome out = blank_outcome(ClaimId::lem2, n, d);
    out.verdict = Verdict::confirmed;
    std::vector<FamilySpec> rhs;
    rhs.push_back(FamilySpec::t1(n, d));
    for (int i2 = 4; i2 <= d - 1; ++i2) rhs.push_back(FamilySpec::t2i(n, d, i2));
    rhs.push_back(FamilySpec::t3(n, d));
    if (d < 5) out.notes.push_back("T2i rows empty: 4 <= i <= d-1 is empty at d=" +
                                   std::to_string(d));
    for (int i = 3; i <= d - 1; ++i) {
        FamilySpec lhs = FamilySpec::t_ndi(n, d, i);
        Rational lv = bid_value(build_family(lhs).graph, f);
        for (const auto& r : rhs) {
            Rational rv = bid_value(build_family(r).graph, f);
            Rational diff = lv - rv;
            int sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
            out.inequalities.push_back({lhs, r, lv, rv, sign});
            if (sign <= 0) out.verdict = Verdict::refuted;
        }
    }
    if (out.verdict == Verdict::refuted)
        out.notes.push_back("at least one comparison is non-positive; signs recorded per row");
    return out;
}

std::vector<ClaimId> claims_for(ClassKind cls) {
    if (cls == ClassKind::trees) return {ClaimId::thm1, ClaimId::thm6_1, ClaimId::lem2};
    return {ClaimId::thm2, ClaimId::thm3, ClaimId::thm4,
            ClaimId::thm5, ClaimId::lem3, ClaimId::lem4, ClaimId::lem5};
}

ClaimOutcome audit_claim_on_cell(ClaimId id, const CellData& cell,
                                 const DegreeWeightFunction& f) {
    int n = cell.n, d = cell.d;
    switch (id) {
        case ClaimId::thm1: {
            if (d < 4 || n < d + 3)
                return not_applicable(id, n, d, "needs d >= 4 and n >= d+3");
            std::vector<FamilySpec> claimed;
            for (int i = 3; i <= d - 1; ++i) claimed.push_back(FamilySpec::t_ndi(n, d, i));
            std::set<CanonicalCode> excluded{
                canonical_code(build_family(FamilySpec::t_ndi(n, d, 2)).graph)};
            ClaimOutcome out = audit_extremal(id, cell, claimed, f, &excluded);
            out.notes.insert(out.notes.begin(), "audited over the class minus the T* class");
            return out;
        }
        case ClaimId::thm6_1: {
            if (d < 3 || n < d + 3)
                return not_applicable(id, n, d, "needs d >= 3 and n >= d+3");
            return audit_extremal(id, cell, {FamilySpec::t_ndi(n, d, 2)}, f);
        }
        case ClaimId::thm2: {
            if (d != 2 || n < 4) return not_applicable(id, n, d, "needs d = 2 and n >= 4");
            return audit_extremal(id, cell, {FamilySpec::sn_plus(n)}, f);
        }
        case ClaimId::thm3: {
            if (d != 3 || n < 5) return not_applicable(id, n, d, "needs d = 3 and n >= 5");
            return audit_extremal(id, cell, {FamilySpec::cn(n, n - 4, 1, 0)}, f);
        }
        case ClaimId::thm4: {
            if (d < 4 || n != d + 2)
                return not_applicable(id, n, d, "needs d >= 4 and n = d+2");
            return audit_extremal(id, cell, {FamilySpec::u_nd(n, d)}, f);
        }
        case ClaimId::thm5: {
            if (d < 4) return not_applicable(id, n, d, "needs d >= 4");
            return audit_extremal(id, cell, {FamilySpec::u_nd(n, d)}, f);
        }
        case ClaimId::lem2: {
            if (d < 4 || n < d + 3)
                return not_applicable(id, n, d, "needs d >= 4 and n >= d+3");
            return audit_lem2(n, d, f);
        }
        case ClaimId::lem3:
            if (!lemma_window(n, d)) return not_applicable(id, n, d, "needs 4 <= d <= n-3");
            return audit_lem3(cell);
        case ClaimId::lem4:
            if (!lemma_window(n, d)) return not_applicable(id, n, d, "needs 4 <= d <= n-3");
            return audit_lem4(cell);
        case ClaimId::lem5:
            if (!lemma_window(n, d)) return not_applicable(id, n, d, "needs 4 <= d <= n-3");
            return audit_lem5(cell);
    }
    throw std::logic_error("unreachable claim id");
}

Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, edges);
}

CandidateRow candidate_row(const FamilySpec& spec, const DegreeWeightFunction& f, int cell_n,
                           int cell_d) {
    CandidateRow row;
    row.spec = spec;
    BuiltFamily built = build_family(spec);
    row.built_order = built.graph.order();
    row.built_diameter = diameter(built.graph);
    switch (classify(built.graph)) {
        case GraphClass::tree: row.built_class = "tree"; break;
        case GraphClass::unicyclic: row.built_class = "unicyclic"; break;
        default: row.built_class = "other"; break;
    }
    row.built_value = bid_value(built.graph, f);
    if (has_closed_form(spec)) {
        row.closed_form = closed_form_bid(spec, f);
        row.match = *row.closed_form == *row.built_value;
    }
    std::string mismatch;
    if (row.built_order != cell_n)
        mismatch += "order " + std::to_string(row.built_order) + " != n; ";
    if (row.built_diameter != cell_d)
        mismatch += "diameter " + std::to_string(row.built_diameter) + " != d; ";
    if (!mismatch.empty()) row.annotation = mismatch + "outside this cell's class";
    return row;
}

CandidateRow inapplicable_row(const FamilySpec& spec, const std::string& why) {
    CandidateRow row;
    row.spec = spec;
    row.applicable = false;
    row.annotation = why;
    return row;
}

}  // namespace

std::string class_kind_name(ClassKind cls) {
    return cls == ClassKind::trees ? "trees" : "unicyclic";
}

ClassKind parse_class_kind(const std::string& name) {
    if (name == "trees") return ClassKind::trees;
    if (name == "unicyclic") return ClassKind::unicyclic;
    throw std::invalid_argument("unknown graph class: " + name);
}

std::string claim_name(ClaimId id) {
    switch (id) {
        case ClaimId::thm1: return "thm1";
        case ClaimId::thm6_1: return "thm6_1";
        case ClaimId::thm2: return "thm2";
        case ClaimId::thm3: return "thm3";
        case ClaimId::thm4: return "thm4";
        case ClaimId::thm5: return "thm5";
        case ClaimId::lem2: return "lem2";
        case ClaimId::lem3: return "lem3";
        case ClaimId::lem4: return "lem4";
        case ClaimId::lem5: return "lem5";
    }
    throw std::logic_error("unreachable claim id");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::refuted: return "refuted";
        case Verdict::not_applicable: return "not-applicable";
    }
    throw std::logic_error("unreachable verdict");
}

ArgmaxResult argmax_over_class(ClassKind cls, int n, int d, const DegreeWeightFunction& f,
                               int threads) {
    return argmax_of(make_cell(cls, n, d, f, threads));
}

ClaimOutcome audit_claim(ClaimId id, int n, int d, const DegreeWeightFunction& f, int threads) {
    if (id == ClaimId::lem2) {
        // Pure family comparison, no enumeration involved.
        CellData cell;
        cell.n = n;
        cell.d = d;
        return audit_claim_on_cell(id, cell, f);
    }
    ClassKind cls = (id == ClaimId::thm1 || id == ClaimId::thm6_1) ? ClassKind::trees
                                                                   : ClassKind::unicyclic;
    CellData cell = make_cell(cls, n, d, f, threads);
    return audit_claim_on_cell(id, cell, f);
}

std::vector<CandidateRow> compare_candidates(ClassKind cls, int n, int d,
                                             const DegreeWeightFunction& f) {
    std::vector<CandidateRow> rows;
    if (cls == ClassKind::trees) {
        if (n < d + 3) {
            rows.push_back(inapplicable_row(FamilySpec::t_ndi(n, d, 2), "needs n >= d+3"));
            return rows;
        }
        for (int i = 2; i <= d; ++i) rows.push_back(candidate_row(FamilySpec::t_ndi(n, d, i), f, n, d));
        rows.push_back(candidate_row(FamilySpec::t1(n, d), f, n, d));
        if (d >= 5) {
            for (int i = 4; i <= d - 1; ++i)
                rows.push_back(candidate_row(FamilySpec::t2i(n, d, i), f, n, d));
        } else {
            rows.push_back(inapplicable_row(FamilySpec::t2i(n, d, 4),
                                            "4 <= i <= d-1 is empty at d=" + std::to_string(d)));
        }
        rows.push_back(candidate_row(FamilySpec::t3(n, d), f, n, d));
        return rows;
    }
    if (d == 2) {
        if (n >= 4) rows.push_back(candidate_row(FamilySpec::sn_plus(n), f, n, d));
        return rows;
    }
    if (d == 3) {
        if (n >= 5) {
            CandidateRow an = candidate_row(FamilySpec::an(n), f, n, d);
            an.annotation = "literal definition yields order n+3 and diameter 4; "
                            "closed form targets an n-vertex graph; " + an.annotation;
            rows.push_back(an);
        }
        for (int b = 0; 4 + b + b <= n; ++b) {
            int a = n - 4 - b;
            if (a < std::max(b, 1)) continue;
            rows.push_back(candidate_row(FamilySpec::bn(n, a, b), f, n, d));
        }
        for (int b = 1; b <= n - 3; ++b) {
            for (int c = 0; c <= b; ++c) {
                int a = n - 3 - b - c;
                if (a < b) continue;
                rows.push_back(candidate_row(FamilySpec::cn(n, a, b, c), f, n, d));
            }
        }
        if (n >= 5) {
            for (int b = 0; b <= n - 5; ++b)
                rows.push_back(candidate_row(FamilySpec::dn(n, n - 5 - b, b), f, n, d));
        }
        return rows;
    }
    rows.push_back(candidate_row(FamilySpec::u_nd(n, d), f, n, d));
    return rows;
}

VerificationReport run_verification(ClassKind cls, int n_max, const DegreeWeightFunction& f,
                                    int threads) {
    VerificationReport report;
    report.cls = cls;
    report.index_id = f.id;
    report.n_max = n_max;
    int n_lo = cls == ClassKind::trees ? 6 : 4;
    for (int n = n_lo; n <= n_max; ++n) {
        int d_lo = cls == ClassKind::trees ? 3 : 2;
        int d_hi = cls == ClassKind::trees ? n - 3 : n - 2;
        for (int d = d_lo; d <= d_hi; ++d) {
            CellData cell = make_cell(cls, n, d, f, threads);
            CellReport cr;
            cr.n = n;
            cr.d = d;
            cr.count = static_cast<long long>(cell.graphs.size());
            report.graphs_enumerated += cr.count;
            report.values_evaluated += cr.count;
            if (cr.count > 0) {
                ArgmaxResult res = argmax_of(cell);
                cr.max_value = res.max_value;
                cr.argmax = res.argmax;
            }
            for (ClaimId id : claims_for(cls)) {
                ClaimOutcome outcome = audit_claim_on_cell(id, cell, f);
                switch (outcome.verdict) {
                    case Verdict::confirmed: ++report.confirmed; break;
                    case Verdict::refuted: ++report.refuted; break;
                    case Verdict::not_applicable: ++report.not_applicable; break;
                }
                cr.claims.push_back(std::move(outcome));
            }
            cr.candidates = compare_candidates(cls, n, d, f);
            if (cls == ClassKind::unicyclic && (d == 2 || d == 3)) {
                std::map<CanonicalCode, std::string> labels;
                if (d == 2) {
                    if (n == 4) labels[canonical_code(cycle_graph(4))] = "C4";
                    if (n == 5) labels[canonical_code(cycle_graph(5))] = "C5";
                    if (n >= 4)
                        labels[canonical_code(build_family(FamilySpec::sn_plus(n)).graph)] =
                            "Sn_plus";
                } else {
                    if (n == 6) labels[canonical_code(cycle_graph(6))] = "C6";
                    if (n == 7) labels[canonical_code(cycle_graph(7))] = "C7";
                    for (const auto& row : cr.candidates) {
                        if (!row.applicable || row.spec.family == FamilyId::An) continue;
                        labels[canonical_code(build_family(row.spec).graph)] = row.spec.label();
                    }
                }
                std::map<std::string, long long> census;
                for (const auto& code : cell.codes) {
                    auto it = labels.find(code);
                    ++census[it == labels.end() ? "other" : it->second];
                }
                for (const auto& [label, count] : census) cr.shapes.push_back({label, count});
            }
            report.cells.push_back(std::move(cr));
        }
    }
    return report;
}

namespace {

ordered_json value_json(const Rational& r) {
    return ordered_json{{"fraction", fraction_string(r)}, {"decimal", decimal_string(r)}};
}

ordered_json evidence_json(const GraphEvidence& e) {
    return ordered_json{{"code_hex", e.code.hex()},
                        {"g6", e.g6},
                        {"value", fraction_string(e.value)},
                        {"decimal", decimal_string(e.value)}};
}

ordered_json spec_json(const FamilySpec& spec) {
    ordered_json params = ordered_json::object();
    for (const char* key : {"n", "d", "i", "a", "b", "c"}) {
        auto it = spec.params.find(key);
        if (it != spec.params.end()) params[key] = it->second;
    }
    return ordered_json{{"family", family_name(spec.family)}, {"params", params}};
}

ordered_json claim_json(const ClaimOutcome& c) {
    ordered_json j;
    j["id"] = claim_name(c.id);
    j["n"] = c.n;
    j["d"] = c.d;
    j["verdict"] = verdict_name(c.verdict);
    j["claimed"] = ordered_json::array();
    for (const auto& m : c.claimed) {
        ordered_json e = spec_json(m.spec);
        e["evidence"] = evidence_json(m.evidence);
        j["claimed"].push_back(e);
    }
    j["argmax"] = ordered_json::array();
    for (const auto& e : c.argmax) j["argmax"].push_back(evidence_json(e));
    j["counterexample"] = c.counterexample ? evidence_json(*c.counterexample) : ordered_json();
    j["gap"] = c.gap ? ordered_json(fraction_string(*c.gap)) : ordered_json();
    if (!c.inequalities.empty()) {
        j["inequalities"] = ordered_json::array();
        for (const auto& row : c.inequalities) {
            j["inequalities"].push_back(ordered_json{{"lhs", spec_json(row.lhs)},
                                                     {"rhs", spec_json(row.rhs)},
                                                     {"lhs_value", fraction_string(row.lhs_value)},
                                                     {"rhs_value", fraction_string(row.rhs_value)},
                                                     {"sign", row.sign}});
        }
    }
    j["notes"] = c.notes;
    return j;
}

ordered_json candidate_json(const CandidateRow& row) {
    ordered_json j = spec_json(row.spec);
    j["applicable"] = row.applicable;
    if (row.applicable) {
        j["built_order"] = row.built_order;
        j["built_diameter"] = row.built_diameter;
        j["built_class"] = row.built_class;
        j["built_value"] = fraction_string(*row.built_value);
        j["closed_form"] = row.closed_form ? ordered_json(fraction_string(*row.closed_form))
                                           : ordered_json();
        j["match"] = row.match ? ordered_json(*row.match) : ordered_json();
    }
    if (!row.annotation.empty()) j["annotation"] = row.annotation;
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["schema_version"] = report.schema_version;
    j["class"] = class_kind_name(report.cls);
    j["index"] = report.index_id;
    j["n_max"] = report.n_max;
    j["cells"] = ordered_json::array();
    for (const auto& cell : report.cells) {
        ordered_json c;
        c["n"] = cell.n;
        c["d"] = cell.d;
        c["count"] = cell.count;
        c["max"] = cell.max_value ? value_json(*cell.max_value) : ordered_json();
        c["argmax"] = ordered_json::array();
        for (const auto& e : cell.argmax) c["argmax"].push_back(evidence_json(e));
        c["claims"] = ordered_json::array();
        for (const auto& cl : cell.claims) c["claims"].push_back(claim_json(cl));
        c["candidates"] = ordered_json::array();
        for (const auto& row : cell.candidates) c["candidates"].push_back(candidate_json(row));
        if (!cell.shapes.empty()) {
            c["shapes"] = ordered_json::array();
            for (const auto& s : cell.shapes)
                c["shapes"].push_back(ordered_json{{"label", s.label}, {"count", s.count}});
        }
        j["cells"].push_back(std::move(c));
    }
    j["totals"] = ordered_json{{"cells", report.cells.size()},
                               {"graphs_enumerated", report.graphs_enumerated},
                               {"values_evaluated", report.values_evaluated},
                               {"claims_confirmed", report.confirmed},
                               {"claims_refuted", report.refuted},
                               {"claims_not_applicable", report.not_applicable}};
    return j.dump(2) + "\n";
}

std::string report_summary(const VerificationReport& report) {
    std::ostringstream out;
    out << "verification report: class=" << class_kind_name(report.cls)
        << " index=" << report.index_id << " n_max=" << report.n_max << "\n";
    out << "cells=" << report.cells.size() << " graphs=" << report.graphs_enumerated
        << " claims: confirmed=" << report.confirmed << " refuted=" << report.refuted
        << " not-applicable=" << report.not_applicable << "\n\n";
    for (const auto& cell : report.cells) {
        out << "  (n=" << cell.n << ",d=" << cell.d << ") size=" << cell.count;
        if (cell.max_value)
            out << " max=" << fraction_string(*cell.max_value) << " argmax=" << cell.argmax.size();
        for (const auto& cl : cell.claims)
            out << " " << claim_name(cl.id) << "=" << verdict_name(cl.verdict);
        out << "\n";
    }
    // Digest of the claimed extremal families with per-run verdicts.
    struct Line {
        ClaimId id;
        const char* scope;
        const char* family;
    };
    std::vector<Line> lines;
    if (report.cls == ClassKind::trees) {
        lines = {{ClaimId::thm6_1, "trees, d >= 3", "T*_{n,d}"},
                 {ClaimId::thm1, "trees, d >= 4 (class minus T*)", "T^i_{n,d}, 3<=i<=d-1"},
                 {ClaimId::lem2, "trees, d >= 4", "T^i beats T_1..T_3"}};
    } else {
        lines = {{ClaimId::thm2, "unicyclic, d = 2", "S_n^+"},
                 {ClaimId::thm3, "unicyclic, d = 3", "C_n^*"},
                 {ClaimId::thm4, "unicyclic, d >= 4, n = d+2", "U_{d+2,d}"},
                 {ClaimId::thm5, "unicyclic, d >= 4", "U_{n,d}"},
                 {ClaimId::lem3, "unicyclic, 4 <= d <= n-3", "cycle meets diameter paths"},
                 {ClaimId::lem4, "unicyclic, 4 <= d <= n-3", "diameter-preserving pendant"},
                 {ClaimId::lem5, "unicyclic, 4 <= d <= n-3", "pendant neighbor branching"}};
    }
    out << "\nextremal-claim digest:\n";
    for (const auto& line : lines) {
        long long confirmed = 0, refuted = 0;
        for (const auto& cell : report.cells) {
            for (const auto& cl : cell.claims) {
                if (cl.id != line.id) continue;
                if (cl.verdict == Verdict::confirmed) ++confirmed;
                if (cl.verdict == Verdict::refuted) ++refuted;
            }
        }
        out << "  " << claim_name(line.id) << " [" << line.scope << "] claimed " << line.family
            << ": confirmed " << confirmed << ", refuted " << refuted << " (of "
            << confirmed + refuted << " applicable cells)\n";
    }
    return out.str();
}

}  // namespace isix
