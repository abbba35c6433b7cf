#pragma once

#include "isix/canonical.hpp"
#include "isix/families.hpp"
#include "isix/indices.hpp"
#include "isix/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isix {

enum class ClassKind { trees, unicyclic };
std::string class_kind_name(ClassKind cls);
ClassKind parse_class_kind(const std::string& name);

enum class ClaimId { thm1, thm6_1, thm2, thm3, thm4, thm5, lem2, lem3, lem4, lem5 };
std::string claim_name(ClaimId id);

enum class Verdict { confirmed, refuted, not_applicable };
std::string verdict_name(Verdict v);

/// A concrete graph with its identity and value; every value stored here
/// can be recomputed from the g6 text.
struct GraphEvidence {
    CanonicalCode code;
    std::string g6;
    Rational value;
};

struct ArgmaxResult {
    long long class_size = 0;
    Rational max_value;  // meaningful iff class_size > 0
    std::vector<GraphEvidence> argmax;
};

/// Exact maximum of f over the enumerated class cell plus every attaining
/// isomorphism class. Threads only parallelize the per-graph evaluation;
/// the result is schedule independent.
ArgmaxResult argmax_over_class(ClassKind cls, int n, int d, const DegreeWeightFunction& f,
                               int threads = 1);

struct ClaimedMember {
    FamilySpec spec;
    GraphEvidence evidence;
};

/// One recorded comparison for the family-inequality audit.
struct InequalityRow {
    FamilySpec lhs;
    FamilySpec rhs;
    Rational lhs_value;
    Rational rhs_value;
    int sign;  // sign of lhs_value - rhs_value
};

/// Audited claim: confirmed / refuted with evidence, never assumed.
struct ClaimOutcome {
    ClaimId id{};
    int n = 0;
    int d = 0;
    Verdict verdict = Verdict::not_applicable;
    std::vector<ClaimedMember> claimed;
    std::vector<GraphEvidence> argmax;
    std::optional<GraphEvidence> counterexample;
    std::optional<Rational> gap;  // max value minus claimed value, when refuted
    std::vector<InequalityRow> inequalities;
    std::vector<std::string> notes;
};

ClaimOutcome audit_claim(ClaimId id, int n, int d, const DegreeWeightFunction& f,
                         int threads = 1);

/// One row of the per-cell candidate table: family member built, valued,
/// and compared against its closed form where one exists.
struct CandidateRow {
    FamilySpec spec;
    bool applicable = true;
    std::string annotation;
    int built_order = 0;
    int built_diameter = 0;
    std::string built_class;
    std::optional<Rational> built_value;
    std::optional<Rational> closed_form;
    std::optional<bool> match;
};

std::vector<CandidateRow> compare_candidates(ClassKind cls, int n, int d,
                                             const DegreeWeightFunction& f);

struct ShapeCount {
    std::string label;
    long long count = 0;
};

struct CellReport {
    int n = 0;
    int d = 0;
    long long count = 0;
    std::optional<Rational> max_value;
    std::vector<GraphEvidence> argmax;
    std::vector<ClaimOutcome> claims;
    std::vector<CandidateRow> candidates;
    std::vector<ShapeCount> shapes;  // named-shape census for unicyclic d = 2, 3
};

/// Whole-run report. Deliberately holds no wall-clock or thread-count
/// data so runs with different schedules serialize identically.
struct VerificationReport {
    int schema_version = 1;
    ClassKind cls = ClassKind::trees;
    std::string index_id;
    int n_max = 0;
    std::vector<CellReport> cells;
    long long graphs_enumerated = 0;
    long long values_evaluated = 0;
    long long confirmed = 0;
    long long refuted = 0;
    long long not_applicable = 0;
};

/// Audits every cell: trees over 6 <= n <= n_max, 3 <= d <= n-3;
/// unicyclic over 4 <= n <= n_max, 2 <= d <= n-2.
VerificationReport run_verification(ClassKind cls, int n_max, const DegreeWeightFunction& f,
                                    int threads = 1);

/// Versioned structured document; byte-identical for identical inputs
/// regardless of thread count.
std::string report_to_json(const VerificationReport& report);

/// Human-readable summary: per-cell table plus the claimed-extremal-family
/// digest with confirmed/refuted annotations.
std::string report_summary(const VerificationReport& report);

}  // namespace isix
