#pragma once

#include "isix/graph.hpp"
#include "isix/indices.hpp"
#include "isix/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace isix {

enum class FamilyId { T_ndi, T1, T2i, T3, Sn_plus, An, Bn, Cn, Dn, U_nd };

std::string family_name(FamilyId id);
FamilyId parse_family_id(const std::string& name);

/// A named parametric extremal-family descriptor.
struct FamilySpec {
    FamilyId family;
    std::map<std::string, int> params;  // keys among n, d, i, a, b, c

    int param(const std::string& key) const;

    static FamilySpec t_ndi(int n, int d, int i);
    static FamilySpec t1(int n, int d);
    static FamilySpec t2i(int n, int d, int i);
    static FamilySpec t3(int n, int d);
    static FamilySpec sn_plus(int n);
    static FamilySpec an(int n);
    static FamilySpec bn(int n, int a, int b);
    static FamilySpec cn(int n, int a, int b, int c);
    static FamilySpec dn(int n, int a, int b);
    static FamilySpec u_nd(int n, int d);

    std::string label() const;  // e.g. "Bn(n=8,a=3,b=1)"
};

/// Constructed family member plus the map from definition vertex names
/// (u1..u_{d+1}, v1.., w, p1.., ...) to dense vertex ids.
///
/// Labeling convention: skeleton vertices first (path u1..u_{d+1} or
/// v1..v_{d+1} as ids 0..d; cycle vertices in definition order from id 0),
/// then extra vertices in definition order.
struct BuiltFamily {
    Graph graph;
    std::map<std::string, int> vertex_names;
};

/// Builds the family member; throws std::invalid_argument when the
/// parameter constraints are violated. An is built from the literal
/// definition text (one pendant per 4-cycle vertex plus n-5 more on one
/// vertex), which yields n+3 vertices; the verifier reports the mismatch.
BuiltFamily build_family(const FamilySpec& spec);

bool has_closed_form(const FamilySpec& spec);

/// Evaluates the family's closed-form value under f. Only T_ndi, Sn_plus,
/// An, Bn(b=0), Cn(n-4,1,0), Dn(b=0) and U_nd carry closed forms; for
/// U_nd the path constant uses the (d-5) coefficient that matches direct
/// edge accounting. Throws when no closed form exists for the spec.
Rational closed_form_bid(const FamilySpec& spec, const DegreeWeightFunction& f);

struct FamilyTemplate {
    FamilyId id;
    std::string name;
    std::vector<std::string> params;
    std::string constraints;
};

/// The complete 10-family catalog.
const std::vector<FamilyTemplate>& list_families();

}  // namespace isix
