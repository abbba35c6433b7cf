#pragma once

#include "isix/graph.hpp"

#include <compare>
#include <string>

namespace isix {

/// Relabeling-invariant identifier of an isomorphism class. Two trees (or
/// two unicyclic graphs) have equal codes iff they are isomorphic.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const;
};

/// Canonical code for trees (centroid-rooted minimal child-code form) and
/// unicyclic graphs (dihedral-minimal sequence of rooted subtree codes hung
/// on the cycle). Throws std::invalid_argument for other graph classes.
CanonicalCode canonical_code(const Graph& g);

}  // namespace isix
