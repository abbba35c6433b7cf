#pragma once

// Test-only oracles, independent of the generation paths they check.

#include "isix/graph.hpp"

#include <set>
#include <string>
#include <vector>

namespace isix::testing {

/// Labeled tree on {0..n-1} from a Pruefer sequence (length n-2), n >= 3.
Graph prufer_decode(int n, const std::vector<int>& seq);

/// One pass over every labeled tree on n vertices (all n^(n-2) Pruefer
/// sequences), deduplicated by canonical code. Practical up to n = 9.
struct PruferSweep {
    std::set<std::string> codes;
    std::vector<Graph> representatives;  // first labeled tree seen per class
};
PruferSweep prufer_sweep(int n);

/// Unicyclic canonical codes from the labeled tree+edge construction:
/// every tree representative, plus every non-edge.
std::set<std::string> tree_plus_edge_unicyclic_codes(const std::vector<Graph>& trees);

/// Fully independent canonical form: lexicographically smallest adjacency
/// bitstring over all n! vertex permutations. Practical up to n = 8.
std::string brute_force_canonical(const Graph& g);

}  // namespace isix::testing
