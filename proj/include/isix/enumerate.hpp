#pragma once

#include "isix/graph.hpp"

#include <functional>
#include <vector>

namespace isix {

/// Streams every isomorphism class of trees on n vertices exactly once,
/// in the deterministic order of the level-sequence successor method.
/// Supported range 1 <= n <= 16.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> free_trees(int n);

/// Trees on n vertices with diameter exactly d. Requires 2 <= d <= n-1.
std::vector<Graph> trees_with_diameter(int n, int d);

/// Every isomorphism class of connected unicyclic graphs on n vertices
/// exactly once (tree + one non-edge, deduplicated by canonical code),
/// in deterministic discovery order. Supported range 3 <= n <= 12.
std::vector<Graph> unicyclic_graphs(int n);

/// Unicyclic graphs with diameter exactly d. Requires 1 <= d <= n-2.
/// May be empty (e.g. d = 1 for n > 3).
std::vector<Graph> unicyclic_with_diameter(int n, int d);

}  // namespace isix
