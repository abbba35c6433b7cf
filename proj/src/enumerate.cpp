#include "isix/enumerate.hpp"

#include "isix/canonical.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace isix {

namespace {

// Free trees are generated directly in canonical form via the
// Wright-Richmond-Odlyzko-McKay successor method over level sequences
// (vertex depths in preorder, root at depth 0). A sequence is a valid free
// tree iff the root's first subtree is no higher than the rest of the tree,
// with size and lexicographic tie-breaks; invalid candidates jump straight
// to the next valid one.
using Layout = std::vector<int>;

// Beyer-Hedetniemi successor for rooted trees, optionally truncated at p.
std::optional<Layout> next_rooted_tree(const Layout& pred, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(pred.size()) - 1;
        while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout result = pred;
    for (size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

// left = depths (shifted by one) of the root's first subtree, rest = the
// remainder including the root.
void split_layout(const Layout& layout, Layout& left, Layout& rest) {
    size_t m = layout.size();
    bool one_found = false;
    for (size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    left.clear();
    rest.clear();
    for (size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    rest.push_back(0);
    for (size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Returns `candidate` if it encodes a canonical free tree, otherwise the
// next layout that does.
std::optional<Layout> next_free_tree(const Layout& candidate) {
    Layout left, rest;
    split_layout(candidate, left, rest);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) valid = false;
        else if (left.size() == rest.size() && left > rest) valid = false;
    }
    if (valid) return candidate;

    int p = static_cast<int>(left.size());
    auto next = next_rooted_tree(candidate, p);
    if (!next) return std::nullopt;
    Layout nc = *next;
    if (candidate[p] > 2) {
        Layout nl, nr;
        split_layout(nc, nl, nr);
        int h = *std::max_element(nl.begin(), nl.end());
        for (int t = 0; t <= h; ++t) nc[nc.size() - (h + 1) + t] = t + 1;
    }
    return nc;
}

Graph layout_to_graph(const Layout& layout) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return Graph::from_edges(static_cast<int>(layout.size()), edges);
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 16) throw std::out_of_range("free_trees: supported range is 1 <= n <= 16");
    if (n == 1) {
        visit(Graph::from_edges(1, {}));
        return;
    }
    // Start at the path graph rooted at its center.
    Layout layout;
    for (int k = 0; k <= n / 2; ++k) layout.push_back(k);
    for (int k = 1; k < (n + 1) / 2; ++k) layout.push_back(k);
    std::optional<Layout> cur = layout;
    while (cur) {
        cur = next_free_tree(*cur);
        if (!cur) break;
        visit(layout_to_graph(*cur));
        cur = next_rooted_tree(*cur);
    }
}

std::vector<Graph> free_trees(int n) {
    std::vector<Graph> out;
    for_each_free_tree(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> trees_with_diameter(int n, int d) {
    if (d < 2 || d > n - 1)
        throw std::invalid_argument("trees_with_diameter: infeasible (n,d), need 2 <= d <= n-1");
    std::vector<Graph> out;
    for_each_free_tree(n, [&](const Graph& g) {
        if (diameter(g) == d) out.push_back(g);
    });
    return out;
}

std::vector<Graph> unicyclic_graphs(int n) {
    if (n < 3 || n > 12)
        throw std::out_of_range("unicyclic_graphs: supported range is 3 <= n <= 12");
    std::vector<Graph> out;
    std::set<CanonicalCode> seen;
    for_each_free_tree(n, [&](const Graph& tree) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (tree.has_edge(u, v)) continue;
                auto edges = tree.edges();
                edges.emplace_back(u, v);
                Graph g = Graph::from_edges(n, edges);
                if (seen.insert(canonical_code(g)).second) out.push_back(g);
            }
        }
    });
    return out;
}

std::vector<Graph> unicyclic_with_diameter(int n, int d) {
    if (d < 1 || d > n - 2)
        throw std::invalid_argument(
            "unicyclic_with_diameter: infeasible (n,d), need 1 <= d <= n-2");
    std::vector<Graph> out;
    for (const Graph& g : unicyclic_graphs(n)) {
        if (diameter(g) == d) out.push_back(g);
    }
    return out;
}

}  // namespace isix
