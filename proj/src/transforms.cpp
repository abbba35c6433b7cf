#include "isix/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace isix {

Graph path_lift(const Graph& g, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("path_lift: path needs at least 2 vertices");
    for (int v : path) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("path_lift: vertex out of range");
    }
    for (size_t i = 0; i < path.size(); ++i) {
        for (size_t j = i + 1; j < path.size(); ++j) {
            if (path[i] == path[j])
                throw std::invalid_argument("path_lift: repeated vertex in path");
            bool adjacent = g.has_edge(path[i], path[j]);
            if (j == i + 1 && !adjacent)
                throw std::invalid_argument("path_lift: consecutive vertices not adjacent");
            if (j > i + 1 && adjacent)
                throw std::invalid_argument("path_lift: path is not induced");
        }
    }
    int head = path.front();
    int tail = path.back();
    int before_tail = path[path.size() - 2];
    if (g.degree(tail) < 2)
        throw std::invalid_argument("path_lift: endpoint degree < 2, nothing to lift");

    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges()) {
        bool from_tail = (u == tail || v == tail);
        int other = (u == tail) ? v : u;
        if (from_tail && other != before_tail) {
            if (other == head || g.has_edge(head, other))
                throw std::invalid_argument("path_lift: rehomed edge collides at v_1");
            pairs.emplace_back(head, other);
        } else {
            pairs.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.order(), pairs);
}

Graph move_pendant(const Graph& g, int pendant, int from, int to) {
    if (pendant < 0 || pendant >= g.order() || from < 0 || from >= g.order() || to < 0 ||
        to >= g.order())
        throw std::invalid_argument("move_pendant: vertex out of range");
    if (g.degree(pendant) != 1)
        throw std::invalid_argument("move_pendant: vertex " + std::to_string(pendant) +
                                    " is not pendant");
    if (!g.has_edge(pendant, from))
        throw std::invalid_argument("move_pendant: pendant not adjacent to `from`");
    if (to == pendant) throw std::invalid_argument("move_pendant: target equals the pendant");
    if (g.has_edge(pendant, to))
        throw std::invalid_argument("move_pendant: edge to target already exists");

    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges()) {
        if ((u == pendant && v == from) || (u == from && v == pendant)) continue;
        pairs.emplace_back(u, v);
    }
    pairs.emplace_back(pendant, to);
    return Graph::from_edges(g.order(), pairs);
}

Rational bid_delta(const Graph& before, const Graph& after, const DegreeWeightFunction& f) {
    return bid_value(after, f) - bid_value(before, f);
}

}  // namespace isix
