#include "isix/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace isix {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 0) throw std::invalid_argument("graph order must be positive");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw std::invalid_argument("duplicate edge in input");
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

// BFS distances from s; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue;
    queue.reserve(g.order());
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

}  // namespace

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DiameterPath diameter_path(const Graph& g) {
    require_connected(g, "diameter");
    int best_s = 0, best_t = 0, best = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int t = 0; t < g.order(); ++t) {
            if (dist[t] > best) {
                best = dist[t];
                best_s = s;
                best_t = t;
            }
        }
    }
    // Recover one shortest path from best_s to best_t.
    auto dist = bfs_distances(g, best_s);
    DiameterPath path;
    int cur = best_t;
    path.vertices.push_back(cur);
    while (cur != best_s) {
        for (int w : g.neighbors(cur)) {
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.vertices.push_back(cur);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

int diameter(const Graph& g) { return diameter_path(g).length(); }

std::vector<std::vector<int>> all_diameter_paths(const Graph& g) {
    require_connected(g, "diameter");
    int n = g.order();
    std::vector<std::vector<int>> dist(n);
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        dist[s] = bfs_distances(g, s);
        diam = std::max(diam, *std::max_element(dist[s].begin(), dist[s].end()));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (dist[s][t] != diam) continue;
            // Walk the shortest-path DAG from s toward t.
            path.assign(1, s);
            auto dfs = [&](auto&& self, int u) -> void {
                if (u == t) {
                    out.push_back(path);
                    return;
                }
                for (int w : g.neighbors(u)) {
                    if (dist[s][w] == dist[s][u] + 1 && dist[w][t] == dist[s][t] - dist[s][w]) {
                        path.push_back(w);
                        self(self, w);
                        path.pop_back();
                    }
                }
            };
            dfs(dfs, s);
        }
    }
    return out;
}

GraphClass classify(const Graph& g) {
    require_connected(g, "classify");
    if (g.edge_count() == g.order() - 1) return GraphClass::tree;
    if (g.edge_count() == g.order()) return GraphClass::unicyclic;
    return GraphClass::other;
}

std::vector<int> unique_cycle(const Graph& g) {
    if (classify(g) != GraphClass::unicyclic)
        throw std::invalid_argument("unique_cycle: graph is not unicyclic");
    // Peel pendant vertices; what survives is exactly the cycle.
    std::vector<int> deg(g.order());
    std::vector<int> stack;
    for (int v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) stack.push_back(v);
    }
    std::vector<bool> removed(g.order(), false);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        removed[v] = true;
        for (int w : g.neighbors(v)) {
            if (!removed[w] && --deg[w] == 1) stack.push_back(w);
        }
    }
    int start = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (!removed[v]) {
            start = v;
            break;
        }
    }
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (!removed[w] && w != prev) {
                next = w;
                break;
            }
        }
        // Prefer the smaller neighbor on the first step (reflection normalization).
        if (prev == -1) {
            for (int w : g.neighbors(cur)) {
                if (!removed[w] && w < next) next = w;
            }
        }
        prev = cur;
        cur = next;
        if (cur != start) cycle.push_back(cur);
    } while (cur != start);
    return cycle;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) out.push_back(v);
    }
    return out;
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        pairs.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph::from_edges(g.order() - 1, pairs);
}

}  // namespace isix
