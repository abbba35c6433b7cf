#pragma once

#include <string>
#include <utility>
#include <vector>

namespace isix {

enum class GraphClass { tree, unicyclic, other };

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// No self-loops, no multi-edges. Connectivity is not a construction
/// invariant; operations that need it (diameter, classify, ...) check it
/// at their own boundary and throw on violation.
class Graph {
public:
    /// Builds a graph from an edge list. Throws std::invalid_argument on
    /// out-of-range endpoints, self-loops, or duplicate edges (after
    /// normalizing each pair to u < v).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    /// Edges normalized to u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    Graph() = default;
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// A longest shortest path; length() equals the graph diameter.
struct DiameterPath {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

bool is_connected(const Graph& g);

/// Diameter with a witness path. Throws on disconnected input.
DiameterPath diameter_path(const Graph& g);
int diameter(const Graph& g);

/// All distinct diameter-realizing shortest paths (each reported once,
/// endpoints ordered smallest-first). Intended for structural audits at
/// desk scale.
std::vector<std::vector<int>> all_diameter_paths(const Graph& g);

/// tree iff |E| = n-1, unicyclic iff |E| = n. Throws on disconnected input.
GraphClass classify(const Graph& g);

/// The vertices of the unique cycle in traversal order, normalized under
/// rotation and reflection (starts at the smallest cycle vertex, second
/// vertex is its smaller cycle neighbor). Throws unless g is unicyclic.
std::vector<int> unique_cycle(const Graph& g);

/// Degree-1 vertices, ascending.
std::vector<int> pendant_vertices(const Graph& g);

/// Graph with vertex v removed (remaining ids shift down past v).
Graph remove_vertex(const Graph& g, int v);

}  // namespace isix
