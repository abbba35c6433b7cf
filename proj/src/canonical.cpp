#include "isix/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace isix {

namespace {

// AHU-style code of the subtree at v, entered from `parent`. Children codes
// are sorted so the result is labeling-invariant. `skip` masks vertices the
// descent must not enter (the cycle, when coding a hung subtree).
std::string rooted_code(const Graph& g, int v, int parent, const std::vector<bool>& skip) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(v)) {
        if (w == parent || skip[w]) continue;
        child_codes.push_back(rooted_code(g, w, v, skip));
    }
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// One or two centroids (two only for even order, and then adjacent).
std::vector<int> tree_centroids(const Graph& g) {
    int n = g.order();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int w : g.neighbors(u)) {
            if (w != parent[u]) {
                parent[w] = u;
                order.push_back(w);
            }
        }
    }
    for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
    std::vector<int> best;
    int best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[v];
        for (int w : g.neighbors(v)) {
            if (w != parent[v]) weight = std::max(weight, size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            best.assign(1, v);
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

std::string tree_code(const Graph& g) {
    auto centroids = tree_centroids(g);
    std::vector<bool> skip(g.order(), false);
    if (centroids.size() == 1) return "T" + rooted_code(g, centroids[0], -1, skip);
    std::string a = rooted_code(g, centroids[0], centroids[1], skip);
    std::string b = rooted_code(g, centroids[1], centroids[0], skip);
    return "D" + std::min(a + b, b + a);
}

std::string unicyclic_code(const Graph& g) {
    auto cycle = unique_cycle(g);
    int k = static_cast<int>(cycle.size());
    std::vector<bool> on_cycle(g.order(), false);
    for (int v : cycle) on_cycle[v] = true;
    std::vector<std::string> hung(k);
    for (int i = 0; i < k; ++i) hung[i] = rooted_code(g, cycle[i], -1, on_cycle);
    // Minimize over the dihedral action on the cycle.
    std::string best;
    for (int dir : {1, -1}) {
        for (int s = 0; s < k; ++s) {
            std::string cand;
            for (int t = 0; t < k; ++t) cand += hung[((s + dir * t) % k + k) % k];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return "U" + std::to_string(k) + ":" + best;
}

}  // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

CanonicalCode canonical_code(const Graph& g) {
    switch (classify(g)) {
        case GraphClass::tree:
            return {tree_code(g)};
        case GraphClass::unicyclic:
            return {unicyclic_code(g)};
        default:
            throw std::invalid_argument("canonical_code: only trees and unicyclic graphs supported");
    }
}

}  // namespace isix
