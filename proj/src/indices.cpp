#include "isix/indices.hpp"

#include <stdexcept>

namespace isix {

Rational eval_isi_f(int x, int y) {
    if (x < 1 || y < 1) throw std::invalid_argument("eval_isi_f: degrees must be positive");
    return Rational(BigInt(static_cast<long long>(x) * y), BigInt(x + y));
}

const DegreeWeightFunction& isi_function() {
    static const DegreeWeightFunction f{"isi", [](int x, int y) { return eval_isi_f(x, y); }};
    return f;
}

const DegreeWeightFunction& zagreb1_function() {
    static const DegreeWeightFunction f{"zagreb1", [](int x, int y) {
                                            if (x < 1 || y < 1)
                                                throw std::invalid_argument(
                                                    "zagreb1: degrees must be positive");
                                            return rational(x + y);
                                        }};
    return f;
}

const DegreeWeightFunction& zagreb2_function() {
    static const DegreeWeightFunction f{"zagreb2", [](int x, int y) {
                                            if (x < 1 || y < 1)
                                                throw std::invalid_argument(
                                                    "zagreb2: degrees must be positive");
                                            return rational(static_cast<long long>(x) * y);
                                        }};
    return f;
}

const DegreeWeightFunction& builtin_function(const std::string& id) {
    if (id == "isi") return isi_function();
    if (id == "zagreb1") return zagreb1_function();
    if (id == "zagreb2") return zagreb2_function();
    throw std::invalid_argument("unknown index function id: " + id);
}

std::vector<std::string> builtin_function_ids() { return {"isi", "zagreb1", "zagreb2"}; }

long long EdgeDegreeHistogram::total() const {
    long long t = 0;
    for (const auto& [key, c] : counts) t += c;
    return t;
}

EdgeDegreeHistogram edge_degree_histogram(const Graph& g) {
    EdgeDegreeHistogram h;
    for (auto [u, v] : g.edges()) {
        int x = g.degree(u), y = g.degree(v);
        if (x > y) std::swap(x, y);
        ++h.counts[{x, y}];
    }
    return h;
}

Rational bid_value(const Graph& g, const DegreeWeightFunction& f) {
    Rational sum = 0;
    for (auto [u, v] : g.edges()) sum += f.eval(g.degree(u), g.degree(v));
    return sum;
}

Rational bid_from_histogram(const EdgeDegreeHistogram& h, const DegreeWeightFunction& f) {
    Rational sum = 0;
    for (const auto& [key, count] : h.counts) sum += Rational(count) * f.eval(key.first, key.second);
    return sum;
}

}  // namespace isix
