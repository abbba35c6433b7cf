#pragma once

#include "isix/graph.hpp"
#include "isix/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace isix {

/// Symmetric weight on positive integer degree pairs. All built-in
/// functions are rational-valued, so comparisons stay exact everywhere.
struct DegreeWeightFunction {
    std::string id;
    std::function<Rational(int, int)> eval;
};

/// f(x,y) = xy/(x+y). Throws std::invalid_argument unless x, y >= 1.
Rational eval_isi_f(int x, int y);

const DegreeWeightFunction& isi_function();
const DegreeWeightFunction& zagreb1_function();  // x + y (generic-path cross-check)
const DegreeWeightFunction& zagreb2_function();  // x * y (generic-path cross-check)

/// Lookup by id ("isi", "zagreb1", "zagreb2"). Throws on unknown id.
const DegreeWeightFunction& builtin_function(const std::string& id);
std::vector<std::string> builtin_function_ids();

/// m_{x,y}: number of edges whose endpoint degrees are {x, y}, keyed x <= y.
struct EdgeDegreeHistogram {
    std::map<std::pair<int, int>, long long> counts;
    long long total() const;
};

EdgeDegreeHistogram edge_degree_histogram(const Graph& g);

/// Sum of f over the edges' endpoint degrees.
Rational bid_value(const Graph& g, const DegreeWeightFunction& f);

/// Same value computed from the histogram form.
Rational bid_from_histogram(const EdgeDegreeHistogram& h, const DegreeWeightFunction& f);

}  // namespace isix
