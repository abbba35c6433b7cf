#include "isix/indices.hpp"
#include "isix/enumerate.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace isix;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph s4_plus() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

}  // namespace

TEST_CASE("eval_isi_f") {
    CHECK(eval_isi_f(2, 2) == rational(1));
    CHECK(eval_isi_f(1, 2) == rational(2, 3));
    CHECK(eval_isi_f(3, 5) == rational(15, 8));
    CHECK_THROWS_AS(eval_isi_f(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(eval_isi_f(3, -1), std::invalid_argument);
}

TEST_CASE("fraction and decimal rendering") {
    CHECK(fraction_string(rational(7, 3)) == "7/3");
    CHECK(fraction_string(rational(4)) == "4");
    CHECK(fraction_string(rational(-1, 2)) == "-1/2");
    CHECK(decimal_string(rational(7, 3)) == "2.333333333333");
    CHECK(decimal_string(rational(83, 20)) == "4.15");
    CHECK(decimal_string(rational(-1, 2)) == "-0.5");
    CHECK(decimal_string(rational(4)) == "4");
}

TEST_CASE("edge degree histograms") {
    auto h = edge_degree_histogram(path_graph(4));
    CHECK(h.counts == decltype(h.counts){{{1, 2}, 2}, {{2, 2}, 1}});

    auto star5 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(edge_degree_histogram(star5).counts == decltype(h.counts){{{1, 4}, 4}});

    auto hs = edge_degree_histogram(s4_plus());
    CHECK(hs.counts == decltype(h.counts){{{1, 3}, 1}, {{2, 2}, 1}, {{2, 3}, 2}});
    CHECK(hs.total() == 4);
}

TEST_CASE("bid values") {
    CHECK(bid_value(cycle_graph(4), isi_function()) == rational(4));
    CHECK(bid_value(path_graph(4), isi_function()) == rational(7, 3));
    CHECK(bid_value(s4_plus(), isi_function()) == rational(83, 20));
}

TEST_CASE("bid_from_histogram") {
    CHECK(bid_from_histogram(edge_degree_histogram(cycle_graph(4)), isi_function()) ==
          rational(4));
    CHECK(bid_from_histogram(EdgeDegreeHistogram{}, isi_function()) == rational(0));
    CHECK(bid_from_histogram(edge_degree_histogram(path_graph(4)), isi_function()) ==
          rational(7, 3));
}

TEST_CASE("edge-sum and histogram forms agree on every enumerated graph, n <= 11") {
    std::vector<const DegreeWeightFunction*> fns = {&isi_function(), &zagreb1_function(),
                                                    &zagreb2_function()};
    for (int n = 1; n <= 11; ++n) {
        for (const Graph& g : free_trees(n)) {
            auto h = edge_degree_histogram(g);
            for (auto* f : fns) CHECK(bid_value(g, *f) == bid_from_histogram(h, *f));
        }
    }
    for (int n = 3; n <= 11; ++n) {
        for (const Graph& g : unicyclic_graphs(n)) {
            auto h = edge_degree_histogram(g);
            for (auto* f : fns) CHECK(bid_value(g, *f) == bid_from_histogram(h, *f));
        }
    }
}

TEST_CASE("isi function window properties") {
    for (int x = 1; x <= 200; ++x) {
        for (int y = 1; y <= 200; ++y) {
            CHECK(eval_isi_f(x, y) == eval_isi_f(y, x));
            CHECK(eval_isi_f(x, y) < rational(std::min(x, y)));
        }
    }
    for (int x = 1; x < 200; ++x) {
        for (int y = 1; y <= 200; ++y) CHECK(eval_isi_f(x + 1, y) > eval_isi_f(x, y));
    }
}

TEST_CASE("builtin function registry") {
    CHECK(builtin_function("isi").id == "isi");
    CHECK(builtin_function("zagreb1").eval(3, 4) == rational(7));
    CHECK(builtin_function("zagreb2").eval(3, 4) == rational(12));
    CHECK_THROWS_AS(builtin_function("nope"), std::invalid_argument);
    CHECK(builtin_function_ids().size() == 3);
}
