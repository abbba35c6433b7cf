#include "isix/conditions.hpp"
#include "isix/enumerate.hpp"
#include "isix/families.hpp"
#include "isix/graph6.hpp"
#include "isix/indices.hpp"
#include "isix/transforms.hpp"
#include "isix/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using isix::Graph;
using ordered_json = nlohmann::ordered_json;

int default_threads() {
    if (const char* env = std::getenv("ISIX_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::string> read_g6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

isix::FamilySpec spec_from_flags(const std::string& family, int n, int d, int i, int a, int b,
                                 int c) {
    isix::FamilySpec spec;
    spec.family = isix::parse_family_id(family);
    const auto& tmpl = isix::list_families();
    for (const auto& t : tmpl) {
        if (t.id != spec.family) continue;
        for (const auto& key : t.params) {
            int value;
            if (key == "n") value = n;
            else if (key == "d") value = d;
            else if (key == "i") value = i;
            else if (key == "a") value = a;
            else if (key == "b") value = b;
            else value = c;
            if (value == INT_MIN)
                throw std::runtime_error("family " + family + " requires --" + key);
            spec.params[key] = value;
        }
    }
    return spec;
}

int cmd_construct(const std::string& family, int n, int d, int i, int a, int b, int c,
                  const std::string& out_path, const std::string& map_path) {
    auto spec = spec_from_flags(family, n, d, i, a, b, c);
    auto built = isix::build_family(spec);
    write_text(out_path, isix::encode_g6(built.graph) + "\n");
    if (!map_path.empty()) {
        std::string text;
        for (const auto& [name, id] : built.vertex_names)
            text += name + " " + std::to_string(id) + "\n";
        write_text(map_path, text);
    }
    std::cout << spec.label() << ": n=" << built.graph.order()
              << " m=" << built.graph.edge_count() << " -> " << out_path << "\n";
    return 0;
}

int cmd_compute(const std::string& input, const std::string& index, const std::string& format) {
    const auto& f = isix::builtin_function(index);
    auto lines = read_g6_lines(input);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& line : lines) {
            Graph g = isix::decode_g6(line);
            auto v = isix::bid_value(g, f);
            arr.push_back(ordered_json{{"g6", line},
                                       {"index", index},
                                       {"n", g.order()},
                                       {"value", isix::fraction_string(v)},
                                       {"decimal", isix::decimal_string(v)}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "g6,index,n,value,decimal\n";
        for (const auto& line : lines) {
            Graph g = isix::decode_g6(line);
            auto v = isix::bid_value(g, f);
            std::cout << line << "," << index << "," << g.order() << ","
                      << isix::fraction_string(v) << "," << isix::decimal_string(v) << "\n";
        }
    }
    return 0;
}

int cmd_transform(const std::string& op, const std::string& input, const std::string& index,
                  const std::string& path_arg, int pendant, int from, int to,
                  const std::string& out_path) {
    const auto& f = isix::builtin_function(index);
    std::string out_text;
    for (const auto& line : read_g6_lines(input)) {
        Graph g = isix::decode_g6(line);
        Graph g2 = op == "path-lift"
                       ? isix::path_lift(g, parse_int_list(path_arg))
                       : isix::move_pendant(g, pendant, from, to);
        auto delta = isix::bid_delta(g, g2, f);
        std::string g2_line = isix::encode_g6(g2);
        std::cout << line << " -> " << g2_line << "  delta(" << index
                  << ")=" << isix::fraction_string(delta) << " (" << isix::decimal_string(delta)
                  << ")\n";
        out_text += g2_line + "\n";
    }
    if (!out_path.empty()) write_text(out_path, out_text);
    return 0;
}

int cmd_enumerate(const std::string& cls, int n, int d, bool count_only,
                  const std::string& out_path) {
    std::vector<Graph> graphs;
    if (cls == "trees") {
        graphs = d >= 0 ? isix::trees_with_diameter(n, d) : isix::free_trees(n);
    } else if (cls == "unicyclic") {
        graphs = d >= 0 ? isix::unicyclic_with_diameter(n, d) : isix::unicyclic_graphs(n);
    } else {
        throw std::runtime_error("unknown class: " + cls);
    }
    if (count_only) {
        std::cout << graphs.size() << "\n";
        return 0;
    }
    std::string text;
    for (const auto& g : graphs) text += isix::encode_g6(g) + "\n";
    if (!out_path.empty()) {
        write_text(out_path, text);
        std::cout << graphs.size() << " graphs -> " << out_path << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_audit_conditions(const std::string& index, int max_degree, const std::string& format) {
    const auto& f = isix::builtin_function(index);
    auto reports = isix::audit_table1(f, max_degree);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json j;
            j["id"] = isix::condition_name(r.id);
            j["window"] = r.window;
            j["verdict"] = r.holds ? "holds" : "fails";
            j["witness"] = r.witness ? ordered_json{{"x", r.witness->first},
                                                    {"y", r.witness->second}}
                                     : ordered_json();
            j["note"] = r.note;
            if (!r.differences.empty()) {
                ordered_json seq = ordered_json::array();
                for (const auto& v : r.differences) seq.push_back(isix::fraction_string(v));
                j["differences"] = seq;
            }
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "id,window,verdict,witness,note\n";
        for (const auto& r : reports) {
            std::string witness = r.witness ? "(" + std::to_string(r.witness->first) + " " +
                                                  std::to_string(r.witness->second) + ")"
                                            : "";
            std::cout << isix::condition_name(r.id) << "," << r.window << ","
                      << (r.holds ? "holds" : "fails") << "," << witness << ",\"" << r.note
                      << "\"\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& cls_name, const std::string& index, int n_max,
               const std::string& format, const std::string& out_path, int threads,
               bool strict_claims) {
    const auto& f = isix::builtin_function(index);
    auto cls = isix::parse_class_kind(cls_name);
    auto start = std::chrono::steady_clock::now();
    auto report = isix::run_verification(cls, n_max, f, threads);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cerr << "verify: " << report.graphs_enumerated << " graphs, "
              << report.cells.size() << " cells, " << elapsed.count() << "s, threads=" << threads
              << "\n";
    std::string text = format == "json" ? isix::report_to_json(report)
                                        : isix::report_summary(report);
    if (!out_path.empty()) {
        write_text(out_path, text);
        std::cout << "report -> " << out_path << "\n";
    } else {
        std::cout << text;
    }
    return strict_claims && report.refuted > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bond-incident-degree index toolkit for trees and unicyclic graphs"};
    app.require_subcommand(1);
    int threads = default_threads();

    // construct
    auto* construct = app.add_subcommand("construct", "build a named extremal family member");
    std::string family, out_path, map_path;
    int n = INT_MIN, d = INT_MIN, i = INT_MIN, a = INT_MIN, b = INT_MIN, c = INT_MIN;
    construct->add_option("--family", family, "family id (see list in README)")->required();
    construct->add_option("--n", n, "order parameter n");
    construct->add_option("--d", d, "diameter parameter d");
    construct->add_option("--i", i, "attachment index i");
    construct->add_option("--a", a, "pendant count a");
    construct->add_option("--b", b, "pendant count b");
    construct->add_option("--c", c, "pendant count c");
    construct->add_option("--out", out_path, "output graph6 path")->required();
    construct->add_option("--map", map_path, "sidecar vertex-name map path");

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate an index over a graph6 file");
    std::string input, index = "isi", format = "csv";
    compute->add_option("--input", input, "graph6 input, one graph per line")->required();
    compute->add_option("--index", index, "index id: isi|zagreb1|zagreb2");
    compute->add_option("--format", format, "csv|json");

    // transform
    auto* transform = app.add_subcommand("transform", "apply a graph transformation");
    std::string op, path_arg;
    int pendant = -1, from = -1, to = -1;
    transform->add_option("--op", op, "path-lift|move-pendant")->required();
    transform->add_option("--input", input, "graph6 input")->required();
    transform->add_option("--index", index, "index id for the delta");
    transform->add_option("--path", path_arg, "comma-separated path vertices (path-lift)");
    transform->add_option("--pendant", pendant, "pendant vertex (move-pendant)");
    transform->add_option("--from", from, "current neighbor (move-pendant)");
    transform->add_option("--to", to, "new neighbor (move-pendant)");
    transform->add_option("--out", out_path, "write transformed graphs here");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive isomorph-free generation");
    std::string cls;
    bool count_only = false;
    enumerate->add_option("--class", cls, "trees|unicyclic")->required();
    enumerate->add_option("--n", n, "order")->required();
    enumerate->add_option("--d", d, "diameter filter");
    enumerate->add_flag("--count", count_only, "print the count only");
    enumerate->add_option("--out", out_path, "output graph6 path");

    // audit-conditions
    auto* audit = app.add_subcommand("audit-conditions", "audit the condition catalog");
    int max_degree = 100;
    audit->add_option("--index", index, "index id");
    audit->add_option("--max-degree", max_degree, "window bound X (>= 4)");
    audit->add_option("--format", format, "csv|json");

    // verify
    auto* verify = app.add_subcommand("verify", "brute-force claim audit");
    int n_max = 0;
    bool strict_claims = false;
    verify->add_option("--class", cls, "trees|unicyclic")->required();
    verify->add_option("--index", index, "index id");
    verify->add_option("--n-max", n_max, "largest order to audit")->required();
    verify->add_option("--format", format, "summary|json");
    verify->add_option("--out", out_path, "write the report here");
    verify->add_option("--threads", threads, "worker threads (env ISIX_THREADS)");
    verify->add_flag("--strict-claims", strict_claims, "exit 2 when any claim is refuted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (construct->parsed()) return cmd_construct(family, n, d, i, a, b, c, out_path, map_path);
        if (compute->parsed()) return cmd_compute(input, index, format);
        if (transform->parsed())
            return cmd_transform(op, input, index, path_arg, pendant, from, to, out_path);
        if (enumerate->parsed())
            return cmd_enumerate(cls, n, d == INT_MIN ? -1 : d, count_only, out_path);
        if (audit->parsed()) return cmd_audit_conditions(index, max_degree, format);
        if (verify->parsed())
            return cmd_verify(cls, index, n_max, format == "csv" ? "summary" : format, out_path,
                              threads, strict_claims);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
