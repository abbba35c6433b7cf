#include "isix/families.hpp"

#include <stdexcept>

namespace isix {

namespace {

[[noreturn]] void constraint_error(const FamilySpec& spec, const std::string& what) {
    throw std::invalid_argument("family " + spec.label() + ": " + what);
}

// Incremental builder: a host skeleton (path or cycle, optionally with a
// tail or bridge vertex) plus per-vertex pendant groups. The ten named
// families are thin presets over this.
class FamilyBuilder {
public:
    int add(const std::string& name) {
        names_[name] = next_;
        return next_++;
    }

    void connect(int a, int b) { edges_.emplace_back(a, b); }

    // name1..nameCount connected in a row; returns the ids.
    std::vector<int> path(int count, const std::string& prefix) {
        std::vector<int> ids;
        for (int k = 1; k <= count; ++k) ids.push_back(add(prefix + std::to_string(k)));
        for (int k = 1; k < count; ++k) connect(ids[k - 1], ids[k]);
        return ids;
    }

    std::vector<int> cycle(const std::vector<std::string>& names) {
        std::vector<int> ids;
        for (const auto& nm : names) ids.push_back(add(nm));
        for (size_t k = 0; k < ids.size(); ++k) connect(ids[k], ids[(k + 1) % ids.size()]);
        return ids;
    }

    void pendants(int host, int count, const std::string& prefix) {
        for (int k = 1; k <= count; ++k) connect(host, add(prefix + std::to_string(k)));
    }

    BuiltFamily build() const { return {Graph::from_edges(next_, edges_), names_}; }

private:
    int next_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::string, int> names_;
};

void check_tree_params(const FamilySpec& spec, int n, int d) {
    if (d < 3) constraint_error(spec, "requires d >= 3");
    if (n < d + 3) constraint_error(spec, "requires n >= d+3");
}

}  // namespace

std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::T_ndi: return "T_ndi";
        case FamilyId::T1: return "T1";
        case FamilyId::T2i: return "T2i";
        case FamilyId::T3: return "T3";
        case FamilyId::Sn_plus: return "Sn_plus";
        case FamilyId::An: return "An";
        case FamilyId::Bn: return "Bn";
        case FamilyId::Cn: return "Cn";
        case FamilyId::Dn: return "Dn";
        case FamilyId::U_nd: return "U_nd";
    }
    throw std::logic_error("unreachable family id");
}

FamilyId parse_family_id(const std::string& name) {
    for (const auto& t : list_families()) {
        if (t.name == name) return t.id;
    }
    throw std::invalid_argument("unknown family id: " + name);
}

int FamilySpec::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("family " + family_name(family) + ": missing parameter " + key);
    return it->second;
}

FamilySpec FamilySpec::t_ndi(int n, int d, int i) {
    return {FamilyId::T_ndi, {{"n", n}, {"d", d}, {"i", i}}};
}
FamilySpec FamilySpec::t1(int n, int d) { return {FamilyId::T1, {{"n", n}, {"d", d}}}; }
FamilySpec FamilySpec::t2i(int n, int d, int i) {
    return {FamilyId::T2i, {{"n", n}, {"d", d}, {"i", i}}};
}
FamilySpec FamilySpec::t3(int n, int d) { return {FamilyId::T3, {{"n", n}, {"d", d}}}; }
FamilySpec FamilySpec::sn_plus(int n) { return {FamilyId::Sn_plus, {{"n", n}}}; }
FamilySpec FamilySpec::an(int n) { return {FamilyId::An, {{"n", n}}}; }
FamilySpec FamilySpec::bn(int n, int a, int b) {
    return {FamilyId::Bn, {{"n", n}, {"a", a}, {"b", b}}};
}
FamilySpec FamilySpec::cn(int n, int a, int b, int c) {
    return {FamilyId::Cn, {{"n", n}, {"a", a}, {"b", b}, {"c", c}}};
}
FamilySpec FamilySpec::dn(int n, int a, int b) {
    return {FamilyId::Dn, {{"n", n}, {"a", a}, {"b", b}}};
}
FamilySpec FamilySpec::u_nd(int n, int d) { return {FamilyId::U_nd, {{"n", n}, {"d", d}}}; }

std::string FamilySpec::label() const {
    std::string out = family_name(family) + "(";
    // Fixed key order keeps labels deterministic and readable.
    bool first = true;
    for (const char* key : {"n", "d", "i", "a", "b", "c"}) {
        auto it = params.find(key);
        if (it == params.end()) continue;
        if (!first) out += ",";
        out += std::string(key) + "=" + std::to_string(it->second);
        first = false;
    }
    return out + ")";
}

BuiltFamily build_family(const FamilySpec& spec) {
    FamilyBuilder fb;
    switch (spec.family) {
        case FamilyId::T_ndi: {
            int n = spec.param("n"), d = spec.param("d"), i = spec.param("i");
            check_tree_params(spec, n, d);
            if (i < 2 || i > d) constraint_error(spec, "requires 2 <= i <= d");
            auto u = fb.path(d + 1, "u");
            fb.pendants(u[i - 1], n - d - 1, "v");
            return fb.build();
        }
        case FamilyId::T1: {
            int n = spec.param("n"), d = spec.param("d");
            check_tree_params(spec, n, d);
            auto u = fb.path(d + 1, "u");
            fb.pendants(u[1], n - d - 2, "v");
            fb.pendants(u[2], 1, "w");
            return fb.build();
        }
        case FamilyId::T2i: {
            int n = spec.param("n"), d = spec.param("d"), i = spec.param("i");
            check_tree_params(spec, n, d);
            if (d < 5) constraint_error(spec, "requires d >= 5");
            if (i < 4 || i > d - 1) constraint_error(spec, "requires 4 <= i <= d-1");
            auto u = fb.path(d + 1, "u");
            fb.pendants(u[1], n - d - 2, "v");
            fb.pendants(u[i - 1], 1, "w");
            return fb.build();
        }
        case FamilyId::T3: {
            int n = spec.param("n"), d = spec.param("d");
            check_tree_params(spec, n, d);
            auto u = fb.path(d + 1, "u");
            fb.pendants(u[1], n - d - 2, "v");
            fb.pendants(u[d - 1], 1, "w");
            return fb.build();
        }
        case FamilyId::Sn_plus: {
            int n = spec.param("n");
            if (n < 4) constraint_error(spec, "requires n >= 4");
            auto c = fb.cycle({"u", "v", "w"});
            fb.pendants(c[0], n - 3, "p");
            return fb.build();
        }
        case FamilyId::An: {
            int n = spec.param("n");
            if (n < 5) constraint_error(spec, "requires n >= 5");
            // Literal definition: one pendant on every 4-cycle vertex, then
            // n-5 more on the first. Yields n+3 vertices.
            auto c = fb.cycle({"c1", "c2", "c3", "c4"});
            for (int k = 0; k < 4; ++k) fb.pendants(c[k], 1, "p" + std::to_string(k + 1) + "_");
            fb.pendants(c[0], n - 5, "q");
            return fb.build();
        }
        case FamilyId::Bn: {
            int n = spec.param("n"), a = spec.param("a"), b = spec.param("b");
            if (a + b + 4 != n) constraint_error(spec, "requires a+b+4 = n");
            if (a < b || b < 0) constraint_error(spec, "requires a >= b >= 0");
            // Hosts u and v are adjacent on the 4-cycle.
            auto c = fb.cycle({"u", "v", "w", "x"});
            fb.pendants(c[0], a, "p");
            fb.pendants(c[1], b, "q");
            return fb.build();
        }
        case FamilyId::Cn: {
            int n = spec.param("n"), a = spec.param("a"), b = spec.param("b"),
                c = spec.param("c");
            if (a + b + c + 3 != n) constraint_error(spec, "requires a+b+c+3 = n");
            if (a < b || b < c || c < 0) constraint_error(spec, "requires a >= b >= c >= 0");
            auto cy = fb.cycle({"u", "v", "w"});
            fb.pendants(cy[0], a, "p");
            fb.pendants(cy[1], b, "q");
            fb.pendants(cy[2], c, "r");
            return fb.build();
        }
        case FamilyId::Dn: {
            int n = spec.param("n"), a = spec.param("a"), b = spec.param("b");
            if (a + b != n - 5) constraint_error(spec, "requires a+b = n-5");
            if (a < 0 || b < 0) constraint_error(spec, "requires a, b >= 0");
            // D: triangle with a 2-edge tail (the P_3 end is identified
            // with the cycle vertex z).
            auto cy = fb.cycle({"x", "y", "z"});
            int t1 = fb.add("t1"), t2 = fb.add("t2");
            fb.connect(cy[2], t1);
            fb.connect(t1, t2);
            fb.pendants(cy[2], a, "p");
            fb.pendants(t1, b, "q");
            return fb.build();
        }
        case FamilyId::U_nd: {
            int n = spec.param("n"), d = spec.param("d");
            if (d < 4) constraint_error(spec, "requires d >= 4");
            if (n < d + 2) constraint_error(spec, "requires n >= d+2");
            auto v = fb.path(d + 1, "v");
            // Both P_3 ends are identified with v2 and v4; only the
            // midpoint w is new.
            int w = fb.add("w");
            fb.connect(v[1], w);
            fb.connect(w, v[3]);
            fb.pendants(v[1], n - d - 2, "p");
            return fb.build();
        }
    }
    throw std::logic_error("unreachable family id");
}

bool has_closed_form(const FamilySpec& spec) {
    switch (spec.family) {
        case FamilyId::T_ndi:
        case FamilyId::Sn_plus:
        case FamilyId::An:
        case FamilyId::U_nd:
            return true;
        case FamilyId::Bn:
            return spec.param("b") == 0;
        case FamilyId::Cn:
            return spec.param("a") == spec.param("n") - 4 && spec.param("b") == 1 &&
                   spec.param("c") == 0;
        case FamilyId::Dn:
            return spec.param("b") == 0;
        default:
            return false;
    }
}

Rational closed_form_bid(const FamilySpec& spec, const DegreeWeightFunction& f) {
    build_family(spec);  // reuse the parameter validation
    if (!has_closed_form(spec))
        throw std::invalid_argument("family " + spec.label() + ": no closed form");
    switch (spec.family) {
        case FamilyId::T_ndi: {
            int n = spec.param("n"), d = spec.param("d"), i = spec.param("i");
            int x = n - d + 1;
            if (i == 2 || i == d)
                return rational(n - d) * f.eval(1, x) + rational(d - 3) * f.eval(2, 2) +
                       f.eval(2, x) + f.eval(1, 2);
            return rational(n - d - 1) * f.eval(1, x) + rational(d - 4) * f.eval(2, 2) +
                   rational(2) * f.eval(2, x) + rational(2) * f.eval(1, 2);
        }
        case FamilyId::Sn_plus: {
            int n = spec.param("n");
            return rational(n - 3) * f.eval(1, n - 1) + rational(2) * f.eval(2, n - 1) +
                   f.eval(2, 2);
        }
        case FamilyId::An: {
            int n = spec.param("n");
            return rational(n - 5) * f.eval(1, n - 3) + rational(2) * f.eval(2, n - 3) +
                   rational(3) * f.eval(2, 2);
        }
        case FamilyId::Bn: {
            int n = spec.param("n");
            return rational(n - 4) * f.eval(1, n - 2) + rational(2) * f.eval(2, n - 2) +
                   rational(2) * f.eval(2, 2);
        }
        case FamilyId::Cn: {
            int n = spec.param("n");
            return rational(n - 4) * f.eval(1, n - 2) + f.eval(2, n - 2) + f.eval(3, n - 2) +
                   f.eval(2, 3) + f.eval(1, 3);
        }
        case FamilyId::Dn: {
            int n = spec.param("n");
            return rational(n - 5) * f.eval(1, n - 2) + rational(3) * f.eval(2, n - 2) +
                   f.eval(2, 2) + f.eval(1, 2);
        }
        case FamilyId::U_nd: {
            int n = spec.param("n"), d = spec.param("d");
            Rational head = rational(n - d - 1) * f.eval(1, n - d + 1) +
                            rational(2) * f.eval(2, n - d + 1);
            if (d == 4) return head + rational(2) * f.eval(2, 3) + f.eval(1, 3);
            return head + rational(d - 5) * f.eval(2, 2) + rational(3) * f.eval(2, 3) +
                   f.eval(1, 2);
        }
        default:
            throw std::logic_error("unreachable closed form");
    }
}

const std::vector<FamilyTemplate>& list_families() {
    static const std::vector<FamilyTemplate> catalog = {
        {FamilyId::T_ndi, "T_ndi", {"n", "d", "i"},
         "d >= 3, n >= d+3, 2 <= i <= d; i=2 or i=d is the T* tree"},
        {FamilyId::T1, "T1", {"n", "d"}, "d >= 3, n >= d+3"},
        {FamilyId::T2i, "T2i", {"n", "d", "i"}, "d >= 5, n >= d+3, 4 <= i <= d-1"},
        {FamilyId::T3, "T3", {"n", "d"}, "d >= 3, n >= d+3"},
        {FamilyId::Sn_plus, "Sn_plus", {"n"}, "n >= 4"},
        {FamilyId::An, "An", {"n"}, "n >= 5 (literal build has n+3 vertices)"},
        {FamilyId::Bn, "Bn", {"n", "a", "b"}, "a+b+4 = n, a >= b >= 0"},
        {FamilyId::Cn, "Cn", {"n", "a", "b", "c"}, "a+b+c+3 = n, a >= b >= c >= 0"},
        {FamilyId::Dn, "Dn", {"n", "a", "b"}, "a+b = n-5, a, b >= 0"},
        {FamilyId::U_nd, "U_nd", {"n", "d"}, "d >= 4, n >= d+2"},
    };
    return catalog;
}

}  // namespace isix
