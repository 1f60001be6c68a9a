#pragma once

// Built-in problem instances, addressable from the command line as
// "name" or "name:params", e.g. "sl2-forms:2,3,3,4,5", "gl2-ex3:2,-1",
// "adjoint:B3", "torus:1,0;0,1;-1,-1", "direct-sum:sl3-forms:1+sl3-forms:2".

#include <cstddef>
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullcone/errors.hpp"
#include "nullcone/geometry.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone::catalog {

struct Entry {
    std::string name;
    std::string params;
    std::string description;
};

inline const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"torus", "w1;w2;...  (each w = comma-separated coordinates)",
         "torus acting with the given weights (repeats raise multiplicity), identity Gram"},
        {"sl2-forms", "d1,d2,...", "SL2 on binary forms of degrees d1, d2, ..."},
        {"sl3-forms", "d", "SL3 on ternary forms of degree d"},
        {"adjoint", "TYPE  (A1.., B2.., C2.., D4.., E6-E8, F4, G2)",
         "adjoint representation of a simple group"},
        {"gl2-ex3", "a,b  (a > 0, a^2 > b^2)",
         "GL2 on k^2 + wedge^2 k^2 with Gram [[a,b],[b,a]]"},
        {"g2-adjoint", "", "adjoint representation of G2 (alpha short, beta long)"},
        {"direct-sum", "spec1+spec2+...",
         "direct sum of modules over the same group (same Gram and roots)"},
    };
    return list;
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline long parse_int(const std::string& s, const std::string& what) {
    Rat r = parse_rat(s);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw InputError(what + ": expected an integer, got '" + s + "'");
    return r.get_num().get_si();
}

inline std::vector<Weight> accumulate(const std::vector<QVec>& vs) {
    std::map<QVec, std::int64_t> m;
    for (const auto& v : vs) ++m[v];
    std::vector<Weight> out;
    for (auto& [v, k] : m) out.push_back({v, k});
    return out;
}

/// All roots as the Weyl orbit of the simple roots (simple-root coordinates).
inline std::vector<QVec> roots_from_simple(const Matrix& gram) {
    const std::size_t r = gram.size();
    auto space = std::make_shared<const GramSpace>(gram);
    std::vector<QVec> simple;
    for (std::size_t i = 0; i < r; ++i) {
        QVec e = zero_vec(r);
        e[i] = 1;
        simple.push_back(e);
    }
    std::set<QVec> all;
    std::vector<QVec> frontier = simple;
    all.insert(simple.begin(), simple.end());
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& v : frontier)
            for (const auto& a : simple) {
                QVec w = reflect(*space, a, v);
                if (all.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

/// Gram matrix of the simple roots for a Dynkin type. Short roots have norm 2.
inline Matrix simple_root_gram(const std::string& type) {
    if (type.size() < 2) throw InputError("unknown root system type '" + type + "'");
    const char family = type[0];
    const long n = parse_int(type.substr(1), "root system rank");
    std::vector<Rat> norm;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto chain = [&](std::size_t len) {
        for (std::size_t i = 0; i + 1 < len; ++i) edges.push_back({i, i + 1});
    };
    switch (family) {
        case 'A':
            if (n < 1) break;
            norm.assign(n, 2);
            chain(n);
            break;
        case 'B':
            if (n < 2) break;
            norm.assign(n, 4);
            norm[n - 1] = 2;
            chain(n);
            break;
        case 'C':
            if (n < 2) break;
            norm.assign(n, 2);
            norm[n - 1] = 4;
            chain(n);
            break;
        case 'D':
            if (n < 4) break;
            norm.assign(n, 2);
            chain(n - 1);
            edges.push_back({static_cast<std::size_t>(n - 3), static_cast<std::size_t>(n - 1)});
            break;
        case 'E':
            if (n < 6 || n > 8) break;
            norm.assign(n, 2);
            // Bourbaki: 1-3-4-5-6-..., 2-4
            edges.push_back({0, 2});
            edges.push_back({1, 3});
            for (long i = 2; i + 1 < n; ++i)
                edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)});
            break;
        case 'F':
            if (n != 4) break;
            norm = {4, 4, 2, 2};
            chain(4);
            break;
        case 'G':
            if (n != 2) break;
            norm = {2, 6};
            chain(2);
            break;
        default:
            break;
    }
    if (norm.empty()) throw InputError("unknown root system type '" + type + "'");
    Matrix g(norm.size(), zero_vec(norm.size()));
    for (std::size_t i = 0; i < norm.size(); ++i) g[i][i] = norm[i];
    for (auto [i, j] : edges) {
        Rat m = std::max(norm[i], norm[j]) / 2;
        g[i][j] = -m;
        g[j][i] = -m;
    }
    return g;
}

}  // namespace detail

inline Problem torus(const std::vector<QVec>& weights) {
    if (weights.empty()) throw InputError("torus: at least one weight is required");
    const std::size_t r = weights.front().size();
    if (r == 0) throw InputError("torus: weights must have positive length");
    for (const auto& w : weights)
        if (w.size() != r) throw InputError("torus: weights of different lengths");
    return Problem{identity_matrix(r), {}, detail::accumulate(weights)};
}

/// Binary forms: weights d, d-2, ..., -d on the eps-line, <eps,eps> = 1,
/// roots +-2 eps.
inline Problem sl2_forms(const std::vector<long>& degrees) {
    if (degrees.empty()) throw InputError("sl2-forms: at least one degree is required");
    std::vector<QVec> ws;
    for (long d : degrees) {
        if (d < 0) throw InputError("sl2-forms: negative degree " + std::to_string(d));
        for (long k = d; k >= -d; k -= 2) ws.push_back({Rat(k)});
    }
    return Problem{{{Rat(1)}}, {{Rat(2)}, {Rat(-2)}}, detail::accumulate(ws)};
}

/// Ternary forms of degree d. Coordinates are w.r.t. eps1, eps2 (eps3 =
/// -eps1-eps2); Gram [[2,-1],[-1,2]] makes the eps_i of equal length at
/// pairwise angle 2pi/3.
inline Problem sl3_forms(long d) {
    if (d < 1) throw InputError("sl3-forms: degree must be >= 1");
    std::vector<QVec> ws;
    for (long c1 = 0; c1 <= d; ++c1)
        for (long c2 = 0; c1 + c2 <= d; ++c2) {
            long c3 = d - c1 - c2;
            ws.push_back({Rat(c1 - c3), Rat(c2 - c3)});
        }
    std::vector<QVec> roots = {{1, -1}, {2, 1}, {1, 2}, {-1, 1}, {-2, -1}, {-1, -2}};
    return Problem{{{2, -1}, {-1, 2}}, roots, detail::accumulate(ws)};
}

/// Adjoint module of a simple group in simple-root coordinates: the roots,
/// plus the zero weight with multiplicity equal to the rank.
inline Problem adjoint(const std::string& type) {
    Matrix g = detail::simple_root_gram(type);
    auto roots = detail::roots_from_simple(g);
    std::vector<Weight> ws;
    for (const auto& a : roots) ws.push_back({a, 1});
    ws.push_back({zero_vec(g.size()), static_cast<std::int64_t>(g.size())});
    return Problem{g, roots, ws};
}

inline Problem g2_adjoint() { return adjoint("G2"); }

/// GL2 on F_1 + wedge^2 F_1: weights eps1, eps2, eps1+eps2.
inline Problem gl2_ex3(const Rat& a, const Rat& b) {
    if (sgn(a) <= 0 || a * a <= b * b)
        throw InputError("gl2-ex3: need a > 0 and a^2 > b^2, got a=" + to_string(a) +
                         ", b=" + to_string(b));
    std::vector<Weight> ws = {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
    return Problem{{{a, b}, {b, a}}, {{1, -1}, {-1, 1}}, ws};
}

/// V1 + V2 over the same group: Gram and root sets must agree.
inline Problem direct_sum(const std::vector<Problem>& parts) {
    if (parts.empty()) throw InputError("direct-sum: no summands");
    Problem out = parts.front();
    std::set<QVec> roots(out.roots.begin(), out.roots.end());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].gram != out.gram)
            throw InputError("direct-sum: summand " + std::to_string(i) + " has a different Gram matrix");
        if (std::set<QVec>(parts[i].roots.begin(), parts[i].roots.end()) != roots)
            throw InputError("direct-sum: summand " + std::to_string(i) + " has a different root system");
        out.weights.insert(out.weights.end(), parts[i].weights.begin(), parts[i].weights.end());
    }
    out.weights = merge_weights(out.weights);
    return out;
}

/// Builds a catalog instance from its name and the text after the colon.
inline Problem build(const std::string& name, const std::string& params) {
    using detail::parse_int;
    using detail::split;
    if (name == "torus") {
        if (params.empty()) throw InputError("torus: expected weights, e.g. torus:1,0;0,1");
        std::vector<QVec> ws;
        for (const auto& w : split(params, ';')) {
            QVec v;
            for (const auto& c : split(w, ',')) v.push_back(parse_rat(c));
            ws.push_back(std::move(v));
        }
        return torus(ws);
    }
    if (name == "sl2-forms") {
        if (params.empty()) throw InputError("sl2-forms: expected degrees, e.g. sl2-forms:2,3");
        std::vector<long> ds;
        for (const auto& d : split(params, ',')) ds.push_back(parse_int(d, "sl2-forms degree"));
        return sl2_forms(ds);
    }
    if (name == "sl3-forms") {
        if (params.empty()) throw InputError("sl3-forms: expected a degree, e.g. sl3-forms:4");
        return sl3_forms(parse_int(params, "sl3-forms degree"));
    }
    if (name == "adjoint") return adjoint(params);
    if (name == "g2-adjoint") {
        if (!params.empty()) throw InputError("g2-adjoint takes no parameters");
        return g2_adjoint();
    }
    if (name == "gl2-ex3") {
        auto ab = split(params, ',');
        if (ab.size() != 2) throw InputError("gl2-ex3: expected two parameters a,b");
        return gl2_ex3(parse_rat(ab[0]), parse_rat(ab[1]));
    }
    if (name == "direct-sum") {
        std::vector<Problem> parts;
        for (const auto& s : split(params, '+')) {
            auto colon = s.find(':');
            parts.push_back(build(s.substr(0, colon),
                                  colon == std::string::npos ? "" : s.substr(colon + 1)));
        }
        return direct_sum(parts);
    }
    throw InputError("unknown catalog name '" + name + "'");
}

/// "name" or "name:params".
inline Problem from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return build(spec, "");
    return build(spec.substr(0, colon), spec.substr(colon + 1));
}

inline bool is_known_name(const std::string& spec) {
    auto name = spec.substr(0, spec.find(':'));
    for (const auto& e : entries())
        if (e.name == name) return true;
    return false;
}

}  // namespace nullcone::catalog
