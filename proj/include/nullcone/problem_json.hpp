#pragma once

// Problem files:
//   {"rank": 2,
//    "gram": [[2, 1], [1, 2]],
//    "roots": [[1, -1], [-1, 1]],
//    "weights": [{"v": [1, 0], "mult": 1}, ...],
//    "weyl": {"mode": "from_roots"} | {"generators": [[[0, 1], [1, 0]], ...]},
//    "orbit_cap": 1000000}
// Rationals are integers or "p/q" strings. A generator matrix g acts on
// coordinate columns, v -> g v. "weyl" and "orbit_cap" are optional.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "nullcone/errors.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone {

using json = nlohmann::json;

inline Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())));
        return Rat(mpz_class(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

inline json rat_to_json(const Rat& r) { return to_string(r); }

inline QVec qvec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array, got " + j.dump());
    QVec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rows");
    Matrix m;
    for (std::size_t i = 0; i < j.size(); ++i)
        m.push_back(qvec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(qvec_to_json(row));
    return a;
}

inline Problem problem_from_json(const json& j) {
    if (!j.is_object()) throw InputError("problem: expected a JSON object");
    for (const char* key : {"gram", "roots", "weights"})
        if (!j.contains(key)) throw InputError(std::string("problem: missing field \"") + key + "\"");
    Problem p;
    p.gram = matrix_from_json(j.at("gram"), "gram");
    if (j.contains("rank")) {
        const auto& r = j.at("rank");
        if (!r.is_number_integer() || r.get<std::int64_t>() < 1)
            throw InputError("rank: expected a positive integer");
        if (static_cast<std::size_t>(r.get<std::int64_t>()) != p.gram.size())
            throw InputError("rank " + r.dump() + " does not match the " +
                             std::to_string(p.gram.size()) + "-row gram matrix");
    }
    const auto& roots = j.at("roots");
    if (!roots.is_array()) throw InputError("roots: expected an array");
    for (std::size_t i = 0; i < roots.size(); ++i)
        p.roots.push_back(qvec_from_json(roots[i], "roots[" + std::to_string(i) + "]"));
    const auto& ws = j.at("weights");
    if (!ws.is_array()) throw InputError("weights: expected an array");
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::string where = "weights[" + std::to_string(i) + "]";
        const auto& w = ws[i];
        if (!w.is_object() || !w.contains("v")) throw InputError(where + ": expected {\"v\": [...], \"mult\": n}");
        Weight wt{qvec_from_json(w.at("v"), where + ".v"), 1};
        if (w.contains("mult")) {
            if (!w.at("mult").is_number_integer()) throw InputError(where + ".mult: expected an integer");
            wt.mult = w.at("mult").get<std::int64_t>();
        }
        p.weights.push_back(std::move(wt));
    }
    if (j.contains("weyl")) {
        const auto& wy = j.at("weyl");
        if (wy.contains("generators")) {
            WeylExplicit ex;
            const auto& gs = wy.at("generators");
            if (!gs.is_array()) throw InputError("weyl.generators: expected an array of matrices");
            for (std::size_t g = 0; g < gs.size(); ++g)
                ex.generators.push_back(matrix_from_json(gs[g], "weyl.generators[" + std::to_string(g) + "]"));
            p.weyl = std::move(ex);
        } else if (wy.value("mode", "") == "from_roots") {
            p.weyl = WeylFromRoots{};
        } else {
            throw InputError("weyl: expected {\"mode\": \"from_roots\"} or {\"generators\": [...]}");
        }
    }
    if (j.contains("orbit_cap")) {
        const auto& c = j.at("orbit_cap");
        if (!c.is_number_integer() || c.get<std::int64_t>() < 1)
            throw InputError("orbit_cap: expected a positive integer");
        p.orbit_cap = c.get<std::size_t>();
    }
    return p;
}

inline json problem_to_json(const Problem& p) {
    json j;
    j["rank"] = p.gram.size();
    j["gram"] = matrix_to_json(p.gram);
    j["roots"] = json::array();
    for (const auto& a : p.roots) j["roots"].push_back(qvec_to_json(a));
    j["weights"] = json::array();
    for (const auto& w : p.weights) j["weights"].push_back({{"v", qvec_to_json(w.v)}, {"mult", w.mult}});
    if (const auto* ex = std::get_if<WeylExplicit>(&p.weyl)) {
        json gs = json::array();
        for (const auto& g : ex->generators) gs.push_back(matrix_to_json(g));
        j["weyl"] = {{"generators", gs}};
    } else {
        j["weyl"] = {{"mode", "from_roots"}};
    }
    j["orbit_cap"] = p.orbit_cap;
    return j;
}

inline Problem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("problem file '" + path + "' is not valid JSON: " + e.what());
    }
    return problem_from_json(j);
}

}  // namespace nullcone
