#pragma once

// Machine-readable and human-readable views of a stratification result.
// Both are derived from the same Report value; indices refer to the
// validated problem's canonical weight and root orderings.

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nullcone/engine.hpp"
#include "nullcone/errors.hpp"
#include "nullcone/problem_json.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone {

struct CandidateRecord {
    QVec l;
    std::vector<std::size_t> M;
    bool stratifying = false;
    SignedTree tree;

    friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct Report {
    std::vector<CandidateRecord> candidates;
    NullconeSummary summary;

    friend bool operator==(const Report&, const Report&) = default;
};

inline Report make_report(const StratificationResult& res) {
    Report r;
    for (const auto& c : res.candidates)
        r.candidates.push_back({c.candidate.l, c.candidate.M, c.stratifying, c.tree});
    r.summary = res.summary;
    return r;
}

// -- JSON -------------------------------------------------------------------

inline json tree_to_json(const SignedTree& t) {
    json children = json::array();
    for (const auto& c : t.children) children.push_back(tree_to_json(c));
    return {{"l", qvec_to_json(t.l)}, {"sign", to_string(t.sign)}, {"children", children}};
}

inline SignedTree tree_from_json(const json& j) {
    SignedTree t;
    t.l = qvec_from_json(j.at("l"), "tree.l");
    const auto s = j.at("sign").get<std::string>();
    if (s != "+" && s != "-") throw InputError("tree.sign: expected \"+\" or \"-\", got \"" + s + "\"");
    t.sign = s == "+" ? Sign::plus : Sign::minus;
    for (const auto& c : j.at("children")) t.children.push_back(tree_from_json(c));
    return t;
}

inline json to_json(const Report& r) {
    json out;
    out["candidates"] = json::array();
    for (const auto& c : r.candidates)
        out["candidates"].push_back({{"l", qvec_to_json(c.l)},
                                     {"M", c.M},
                                     {"stratifying", c.stratifying},
                                     {"tree", tree_to_json(c.tree)}});
    out["strata"] = json::array();
    for (const auto& s : r.summary.strata) {
        json rep = json::array();
        for (const auto& t : s.generic_rep.terms)
            rep.push_back({{"weight_index", t.weight_index}, {"symbol", t.symbol}});
        out["strata"].push_back({{"l", qvec_to_json(s.l)},
                                 {"dim", s.dimension},
                                 {"open_in_V", s.is_open_in_V},
                                 {"support_V_l", s.support_V_l},
                                 {"support_V_l_plus", s.support_V_l_plus},
                                 {"levi_roots", s.levi_roots},
                                 {"parabolic_roots", s.parabolic_roots},
                                 {"generic_rep", rep}});
    }
    out["nullcone"] = {{"dim", r.summary.dim_nullcone},
                       {"equals_V", r.summary.equals_V},
                       {"max_components", r.summary.max_component_indices}};
    return out;
}

/// Inverse of to_json. Stratum trees are taken from the candidate with the
/// same l.
inline Report report_from_json(const json& j) {
    Report r;
    std::map<QVec, SignedTree> trees;
    for (const auto& c : j.at("candidates")) {
        CandidateRecord rec;
        rec.l = qvec_from_json(c.at("l"), "candidates.l");
        rec.M = c.at("M").get<std::vector<std::size_t>>();
        rec.stratifying = c.at("stratifying").get<bool>();
        rec.tree = tree_from_json(c.at("tree"));
        trees[rec.l] = rec.tree;
        r.candidates.push_back(std::move(rec));
    }
    for (const auto& s : j.at("strata")) {
        StratumReport st;
        st.l = qvec_from_json(s.at("l"), "strata.l");
        st.dimension = s.at("dim").get<std::int64_t>();
        st.is_open_in_V = s.at("open_in_V").get<bool>();
        st.support_V_l = s.at("support_V_l").get<std::vector<std::size_t>>();
        st.support_V_l_plus = s.at("support_V_l_plus").get<std::vector<std::size_t>>();
        st.levi_roots = s.at("levi_roots").get<std::vector<std::size_t>>();
        st.parabolic_roots = s.at("parabolic_roots").get<std::vector<std::size_t>>();
        for (const auto& t : s.at("generic_rep"))
            st.generic_rep.terms.push_back(
                {t.at("weight_index").get<std::size_t>(), t.at("symbol").get<std::string>()});
        auto it = trees.find(st.l);
        if (it == trees.end()) throw InputError("stratum " + to_string(st.l) + " has no candidate entry");
        st.tree = it->second;
        r.summary.strata.push_back(std::move(st));
    }
    const auto& n = j.at("nullcone");
    r.summary.dim_nullcone = n.at("dim").get<std::int64_t>();
    r.summary.equals_V = n.at("equals_V").get<bool>();
    r.summary.max_component_indices = n.at("max_components").get<std::vector<std::size_t>>();
    return r;
}

// -- text -------------------------------------------------------------------

inline std::string index_list(const std::vector<std::size_t>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

inline void write_tree(std::ostream& os, const SignedTree& t, const std::string& indent) {
    os << indent << "[" << to_string(t.sign) << "] " << to_string(t.l) << "\n";
    for (const auto& c : t.children) write_tree(os, c, indent + "    ");
}

inline void write_problem_header(std::ostream& os, const ValidatedProblem& p) {
    os << "rank " << p.rank() << ", " << p.roots().size() << " roots, " << p.weights().size()
       << " distinct weights, dim V = " << p.dim_V() << "\n";
}

inline void write_candidates(std::ostream& os, const ValidatedProblem& p, const StratificationResult& res) {
    os << res.candidates.size() << " candidates\n";
    std::size_t i = 0;
    for (const auto& c : res.candidates) {
        const auto& k = c.candidate.counts;
        os << "  l" << ++i << " = " << to_string(c.candidate.l) << "  M = " << index_list(c.candidate.M)
           << "  #{l<0} roots = " << k.roots_negative << ", dim below 1 = " << k.weights_below_one_dim
           << (c.candidate.on_boundary() ? " (equality)" : "") << "  "
           << (c.stratifying ? "stratifying" : "not stratifying") << "\n";
    }
    (void)p;
}

inline void write_strata(std::ostream& os, const ValidatedProblem& p, const StratificationResult& res) {
    const auto& s = res.summary;
    os << s.strata.size() << " strata (besides {0})\n";
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        const auto& st = s.strata[i];
        os << "  S" << i + 1 << ": l = " << to_string(st.l) << "  dim = " << st.dimension
           << (st.is_open_in_V ? "  (open in V)" : "") << "\n"
           << "      V[l] weights " << index_list(st.support_V_l) << ", V[l+] weights "
           << index_list(st.support_V_l_plus) << "\n"
           << "      Levi roots " << index_list(st.levi_roots) << ", parabolic roots "
           << index_list(st.parabolic_roots) << "\n"
           << "      generic representative: " << st.generic_rep.to_text(p) << "\n";
    }
    os << "dim N = " << s.dim_nullcone << (s.equals_V ? " (N = V)" : "") << "\n"
       << "components of maximal dimension: " << s.max_component_indices.size() << " (strata";
    for (auto k : s.max_component_indices) os << " S" << k + 1;
    os << ")\n";
    if (!s.strata.empty()) os << "note: " << GenericRepresentative::annotation << "\n";
}

inline void write_weights(std::ostream& os, const ValidatedProblem& p) {
    os << "weights:";
    for (std::size_t i = 0; i < p.weights().size(); ++i) {
        const auto& w = p.weights()[i];
        os << "  [" << i << "] " << to_string(w.v);
        if (w.mult != 1) os << " x" << w.mult;
    }
    os << "\nroots:";
    for (std::size_t i = 0; i < p.roots().size(); ++i) os << "  [" << i << "] " << to_string(p.roots()[i]);
    os << "\n";
}

}  // namespace nullcone
