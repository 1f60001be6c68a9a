#pragma once

// Decides which candidates are stratifying and assembles the null-cone
// summary.
//
// For a candidate l, the signed tree has l at the root and, below any vertex
// a reached by the chain l = l_1, ..., l_d = a, one child per element of the
// M-set of the problem restricted along l_1, ..., l_d. The M-set is the part
// of the candidate set where the half-space inequality is an equality. A
// vertex is minus iff some child is plus; l is stratifying iff the root is
// plus. Restrictions drop the free rank by one, so depth <= rank.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullcone/candidates.hpp"
#include "nullcone/errors.hpp"
#include "nullcone/geometry.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"
#include "nullcone/subproblem.hpp"

namespace nullcone {

enum class Sign { plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

struct SignedTree {
    QVec l;
    Sign sign = Sign::plus;
    std::vector<SignedTree> children;

    std::size_t depth() const {
        std::size_t d = 0;
        for (const auto& c : children) d = std::max(d, c.depth() + 1);
        return d;
    }

    friend bool operator==(const SignedTree&, const SignedTree&) = default;
};

inline Sign sign_from_children(const std::vector<SignedTree>& children) {
    for (const auto& c : children)
        if (c.sign == Sign::plus) return Sign::minus;
    return Sign::plus;
}

struct EngineOptions {
    /// Skip the M-set computation below a vertex whose restriction has no
    /// roots left: that M-set is provably empty.
    bool fast = false;
    bool weyl_dedup = true;
    unsigned threads = 1;
};

/// M-set of a (restricted) problem: candidates with equality in the
/// half-space inequality.
inline std::vector<QVec> compute_M_set(const SubProblem& sub, bool weyl_dedup = true) {
    std::vector<QVec> out;
    for (auto& c : enumerate_candidates(sub, {weyl_dedup, 1}))
        if (c.on_boundary()) out.push_back(std::move(c.l));
    return out;
}

/// Builds signed trees with a memo of subtrees keyed by restricted data.
class TreeBuilder {
public:
    explicit TreeBuilder(EngineOptions opts = {}) : opts_(opts) {}

    /// Tree rooted at candidate l of `sub`.
    SignedTree build(const SubProblem& sub, const QVec& l) {
        SignedTree node;
        node.l = l;
        node.children = children_of(sub.restrict(l));
        node.sign = sign_from_children(node.children);
        return node;
    }

private:
    std::vector<SignedTree> children_of(const SubProblem& restricted) {
        if (opts_.fast && restricted.roots().empty()) return {};
        const std::string key = restricted.key();
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        std::vector<SignedTree> children;
        for (const auto& a : compute_M_set(restricted, opts_.weyl_dedup))
            children.push_back(build(restricted, a));
        std::lock_guard lock(mutex_);
        memo_.emplace(key, children);
        return children;
    }

    EngineOptions opts_;
    std::mutex mutex_;
    std::map<std::string, std::vector<SignedTree>> memo_;
};

inline SignedTree build_tree(const SubProblem& sub, const QVec& l, const EngineOptions& opts = {}) {
    TreeBuilder b(opts);
    return b.build(sub, l);
}

inline bool is_stratifying(const SubProblem& sub, const QVec& l, const EngineOptions& opts = {}) {
    return build_tree(sub, l, opts).sign == Sign::plus;
}

/// #{a : <l,a> < 0} + sum of mult over weights with <l,mu> >= 1.
inline std::int64_t stratum_dimension(const ValidatedProblem& p, const QVec& l) {
    auto c = half_space_counts(SubProblem::of(p), l);
    return c.roots_negative + c.weights_geq_one_dim;
}

inline bool openness_check(const ValidatedProblem& p, const QVec& l) {
    auto chk = check_inequality9(SubProblem::of(p), l);
    return chk.lhs == chk.rhs;
}

struct GenericTerm {
    std::size_t weight_index = 0;
    std::string symbol;

    friend bool operator==(const GenericTerm&, const GenericTerm&) = default;
};

/// Sum of c_k v_k over a weight basis of V[l], one symbol per multiplicity
/// unit. Lies in the stratum when the c_k are algebraically independent over
/// Q, provided the module has a weight basis in which the root vectors act
/// with rational coefficients (not checked).
struct GenericRepresentative {
    std::vector<GenericTerm> terms;

    std::string to_text(const ValidatedProblem& p) const {
        std::string s;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) s += " + ";
            s += terms[i].symbol + "*v" + to_string(p.weights()[terms[i].weight_index].v);
        }
        return s;
    }

    static constexpr const char* annotation =
        "coefficients algebraically independent over Q; assumes a weight basis with "
        "rational structure constants";

    friend bool operator==(const GenericRepresentative&, const GenericRepresentative&) = default;
};

inline GenericRepresentative generic_representative(const ValidatedProblem& p, const QVec& l) {
    GenericRepresentative rep;
    std::size_t k = 0;
    const auto& ws = p.weights();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (p.space().inner(l, ws[i].v) != 1) continue;
        for (std::int64_t u = 0; u < ws[i].mult; ++u)
            rep.terms.push_back({i, "c_" + std::to_string(++k)});
    }
    return rep;
}

struct StratumReport {
    QVec l;
    std::int64_t dimension = 0;
    std::vector<std::size_t> support_V_l;       // <l,mu> = 1
    std::vector<std::size_t> support_V_l_plus;  // <l,mu> >= 1
    std::vector<std::size_t> parabolic_roots;   // <l,a> >= 0
    std::vector<std::size_t> levi_roots;        // <l,a> = 0
    bool is_open_in_V = false;
    SignedTree tree;
    GenericRepresentative generic_rep;

    friend bool operator==(const StratumReport&, const StratumReport&) = default;
};

struct NullconeSummary {
    std::vector<StratumReport> strata;
    std::int64_t dim_nullcone = 0;
    bool equals_V = false;
    std::vector<std::size_t> max_component_indices;  // into strata

    friend bool operator==(const NullconeSummary&, const NullconeSummary&) = default;
};

struct CandidateResult {
    Candidate candidate;
    bool stratifying = false;
    SignedTree tree;
};

struct StratificationResult {
    std::vector<CandidateResult> candidates;
    NullconeSummary summary;
    std::int64_t dim_V = 0;
};

inline StratumReport make_stratum_report(const ValidatedProblem& p, const QVec& l, SignedTree tree) {
    StratumReport r;
    r.l = l;
    const auto& space = p.space();
    const auto& ws = p.weights();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        Rat x = space.inner(l, ws[i].v);
        if (x == 1) r.support_V_l.push_back(i);
        if (x >= 1) r.support_V_l_plus.push_back(i);
    }
    const auto& rs = p.roots();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        int s = sgn(space.inner(l, rs[i]));
        if (s >= 0) r.parabolic_roots.push_back(i);
        if (s == 0) r.levi_roots.push_back(i);
    }
    r.dimension = stratum_dimension(p, l);
    r.is_open_in_V = openness_check(p, l);
    r.tree = std::move(tree);
    r.generic_rep = generic_representative(p, l);
    return r;
}

/// Strata sorted by (dimension descending, l ascending).
inline NullconeSummary summarize(std::vector<StratumReport> strata) {
    NullconeSummary s;
    std::sort(strata.begin(), strata.end(), [](const StratumReport& a, const StratumReport& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        return a.l < b.l;
    });
    s.strata = std::move(strata);
    for (const auto& st : s.strata) {
        s.dim_nullcone = std::max(s.dim_nullcone, st.dimension);
        s.equals_V = s.equals_V || st.is_open_in_V;
    }
    for (std::size_t i = 0; i < s.strata.size(); ++i)
        if (s.strata[i].dimension == s.dim_nullcone) s.max_component_indices.push_back(i);
    return s;
}

inline StratificationResult stratify(const ValidatedProblem& p, const EngineOptions& opts = {}) {
    StratificationResult res;
    res.dim_V = p.dim_V();
    const SubProblem top = SubProblem::of(p);
    auto cands = enumerate_candidates(top, {opts.weyl_dedup, opts.threads});

    TreeBuilder builder(opts);
    std::vector<SignedTree> trees(cands.size());
    if (opts.threads > 1 && cands.size() > 1) {
        std::vector<std::future<SignedTree>> jobs;
        for (const auto& c : cands)
            jobs.push_back(std::async(std::launch::async, [&, l = c.l] { return builder.build(top, l); }));
        for (std::size_t i = 0; i < jobs.size(); ++i) trees[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < cands.size(); ++i) trees[i] = builder.build(top, cands[i].l);
    }

    std::vector<StratumReport> strata;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const bool plus = trees[i].sign == Sign::plus;
        if (plus) strata.push_back(make_stratum_report(p, cands[i].l, trees[i]));
        res.candidates.push_back({std::move(cands[i]), plus, std::move(trees[i])});
    }
    res.summary = summarize(std::move(strata));
    return res;
}

}  // namespace nullcone
