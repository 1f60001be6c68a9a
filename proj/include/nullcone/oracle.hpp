#pragma once

// Independent checks of the engine: a literal all-subsets construction of the
// candidate set, the rank-2 non-stratifying criterion, structural checks on
// signed trees, and invariance under Weyl transport and Gram scaling.
//
// Deliberately does not use the affinely-independent-subset walk from
// candidates.hpp; it shares only the geometry primitives.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nullcone/catalog.hpp"
#include "nullcone/engine.hpp"
#include "nullcone/errors.hpp"
#include "nullcone/geometry.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone::oracle {

inline constexpr std::size_t default_weight_bound = 16;

struct Mismatch {
    QVec l;
    std::string present_in;  // "engine" or "oracle"
};

struct OracleReport {
    bool candidate_set_match = true;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> law_violations;

    bool ok() const { return mismatches.empty() && law_violations.empty(); }

    void merge(const OracleReport& other) {
        mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
        law_violations.insert(law_violations.end(), other.law_violations.begin(),
                              other.law_violations.end());
        candidate_set_match = ok();
    }
};

/// Candidate l-set by brute force over every nonempty weight subset.
inline std::vector<QVec> naive_candidates(const ValidatedProblem& p, bool weyl_dedup = true,
                                          std::size_t weight_bound = default_weight_bound) {
    const auto& ws = p.weights();
    const std::size_t n = ws.size();
    if (n > weight_bound)
        throw ResourceError("naive enumeration: " + std::to_string(n) + " distinct weights exceed bound " +
                            std::to_string(weight_bound));
    const auto& space = p.space();

    std::set<QVec> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<QVec> M;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) M.push_back(ws[i].v);
        QVec pm = perp(space, M);
        if (is_zero(pm)) continue;
        if (!in_convex_hull(space, pm, M)) continue;
        QVec l = (1 / space.norm2(pm)) * pm;
        std::uint64_t sat = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (space.inner(l, ws[i].v) == 1) sat |= std::uint64_t{1} << i;
        if (sat != mask) continue;
        std::int64_t lhs = 0, rhs = 0;
        for (const auto& a : p.roots())
            if (sgn(space.inner(l, a)) < 0) ++lhs;
        for (const auto& w : ws)
            if (space.inner(l, w.v) < 1) rhs += w.mult;
        if (lhs > rhs) continue;
        found.insert(std::move(l));
    }
    if (!weyl_dedup) return {found.begin(), found.end()};

    std::vector<QVec> reps;
    std::set<QVec> seen;
    for (const auto& l : found) {
        if (seen.count(l)) continue;
        auto orbit = weyl_orbit(p.weyl(), l, p.orbit_cap());
        seen.insert(orbit.begin(), orbit.end());
        reps.push_back(orbit.front());
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// Rank-2 law: l is non-stratifying iff the line {l = 1} is parallel to a
/// root and carries exactly two distinct weights, each of multiplicity 1.
inline bool rank2_predicate(const ValidatedProblem& p, const QVec& l) {
    if (p.rank() != 2) throw InputError("rank-2 criterion applies only to rank 2, got rank " +
                                        std::to_string(p.rank()));
    const auto& space = p.space();
    bool parallel = std::any_of(p.roots().begin(), p.roots().end(),
                                [&](const QVec& a) { return sgn(space.inner(l, a)) == 0; });
    if (!parallel) return false;
    std::vector<std::int64_t> on_line;
    for (const auto& w : p.weights())
        if (space.inner(l, w.v) == 1) on_line.push_back(w.mult);
    return on_line.size() == 2 && on_line[0] == 1 && on_line[1] == 1;
}

/// Sign rule, plus-child uniqueness and depth bound on one tree.
inline std::vector<std::string> tree_violations(const SignedTree& t, std::size_t rank) {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, const SignedTree& node) -> void {
        std::size_t plus_children = 0;
        for (const auto& c : node.children) {
            if (c.sign == Sign::plus) ++plus_children;
            self(self, c);
        }
        const Sign expected = plus_children ? Sign::minus : Sign::plus;
        if (node.sign != expected)
            out.push_back("sign rule violated at vertex " + to_string(node.l));
        if (plus_children > 1)
            out.push_back("vertex " + to_string(node.l) + " has " + std::to_string(plus_children) +
                          " plus children");
    };
    walk(walk, t);
    // Depth counts edges; the root itself is one restriction.
    if (t.depth() + 1 > rank)
        out.push_back("tree at " + to_string(t.l) + " has depth " + std::to_string(t.depth()) +
                      " exceeding rank " + std::to_string(rank));
    return out;
}

/// Engine vs. oracle on one problem: candidate sets, tree structure, and the
/// rank-2 law where it applies.
inline OracleReport cross_check(const ValidatedProblem& p, const StratificationResult& res,
                                bool weyl_dedup = true,
                                std::size_t weight_bound = default_weight_bound) {
    OracleReport rep;
    std::set<QVec> engine_ls;
    for (const auto& c : res.candidates) engine_ls.insert(c.candidate.l);
    auto naive = naive_candidates(p, weyl_dedup, weight_bound);
    std::set<QVec> oracle_ls(naive.begin(), naive.end());
    for (const auto& l : engine_ls)
        if (!oracle_ls.count(l)) rep.mismatches.push_back({l, "engine"});
    for (const auto& l : oracle_ls)
        if (!engine_ls.count(l)) rep.mismatches.push_back({l, "oracle"});

    for (const auto& c : res.candidates)
        for (auto& v : tree_violations(c.tree, p.rank())) rep.law_violations.push_back(std::move(v));

    if (p.rank() == 2)
        for (const auto& c : res.candidates)
            if (rank2_predicate(p, c.candidate.l) == c.stratifying)
                rep.law_violations.push_back("rank-2 law disagrees with engine at l = " +
                                             to_string(c.candidate.l));

    std::size_t open = 0;
    for (const auto& s : res.summary.strata) {
        if (s.is_open_in_V) ++open;
        if (s.dimension > res.dim_V || (s.dimension == res.dim_V) != s.is_open_in_V)
            rep.law_violations.push_back("stratum at " + to_string(s.l) + " has dimension " +
                                         std::to_string(s.dimension) + " inconsistent with dim V = " +
                                         std::to_string(res.dim_V));
    }
    if (open > 1) rep.law_violations.push_back(std::to_string(open) + " strata open in V");

    rep.candidate_set_match = rep.ok();
    return rep;
}

struct WeylTransport {
    std::size_t generator = 0;
};
struct GramScale {
    Rat factor;
};
using Transform = std::variant<WeylTransport, GramScale>;

inline std::string describe(const Transform& t) {
    if (const auto* w = std::get_if<WeylTransport>(&t))
        return "Weyl generator " + std::to_string(w->generator);
    return "Gram scale " + to_string(std::get<GramScale>(t).factor);
}

inline Problem apply_transform(const ValidatedProblem& p, const Transform& t) {
    Problem q = p.to_problem();
    if (const auto* w = std::get_if<WeylTransport>(&t)) {
        if (w->generator >= p.weyl().size())
            throw InputError("no Weyl generator with index " + std::to_string(w->generator));
        for (auto& a : q.roots) a = p.weyl().apply(w->generator, a);
        for (auto& x : q.weights) x.v = p.weyl().apply(w->generator, x.v);
    } else {
        const Rat& c = std::get<GramScale>(t).factor;
        if (sgn(c) <= 0) throw InputError("Gram scale factor must be positive");
        for (auto& row : q.gram)
            for (auto& x : row) x *= c;
    }
    return q;
}

struct Fingerprint {
    std::vector<std::int64_t> dims;  // sorted
    std::int64_t dim_nullcone = 0;
    bool equals_V = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const NullconeSummary& s) {
    Fingerprint f;
    for (const auto& st : s.strata) f.dims.push_back(st.dimension);
    std::sort(f.dims.begin(), f.dims.end());
    f.dim_nullcone = s.dim_nullcone;
    f.equals_V = s.equals_V;
    return f;
}

/// Stratifies the original and transformed problems and reports any change
/// in (dimension multiset, dim of null-cone, equals_V).
inline OracleReport invariance_harness(const ValidatedProblem& p, const Transform& t,
                                       const EngineOptions& opts = {}) {
    OracleReport rep;
    auto transformed = validate(apply_transform(p, t));
    if (!transformed.ok()) {
        rep.law_violations.push_back(describe(t) + ": transformed problem fails validation: " +
                                     transformed.violations.front().message);
        rep.candidate_set_match = false;
        return rep;
    }
    auto a = fingerprint(stratify(p, opts).summary);
    auto b = fingerprint(stratify(transformed.value(), opts).summary);
    if (!(a == b)) rep.law_violations.push_back(describe(t) + " changes the stratification summary");
    rep.candidate_set_match = rep.ok();
    return rep;
}

/// Every Weyl generator plus Gram scalings by 2, 1/3, 7.
inline std::vector<Transform> standard_transforms(const ValidatedProblem& p) {
    std::vector<Transform> ts;
    for (std::size_t g = 0; g < p.weyl().size(); ++g) ts.push_back(WeylTransport{g});
    for (const char* c : {"2", "1/3", "7"}) ts.push_back(GramScale{parse_rat(c)});
    return ts;
}

// ---------------------------------------------------------------------------
// Random instances: roots from standard rank <= 3 systems (or none), Gram
// block-diagonal over irreducible pieces and torus directions, weights drawn
// from a small box and closed under the Weyl group.

struct RandomSpec {
    std::size_t max_rank = 3;
    std::size_t max_weights = 12;
    bool require_roots = false;
    bool torus_only = false;
    std::size_t exact_rank = 0;  // 0: any rank in [1, max_rank]
};

namespace detail {

struct Block {
    Matrix gram;
    std::vector<QVec> roots;
};

inline Block simple_block(const std::string& type) {
    Matrix g = catalog::detail::simple_root_gram(type);
    return {g, catalog::detail::roots_from_simple(g)};
}

inline Matrix random_pd(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> diag(1, 4), off(-2, 2);
    for (;;) {
        Matrix g(n, zero_vec(n));
        for (std::size_t i = 0; i < n; ++i) {
            g[i][i] = diag(rng);
            for (std::size_t j = 0; j < i; ++j) g[i][j] = g[j][i] = off(rng);
        }
        if (is_positive_definite(g)) return g;
    }
}

}  // namespace detail

inline Problem random_problem(std::uint64_t seed, const RandomSpec& spec = {}) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t rank = spec.exact_rank ? spec.exact_rank : pick(1, spec.max_rank);

    // Irreducible components that fit into `rank`, as lists of Dynkin types.
    std::vector<std::vector<std::string>> layouts;
    if (!spec.require_roots || spec.torus_only) layouts.push_back({});
    if (!spec.torus_only) {
        layouts.push_back({"A1"});
        if (rank >= 2) {
            for (auto t : {"A2", "B2", "G2"}) layouts.push_back({t});
            layouts.push_back({"A1", "A1"});
        }
        if (rank >= 3) {
            for (auto t : {"A3", "B3", "C3"}) layouts.push_back({t});
            layouts.push_back({"A2", "A1"});
            layouts.push_back({"A1", "A1", "A1"});
        }
    }

    for (;;) {
        const auto& layout = layouts[pick(0, layouts.size() - 1)];
        Matrix gram(rank, zero_vec(rank));
        std::vector<QVec> roots;
        std::size_t offset = 0;
        for (const auto& type : layout) {
            auto blk = detail::simple_block(type);
            const std::size_t k = blk.gram.size();
            Rat scale = static_cast<long>(pick(1, 3));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) gram[offset + i][offset + j] = scale * blk.gram[i][j];
            for (const auto& a : blk.roots) {
                QVec v = zero_vec(rank);
                for (std::size_t i = 0; i < k; ++i) v[offset + i] = a[i];
                roots.push_back(v);
            }
            offset += k;
        }
        if (offset > rank) continue;
        if (offset < rank) {
            auto t = detail::random_pd(rank - offset, rng);
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = 0; j < t.size(); ++j) gram[offset + i][offset + j] = t[i][j];
        }

        auto space = std::make_shared<const GramSpace>(gram);
        auto gens = WeylGenerators::from_roots(space, roots);
        std::map<QVec, std::int64_t> weights;
        std::uniform_int_distribution<int> coord(-2, 2);
        const std::size_t draws = pick(1, 4);
        bool too_big = false;
        for (std::size_t d = 0; d < draws && !too_big; ++d) {
            QVec v(rank);
            for (auto& x : v) x = coord(rng);
            if (weights.count(v)) continue;
            const auto mult = static_cast<std::int64_t>(pick(1, 2));
            for (auto& w : weyl_orbit(gens, v, 64)) weights[w] = mult;
            too_big = weights.size() > spec.max_weights;
        }
        if (too_big || weights.empty()) continue;

        Problem p{gram, roots, {}};
        for (auto& [v, m] : weights) p.weights.push_back({v, m});
        return p;
    }
}

}  // namespace nullcone::oracle
