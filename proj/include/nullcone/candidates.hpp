#pragma once

// The finite candidate set: every l = perp(M) / |perp(M)|^2 where M is a
// weight subset with
//   (i)   perp(M) != 0,
//   (ii)  perp(M) in conv(M),
//   (iii) M = weights on the hyperplane {l = 1},
//   (iv)  #{roots with <l,a> < 0} <= sum of mult over weights with <l,mu> < 1,
// taken up to the Weyl group.
//
// Rather than walking all subsets, we walk affinely independent subsets of
// size <= free rank: any admissible M lies in the affine hyperplane {l = 1},
// so some such subset spans aff(M) and has the same perp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "nullcone/errors.hpp"
#include "nullcone/geometry.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"
#include "nullcone/subproblem.hpp"

namespace nullcone {

struct HalfSpaceCounts {
    std::int64_t roots_negative = 0;        // #{a in roots : <l,a> < 0}
    std::int64_t weights_below_one_dim = 0;  // sum mult over <l,mu> < 1
    std::int64_t weights_geq_one_dim = 0;    // sum mult over <l,mu> >= 1

    friend bool operator==(const HalfSpaceCounts&, const HalfSpaceCounts&) = default;
};

struct Candidate {
    QVec l;
    std::vector<std::size_t> M;  // indices into the (sub)problem's weights
    QVec perp_point;
    HalfSpaceCounts counts;

    /// Equality in the half-space inequality: membership in the M-set, and
    /// at top level the openness criterion.
    bool on_boundary() const { return counts.roots_negative == counts.weights_below_one_dim; }
};

struct InequalityCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

inline HalfSpaceCounts half_space_counts(const SubProblem& sub, const QVec& l) {
    HalfSpaceCounts c;
    const auto& space = sub.space();
    for (const auto& a : sub.roots())
        if (sgn(space.inner(l, a)) < 0) ++c.roots_negative;
    for (const auto& w : sub.weights()) {
        if (space.inner(l, w.v) < 1)
            c.weights_below_one_dim += w.mult;
        else
            c.weights_geq_one_dim += w.mult;
    }
    return c;
}

inline InequalityCheck check_inequality9(const SubProblem& sub, const QVec& l) {
    if (is_zero(l)) throw InputError("half-space inequality needs a nonzero l");
    auto c = half_space_counts(sub, l);
    return {c.roots_negative, c.weights_below_one_dim, c.roots_negative <= c.weights_below_one_dim};
}

/// Indices of the weights on the hyperplane {l = 1}.
inline std::vector<std::size_t> saturate(const SubProblem& sub, const QVec& l) {
    if (is_zero(l)) throw InputError("saturate needs a nonzero l");
    std::vector<std::size_t> out;
    const auto& ws = sub.weights();
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (sub.space().inner(l, ws[i].v) == 1) out.push_back(i);
    return out;
}

inline std::vector<QVec> points_of(const SubProblem& sub, const std::vector<std::size_t>& idx) {
    std::vector<QVec> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(sub.weights()[i].v);
    return out;
}

/// Candidate generated by an affinely independent weight subset S, or nullopt
/// if one of the conditions fails.
inline std::optional<Candidate> candidate_from_subset(const SubProblem& sub,
                                                      const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw InputError("candidate_from_subset needs a nonempty subset");
    const auto& space = sub.space();
    QVec p = perp(space, points_of(sub, subset));
    if (is_zero(p)) return std::nullopt;  // (i)
    Rat pp = space.norm2(p);
    QVec l = (1 / pp) * p;

    auto M = saturate(sub, l);
    auto Mpoints = points_of(sub, M);
    // S and its saturation must span the same affine hull (iii).
    if (perp(space, Mpoints) != p) return std::nullopt;
    if (!in_convex_hull(space, p, Mpoints)) return std::nullopt;  // (ii)

    auto counts = half_space_counts(sub, l);
    if (counts.roots_negative > counts.weights_below_one_dim) return std::nullopt;  // (iv)
    return Candidate{std::move(l), std::move(M), std::move(p), counts};
}

struct EnumerationOptions {
    bool weyl_dedup = true;
    unsigned threads = 1;
};

/// Sorts by l, drops exact duplicates, then (optionally) keeps one
/// lexicographically minimal representative per Weyl orbit.
inline std::vector<Candidate> deduplicate_candidates(const SubProblem& sub, std::vector<Candidate> cs,
                                                     bool weyl_dedup) {
    std::sort(cs.begin(), cs.end(), [](const Candidate& a, const Candidate& b) { return a.l < b.l; });
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](const Candidate& a, const Candidate& b) { return a.l == b.l; }),
             cs.end());
    if (!weyl_dedup || sub.weyl().empty()) return cs;

    std::set<QVec> covered;
    std::vector<Candidate> kept;
    for (auto& c : cs) {
        if (covered.count(c.l)) continue;
        auto orbit = weyl_orbit(sub.weyl(), c.l, sub.orbit_cap());
        // The candidate set is Weyl-invariant, so the first member met in
        // sorted order is the orbit minimum.
        if (orbit.front() != c.l)
            throw InternalError("candidate set is not Weyl-invariant at " + to_string(c.l));
        covered.insert(orbit.begin(), orbit.end());
        kept.push_back(std::move(c));
    }
    return kept;
}

inline std::vector<Candidate> enumerate_candidates(const SubProblem& sub,
                                                   const EnumerationOptions& opts = {}) {
    const auto points = sub.weight_vectors();
    if (points.empty() || sub.free_rank() == 0) return {};
    const std::size_t max_size = std::min(sub.free_rank(), points.size());

    auto work = [&](std::optional<std::vector<std::size_t>> firsts) {
        std::vector<Candidate> found;
        for_each_affinely_independent_subset(
            points, max_size,
            [&](const IndexSubset& s) {
                if (auto c = candidate_from_subset(sub, s)) found.push_back(std::move(*c));
            },
            firsts);
        return found;
    };

    std::vector<Candidate> all;
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, points.size()));
    if (threads == 1) {
        all = work(std::nullopt);
    } else {
        std::vector<std::future<std::vector<Candidate>>> jobs;
        for (unsigned t = 0; t < threads; ++t) {
            std::vector<std::size_t> firsts;
            for (std::size_t i = t; i < points.size(); i += threads) firsts.push_back(i);
            jobs.push_back(std::async(std::launch::async, work, std::move(firsts)));
        }
        for (auto& j : jobs) {
            auto part = j.get();
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    }
    return deduplicate_candidates(sub, std::move(all), opts.weyl_dedup);
}

inline std::vector<Candidate> enumerate_candidates(const ValidatedProblem& p,
                                                   const EnumerationOptions& opts = {}) {
    return enumerate_candidates(SubProblem::of(p), opts);
}

}  // namespace nullcone
