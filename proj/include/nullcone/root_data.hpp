#pragma once

// Problem instances: a Gram space, a reduced root system, a weight system with
// multiplicities, and the Weyl action used to identify equivalent vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nullcone/errors.hpp"
#include "nullcone/geometry.hpp"
#include "nullcone/rational.hpp"

namespace nullcone {

inline constexpr std::size_t default_orbit_cap = 1'000'000;

struct Weight {
    QVec v;
    std::int64_t mult = 1;

    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Weyl generators are either the reflections in the roots, or explicit
/// matrices acting on coordinate columns (v -> g v).
struct WeylFromRoots {
    friend bool operator==(const WeylFromRoots&, const WeylFromRoots&) = default;
};
struct WeylExplicit {
    std::vector<Matrix> generators;
    friend bool operator==(const WeylExplicit&, const WeylExplicit&) = default;
};
using WeylPolicy = std::variant<WeylFromRoots, WeylExplicit>;

/// Unvalidated input, as read from a file or produced by a catalog builder.
struct Problem {
    Matrix gram;
    std::vector<QVec> roots;
    std::vector<Weight> weights;
    WeylPolicy weyl = WeylFromRoots{};
    std::size_t orbit_cap = default_orbit_cap;
};

/// v - (2<v,alpha>/<alpha,alpha>) alpha
inline QVec reflect(const GramSpace& space, const QVec& alpha, const QVec& v) {
    Rat aa = space.norm2(alpha);
    if (sgn(aa) == 0) throw InputError("reflection in the zero vector");
    return v - (2 * space.inner(v, alpha) / aa) * alpha;
}

/// A set of generators of a finite reflection group acting on the ambient
/// space. Reflections are stored by their root (one per +-pair).
class WeylGenerators {
public:
    WeylGenerators() = default;

    static WeylGenerators from_roots(std::shared_ptr<const GramSpace> space,
                                     const std::vector<QVec>& roots) {
        WeylGenerators g;
        g.space_ = std::move(space);
        const QVec zero = zero_vec(g.space_->rank());
        for (const auto& a : roots)
            if (zero < a) g.mirrors_.push_back(a);  // one of each +-pair
        return g;
    }

    static WeylGenerators from_matrices(std::shared_ptr<const GramSpace> space,
                                        std::vector<Matrix> mats) {
        WeylGenerators g;
        g.space_ = std::move(space);
        g.matrices_ = std::move(mats);
        return g;
    }

    std::size_t size() const { return mirrors_.size() + matrices_.size(); }
    bool empty() const { return size() == 0; }

    QVec apply(std::size_t i, const QVec& v) const {
        if (i < mirrors_.size()) return reflect(*space_, mirrors_[i], v);
        return mat_vec(matrices_.at(i - mirrors_.size()), v);
    }

private:
    std::shared_ptr<const GramSpace> space_;
    std::vector<QVec> mirrors_;
    std::vector<Matrix> matrices_;
};

/// Breadth-first closure of {v} under the generators, sorted lexicographically.
/// Throws ResourceError once the orbit grows beyond `cap` elements.
inline std::vector<QVec> weyl_orbit(const WeylGenerators& gens, const QVec& v, std::size_t cap) {
    std::set<QVec> seen{v};
    std::deque<QVec> frontier{v};
    while (!frontier.empty()) {
        QVec cur = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            QVec w = gens.apply(i, cur);
            if (seen.insert(w).second) {
                if (seen.size() > cap)
                    throw ResourceError("Weyl orbit of " + to_string(v) + " exceeds orbit cap " +
                                        std::to_string(cap));
                frontier.push_back(std::move(w));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

inline QVec orbit_representative(const WeylGenerators& gens, const QVec& v, std::size_t cap) {
    return weyl_orbit(gens, v, cap).front();
}

struct Violation {
    std::string kind;
    std::string message;
};

/// Problem that passed validate(): immutable, with roots and weights in
/// canonical (lexicographic) order. Indices reported elsewhere refer to
/// these orderings.
class ValidatedProblem {
public:
    const GramSpace& space() const { return *space_; }
    std::shared_ptr<const GramSpace> space_ptr() const { return space_; }
    std::size_t rank() const { return space_->rank(); }
    const std::vector<QVec>& roots() const { return roots_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const WeylPolicy& weyl_policy() const { return policy_; }
    const WeylGenerators& weyl() const { return weyl_; }
    std::size_t orbit_cap() const { return orbit_cap_; }

    std::int64_t dim_V() const {
        std::int64_t d = 0;
        for (const auto& w : weights_) d += w.mult;
        return d;
    }

    std::optional<std::size_t> weight_index(const QVec& v) const {
        auto it = std::lower_bound(weights_.begin(), weights_.end(), v,
                                   [](const Weight& w, const QVec& x) { return w.v < x; });
        if (it == weights_.end() || it->v != v) return std::nullopt;
        return static_cast<std::size_t>(it - weights_.begin());
    }

    /// Back to plain data (canonical order), e.g. for transformation tests.
    Problem to_problem() const {
        return Problem{space_->gram(), roots_, weights_, policy_, orbit_cap_};
    }

private:
    friend struct ValidationOutcome validate(const Problem& problem);
    ValidatedProblem() = default;

    std::shared_ptr<const GramSpace> space_;
    std::vector<QVec> roots_;
    std::vector<Weight> weights_;
    WeylPolicy policy_;
    WeylGenerators weyl_;
    std::size_t orbit_cap_ = default_orbit_cap;
};

struct ValidationOutcome {
    std::optional<ValidatedProblem> problem;
    std::vector<Violation> violations;

    bool ok() const { return problem.has_value(); }

    const ValidatedProblem& value() const {
        if (!problem) {
            std::string msg = "invalid problem:";
            for (const auto& v : violations) msg += "\n  " + v.message;
            throw InputError(msg);
        }
        return *problem;
    }
};

namespace detail {

inline std::map<QVec, std::int64_t> weight_multiset(const std::vector<Weight>& ws) {
    std::map<QVec, std::int64_t> m;
    for (const auto& w : ws) m[w.v] += w.mult;
    return m;
}

}  // namespace detail

/// Checks the hypotheses the algorithm relies on and returns either a
/// validated wrapper or every violation found.
inline ValidationOutcome validate(const Problem& problem) {
    ValidationOutcome out;
    auto violate = [&](std::string kind, std::string msg) {
        out.violations.push_back({std::move(kind), std::move(msg)});
    };

    const std::size_t r = problem.gram.size();
    if (r == 0) {
        violate("gram", "gram must be a nonempty square matrix");
        return out;
    }
    if (!is_square(problem.gram)) {
        violate("gram", "gram is not square");
        return out;
    }
    bool symmetric = true;
    for (std::size_t i = 0; i < r && symmetric; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (problem.gram[i][j] != problem.gram[j][i]) {
                violate("gram", "gram not symmetric at entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
                symmetric = false;
                break;
            }
    const auto bad_minor = first_nonpositive_minor(problem.gram);
    if (bad_minor)
        violate("gram", "gram not positive definite at minor " + std::to_string(*bad_minor));

    bool shapes_ok = true;
    for (const auto& a : problem.roots)
        if (a.size() != r) {
            violate("dimension", "root " + to_string(a) + " does not have length " + std::to_string(r));
            shapes_ok = false;
        }
    for (const auto& w : problem.weights) {
        if (w.v.size() != r) {
            violate("dimension",
                    "weight " + to_string(w.v) + " does not have length " + std::to_string(r));
            shapes_ok = false;
        }
        if (w.mult < 1)
            violate("multiplicity", "weight " + to_string(w.v) + " has multiplicity " +
                                        std::to_string(w.mult) + " < 1");
    }
    if (problem.orbit_cap < 1) violate("orbit_cap", "orbit_cap must be positive");
    if (const auto* ex = std::get_if<WeylExplicit>(&problem.weyl))
        for (std::size_t g = 0; g < ex->generators.size(); ++g) {
            const auto& m = ex->generators[g];
            if (m.size() != r || !is_square(m)) {
                violate("weyl", "generator " + std::to_string(g) + " is not a " + std::to_string(r) +
                                    "x" + std::to_string(r) + " matrix");
                shapes_ok = false;
            }
        }
    // Structural checks below need a usable Gram space and well-shaped data.
    if (!symmetric || !shapes_ok || bad_minor) return out;

    auto space = std::make_shared<const GramSpace>(problem.gram);

    std::set<QVec> root_set;
    for (const auto& a : problem.roots) {
        if (is_zero(a)) violate("roots", "zero vector listed as a root");
        if (!root_set.insert(a).second) violate("roots", "duplicate root " + to_string(a));
    }
    for (const auto& a : root_set) {
        if (is_zero(a)) continue;
        if (!root_set.count(-a)) violate("roots", "root " + to_string(a) + " lacks its negative");
    }
    // Reduced: no two roots are proportional except +-.
    {
        std::vector<QVec> rs(root_set.begin(), root_set.end());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                if (is_zero(rs[i]) || is_zero(rs[j])) continue;
                if (rs[i] == -rs[j]) continue;
                if (matrix_rank({rs[i], rs[j]}) == 1)
                    violate("roots", "root system not reduced: " + to_string(rs[i]) + " and " +
                                         to_string(rs[j]) + " are proportional");
            }
    }

    std::set<QVec> weight_seen;
    for (const auto& w : problem.weights)
        if (!weight_seen.insert(w.v).second)
            violate("weights", "duplicate weight " + to_string(w.v));

    WeylGenerators gens;
    if (const auto* ex = std::get_if<WeylExplicit>(&problem.weyl)) {
        for (std::size_t g = 0; g < ex->generators.size(); ++g) {
            const Matrix& m = ex->generators[g];
            // Gram-orthogonal: <m e_i, m e_j> = <e_i, e_j>
            bool orth = true;
            for (std::size_t i = 0; i < r && orth; ++i)
                for (std::size_t j = 0; j < r && orth; ++j) {
                    QVec ei = zero_vec(r), ej = zero_vec(r);
                    ei[i] = 1;
                    ej[j] = 1;
                    if (space->inner(mat_vec(m, ei), mat_vec(m, ej)) != problem.gram[i][j])
                        orth = false;
                }
            if (!orth) violate("weyl", "generator " + std::to_string(g) + " is not Gram-orthogonal");
            for (const auto& a : root_set)
                if (!root_set.count(mat_vec(m, a))) {
                    violate("weyl", "generator " + std::to_string(g) + " maps root " + to_string(a) +
                                        " outside the root set");
                    break;
                }
        }
        gens = WeylGenerators::from_matrices(space, ex->generators);
    } else {
        std::vector<QVec> nonzero;
        for (const auto& a : root_set)
            if (!is_zero(a)) nonzero.push_back(a);
        gens = WeylGenerators::from_roots(space, nonzero);
    }

    // Weight multiset invariant under every generator.
    const auto ms = detail::weight_multiset(problem.weights);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (const auto& [v, mult] : ms) {
            QVec image = gens.apply(g, v);
            auto it = ms.find(image);
            if (it == ms.end() || it->second != mult) {
                violate("weyl_invariance", "weight " + to_string(v) + " (mult " +
                                               std::to_string(mult) + ") maps to " +
                                               to_string(image) + " under Weyl generator " +
                                               std::to_string(g) + ", which is not a weight of " +
                                               "the same multiplicity");
                break;
            }
        }
    }

    if (!out.violations.empty()) return out;

    ValidatedProblem vp;
    vp.space_ = space;
    vp.roots_.assign(root_set.begin(), root_set.end());
    vp.weights_ = problem.weights;
    std::sort(vp.weights_.begin(), vp.weights_.end(),
              [](const Weight& a, const Weight& b) { return a.v < b.v; });
    vp.policy_ = problem.weyl;
    vp.weyl_ = std::move(gens);
    vp.orbit_cap_ = problem.orbit_cap;
    out.problem = std::move(vp);
    return out;
}

/// Merges coinciding vectors, summing multiplicities; sorted output.
inline std::vector<Weight> merge_weights(const std::vector<Weight>& ws) {
    std::vector<Weight> out;
    for (const auto& [v, m] : detail::weight_multiset(ws)) out.push_back({v, m});
    return out;
}

}  // namespace nullcone
