#pragma once

// A problem restricted along a chain of vectors l_1, ..., l_k. Everything is
// kept in ambient coordinates: roots and weights live in the subspace
// {l_1 = ... = l_k = 0}, and the Weyl group is generated by reflections in the
// surviving roots (these fix every constraint).

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nullcone/errors.hpp"
#include "nullcone/geometry.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone {

class SubProblem {
public:
    /// The unrestricted problem (depth 0), using the problem's Weyl policy.
    static SubProblem of(const ValidatedProblem& p) {
        SubProblem s;
        s.space_ = p.space_ptr();
        s.roots_ = p.roots();
        s.weights_ = p.weights();
        s.weyl_ = p.weyl();
        s.orbit_cap_ = p.orbit_cap();
        return s;
    }

    const GramSpace& space() const { return *space_; }
    const std::shared_ptr<const GramSpace>& space_ptr() const { return space_; }
    const std::vector<QVec>& constraints() const { return constraints_; }
    const std::vector<QVec>& roots() const { return roots_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const WeylGenerators& weyl() const { return weyl_; }
    std::size_t orbit_cap() const { return orbit_cap_; }
    std::size_t depth() const { return constraints_.size(); }

    /// Dimension of the subspace the data lives in.
    std::size_t free_rank() const { return space_->rank() - constraints_.size(); }

    std::vector<QVec> weight_vectors() const {
        std::vector<QVec> out;
        out.reserve(weights_.size());
        for (const auto& w : weights_) out.push_back(w.v);
        return out;
    }

    /// Restriction along l: keep roots orthogonal to l; project the weights
    /// on {l = 1} to {l = 0}, summing multiplicities of coinciding images.
    SubProblem restrict(const QVec& l) const {
        space_->check_dim(l);
        if (is_zero(l)) throw InternalError("restrict along the zero vector");
        for (const auto& c : constraints_)
            if (sgn(space_->inner(l, c)) != 0)
                throw InternalError("restrict: " + to_string(l) + " is not orthogonal to constraint " +
                                    to_string(c));
        if (constraints_.size() >= space_->rank())
            throw InternalError("restrict: constraint chain already has full rank");

        SubProblem s;
        s.space_ = space_;
        s.orbit_cap_ = orbit_cap_;
        s.constraints_ = constraints_;
        s.constraints_.push_back(l);
        for (const auto& a : roots_)
            if (sgn(space_->inner(l, a)) == 0) s.roots_.push_back(a);
        std::vector<Weight> projected;
        for (const auto& w : weights_)
            if (space_->inner(l, w.v) == 1)
                projected.push_back({project_hyperplane(*space_, l, w.v), w.mult});
        s.weights_ = merge_weights(projected);
        s.weyl_ = WeylGenerators::from_roots(space_, s.roots_);
        return s;
    }

    /// Canonical text of the (roots, weights) data; equal keys give equal
    /// candidate sets and trees.
    std::string key() const {
        std::string k = "R";
        for (const auto& a : roots_) k += key_of(a) + ";";
        k += "W";
        for (const auto& w : weights_) k += key_of(w.v) + "x" + std::to_string(w.mult) + ";";
        return k;
    }

private:
    SubProblem() = default;

    std::shared_ptr<const GramSpace> space_;
    std::vector<QVec> constraints_;
    std::vector<QVec> roots_;
    std::vector<Weight> weights_;
    WeylGenerators weyl_;
    std::size_t orbit_cap_ = default_orbit_cap;
};

}  // namespace nullcone
