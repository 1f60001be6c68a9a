#include <gtest/gtest.h>

#include <algorithm>

#include "nullcone/engine.hpp"
#include "nullcone/oracle.hpp"
#include "test_util.hpp"

using namespace nullcone;

namespace {

std::vector<std::int64_t> sorted_dims(const NullconeSummary& s) {
    std::vector<std::int64_t> d;
    for (const auto& st : s.strata) d.push_back(st.dimension);
    std::sort(d.begin(), d.end());
    return d;
}

QVec l_of(const GramSpace& g, const std::vector<QVec>& pts) {
    QVec p = perp(g, pts);
    return (1 / g.norm2(p)) * p;
}

const std::vector<std::string> catalog_specs = {
    "sl2-forms:2,3,3,4,5", "sl3-forms:4", "g2-adjoint", "gl2-ex3:2,1", "gl2-ex3:2,-1",
    "adjoint:A2",          "adjoint:B2",  "torus:1,0;0,1;-1,-1"};

}  // namespace

TEST(Restrict, G2AlongL3) {
    auto p = test::cat("g2-adjoint");
    // alpha = (1,0) short, beta = (0,1) long; the line through beta and 3alpha+beta
    QVec l3 = l_of(p.space(), {{0, 1}, {3, 1}});
    auto r = SubProblem::of(p).restrict(l3);
    EXPECT_EQ(r.roots(), (std::vector<QVec>{{-1, 0}, {1, 0}}));
    ASSERT_EQ(r.weights().size(), 4u);
    for (const auto& w : r.weights()) {
        EXPECT_EQ(w.mult, 1);
        EXPECT_EQ(p.space().inner(l3, w.v), 0);
    }
    EXPECT_EQ(r.free_rank(), 1u);
    EXPECT_THROW(r.restrict(l3), InternalError);
}

TEST(Restrict, TorusHasNoRoots) {
    auto t = test::cat("torus:1,0;0,1;1,1");
    auto r = SubProblem::of(t).restrict(l_of(t.space(), {{1, 0}, {0, 1}}));
    EXPECT_TRUE(r.roots().empty());
    EXPECT_EQ(r.weights().size(), 2u);
}

TEST(MSet, Examples) {
    // no roots, 0 in the hull of the weights
    auto t = test::cat("torus:1;-1");
    EXPECT_TRUE(compute_M_set(SubProblem::of(t)).empty());

    // root-parallel line with two single weights
    auto ex3 = test::cat("gl2-ex3:2,1");
    auto r = SubProblem::of(ex3).restrict({Rat(1, 3), Rat(1, 3)});
    EXPECT_EQ(compute_M_set(r).size(), 1u);
}

TEST(Tree, Shapes) {
    auto ex3 = test::cat("gl2-ex3:2,1");
    auto top = SubProblem::of(ex3);
    auto excluded = build_tree(top, {Rat(1, 3), Rat(1, 3)});
    EXPECT_EQ(excluded.sign, Sign::minus);
    ASSERT_EQ(excluded.children.size(), 1u);
    EXPECT_EQ(excluded.children[0].sign, Sign::plus);
    EXPECT_TRUE(excluded.children[0].children.empty());
    EXPECT_EQ(excluded.depth(), 1u);

    auto leaf = build_tree(top, l_of(ex3.space(), {{1, 0}}));
    EXPECT_EQ(leaf.sign, Sign::plus);
    EXPECT_TRUE(leaf.children.empty());
}

TEST(Tree, DepthAndSignRule) {
    for (const auto& spec : catalog_specs) {
        auto p = test::cat(spec);
        auto res = stratify(p);
        for (const auto& c : res.candidates) {
            EXPECT_LE(c.tree.depth(), p.rank() - 1) << spec;
            EXPECT_TRUE(oracle::tree_violations(c.tree, p.rank()).empty()) << spec;
            EXPECT_EQ(c.stratifying, c.tree.sign == Sign::plus);
        }
    }
}

TEST(Stratifying, Sl3Forms4) {
    auto p = test::cat("sl3-forms:4");
    auto res = stratify(p);
    ASSERT_EQ(res.candidates.size(), 12u);
    std::vector<QVec> excluded;
    for (const auto& c : res.candidates)
        if (!c.stratifying) excluded.push_back(c.candidate.l);
    ASSERT_EQ(excluded.size(), 1u);
    // the line through the weights with exponents (1,3,0) and (0,3,1)
    QVec expected = l_of(p.space(), {{1, 3}, {-1, 2}});
    EXPECT_EQ(excluded[0], orbit_representative(p.weyl(), expected, 1000));
}

TEST(Stratifying, G2Adjoint) {
    auto p = test::cat("g2-adjoint");
    auto res = stratify(p);
    ASSERT_EQ(res.candidates.size(), 6u);
    std::size_t plus = 0;
    for (const auto& c : res.candidates) {
        plus += c.stratifying;
        // excluded exactly when the line is root-parallel with two single weights
        const bool parallel = std::any_of(p.roots().begin(), p.roots().end(), [&](const QVec& a) {
            return p.space().inner(c.candidate.l, a) == 0;
        });
        const bool two_single = c.candidate.M.size() == 2 && p.weights()[c.candidate.M[0]].mult == 1 &&
                                p.weights()[c.candidate.M[1]].mult == 1;
        EXPECT_EQ(!c.stratifying, parallel && two_single) << to_string(c.candidate.l);
    }
    EXPECT_EQ(plus, 4u);
}

TEST(Stratifying, TorusAlwaysPlus) {
    auto t = test::cat("torus:1,0;0,1;-1,-1;2,1;1,-1");
    for (const auto& c : stratify(t).candidates) EXPECT_TRUE(c.stratifying);
}

TEST(Dimension, Examples) {
    auto sl2 = stratify(test::cat("sl2-forms:2,3,3,4,5"));
    EXPECT_EQ(sorted_dims(sl2.summary), (std::vector<std::int64_t>{2, 3, 6, 8, 11}));
    EXPECT_EQ(sl2.summary.dim_nullcone, 11);
    EXPECT_FALSE(sl2.summary.equals_V);

    auto sl3 = stratify(test::cat("sl3-forms:4"));
    EXPECT_EQ(sorted_dims(sl3.summary), (std::vector<std::int64_t>{3, 5, 7, 7, 8, 8, 9, 9, 10, 10, 11}));
    EXPECT_EQ(sl3.summary.max_component_indices.size(), 1u);

    auto a1 = test::cat("adjoint:A1");
    EXPECT_EQ(stratum_dimension(a1, {Rat(1, 2)}), 2);
}

TEST(Openness, Examples) {
    auto t = test::cat("torus:2,1");
    auto res = stratify(t);
    ASSERT_EQ(res.summary.strata.size(), 1u);
    EXPECT_TRUE(res.summary.strata[0].is_open_in_V);
    EXPECT_TRUE(res.summary.equals_V);
    EXPECT_EQ(res.summary.dim_nullcone, 1);

    for (const auto& spec : catalog_specs) {
        auto s = stratify(test::cat(spec)).summary;
        EXPECT_LE(std::count_if(s.strata.begin(), s.strata.end(),
                                [](const StratumReport& r) { return r.is_open_in_V; }),
                  1)
            << spec;
    }
}

TEST(Shortcut, AgreesWithFullTrees) {
    for (const auto& spec : catalog_specs) {
        auto p = test::cat(spec);
        auto full = stratify(p);
        auto fast = stratify(p, {true, true, 1});
        ASSERT_EQ(full.candidates.size(), fast.candidates.size());
        for (std::size_t i = 0; i < full.candidates.size(); ++i)
            EXPECT_EQ(full.candidates[i].stratifying, fast.candidates[i].stratifying) << spec;
        EXPECT_EQ(sorted_dims(full.summary), sorted_dims(fast.summary));
    }
}

TEST(Engine, ThreadedRunIsIdentical) {
    auto p = test::cat("sl3-forms:4");
    auto a = stratify(p);
    auto b = stratify(p, {false, true, 3});
    ASSERT_EQ(a.candidates.size(), b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
        EXPECT_EQ(a.candidates[i].candidate.l, b.candidates[i].candidate.l);
        EXPECT_EQ(a.candidates[i].tree, b.candidates[i].tree);
    }
    EXPECT_EQ(a.summary, b.summary);
}

TEST(GenericRep, G2) {
    auto p = test::cat("g2-adjoint");
    auto res = stratify(p);
    // minimal stratum: the line through the single long root beta
    QVec l1 = orbit_representative(p.weyl(), l_of(p.space(), {{0, 1}}), 1000);
    QVec l3 = orbit_representative(p.weyl(), l_of(p.space(), {{0, 1}, {3, 1}}), 1000);
    bool seen1 = false, seen3 = false;
    for (const auto& s : res.summary.strata) {
        if (s.l == l1) {
            seen1 = true;
            ASSERT_EQ(s.generic_rep.terms.size(), 1u);
            EXPECT_EQ(p.space().norm2(p.weights()[s.generic_rep.terms[0].weight_index].v), 6);
            EXPECT_EQ(s.dimension, 6);
        }
        if (s.l == l3) {
            seen3 = true;
            EXPECT_EQ(s.generic_rep.terms.size(), 4u);
            EXPECT_EQ(s.generic_rep.terms[3].symbol, "c_4");
        }
    }
    EXPECT_TRUE(seen1);
    EXPECT_TRUE(seen3);

    auto t = test::cat("torus:1,2");
    auto tr = stratify(t);
    ASSERT_EQ(tr.summary.strata.size(), 1u);
    EXPECT_EQ(tr.summary.strata[0].generic_rep.terms.size(), 1u);
}

TEST(Summary, SortedAndConsistent) {
    auto s = stratify(test::cat("sl3-forms:4")).summary;
    for (std::size_t i = 1; i < s.strata.size(); ++i)
        EXPECT_GE(s.strata[i - 1].dimension, s.strata[i].dimension);
    for (const auto& st : s.strata) {
        for (auto i : st.support_V_l)
            EXPECT_TRUE(std::count(st.support_V_l_plus.begin(), st.support_V_l_plus.end(), i));
        for (auto i : st.levi_roots)
            EXPECT_TRUE(std::count(st.parabolic_roots.begin(), st.parabolic_roots.end(), i));
    }
}

TEST(Example3, NormDependence) {
    EXPECT_EQ(stratify(test::cat("gl2-ex3:2,1")).summary.strata.size(), 2u);
    EXPECT_EQ(stratify(test::cat("gl2-ex3:2,-1")).summary.strata.size(), 3u);
    EXPECT_EQ(stratify(test::cat("gl2-ex3:5,-4")).summary.strata.size(), 3u);
    // b = 0: the lines through eps1 and through eps1, eps1+eps2 coincide
    EXPECT_EQ(stratify(test::cat("gl2-ex3:2,0")).candidates.size(), 3u);
}
