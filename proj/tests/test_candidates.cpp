#include <gtest/gtest.h>

#include <set>

#include "nullcone/candidates.hpp"
#include "nullcone/oracle.hpp"
#include "test_util.hpp"

using namespace nullcone;

namespace {

std::set<QVec> l_set(const std::vector<Candidate>& cs) {
    std::set<QVec> out;
    for (const auto& c : cs) out.insert(c.l);
    return out;
}

}  // namespace

TEST(Saturate, Examples) {
    auto p = test::cat("sl2-forms:2,3,3,4,5");
    auto sub = SubProblem::of(p);
    // l = eps / <5 eps, eps>
    auto m = saturate(sub, {Rat(1, 5)});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(sub.weights()[m[0]].v, QVec{Rat(5)});
    EXPECT_TRUE(saturate(sub, {Rat(1, 7)}).empty());

    auto a1 = test::cat("adjoint:A1");
    auto s1 = SubProblem::of(a1);
    m = saturate(s1, {Rat(1, 2)});  // alpha / <alpha, alpha>
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(s1.weights()[m[0]].v, QVec{Rat(1)});
}

TEST(Inequality, Examples) {
    auto torus = test::cat("torus:1,0;0,1;-1,-1");
    auto chk = check_inequality9(SubProblem::of(torus), {1, 1});
    EXPECT_EQ(chk.lhs, 0);
    EXPECT_TRUE(chk.holds);

    auto a1 = test::cat("adjoint:A1");
    chk = check_inequality9(SubProblem::of(a1), {Rat(1, 2)});
    EXPECT_EQ(chk.lhs, 1);
    EXPECT_EQ(chk.rhs, 2);
    EXPECT_TRUE(chk.holds);

    // root-parallel line through eps1, eps2: equality
    auto ex3 = test::cat("gl2-ex3:2,1");
    chk = check_inequality9(SubProblem::of(ex3), {Rat(1, 3), Rat(1, 3)});
    EXPECT_EQ(chk.lhs, 0);
    EXPECT_EQ(chk.rhs, 0);
}

TEST(CandidateFromSubset, Examples) {
    auto ex3 = test::cat("gl2-ex3:2,1");
    auto sub = SubProblem::of(ex3);
    // weights sorted: (0,1), (1,0), (1,1)
    auto c = candidate_from_subset(sub, {0, 1});
    ASSERT_TRUE(c);  // excluded only at the tree stage
    EXPECT_EQ(c->l, (QVec{Rat(1, 3), Rat(1, 3)}));
    EXPECT_EQ(c->M, (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(c->on_boundary());

    auto single = candidate_from_subset(sub, {2});
    ASSERT_TRUE(single);
    EXPECT_EQ(single->M, std::vector<std::size_t>{2});
    EXPECT_EQ(single->l, (Rat(1) / ex3.space().norm2(QVec{1, 1})) * QVec({1, 1}));

    // a hyperplane through the origin
    auto t = test::cat("torus:1,0;-1,0;0,1");
    auto ts = SubProblem::of(t);
    EXPECT_FALSE(candidate_from_subset(ts, {0, 2}));  // (-1,0), (1,0): perp 0
    EXPECT_THROW(candidate_from_subset(ts, {}), InputError);
}

TEST(Enumerate, KnownCounts) {
    EXPECT_EQ(enumerate_candidates(test::cat("sl2-forms:2,3,3,4,5")).size(), 5u);
    EXPECT_EQ(enumerate_candidates(test::cat("sl3-forms:4")).size(), 12u);
    EXPECT_EQ(enumerate_candidates(test::cat("g2-adjoint")).size(), 6u);
}

TEST(Enumerate, DedupAndThreads) {
    auto p = test::cat("sl3-forms:4");
    auto one = enumerate_candidates(p);
    auto many = enumerate_candidates(SubProblem::of(p), {true, 4});
    EXPECT_EQ(l_set(one), l_set(many));
    auto all = enumerate_candidates(SubProblem::of(p), {false, 1});
    EXPECT_GT(all.size(), one.size());
    // every undeduplicated candidate is W-conjugate to a representative
    std::set<QVec> reps = l_set(one);
    for (const auto& c : all) EXPECT_TRUE(reps.count(orbit_representative(p.weyl(), c.l, 1000)));
}

TEST(Enumerate, MatchesNaiveOracle) {
    for (const char* spec : {"sl2-forms:2,3,3,4,5", "sl3-forms:3", "g2-adjoint", "gl2-ex3:2,1",
                             "gl2-ex3:2,-1", "adjoint:B2", "torus:1,0;0,1;-1,-1;1,1"}) {
        auto p = test::cat(spec);
        for (bool dedup : {true, false}) {
            auto engine = l_set(enumerate_candidates(SubProblem::of(p), {dedup, 1}));
            auto naive = oracle::naive_candidates(p, dedup);
            EXPECT_EQ(engine, std::set<QVec>(naive.begin(), naive.end())) << spec << " dedup " << dedup;
        }
    }
}

TEST(Enumerate, CandidatesSatisfyConditions) {
    auto p = test::cat("sl3-forms:4");
    auto sub = SubProblem::of(p);
    for (const auto& c : enumerate_candidates(p)) {
        EXPECT_FALSE(is_zero(c.l));
        EXPECT_EQ(c.M, saturate(sub, c.l));
        EXPECT_EQ(perp(p.space(), points_of(sub, c.M)), c.perp_point);
        EXPECT_TRUE(in_convex_hull(p.space(), c.perp_point, points_of(sub, c.M)));
        EXPECT_TRUE(check_inequality9(sub, c.l).holds);
    }
}
