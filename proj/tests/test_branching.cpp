#include <numeric>

#include <gtest/gtest.h>

#include "sweep.hpp"

using namespace qwig;

TEST(Branching, Candidates)
{
    Weight L = parse_weight("1,0|0");
    auto c = branch_candidates(L);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(to_string(c[0]), to_string(parse_weight("0,-1")));
    EXPECT_EQ(to_string(c[3]), to_string(parse_weight("1,0")));
    EXPECT_TRUE(is_branching(L, c[0]));
    EXPECT_FALSE(is_branching(L, parse_weight("2,0")));
    EXPECT_FALSE(is_branching(L, parse_weight("1,0|0")));
    EXPECT_THROW(index_sets(L, parse_weight("2,0")), Error);
    EXPECT_THROW(index_sets(parse_weight("0,1|0"), parse_weight("0,0")), Error);
}

TEST(Branching, IndexSets)
{
    BranchingData b = index_sets(parse_weight("1,0|0"), parse_weight("0,0"));
    EXPECT_EQ(b.I0, (std::vector<int>{1}));
    EXPECT_EQ(b.I0bar, (std::vector<int>{2}));
    EXPECT_TRUE(b.I1.empty());
    EXPECT_EQ(b.I1tilde, (std::vector<int>{3}));
    EXPECT_EQ(b.e_last, 1);

    BranchingData c = index_sets(parse_weight("2|1,0"), parse_weight("2|1"));
    EXPECT_EQ(c.I0bar, (std::vector<int>{1}));
    EXPECT_EQ(c.I1, (std::vector<int>{2}));
    EXPECT_EQ(c.I1tilde, (std::vector<int>{2, 3}));
    EXPECT_EQ(c.eta, 0);
}

// |I0| + |I0bar| = m, and the two grading sums over the counted shifts
TEST(Branching, CountingIdentities)
{
    long seen = 0;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const Signature s{m, n};
            for (const Weight& L : sweep::dominant_box(s, -1, 2))
                for (const Weight& L0 : branch_candidates(L)) {
                    BranchingData b = index_sets(L, L0);
                    ++seen;
                    ASSERT_EQ((int)(b.I0.size() + b.I0bar.size()), m);
                    long s1 = 0, s2 = 0;
                    for (int r : b.I0) s1 += parity(s, r);
                    for (int r : b.I1) s1 += parity(s, r);
                    for (int r : b.I0bar) s2 += parity(s, r);
                    for (int r : b.I1) s2 += parity(s, r);
                    ASSERT_EQ(s1, (long)b.I0.size() - n + 1);
                    ASSERT_EQ(s2, (long)m - n + 1 - (long)b.I0.size());
                }
        }
    EXPECT_GT(seen, 1000);
}

TEST(Branching, ShiftSub)
{
    Weight L0 = parse_weight("1,0");
    EXPECT_EQ(shift_sub(L0, 2, 1).ints(), (std::vector<long>{1, 1}));
    EXPECT_THROW(shift_sub(L0, 3, 1), Error);
}
