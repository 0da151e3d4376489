#include <gtest/gtest.h>

#include "qwig/branching.hpp"
#include "sweep.hpp"

using namespace qwig;

TEST(Weight, Parse)
{
    Weight w = parse_weight("2, 1 | -1");
    EXPECT_EQ(w.sig, (Signature{2, 1}));
    EXPECT_EQ(w.ints(), (std::vector<long>{2, 1, -1}));
    EXPECT_TRUE(w.dominant());
    EXPECT_FALSE(parse_weight("0,1|0").dominant());
    EXPECT_FALSE(parse_weight("1|0,1").dominant());
    EXPECT_FALSE(parse_weight("1/2|0").integral());
    EXPECT_EQ(parse_weight("3,1").sig, (Signature{2, 0}));
    EXPECT_THROW(parse_weight("|1"), Error);
    EXPECT_THROW(parse_weight("a,1|0"), Error);
    EXPECT_EQ(to_string(parse_weight(to_string(w))), to_string(w));
}

TEST(Weight, Rho)
{
    EXPECT_EQ(to_string(rho(Signature{2, 1})), to_string(parse_weight("0,-1|1")));
    auto [r0, r1] = rho_even_odd(Signature{2, 1});
    EXPECT_EQ(bilinear_form(r0, r1), Rational(0));
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            const Signature s{m, n};
            auto [a, b] = rho_even_odd(s);
            EXPECT_EQ(to_string(a - b), to_string(rho(s))) << to_string(s);
        }
}

// rho minus the subalgebra rho is orthogonal to eps_i - eps_j for i, j below the last index
TEST(Weight, RhoDifferenceOrthogonal)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const Signature s{m, n};
            Weight r0 = rho(subalgebra(s));
            std::vector<Rational> pad;
            for (int i = 1; i < s.d(); ++i) pad.push_back(r0[i]);
            pad.push_back(Rational(0));
            Weight diff = rho(s) - Weight(s, pad);
            for (int i = 1; i < s.d(); ++i)
                for (int j = 1; j < s.d(); ++j)
                    EXPECT_EQ(bilinear_form(diff, Weight::unit(s, i) - Weight::unit(s, j)), Rational(0));
        }
}

TEST(Roots, DeformedEqualsShiftedQNumber)
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 2; ++n)
            for (const Weight& L : sweep::dominant_box(Signature{m, n}, -2, 3))
                for (RootVariant v : {RootVariant::adjoint, RootVariant::dual}) {
                    RootSet rs = char_roots(L, v);
                    ASSERT_EQ((int)rs.classical.size(), L.sig.d());
                    for (int r = 1; r <= L.sig.d(); ++r) {
                        long a = rs[r];
                        ASSERT_EQ(rs.deformed[r - 1], QFraction(qpow(Rational(-a)) * qnum(a)));
                        ASSERT_EQ(limit_q1(QFraction(qpow(Rational(a))) * rs.deformed[r - 1]), Rational(a));
                    }
                }
}

TEST(Roots, VectorModule)
{
    // gl(1|1), Lambda = eps_1: the dual roots coincide, the adjoint ones do not
    Weight L = parse_weight("1|0");
    EXPECT_EQ(classical_roots(L, RootVariant::dual), (std::vector<long>{0, 0}));
    RootSet rs = char_roots(L, RootVariant::adjoint);
    EXPECT_EQ(rs.classical, (std::vector<long>{1, -1}));
    EXPECT_TRUE(rs.distinct);
    EXPECT_FALSE(check_generic(L).generic());
    EXPECT_EQ(check_generic(L).dual_pairs.size(), 1u);
    EXPECT_TRUE(check_generic(parse_weight("0|0")).generic());
}

// for r in I0 the dual subalgebra root at Lambda_0 equals the dual root at Lambda
TEST(Roots, SubalgebraRootOnI0)
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const Weight& L : sweep::dominant_box(Signature{m, n}, -2, 2))
                for (const Weight& L0 : branch_candidates(L)) {
                    BranchingData b = index_sets(L, L0);
                    auto al = classical_roots(L, RootVariant::dual), al0 = classical_roots(L0, RootVariant::dual);
                    for (int r : b.I0) ASSERT_EQ(al0[r - 1], al[r - 1]) << to_string(L) << " " << to_string(L0);
                }
}
