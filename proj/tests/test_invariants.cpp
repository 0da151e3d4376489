#include <gtest/gtest.h>

#include "qwig/invariants.hpp"
#include "sweep.hpp"

using namespace qwig;

TEST(Invariants, VProduct)
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 2; ++n)
            for (const Weight& L : sweep::dominant_box(Signature{m, n}, -2, 3))
                ASSERT_EQ(chi_v(L, true) * chi_v(L, false), QFraction(1)) << to_string(L);
}

TEST(Invariants, TrivialModule)
{
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            if (m + n == 0) continue;
            Weight z = Weight::zero(Signature{m, n});
            EXPECT_TRUE(chi_C1(z, false).is_zero()) << m << "|" << n;
            EXPECT_TRUE(chi_C1(z, true).is_zero()) << m << "|" << n;
            EXPECT_EQ(chi_v(z, false), QFraction(1));
        }
}

TEST(Invariants, VectorModule)
{
    // gl(1|1), Lambda = eps_1 is orthogonal to L + 2 rho
    EXPECT_EQ(chi_v(parse_weight("1|0"), false), QFraction(1));
    // gl(2), Lambda = eps_1: (L, L + 2 rho) = 2
    Weight L = parse_weight("1,0");
    EXPECT_EQ(chi_v(L, false), QFraction(qpow2(-4)));
    EXPECT_EQ(chi_v(L, true), QFraction(qpow2(4)));
    // gl(2|0) vector module: C1 = q^{-(1+1)}[1] = q^-2
    EXPECT_EQ(chi_C1(parse_weight("1,0"), false), QFraction(qpow2(-4)));
}

// minus_rho0 disagrees with the oracle (checked in test_oracle); the two
// forms must at least differ somewhere so the switch is not a no-op
TEST(Invariants, TildeForms)
{
    Weight L = parse_weight("1,0|0");
    EXPECT_NE(chi_C1(L, true, C1TildeForm::plus_rho0), chi_C1(L, true, C1TildeForm::minus_rho0));
    // they coincide when rho0 has no effect, e.g. on gl(1|1)
    Weight M = parse_weight("2|0");
    EXPECT_EQ(chi_C1(M, true, C1TildeForm::plus_rho0), chi_C1(M, true, C1TildeForm::minus_rho0));
}
