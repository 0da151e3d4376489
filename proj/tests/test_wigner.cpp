#include <gtest/gtest.h>

#include "sweep.hpp"

using namespace qwig;

namespace {

BranchingData br(const char* L, const char* L0) { return index_sets(parse_weight(L), parse_weight(L0)); }

QFraction q(const char* s) { return parse_qfraction(s); }

QFraction total(const CoefficientTable& t)
{
    QFraction s;
    for (const auto& [kr, v] : t.entries) s += v;
    return s;
}

// a_r as a field element from the classical root
QFraction dual_root(const Weight& L, int r) { return root_value(classical_roots(L, RootVariant::dual)[r - 1]); }

} // namespace

TEST(Omega, LowerExamples)
{
    auto t = omega(br("1,0|0", "0,0"), Kind::lower);
    ASSERT_EQ(t.entries.size(), 2u);
    EXPECT_EQ(omega_at(t, 1), q("-q^-2"));
    EXPECT_EQ(omega_at(t, 2), QFraction());
    EXPECT_EQ(omega_at(t, 3), q("1+q^-2"));

    auto u = omega(br("1|0", "1"), Kind::lower);
    ASSERT_EQ(u.entries.size(), 1u);
    EXPECT_EQ(omega_at(u, 2), QFraction(1));

    try {
        omega(br("1|0", "0"), Kind::lower);
        FAIL() << "expected DegenerateRoots";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegenerateRoots);
    }
}

TEST(Omega, RaiseExamples)
{
    const QFraction two(qnum(2));
    auto t = omega(br("1|0", "1"), Kind::raise);
    EXPECT_EQ(omega_at(t, 1), QFraction(qpow2(-2)) / two);
    EXPECT_EQ(omega_at(t, 2), QFraction(qpow2(2)) / two);

    auto u = omega(br("1,0|0", "1,0"), Kind::raise);
    EXPECT_EQ(omega_at(u, 1), QFraction(qpow2(-2)) / two);
    EXPECT_EQ(omega_at(u, 2), QFraction(qpow2(2)) / two);
    EXPECT_EQ(omega_at(u, 3), QFraction());

    auto v = omega(br("0|0", "0"), Kind::raise);
    EXPECT_EQ(omega_at(v, 1), QFraction(1));
    EXPECT_EQ(omega_at(v, 2), QFraction());
}

TEST(Gamma, Examples)
{
    BranchingData b = br("2,0|0", "1,0");
    const QFraction qi(qpow2(-2)), qi2(qpow2(-4));
    QFraction a01 = dual_root(b.lambda0, 1);
    QFraction expect = -(dual_root(b.lambda, 1) - qi2 * a01 - qi) * (dual_root(b.lambda, 3) - qi2 * a01 - qi);
    EXPECT_EQ(gamma(b, 1, Kind::lower), expect);
    EXPECT_EQ(gamma(b, 1, Kind::lower, Form::qnumber_phase), expect);
    EXPECT_THROW(gamma(b, 2, Kind::lower), Error);
}

TEST(Mu, Examples)
{
    // L0 - eps_1 = (0,0) does not occur in V(2,0|0), so the reduced matrix element vanishes;
    // evaluating the product at the shifted subalgebra root instead gives q^-4
    BranchingData b = br("2,0|0", "1,0");
    EXPECT_EQ(mu(b, 1, Kind::lower), QFraction());
    EXPECT_EQ(mu(b, 1, Kind::lower, Form::qnumber_phase), QFraction());
    EXPECT_EQ(mu(b, 1, Kind::lower, Form::root_product, MuConvention::shifted_root), QFraction(qpow2(-8)));
    EXPECT_THROW(mu(b, 3, Kind::lower), Error);
}

// mu~_r(L, L0) = gamma~_r(L, L0 + eps_r), and mu_r(L, L0) = gamma_r(L, L0 - eps_r)
TEST(Mu, GammaRelation)
{
    long checked = 0;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (const Weight& L : sweep::dominant_box(Signature{m, n}, -2, 2))
                for (const Weight& L0 : branch_candidates(L))
                    for (Kind k : {Kind::lower, Kind::raise})
                        for (int r = 1; r < L.sig.d(); ++r) {
                            Weight sh = shift_sub(L0, r, k == Kind::lower ? -1 : 1);
                            if (!is_branching(L, sh)) continue;
                            BranchingData b = index_sets(L, L0), bs = index_sets(L, sh);
                            if (!detail::contains(make_side(bs, k).R, r)) continue;
                            try {
                                QFraction g = gamma(bs, r, k);
                                ASSERT_EQ(mu(b, r, k), g) << to_string(L) << " " << to_string(L0) << " r=" << r;
                                ++checked;
                            } catch (const Error& e) {
                                ASSERT_EQ(e.code(), Errc::DegenerateRoots);
                            }
                        }
    EXPECT_GT(checked, 100);
}

TEST(Coupled, Examples)
{
    BranchingData b = br("1,0|0", "1,0");
    EXPECT_EQ(omega_coupled(b, 1, 1, Kind::raise), QFraction(1));
    EXPECT_EQ(omega_coupled(b, 1, 1, Kind::raise, Form::root_product), QFraction(1));
    EXPECT_THROW(omega_coupled(br("1,0|0", "0,0"), 1, 2, Kind::raise), Error);
    // extended admission returns the oracle's value for r outside the literal set
    EXPECT_NO_THROW(omega_coupled(br("1,0|0", "0,0"), 1, 2, Kind::raise, Form::qnumber_phase, Admission::extended));
}

TEST(Rwc, Conventions)
{
    BranchingData b = br("1|0", "1");
    auto s = rwc(b, 1, std::nullopt, Kind::raise);
    EXPECT_EQ(s.phase, 1);
    EXPECT_EQ(s.square, QFraction(qpow2(-2)) / QFraction(qnum(2)));
    PhaseConvention pc;
    pc.name = "table";
    pc.table[{Kind::raise, 1, 0}] = -1;
    EXPECT_EQ(rwc(b, 1, std::nullopt, Kind::raise, pc).phase, -1);
    pc.name = "condon";
    try {
        rwc(b, 1, std::nullopt, Kind::raise, pc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownPhaseConvention);
    }
    EXPECT_THROW(rwc(b, 1, std::nullopt, Kind::lower), Error);
}

// the sum rules, vanishing rules, linear systems, form equivalence and classical limits on a
// smaller box than the acceptance sweep
TEST(Properties, SmallSweep)
{
    auto st = sweep::for_each_branching(2, 2, -2, 2, [](const BranchingData& b) {
        for (Kind k : {Kind::lower, Kind::raise}) {
            Side sd = make_side(b, k);
            auto t = omega(b, k), u = omega(b, k, Form::qnumber_phase);
            ASSERT_EQ(total(t), QFraction(1));
            for (const auto& [kr, v] : t.entries) ASSERT_EQ(u.entries.at(kr), v);
            const auto& zero = k == Kind::lower ? b.I0bar : b.I0;
            for (int z : zero) ASSERT_TRUE(omega_at(t, z).is_zero());
            for (int r : sd.R) ASSERT_TRUE(omega_residual(b, k, r).is_zero());
            for (int r : sd.R) ASSERT_EQ(gamma(b, r, k), gamma(b, r, k, Form::qnumber_phase));
            for (int kk : sd.K)
                for (int r : sd.R) {
                    // a0r may meet another shifted root even on a generic branching
                    try {
                        QFraction x = omega_coupled(b, kk, r, k);
                        ASSERT_EQ(omega_coupled(b, kk, r, k, Form::root_product), x);
                    } catch (const Error& e) {
                        ASSERT_EQ(e.code(), Errc::DegenerateRoots);
                        EXPECT_THROW(omega_coupled(b, kk, r, k, Form::root_product), Error);
                    }
                }
            auto cl = omega_classical(b, k);
            for (const auto& [kr, v] : t.entries) ASSERT_EQ(limit_q1(v), cl.at(kr.first));
        }
    });
    EXPECT_GT(st.generic, 500);
}
