#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qwig/exactq.hpp"

using namespace qwig;

namespace {

HalfLaurent random_poly(std::mt19937& g, bool half)
{
    std::uniform_int_distribution<int> len(1, 4), ex(-6, 6), co(-5, 5);
    std::vector<HalfLaurent::Term> t;
    int n = len(g);
    for (int i = 0; i < n; ++i) t.emplace_back(half ? ex(g) : 2 * ex(g), Rational(co(g)));
    return HalfLaurent::from_terms(t);
}

QFraction random_fraction(std::mt19937& g, bool half = false)
{
    HalfLaurent d;
    do d = random_poly(g, half);
    while (d.is_zero());
    return QFraction(random_poly(g, half), d);
}

} // namespace

TEST(HalfLaurent, Arithmetic)
{
    HalfLaurent q = qpow2(2), qi = qpow2(-2);
    EXPECT_EQ(q * qi, HalfLaurent(1));
    EXPECT_EQ(qdiff(), q - qi);
    EXPECT_EQ(qnum(2), q + qi);
    EXPECT_EQ(qnum(-3), -qnum(3));
    EXPECT_TRUE(qnum(0).is_zero());
    EXPECT_EQ(qpow(Rational(1, 2)), qpow2(1));
    EXPECT_THROW(qpow(Rational(1, 3)), Error);
}

TEST(HalfLaurent, QNumberAdditionLaw)
{
    for (long x = -20; x <= 20; ++x)
        for (long y = -20; y <= 20; ++y)
            ASSERT_EQ(qnum(x + y), qpow(Rational(y)) * qnum(x) + qpow(Rational(-x)) * qnum(y)) << x << " " << y;
}

TEST(HalfLaurent, RootIdentity)
{
    // (1 - q^{-2a})/(q - q^{-1}) = q^{-a}[a]_q
    for (long a = -20; a <= 20; ++a) {
        QFraction lhs(HalfLaurent(1) - qpow2(-4 * a), qdiff());
        EXPECT_EQ(lhs, QFraction(qpow(Rational(-a)) * qnum(a))) << a;
    }
}

TEST(QFraction, CanonicalForm)
{
    QFraction a(qnum(4), qnum(2));
    EXPECT_TRUE(a.is_laurent());
    EXPECT_EQ(a, QFraction(qpow2(2) + qpow2(-2)) * QFraction(qpow2(2) + qpow2(-2)) - QFraction(2) + QFraction(0));
    EXPECT_EQ(QFraction(-qnum(3), -qnum(2)), QFraction(qnum(3), qnum(2)));
    EXPECT_EQ(QFraction(qpow2(6) * qnum(3), qpow2(2) * qnum(2)), QFraction(qpow2(4) * qnum(3), qnum(2)));
    EXPECT_EQ(QFraction(Rational(3, 6)), QFraction(HalfLaurent(1), HalfLaurent(2)));
    EXPECT_TRUE(QFraction().is_zero());
    EXPECT_THROW(QFraction(1) / QFraction(), Error);
}

TEST(QFraction, NormalizeProperty)
{
    std::mt19937 g(7);
    for (int i = 0; i < 300; ++i) {
        QFraction f = random_fraction(g, i % 2), h = random_fraction(g, i % 3 == 0);
        if (h.is_zero()) continue;
        ASSERT_EQ((f * h) * h.inverse(), f);
        ASSERT_EQ((f + h) - h, f);
        ASSERT_EQ(f / h * h, f);
    }
}

TEST(QFraction, NumericHomomorphism)
{
    std::mt19937 g(11);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        QFraction f = random_fraction(g, true), h = random_fraction(g, true);
        for (long double q0 : {0.7L, 2.0L}) {
            try {
                long double a = eval_numeric(f, q0), b = eval_numeric(h, q0), ab = eval_numeric(f * h, q0);
                ASSERT_NEAR(static_cast<double>(ab), static_cast<double>(a * b), 1e-12 * std::max(1.0L, std::fabs(a * b)));
                ++checked;
            } catch (const Error& e) {
                ASSERT_EQ(e.code(), Errc::PoleAtPoint);
            }
        }
    }
    EXPECT_GT(checked, 400);
}

TEST(QFraction, ClassicalLimit)
{
    EXPECT_EQ(limit_q1(QFraction(qnum(5), qnum(2))), Rational(5, 2));
    EXPECT_EQ(limit_q1(QFraction(qdiff(), qnum(3))), Rational(0));
    EXPECT_THROW(limit_q1(QFraction(qnum(3), qdiff())), Error);
}

TEST(QFraction, TextRoundTrip)
{
    std::mt19937 g(3);
    for (int i = 0; i < 400; ++i) {
        QFraction f = random_fraction(g, i % 2);
        ASSERT_EQ(parse_qfraction(to_string(f)), f) << to_string(f);
    }
    EXPECT_EQ(to_string(QFraction(qnum(2))), "q+q^-1");
    EXPECT_EQ(parse_qfraction("-q^-2"), QFraction(-qpow2(-4)));
    EXPECT_EQ(parse_qfraction("q^{1/2}"), QFraction(qpow2(1)));
    EXPECT_THROW(parse_qfraction("q^"), Error);
    EXPECT_THROW(parse_qfraction("(1+q"), Error);
}
