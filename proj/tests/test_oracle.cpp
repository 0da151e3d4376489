#include <gtest/gtest.h>

#include "qwig/verify.hpp"

using namespace qwig;
using namespace qwig::oracle;

namespace {

struct SuiteCase {
    Signature sig;
    std::string suite;
};

void PrintTo(const SuiteCase& c, std::ostream* os) { *os << to_string(c.sig) << " " << c.suite; }

std::string case_name(const testing::TestParamInfo<SuiteCase>& p)
{
    return "gl" + std::to_string(p.param.sig.m) + "_" + std::to_string(p.param.sig.n) + "_" + p.param.suite;
}

std::vector<SuiteCase> all_cases()
{
    std::vector<SuiteCase> out;
    for (Signature s : {Signature{1, 0}, Signature{2, 0}, Signature{3, 0}, Signature{1, 1}, Signature{2, 1}, Signature{1, 2}})
        for (const auto& x : suite_names())
            if (s.n >= 1 || (x != "wigner" && x != "coupled")) out.push_back({s, x});
    return out;
}

} // namespace

class Suite : public testing::TestWithParam<SuiteCase> {};

TEST_P(Suite, NoFailures)
{
    VerifyOptions opt;
    opt.jobs = 4;
    auto cases = run_verify(GetParam().sig, {GetParam().suite}, opt);
    ASSERT_FALSE(cases.empty());
    int pass = 0;
    for (const auto& c : cases) {
        std::string in;
        for (const auto& [k, v] : c.inputs) in += k + "=" + v + " ";
        EXPECT_NE(c.status, "FAIL") << in << c.detail;
        pass += c.status == "PASS";
    }
    EXPECT_GT(pass, 0);
}

INSTANTIATE_TEST_SUITE_P(Oracle, Suite, testing::ValuesIn(all_cases()), case_name);

TEST(RMatrix, NumericGl22)
{
    for (double q0 : {0.7, 2.0}) {
        auto a = qybe_check<double>(Signature{2, 2}, Scalars<double>{q0}, 1e-9);
        auto b = coproduct_check<double>(Signature{2, 2}, Scalars<double>{q0}, 1e-9);
        EXPECT_TRUE(a.pass) << q0 << " " << a.residual;
        EXPECT_TRUE(b.pass) << q0 << " " << b.residual;
        EXPECT_LT(a.residual, 1e-9);
    }
}

TEST(Modules, VectorRepresentations)
{
    for (Signature s : {Signature{1, 1}, Signature{2, 1}, Signature{1, 2}}) {
        auto V = vector_rep<QFraction>(s);
        EXPECT_TRUE(check_relations(V, 0)) << to_string(s);
        EXPECT_TRUE(check_relations(dual_vector_rep<QFraction>(s), 0)) << to_string(s);
        EXPECT_TRUE(check_relations(tensor_module(V, V), 0)) << to_string(s);
    }
}

TEST(Realize, Gl11Modules)
{
    auto mods = realized_modules(Signature{1, 1}, 2);
    ASSERT_FALSE(mods.empty());
    EXPECT_EQ(to_string(mods[0].lambda), "0|0");
    bool vec = false;
    for (const auto& R : mods)
        if (to_string(R.lambda) == to_string(parse_weight("1|0"))) {
            vec = true;
            EXPECT_EQ(R.dim(), 2);
        }
    EXPECT_TRUE(vec);
}

// on gl(1|1) V(eps_1): the raise table of the closed form, recovered from projectors
TEST(Wigner, Gl11VectorTable)
{
    const Signature s{1, 1};
    auto mods = realized_modules(s, 1);
    const Realized* R = nullptr;
    for (const auto& m : mods)
        if (to_string(m.lambda) == to_string(parse_weight("1|0"))) R = &m;
    ASSERT_NE(R, nullptr);
    auto X = char_matrix_scaled(*R->ambient, CharKind::Atilde);
    const Weight L0 = parse_weight("1");
    const QFraction two(qnum(2));
    EXPECT_EQ(wigner_oracle(*R, X, L0, 1, Kind::raise), QFraction(qpow2(-2)) / two);
    EXPECT_EQ(wigner_oracle(*R, X, L0, 2, Kind::raise), QFraction(qpow2(2)) / two);
}

// the minus_rho0 exponent is contradicted by the supertrace on gl(2|1) V(eps_1)
TEST(Invariants, MinusRho0TildeFormRejected)
{
    const Signature s{2, 1};
    auto mods = realized_modules(s, 1);
    const Realized* R = nullptr;
    for (const auto& m : mods)
        if (to_string(m.lambda) == to_string(parse_weight("1,0|0"))) R = &m;
    ASSERT_NE(R, nullptr);
    auto X = char_matrix_scaled(*R->ambient, CharKind::Atilde);
    QFraction st = supertrace_invariant(*R, X, CharKind::Atilde, 1);
    EXPECT_EQ(st, chi_C1(R->lambda, true, C1TildeForm::plus_rho0));
    EXPECT_NE(st, chi_C1(R->lambda, true, C1TildeForm::minus_rho0));
}

TEST(Verify, UnknownSuite)
{
    EXPECT_THROW(run_verify(Signature{1, 1}, {"nonsense"}), Error);
}

TEST(Verify, JobsDoNotChangeResults)
{
    VerifyOptions a, b;
    b.jobs = 6;
    auto x = run_verify(Signature{1, 1}, {"all"}, a), y = run_verify(Signature{1, 1}, {"all"}, b);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_EQ(x[i].inputs, y[i].inputs);
        EXPECT_EQ(x[i].status, y[i].status);
        EXPECT_EQ(x[i].detail, y[i].detail);
    }
}
