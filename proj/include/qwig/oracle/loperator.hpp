#pragma once

#include <map>
#include <string>

#include "expr.hpp"

namespace qwig::oracle {

enum class LWhich { R, RT, Rtilde, RtildeT, dualR, dualRT, barR, barRT };
enum class CharKind { Ahat, Atilde, Adual, Abar };

inline const char* to_string(CharKind k)
{
    switch (k) {
    case CharKind::Ahat: return "Ahat";
    case CharKind::Atilde: return "Atilde";
    case CharKind::Adual: return "Adual";
    default: return "Abar";
    }
}

// 2 (rho, eps_i)
inline long rho2(const Signature& s, int i)
{
    Rational x = rho_dot(s, i) * 2;
    return x.get_num().get_si();
}

// roots governing each characteristic matrix on V(L)
inline RootVariant roots_of(CharKind k) { return k == CharKind::Atilde ? RootVariant::adjoint : RootVariant::dual; }

// matrix recursion, mirror of ex_eij; pivot applies at the top level only
template <class K>
SparseMatrix<K> eij_matrix(const RepModule<K>& W, int i, int j, int pivot = 0)
{
    const Signature& s = W.sig;
    check_index(s, i);
    check_index(s, j);
    if (i == j) throw Error(Errc::IndexOutOfRange, "E_ij needs i != j");
    if (j == i + 1) return W.e[i - 1];
    if (i == j + 1) return W.f[j - 1];
    int k = pivot ? pivot : (i < j ? j - 1 : j + 1);
    if (!(std::min(i, j) < k && k < std::max(i, j))) throw Error(Errc::IndexOutOfRange, "pivot not strictly between i and j");
    auto A = eij_matrix(W, i, k), B = eij_matrix(W, k, j);
    return A * B - (B * A).scaled(W.sc.qpow2(-2 * parity(s, k)));
}

template <class K>
SparseMatrix<K> etilde_matrix(const RepModule<K>& W, int i, int j, int antipode_power = 0)
{
    auto X = ex_etilde(W.sig, i, j);
    if (antipode_power == 1) X = antipode(X);
    if (antipode_power == -1) X = antipode(X, true);
    return evaluate(W, X);
}

template <class K>
SparseMatrix<K> l_operator(const RepModule<K>& W, LWhich which)
{
    const Signature& s = W.sig;
    const int d = s.d();
    std::vector<int> parV;
    for (int i = 1; i <= d; ++i) parV.push_back(grade(s, i));
    SparseMatrix<K> tot(d * W.dim(), d * W.dim());
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
            const int p = (grade(s, i) + grade(s, j)) & 1;
            SparseMatrix<K> E;
            int row = j, col = i; // e_ji
            K c(1);
            switch (which) {
            case LWhich::R: E = etilde_matrix(W, i, j); break;
            case LWhich::RT: E = etilde_matrix(W, j, i); row = i; col = j; break;
            case LWhich::Rtilde: E = etilde_matrix(W, j, i, 1); row = i; col = j; break;
            case LWhich::RtildeT: E = etilde_matrix(W, i, j, -1); break;
            case LWhich::dualR:
            case LWhich::barR:
                E = etilde_matrix(W, i, j, -1);
                row = i;
                col = j;
                if (grade(s, j) & p) c = K(-1);
                if (which == LWhich::barR) c = c * W.sc.qpow2(rho2(s, j) - rho2(s, i));
                break;
            case LWhich::dualRT:
            case LWhich::barRT:
                E = etilde_matrix(W, j, i, -1);
                if (grade(s, i) & p) c = K(-1);
                if (which == LWhich::barRT) c = c * W.sc.qpow2(rho2(s, i) - rho2(s, j));
                break;
            }
            if (E.is_zero_matrix()) continue;
            tot = tot + graded_kron(elementary<K>(d, row, col), E, p, parV).scaled(c);
        }
    return tot;
}

// (q - q^-1) times the characteristic matrix; keeps every entry a Laurent polynomial
template <class K>
SparseMatrix<K> char_matrix_scaled(const RepModule<K>& W, CharKind kind)
{
    const int N = W.sig.d() * W.dim();
    auto I = SparseMatrix<K>::identity(N);
    switch (kind) {
    case CharKind::Ahat: return I - l_operator(W, LWhich::RT) * l_operator(W, LWhich::R);
    case CharKind::Atilde: return I - l_operator(W, LWhich::RtildeT) * l_operator(W, LWhich::Rtilde);
    case CharKind::Adual: return I - l_operator(W, LWhich::dualRT) * l_operator(W, LWhich::dualR);
    default: return I - l_operator(W, LWhich::barRT) * l_operator(W, LWhich::barR);
    }
}

template <class K>
SparseMatrix<K> char_matrix(const RepModule<K>& W, CharKind kind)
{
    const K qq = W.sc.qpow2(2) - W.sc.qpow2(-2);
    return char_matrix_scaled(W, kind).scaled(K(1) / qq);
}

// D (x) 1 with D = diag(q^{-(rho, eps_i)})
template <class K>
SparseMatrix<K> rho_conjugator(const RepModule<K>& W, long sgn)
{
    const Signature& s = W.sig;
    std::vector<K> dg;
    for (int i = 1; i <= s.d(); ++i) {
        K x = W.sc.qpow2(-sgn * rho2(s, i));
        for (int v = 0; v < W.dim(); ++v) dg.push_back(x);
    }
    return SparseMatrix<K>::diagonal(dg);
}

// ---- identities on V (x) V (x) V

template <class K>
bool matrices_equal(const SparseMatrix<K>& a, const SparseMatrix<K>& b, double tol, double* residual = nullptr)
{
    if constexpr (std::is_same_v<K, double>) {
        double r = (a - b).max_abs();
        double scale = std::max({1.0, a.max_abs(), b.max_abs()});
        if (residual) *residual = r / scale;
        return r <= tol * scale;
    } else {
        (void)tol;
        bool eq = a == b;
        if (residual) *residual = eq ? 0.0 : 1.0;
        return eq;
    }
}

// R acting on slots 1 and 3 of V (x) W1 (x) W2
template <class K>
SparseMatrix<K> r13(const RepModule<K>& V, const RepModule<K>& W1, const RepModule<K>& W2)
{
    const Signature& s = V.sig;
    const int d = s.d();
    SparseMatrix<K> tot(d * W1.dim() * W2.dim(), d * W1.dim() * W2.dim());
    auto I1 = SparseMatrix<K>::identity(W1.dim());
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
            const int p = (grade(s, i) + grade(s, j)) & 1;
            auto X = graded_kron(I1, etilde_matrix(W2, i, j), p, W1.par);
            tot = tot + graded_kron(elementary<K>(d, j, i), X, p, V.par);
        }
    return tot;
}

struct CheckResult {
    bool pass = false;
    double residual = 0;
    std::string detail;
};

template <class K>
CheckResult qybe_check(const Signature& s, Scalars<K> sc = {}, double tol = 1e-9)
{
    auto V = vector_rep<K>(s, sc);
    auto R = l_operator(V, LWhich::R);
    const int d = s.d();
    auto Id = SparseMatrix<K>::identity(d);
    auto R12 = graded_kron(R, Id, 0, std::vector<int>(d * d, 0));
    auto R23 = graded_kron(Id, R, 0, V.par); // R is even on V (x) V
    auto R13 = r13(V, V, V);
    CheckResult c;
    c.pass = matrices_equal(R12 * R13 * R23, R23 * R13 * R12, tol, &c.residual);
    return c;
}

// (pi (x) Delta) R = R13 R12, and Delta(E~_ij) entrywise for all i <= j
template <class K>
CheckResult coproduct_check(const Signature& s, Scalars<K> sc = {}, double tol = 1e-9)
{
    auto V = vector_rep<K>(s, sc);
    auto VV = tensor_module(V, V);
    const int d = s.d();
    auto Id = SparseMatrix<K>::identity(d);
    auto R12 = graded_kron(l_operator(V, LWhich::R), Id, 0, std::vector<int>(d * d, 0));
    CheckResult c;
    double r1 = 0;
    bool ok = matrices_equal(l_operator(VV, LWhich::R), r13(V, V, V) * R12, tol, &r1);
    c.residual = r1;
    if (!ok) c.detail = "L(V(x)V) != R13 R12";
    for (int i = 1; i <= d && ok; ++i)
        for (int j = i; j <= d && ok; ++j) {
            auto lhs = etilde_matrix(VV, i, j);
            const int pij = (grade(s, i) + grade(s, j)) & 1;
            SparseMatrix<K> rhs(VV.dim(), VV.dim());
            if (i == j) {
                rhs = graded_kron(etilde_matrix(V, i, i), etilde_matrix(V, i, i), 0, V.par);
            } else {
                rhs = graded_kron(etilde_matrix(V, i, i), etilde_matrix(V, i, j), pij, V.par) +
                      graded_kron(etilde_matrix(V, i, j), etilde_matrix(V, j, j), 0, V.par);
                for (int k = i + 1; k < j; ++k) {
                    const int pkj = (grade(s, k) + grade(s, j)) & 1;
                    rhs = rhs + graded_kron(etilde_matrix(V, i, k), etilde_matrix(V, k, j), pkj, V.par);
                }
            }
            double r = 0;
            ok = matrices_equal(lhs, rhs, tol, &r);
            c.residual = std::max(c.residual, r);
            if (!ok) c.detail = "Delta(E~_" + std::to_string(i) + std::to_string(j) + ") mismatch";
        }
    c.pass = ok;
    return c;
}

// R Delta(x) = Delta^T(x) R on V (x) W
template <class K>
bool check_intertwining(const RepModule<K>& V, const RepModule<K>& W, const SparseMatrix<K>& L)
{
    const Signature& s = V.sig;
    for (int a = 1; a < s.d(); ++a) {
        const int p = gen_grade(s, a);
        for (char t : {'e', 'f'}) {
            auto D = graded_kron(V.cartan(h_simple(s, a, 1)), W.gen(t, a), p, V.par) +
                     graded_kron(V.gen(t, a), W.cartan(h_simple(s, a, -1)), 0, V.par);
            auto DT = graded_kron(V.cartan(h_simple(s, a, -1)), W.gen(t, a), p, V.par) +
                      graded_kron(V.gen(t, a), W.cartan(h_simple(s, a, 1)), 0, V.par);
            if (!(L * D == DT * L)) return false;
        }
    }
    return true;
}

} // namespace qwig::oracle
