#pragma once

#include <string>
#include <vector>

#include "../superweight.hpp"
#include "sparse.hpp"

namespace qwig::oracle {

// parity of the simple generator e_a, f_a
inline int gen_grade(const Signature& s, int a) { return (grade(s, a) + grade(s, a + 1)) & 1; }

// doubled Cartan coefficients of t * h_a, h_a = (a) E_aa - (a+1) E_{a+1,a+1}
inline std::vector<long> h_simple(const Signature& s, int a, long t)
{
    std::vector<long> c(s.d(), 0);
    c[a - 1] += t * parity(s, a);
    c[a] -= t * parity(s, a + 1);
    return c;
}

// doubled Cartan coefficients of t * h_rho, where (rho, eps_i) = (i) rho_i
inline std::vector<long> h_rho(const Signature& s, long t)
{
    std::vector<long> c(s.d(), 0);
    for (int i = 1; i <= s.d(); ++i) {
        Rational x = rho_dot(s, i) * 2 * t;
        c[i - 1] = x.get_num().get_si();
    }
    return c;
}

template <class K>
struct RepModule {
    Signature sig;
    Scalars<K> sc;
    std::vector<int> par;
    std::vector<std::vector<long>> wt;
    std::vector<SparseMatrix<K>> e, f; // index a - 1

    int dim() const { return (int)par.size(); }

    // q^{sum_i (c2_i / 2) E_ii}
    SparseMatrix<K> cartan(const std::vector<long>& c2) const
    {
        std::vector<K> dg(dim());
        for (int v = 0; v < dim(); ++v) {
            long x = 0;
            for (int i = 0; i < sig.d(); ++i) x += c2[i] * wt[v][i];
            dg[v] = sc.qpow2(x);
        }
        return SparseMatrix<K>::diagonal(dg);
    }

    const SparseMatrix<K>& gen(char t, int a) const { return t == 'e' ? e[a - 1] : f[a - 1]; }
};

template <class K>
RepModule<K> vector_rep(const Signature& s, Scalars<K> sc = {})
{
    RepModule<K> V;
    V.sig = s;
    V.sc = sc;
    const int d = s.d();
    for (int i = 1; i <= d; ++i) {
        V.par.push_back(grade(s, i));
        std::vector<long> w(d, 0);
        w[i - 1] = 1;
        V.wt.push_back(w);
    }
    for (int a = 1; a < d; ++a) {
        V.e.push_back(elementary<K>(d, a, a + 1));
        V.f.push_back(elementary<K>(d, a + 1, a));
    }
    return V;
}

template <class K>
RepModule<K> trivial_module(const Signature& s, Scalars<K> sc = {})
{
    RepModule<K> T;
    T.sig = s;
    T.sc = sc;
    T.par = {0};
    T.wt = {std::vector<long>(s.d(), 0)};
    for (int a = 1; a < s.d(); ++a) {
        T.e.emplace_back(1, 1);
        T.f.emplace_back(1, 1);
    }
    return T;
}

// pi*(x) = pi(S(x))^{sT} on the dual basis, S(x) = -q^{-h_rho} x q^{h_rho}
template <class K>
RepModule<K> dual_vector_rep(const Signature& s, Scalars<K> sc = {})
{
    RepModule<K> V = vector_rep<K>(s, sc);
    RepModule<K> D;
    D.sig = s;
    D.sc = sc;
    D.par = V.par;
    const int d = s.d();
    for (int i = 0; i < d; ++i) {
        std::vector<long> w(d, 0);
        w[i] = -1;
        D.wt.push_back(w);
    }
    auto Km = V.cartan(h_rho(s, -1)), Kp = V.cartan(h_rho(s, 1));
    for (int a = 1; a < d; ++a) {
        const int p = gen_grade(s, a);
        for (char t : {'e', 'f'}) {
            SparseMatrix<K> SX = (Km * V.gen(t, a) * Kp).scaled(K(-1));
            SparseMatrix<K> T(d, d);
            for (int be = 0; be < d; ++be)
                for (const auto& [al, v] : SX.row(be)) T.add_to(al, be, (p & V.par[be]) ? K(-v) : v);
            (t == 'e' ? D.e : D.f).push_back(T);
        }
    }
    return D;
}

// coproduct: Delta(x) = q^{h_a/2} (x) x + x (x) q^{-h_a/2}
template <class K>
RepModule<K> tensor_module(const RepModule<K>& A, const RepModule<K>& B)
{
    if (A.sig != B.sig) throw Error(Errc::SignatureMismatch, "tensor product of modules of different algebras");
    RepModule<K> T;
    T.sig = A.sig;
    T.sc = A.sc;
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < B.dim(); ++j) {
            T.par.push_back((A.par[i] + B.par[j]) & 1);
            std::vector<long> w(A.wt[i]);
            for (std::size_t k = 0; k < w.size(); ++k) w[k] += B.wt[j][k];
            T.wt.push_back(w);
        }
    for (int a = 1; a < A.sig.d(); ++a) {
        const int p = gen_grade(A.sig, a);
        auto K1 = A.cartan(h_simple(A.sig, a, 1));
        auto K2 = B.cartan(h_simple(A.sig, a, -1));
        auto I = SparseMatrix<K>::identity(B.dim());
        for (char t : {'e', 'f'}) {
            auto X = graded_kron(K1, B.gen(t, a), p, A.par) + graded_kron(A.gen(t, a), K2, 0, A.par);
            (t == 'e' ? T.e : T.f).push_back(X);
        }
        (void)I;
    }
    return T;
}

// [e_a, f_b} = delta_ab (a) (K_a - K_a^{-1}) / (q - q^{-1})
template <class K>
bool check_relations(const RepModule<K>& W, double tol = 0)
{
    const Signature s = W.sig;
    const K qq = W.sc.qpow2(2) - W.sc.qpow2(-2);
    for (int a = 1; a < s.d(); ++a)
        for (int b = 1; b < s.d(); ++b) {
            const auto& E = W.e[a - 1];
            const auto& F = W.f[b - 1];
            const bool both_odd = gen_grade(s, a) && gen_grade(s, b);
            SparseMatrix<K> br = both_odd ? E * F + F * E : E * F - F * E;
            SparseMatrix<K> rhs(W.dim(), W.dim());
            if (a == b) {
                rhs = (W.cartan(h_simple(s, a, 2)) - W.cartan(h_simple(s, a, -2)))
                          .scaled(K(parity(s, a)) / qq);
            }
            auto diff = br - rhs;
            if constexpr (std::is_same_v<K, double>) {
                if (diff.max_abs() > tol) return false;
            } else {
                if (!diff.is_zero_matrix()) return false;
            }
        }
    return true;
}

} // namespace qwig::oracle
