#pragma once

// Noncommutative polynomials in e_a, f_a and Cartan powers, with the antipode applied
// by rewriting before anything is evaluated on a module.

#include <vector>

#include "module.hpp"

namespace qwig::oracle {

struct Atom {
    char t = 'K';            // 'e', 'f' or 'K'
    int a = 0;               // generator index for e/f
    std::vector<long> c2;    // K: q^{sum (c2_i/2) E_ii}

    static Atom gen(char t, int a) { return Atom{t, a, {}}; }
    static Atom cartan(std::vector<long> c2) { return Atom{'K', 0, std::move(c2)}; }
    bool operator==(const Atom& o) const { return t == o.t && a == o.a && c2 == o.c2; }
};

struct Word {
    QFraction coef;
    std::vector<Atom> atoms;
};

struct AlgebraExpression {
    Signature sig;
    std::vector<Word> terms;

    static AlgebraExpression scalar(const Signature& s, const QFraction& c) { return {s, {Word{c, {}}}}; }
    static AlgebraExpression atom(const Signature& s, Atom a) { return {s, {Word{QFraction(1), {std::move(a)}}}}; }

    friend AlgebraExpression operator*(const AlgebraExpression& x, const AlgebraExpression& y)
    {
        AlgebraExpression r{x.sig, {}};
        for (const auto& u : x.terms)
            for (const auto& v : y.terms) {
                Word w{u.coef * v.coef, u.atoms};
                w.atoms.insert(w.atoms.end(), v.atoms.begin(), v.atoms.end());
                r.terms.push_back(std::move(w));
            }
        return r;
    }
    friend AlgebraExpression operator+(const AlgebraExpression& x, const AlgebraExpression& y)
    {
        AlgebraExpression r = x;
        r.terms.insert(r.terms.end(), y.terms.begin(), y.terms.end());
        return r;
    }
    AlgebraExpression scaled(const QFraction& c) const
    {
        AlgebraExpression r = *this;
        for (auto& w : r.terms) w.coef = w.coef * c;
        return r;
    }
};

inline int atom_grade(const Signature& s, const Atom& a) { return a.t == 'K' ? 0 : gen_grade(s, a.a); }

inline int word_grade(const Signature& s, const Word& w)
{
    int p = 0;
    for (const auto& a : w.atoms) p ^= atom_grade(s, a);
    return p;
}

inline AlgebraExpression ex_eij(const Signature& s, int i, int j, int pivot = 0)
{
    check_index(s, i);
    check_index(s, j);
    if (i == j) throw Error(Errc::IndexOutOfRange, "E_ij needs i != j");
    if (j == i + 1) return AlgebraExpression::atom(s, Atom::gen('e', i));
    if (i == j + 1) return AlgebraExpression::atom(s, Atom::gen('f', j));
    int k = pivot ? pivot : (i < j ? j - 1 : j + 1);
    if (!(std::min(i, j) < k && k < std::max(i, j))) throw Error(Errc::IndexOutOfRange, "pivot not strictly between i and j");
    auto A = ex_eij(s, i, k), B = ex_eij(s, k, j);
    return A * B + (B * A).scaled(-QFraction(qpow2(-2 * parity(s, k))));
}

// E~_ii = q^{(i) E_ii};  E~_ij = (q - q^-1)(-1)^{[i]} q^{-(i)/2} q^{((i)E_ii + (j)E_jj)/2} E_ij
inline AlgebraExpression ex_etilde(const Signature& s, int i, int j)
{
    std::vector<long> c(s.d(), 0);
    if (i == j) {
        c[i - 1] = 2 * parity(s, i);
        return AlgebraExpression::atom(s, Atom::cartan(c));
    }
    c[i - 1] += parity(s, i);
    c[j - 1] += parity(s, j);
    QFraction coef(qdiff() * qpow2(-parity(s, i)));
    if (grade(s, i)) coef = -coef;
    return AlgebraExpression::atom(s, Atom::cartan(c)).scaled(coef) * ex_eij(s, i, j);
}

// S(x) = -q^{-h_rho} x q^{h_rho} on generators, S(K) = K^{-1}; anti-homomorphism with Koszul sign.
// inverse: S^{-1}(x) = -q^{h_rho} x q^{-h_rho}
inline AlgebraExpression antipode(const AlgebraExpression& X, bool inverse = false)
{
    const Signature& s = X.sig;
    const long t = inverse ? 1 : -1;
    AlgebraExpression out{s, {}};
    for (const auto& w : X.terms) {
        long odd = 0;
        for (const auto& a : w.atoms) odd += atom_grade(s, a);
        int sign = (odd * (odd - 1) / 2) % 2 ? -1 : 1; // Koszul sign of the reversal
        Word nw{w.coef, {}};
        for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
            if (it->t == 'K') {
                std::vector<long> c = it->c2;
                for (auto& x : c) x = -x;
                nw.atoms.push_back(Atom::cartan(c));
            } else {
                sign = -sign;
                nw.atoms.push_back(Atom::cartan(h_rho(s, t)));
                nw.atoms.push_back(*it);
                nw.atoms.push_back(Atom::cartan(h_rho(s, -t)));
            }
        }
        if (sign < 0) nw.coef = -nw.coef;
        out.terms.push_back(std::move(nw));
    }
    return out;
}

template <class K>
SparseMatrix<K> evaluate(const RepModule<K>& W, const AlgebraExpression& X)
{
    SparseMatrix<K> tot(W.dim(), W.dim());
    for (const auto& w : X.terms) {
        if (w.coef.is_zero()) continue;
        // right to left keeps the running product as sparse as the atoms allow
        SparseMatrix<K> P = SparseMatrix<K>::identity(W.dim());
        for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
            if (it->t == 'K') P = W.cartan(it->c2) * P;
            else P = W.gen(it->t, it->a) * P;
            if (P.is_zero_matrix()) break;
        }
        tot = tot + P.scaled(W.sc.from(w.coef));
    }
    return tot;
}

} // namespace qwig::oracle
