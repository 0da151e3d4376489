#pragma once

// Scalars read off the characteristic matrices on realized modules. Everything acts on
// vectors of V (x) T, T the ambient tensor power, so no projector matrix is ever formed.

#include <map>
#include <optional>

#include "../wigner.hpp"
#include "loperator.hpp"
#include "realize.hpp"

namespace qwig::oracle {

// (q - q^-1) times the roots: x_r = 1 - q^{-2 alpha_r}
inline std::vector<HalfLaurent> scaled_roots(const Weight& L, RootVariant v, bool require_distinct = true)
{
    std::vector<HalfLaurent> x;
    for (long a : classical_roots(L, v)) x.push_back(root_numerator(a));
    if (require_distinct)
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[i] == x[j])
                    throw Error(Errc::DegenerateRoots, "roots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                           " of " + to_string(L) + " coincide");
    return x;
}

// zero every block from nb on
inline void truncate_blocks(QVec& v, int nb, int dW)
{
    for (std::size_t i = (std::size_t)nb * dW; i < v.size(); ++i) v[i] = QFraction();
}

// prod_{i != r} (X - x_i) v, optionally confined to the leading nb blocks
inline QVec projector_numerator(const SparseMatrix<QFraction>& X, const std::vector<HalfLaurent>& x, int r, QVec v,
                                int nb = -1, int dW = 0)
{
    for (int i = 0; i < (int)x.size(); ++i) {
        if (i == r - 1) continue;
        QVec y = X.apply(v);
        const QFraction c(x[i]);
        for (std::size_t t = 0; t < v.size(); ++t)
            if (!v[t].is_zero()) y[t] = y[t] - c * v[t];
        if (nb >= 0) truncate_blocks(y, nb, dW);
        v = std::move(y);
    }
    return v;
}

inline QFraction projector_denominator(const std::vector<HalfLaurent>& x, int r)
{
    HalfLaurent d(1);
    for (int i = 0; i < (int)x.size(); ++i)
        if (i != r - 1) d = d * (x[r - 1] - x[i]);
    return QFraction(d);
}

inline QVec basis_tensor(int d, int dW, int beta, const QVec& b)
{
    QVec v((std::size_t)d * dW);
    for (int i = 0; i < dW; ++i) v[(std::size_t)(beta - 1) * dW + i] = b[i];
    return v;
}

inline QVec block_of(const QVec& v, int beta, int dW)
{
    return QVec(v.begin() + (std::ptrdiff_t)(beta - 1) * dW, v.begin() + (std::ptrdiff_t)beta * dW);
}

inline QFraction qq_scaled(long p)
{
    HalfLaurent h(1);
    for (long i = 0; i < p; ++i) h = h * qdiff();
    return QFraction(h);
}

// ---- characteristic identity and projector algebra on V (x) V(L)

struct IdentityReport {
    bool pass = false;
    int vectors = 0;
};

inline IdentityReport char_identity_check(const Realized& R, const SparseMatrix<QFraction>& X, CharKind kind)
{
    const int d = R.ambient->sig.d(), dW = R.ambient->dim();
    auto x = scaled_roots(R.lambda, roots_of(kind));
    IdentityReport rep;
    rep.pass = true;
    for (int beta = 1; beta <= d && rep.pass; ++beta)
        for (const auto& b : R.basis) {
            QVec v = basis_tensor(d, dW, beta, b);
            for (const auto& xi : x) {
                QVec y = X.apply(v);
                const QFraction c(xi);
                for (std::size_t t = 0; t < v.size(); ++t)
                    if (!v[t].is_zero()) y[t] = y[t] - c * v[t];
                v = std::move(y);
            }
            ++rep.vectors;
            if (!vec_is_zero(v)) {
                rep.pass = false;
                break;
            }
        }
    return rep;
}

struct ProjectorReport {
    bool complete = true, idempotent = true, orthogonal = true;
    std::vector<int> ranks; // rank of P_r on V (x) V(L)
    bool pass() const { return complete && idempotent && orthogonal; }
};

inline ProjectorReport projector_check(const Realized& R, const SparseMatrix<QFraction>& X, CharKind kind)
{
    const int d = R.ambient->sig.d(), dW = R.ambient->dim();
    auto x = scaled_roots(R.lambda, roots_of(kind));
    const int nr = (int)x.size();
    std::vector<QFraction> Dinv;
    for (int r = 1; r <= nr; ++r) Dinv.push_back(projector_denominator(x, r).inverse());
    auto P = [&](int r, const QVec& v) { return vec_scale(projector_numerator(X, x, r, v), Dinv[r - 1]); };
    ProjectorReport rep;
    std::vector<Echelon> ech(nr);
    for (int beta = 1; beta <= d; ++beta)
        for (const auto& b : R.basis) {
            QVec v = basis_tensor(d, dW, beta, b);
            QVec sum(v.size());
            for (int r = 1; r <= nr; ++r) {
                QVec pv = P(r, v);
                sum = vec_add(sum, pv);
                if (!vec_is_zero(pv)) ech[r - 1].add(pv);
                for (int s = 1; s <= nr; ++s) {
                    QVec psv = P(s, pv);
                    if (s == r) rep.idempotent = rep.idempotent && psv == pv;
                    else rep.orthogonal = rep.orthogonal && vec_is_zero(psv);
                }
            }
            rep.complete = rep.complete && sum == v;
        }
    for (auto& e : ech) rep.ranks.push_back(e.rank());
    return rep;
}

// ---- Wigner coefficients from the (m+n, m+n) entry of the projectors

inline long weight_total(const Weight& w)
{
    long t = 0;
    for (long x : w.ints()) t += x;
    return t;
}

// the unique gl(m|n-1) highest-weight vector of weight (L0, e_last) in V(L)
inline QVec sub_highest_vector(const Realized& R, const Weight& L0)
{
    const QModule& T = *R.ambient;
    std::vector<long> w = L0.ints();
    w.push_back(weight_total(R.lambda) - weight_total(L0));
    std::vector<QVec> vs;
    for (int i = 0; i < R.dim(); ++i)
        if (R.weights[i] == w) vs.push_back(R.basis[i]);
    if (vs.empty()) throw Error(Errc::NotRealized, to_string(L0) + " does not occur in V" + to_string(R.lambda));
    auto hv = singular_in_span(T, vs, T.sig.d() - 2);
    if (hv.empty()) throw Error(Errc::NotRealized, to_string(L0) + " does not occur in V" + to_string(R.lambda));
    if (hv.size() > 1) throw Error(Errc::MultiplicityAmbiguous, to_string(L0) + " occurs more than once");
    return hv.front();
}

inline QFraction wigner_oracle(const Realized& R, const SparseMatrix<QFraction>& X, const Weight& L0, int k, Kind kind)
{
    const CharKind ck = kind == Kind::lower ? CharKind::Adual : CharKind::Atilde;
    const int d = R.ambient->sig.d(), dW = R.ambient->dim();
    check_index(R.ambient->sig, k);
    auto x = scaled_roots(R.lambda, roots_of(ck));
    QVec w0 = sub_highest_vector(R, L0);
    QVec y = projector_numerator(X, x, k, basis_tensor(d, dW, d, w0));
    auto c = vec_ratio(block_of(y, d, dW), w0);
    return *c / projector_denominator(x, k);
}

// ---- coupled coefficients and mu through the subalgebra projectors

class SubProjector {
public:
    SubProjector(const Realized& R, const SubDecomposition& D, const SparseMatrix<QFraction>& X, Kind kind)
        : R_(R), D_(D), X_(X), kind_(kind), d_(R.ambient->sig.d()), dW_(R.ambient->dim())
    {
        const RootVariant v = kind == Kind::lower ? RootVariant::dual : RootVariant::adjoint;
        for (const auto& c : D.comps) {
            try {
                roots_.push_back(scaled_roots(c.lambda0, v));
            } catch (const Error&) {
                roots_.push_back({});
            }
        }
    }

    bool degenerate(int c) const { return roots_[c].empty(); }

    // P_{0r} on a vector of V0 (x) V(L_0) for component c
    QVec on_component(int c, int r, const QVec& u) const
    {
        if (degenerate(c)) throw Error(Errc::DegenerateRoots, "subalgebra roots coincide on " + to_string(D_.comps[c].lambda0));
        QVec y = projector_numerator(X_, roots_[c], r, u, d_ - 1, dW_);
        return vec_scale(y, projector_denominator(roots_[c], r).inverse());
    }

    // P_{0r} on any vector of V0 (x) V(L)
    QVec full(int r, const QVec& s) const
    {
        std::map<int, QVec> pieces;
        for (int beta = 1; beta < d_; ++beta) {
            QVec sb = block_of(s, beta, dW_);
            if (vec_is_zero(sb)) continue;
            for (auto& [c, p] : D_.split(*R_.ambient, sb)) {
                auto& u = pieces[c];
                if (u.empty()) u.resize(s.size());
                for (int i = 0; i < dW_; ++i) u[(std::size_t)(beta - 1) * dW_ + i] = p[i];
            }
        }
        QVec out(s.size());
        for (auto& [c, u] : pieces) out = vec_add(out, on_component(c, r, u));
        return out;
    }

    int d() const { return d_; }
    int dW() const { return dW_; }

private:
    const Realized& R_;
    const SubDecomposition& D_;
    const SparseMatrix<QFraction>& X_;
    Kind kind_;
    int d_, dW_;
    std::vector<std::vector<HalfLaurent>> roots_;
};

inline int find_component(const SubDecomposition& D, const Weight& L0)
{
    int hit = -1;
    for (int c = 0; c < (int)D.comps.size(); ++c)
        if (D.comps[c].lambda0 == L0) {
            if (hit >= 0) throw Error(Errc::MultiplicityAmbiguous, to_string(L0) + " occurs more than once");
            hit = c;
        }
    if (hit < 0) throw Error(Errc::NotRealized, to_string(L0) + " does not occur");
    return hit;
}

struct CoupledOracle {
    std::map<std::pair<int, int>, QFraction> omega; // (k, r) -> omega_kr
    std::map<int, QFraction> mu;                     // r -> mu_r
    std::vector<int> empty_r;                        // P_{0r} vanishes on the component
};

// P0r Pk P0r = omega_kr P0r and P0r C Rw P0r = mu_r (q - q^-1)^2 P0r on the component of L0
inline CoupledOracle coupled_oracle_all(const Realized& R, const SubDecomposition& D, const SparseMatrix<QFraction>& X,
                                        const Weight& L0, Kind kind, bool with_mu = true)
{
    const int c = find_component(D, L0);
    SubProjector P0(R, D, X, kind);
    const int d = P0.d(), dW = P0.dW();
    const CharKind ck = kind == Kind::lower ? CharKind::Adual : CharKind::Atilde;
    auto x = scaled_roots(R.lambda, roots_of(ck));
    std::vector<QFraction> Dinv;
    for (int k = 1; k <= d; ++k) Dinv.push_back(projector_denominator(x, k).inverse());
    const QFraction qq2 = qq_scaled(2);
    CoupledOracle out;
    for (int r = 1; r < d; ++r) {
        std::map<int, std::optional<QFraction>> om;
        std::optional<QFraction> mu;
        bool any = false;
        for (int beta = 1; beta < d; ++beta)
            for (int id : D.comps[c].members) {
                QVec u = P0.on_component(c, r, basis_tensor(d, dW, beta, D.vectors[id]));
                if (vec_is_zero(u)) continue;
                any = true;
                for (int k = 1; k <= d; ++k) {
                    QVec y = vec_scale(projector_numerator(X, x, k, u), Dinv[k - 1]);
                    truncate_blocks(y, d - 1, dW);
                    QVec z = P0.full(r, y);
                    auto w = vec_ratio(z, u);
                    if (om[k] && *om[k] != *w) throw Error(Errc::NotScalar, "coupled coefficient differs between vectors");
                    om[k] = *w;
                }
                if (with_mu) {
                    QVec t = block_of(X.apply(u), d, dW);
                    QVec s = X.apply(basis_tensor(d, dW, d, t));
                    truncate_blocks(s, d - 1, dW);
                    auto w = vec_ratio(P0.full(r, s), u);
                    QFraction m = *w / qq2;
                    if (mu && *mu != m) throw Error(Errc::NotScalar, "mu differs between vectors");
                    mu = m;
                }
            }
        if (!any) {
            out.empty_r.push_back(r);
            continue;
        }
        for (auto& [k, w] : om) out.omega[{k, r}] = *w;
        if (mu) out.mu[r] = *mu;
    }
    return out;
}

inline QFraction coupled_oracle(const Realized& R, const SubDecomposition& D, const SparseMatrix<QFraction>& X,
                                const Weight& L0, int k, int r, Kind kind)
{
    auto all = coupled_oracle_all(R, D, X, L0, kind, false);
    auto it = all.omega.find({k, r});
    if (it == all.omega.end()) return QFraction();
    return it->second;
}

// ---- invariants

// str(q^{+-2 h_rho} A^p) on V(L): + for the tilde matrix, - otherwise
inline QFraction supertrace_invariant(const Realized& R, const SparseMatrix<QFraction>& X, CharKind kind, int p)
{
    const Signature s = R.ambient->sig;
    const int d = s.d(), dW = R.ambient->dim();
    const long sg = (kind == CharKind::Atilde || kind == CharKind::Ahat) ? 1 : -1;
    std::optional<QFraction> val;
    for (const auto& b : R.basis) {
        QVec acc(dW);
        for (int i = 1; i <= d; ++i) {
            QVec v = basis_tensor(d, dW, i, b);
            for (int t = 0; t < p; ++t) v = X.apply(v);
            QFraction f(HalfLaurent::monomial(2 * sg * rho2(s, i), Rational(parity(s, i))));
            acc = vec_add(acc, vec_scale(block_of(v, i, dW), f));
        }
        auto c = vec_ratio(acc, b);
        if (val && *val != *c) throw Error(Errc::NotScalar, "supertrace is not central on this module");
        val = *c;
    }
    return *val / qq_scaled(p);
}

// (X)_{m+n,m+n} commutes with e_a, f_a of gl(m|n-1) on the ambient module
inline bool entry_commutes(const QModule& T, const SparseMatrix<QFraction>& X)
{
    const int d = T.sig.d();
    auto B = X.block(d - 1, d - 1, T.dim());
    for (int a = 1; a <= d - 2; ++a)
        for (char t : {'e', 'f'})
            if (!(B * T.gen(t, a) == T.gen(t, a) * B)) return false;
    return true;
}

// leading (m+n-1) blocks of I - LT L against the same built from the leading blocks of L, LT
inline bool leading_block_reduces(const QModule& T, CharKind kind)
{
    const int d = T.sig.d(), dW = T.dim();
    LWhich a = LWhich::RT, b = LWhich::R;
    if (kind == CharKind::Atilde) {
        a = LWhich::RtildeT;
        b = LWhich::Rtilde;
    } else if (kind == CharKind::Adual) {
        a = LWhich::dualRT;
        b = LWhich::dualR;
    }
    auto LA = l_operator(T, a), LB = l_operator(T, b);
    auto I = SparseMatrix<QFraction>::identity((d - 1) * dW);
    auto full = (SparseMatrix<QFraction>::identity(d * dW) - LA * LB).leading(d - 1, dW);
    auto sub = I - LA.leading(d - 1, dW) * LB.leading(d - 1, dW);
    return full == sub;
}

} // namespace qwig::oracle
