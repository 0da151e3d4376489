#pragma once

// Irreducible modules realized inside V^{(x)k}: highest-weight search, lowering closure,
// and the decomposition of a realized module under gl(m|n-1).

#include <map>
#include <memory>

#include "../branching.hpp"
#include "module.hpp"

namespace qwig::oracle {

using QVec = Vec<QFraction>;
using QModule = RepModule<QFraction>;

// ---- exact linear algebra over Q(q^{1/2})

// basis of {x : M x = 0}; M given by rows of length ncols
inline std::vector<QVec> nullspace(std::vector<QVec> M, int ncols)
{
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < ncols && r < (int)M.size(); ++c) {
        int p = -1;
        for (int i = r; i < (int)M.size(); ++i)
            if (!M[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[r], M[p]);
        QFraction inv = M[r][c].inverse();
        for (int j = c; j < ncols; ++j)
            if (!M[r][j].is_zero()) M[r][j] = M[r][j] * inv;
        for (int i = 0; i < (int)M.size(); ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            QFraction f = M[i][c];
            for (int j = c; j < ncols; ++j)
                if (!M[r][j].is_zero()) M[i][j] = M[i][j] - f * M[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<QVec> out;
    std::vector<char> is_piv(ncols, 0);
    for (int c : piv) is_piv[c] = 1;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols);
        v[f] = QFraction(1);
        for (int i = 0; i < (int)piv.size(); ++i)
            if (!M[i][f].is_zero()) v[piv[i]] = -M[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

// incremental row echelon used for independence tests
class Echelon {
public:
    // true if v was independent of what is already stored
    bool add(QVec v)
    {
        reduce(v);
        int p = -1;
        for (int i = 0; i < (int)v.size(); ++i)
            if (!v[i].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return false;
        QFraction inv = v[p].inverse();
        for (auto& x : v)
            if (!x.is_zero()) x = x * inv;
        rows_.push_back(std::move(v));
        piv_.push_back(p);
        return true;
    }
    bool contains(QVec v) const
    {
        reduce(v);
        return vec_is_zero(v);
    }
    int rank() const { return (int)rows_.size(); }

private:
    void reduce(QVec& v) const
    {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const QFraction c = v[piv_[k]];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!rows_[k][i].is_zero()) v[i] = v[i] - c * rows_[k][i];
        }
    }
    std::vector<QVec> rows_;
    std::vector<int> piv_;
};

// square solve; throws DivisionByZero when singular
inline std::vector<QVec> inverse(std::vector<QVec> M)
{
    const int n = (int)M.size();
    std::vector<QVec> I(n, QVec(n));
    for (int i = 0; i < n; ++i) I[i][i] = QFraction(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!M[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw Error(Errc::DivisionByZero, "singular matrix");
        std::swap(M[c], M[p]);
        std::swap(I[c], I[p]);
        QFraction inv = M[c][c].inverse();
        for (int j = 0; j < n; ++j) {
            if (!M[c][j].is_zero()) M[c][j] = M[c][j] * inv;
            if (!I[c][j].is_zero()) I[c][j] = I[c][j] * inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || M[i][c].is_zero()) continue;
            QFraction f = M[i][c];
            for (int j = 0; j < n; ++j) {
                if (!M[c][j].is_zero()) M[i][j] = M[i][j] - f * M[c][j];
                if (!I[c][j].is_zero()) I[i][j] = I[i][j] - f * I[c][j];
            }
        }
    }
    return I;
}

// rescale so every entry is a Laurent polynomial
inline QVec clear_denominators(QVec v)
{
    HalfLaurent l(1);
    for (const auto& x : v) {
        if (x.is_zero() || x.den().is_one()) continue;
        QFraction g(x.den(), l); // x.den / gcd, up to a unit
        l = l * g.num();
    }
    for (auto& x : v)
        if (!x.is_zero()) {
            x = x * QFraction(l);
            if (!x.is_laurent()) throw Error(Errc::DivisionByZero, "denominator clearing failed");
        }
    return v;
}

// ---- realized modules

struct Realized {
    Weight lambda;
    int power = 0; // k in V^{(x)k}; 0 for the trivial module
    std::shared_ptr<const QModule> ambient;
    std::vector<QVec> basis;
    std::vector<std::vector<long>> weights;
    QVec hw;

    int dim() const { return (int)basis.size(); }
};

inline std::vector<int> weight_indices(const QModule& T, const std::vector<long>& w)
{
    std::vector<int> idx;
    for (int v = 0; v < T.dim(); ++v)
        if (T.wt[v] == w) idx.push_back(v);
    return idx;
}

inline QVec embed(int n, const std::vector<int>& idx, const QVec& coords)
{
    QVec v(n);
    for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = coords[t];
    return v;
}

// vectors in span(vecs) killed by e_1 .. e_{amax}; vecs all of one weight
inline std::vector<QVec> singular_in_span(const QModule& T, const std::vector<QVec>& vecs, int amax)
{
    const int n = (int)vecs.size();
    std::vector<QVec> rows;
    for (int a = 1; a <= amax; ++a) {
        std::vector<QVec> img;
        for (const auto& v : vecs) img.push_back(T.e[a - 1].apply(v));
        for (int r = 0; r < T.dim(); ++r) {
            QVec row(n);
            bool nz = false;
            for (int j = 0; j < n; ++j)
                if (!img[j][r].is_zero()) {
                    row[j] = img[j][r];
                    nz = true;
                }
            if (nz) rows.push_back(std::move(row));
        }
    }
    std::vector<QVec> out;
    for (const auto& c : nullspace(rows, n)) {
        QVec v(T.dim());
        for (int j = 0; j < n; ++j)
            if (!c[j].is_zero())
                for (int i = 0; i < T.dim(); ++i)
                    if (!vecs[j][i].is_zero()) v[i] = v[i] + c[j] * vecs[j][i];
        out.push_back(clear_denominators(v));
    }
    return out;
}

inline std::vector<long> vec_weight(const QModule& T, const QVec& v)
{
    for (int i = 0; i < T.dim(); ++i)
        if (!v[i].is_zero()) return T.wt[i];
    throw Error(Errc::NotRealized, "zero vector has no weight");
}

// highest-weight vectors of T grouped by weight, weights in decreasing lexicographic order
inline std::vector<std::pair<std::vector<long>, std::vector<QVec>>> highest_weight_vectors(const QModule& T, int amax = -1)
{
    if (amax < 0) amax = T.sig.d() - 1;
    std::vector<std::vector<long>> ws = T.wt;
    std::sort(ws.begin(), ws.end(), std::greater<>());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    std::vector<std::pair<std::vector<long>, std::vector<QVec>>> out;
    for (const auto& w : ws) {
        std::vector<QVec> unit;
        for (int i : weight_indices(T, w)) {
            QVec v(T.dim());
            v[i] = QFraction(1);
            unit.push_back(v);
        }
        auto sv = singular_in_span(T, unit, amax);
        if (!sv.empty()) out.emplace_back(w, std::move(sv));
    }
    return out;
}

// cyclic span of v under f_1 .. f_{amax}; a weight basis
inline std::vector<QVec> lowering_closure(const QModule& T, const QVec& v, int amax)
{
    std::vector<QVec> basis{v};
    std::map<std::vector<long>, Echelon> ech;
    ech[vec_weight(T, v)].add(v);
    std::vector<QVec> frontier{v};
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& u : frontier)
            for (int a = 1; a <= amax; ++a) {
                QVec w = T.f[a - 1].apply(u);
                if (vec_is_zero(w)) continue;
                if (ech[vec_weight(T, w)].add(w)) {
                    basis.push_back(w);
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    return basis;
}

inline Realized submodule(std::shared_ptr<const QModule> T, const QVec& hw, int power)
{
    Realized R;
    R.power = power;
    R.ambient = T;
    R.hw = hw;
    R.basis = lowering_closure(*T, hw, T->sig.d() - 1);
    for (const auto& b : R.basis) R.weights.push_back(vec_weight(*T, b));
    R.lambda = Weight(T->sig, R.weights.front());
    return R;
}

// number of independent highest-weight vectors inside the realized module
inline int singular_count(const Realized& R)
{
    std::map<std::vector<long>, std::vector<QVec>> byw;
    for (int i = 0; i < R.dim(); ++i) byw[R.weights[i]].push_back(R.basis[i]);
    int c = 0;
    for (const auto& [w, vs] : byw) c += (int)singular_in_span(*R.ambient, vs, R.ambient->sig.d() - 1).size();
    return c;
}

// V(L) restricted to its own basis (entries solve in the basis coordinates)
inline QModule restrict_module(const Realized& R)
{
    const QModule& T = *R.ambient;
    const int k = R.dim();
    // choose rows giving an invertible k x k minor
    Echelon ech;
    std::vector<int> rows;
    for (int i = 0; i < T.dim() && (int)rows.size() < k; ++i) {
        QVec row(k);
        for (int j = 0; j < k; ++j) row[j] = R.basis[j][i];
        if (ech.add(row)) rows.push_back(i);
    }
    std::vector<QVec> Msq;
    for (int i : rows) {
        QVec row(k);
        for (int j = 0; j < k; ++j) row[j] = R.basis[j][i];
        Msq.push_back(row);
    }
    auto Minv = inverse(Msq);
    QModule U;
    U.sig = T.sig;
    for (int j = 0; j < k; ++j) {
        U.wt.push_back(R.weights[j]);
        int nz = 0;
        while (R.basis[j][nz].is_zero()) ++nz;
        U.par.push_back(T.par[nz]);
    }
    auto map = [&](const SparseMatrix<QFraction>& X) {
        SparseMatrix<QFraction> out(k, k);
        for (int j = 0; j < k; ++j) {
            QVec y = X.apply(R.basis[j]);
            for (int a = 0; a < k; ++a) {
                QFraction s;
                for (int t = 0; t < k; ++t)
                    if (!Minv[a][t].is_zero() && !y[rows[t]].is_zero()) s = s + Minv[a][t] * y[rows[t]];
                out.add_to(a, j, s);
            }
        }
        return out;
    };
    for (int a = 1; a < T.sig.d(); ++a) {
        U.e.push_back(map(T.e[a - 1]));
        U.f.push_back(map(T.f[a - 1]));
    }
    return U;
}

// every irreducible V(L) appearing first as a highest-weight submodule of V^{(x)k}, k <= kmax,
// plus the trivial module; duplicates by highest weight are dropped
inline std::vector<Realized> realized_modules(const Signature& s, int kmax = 3)
{
    std::vector<Realized> out;
    auto C = std::make_shared<const QModule>(trivial_module<QFraction>(s));
    {
        QVec v{QFraction(1)};
        out.push_back(submodule(C, v, 0));
    }
    auto V = vector_rep<QFraction>(s);
    std::shared_ptr<const QModule> T = std::make_shared<const QModule>(V);
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1) T = std::make_shared<const QModule>(tensor_module(*T, V));
        for (const auto& [w, vecs] : highest_weight_vectors(*T)) {
            Weight L(s, w);
            bool seen = false;
            for (const auto& r : out) seen = seen || r.lambda == L;
            if (seen) continue;
            Realized R = submodule(T, vecs.front(), k);
            if (singular_count(R) == 1) out.push_back(std::move(R));
        }
    }
    return out;
}

// ---- gl(m|n-1) components of a realized module

struct SubComponent {
    Weight lambda0;     // subalgebra weight
    long e_last = 0;    // E_{m+n,m+n} eigenvalue
    QVec hw;
    std::vector<int> members; // indices into SubDecomposition::vectors
};

struct SubDecomposition {
    std::vector<SubComponent> comps;
    std::vector<QVec> vectors;       // weight basis of V(L) adapted to the components
    std::vector<int> owner;          // component of each vector
    std::map<std::vector<long>, std::vector<int>> by_weight;
    std::map<std::vector<long>, std::pair<std::vector<int>, std::vector<QVec>>> solver; // pivot rows, inverse

    // coordinates of a vector of V(L) of weight w in the adapted basis
    std::vector<std::pair<int, QFraction>> coords(const std::vector<long>& w, const QVec& y) const
    {
        std::vector<std::pair<int, QFraction>> out;
        auto it = solver.find(w);
        if (it == solver.end()) {
            if (!vec_is_zero(y)) throw Error(Errc::NotRealized, "vector outside the module");
            return out;
        }
        const auto& [rows, inv] = it->second;
        const auto& ids = by_weight.at(w);
        for (std::size_t a = 0; a < ids.size(); ++a) {
            QFraction s;
            for (std::size_t t = 0; t < rows.size(); ++t)
                if (!inv[a][t].is_zero() && !y[rows[t]].is_zero()) s = s + inv[a][t] * y[rows[t]];
            if (!s.is_zero()) out.emplace_back(ids[a], s);
        }
        return out;
    }

    // split y (any vector of V(L)) into its component pieces
    std::map<int, QVec> split(const QModule& T, const QVec& y) const
    {
        std::map<std::vector<long>, QVec> parts;
        for (int i = 0; i < T.dim(); ++i)
            if (!y[i].is_zero()) {
                auto& p = parts[T.wt[i]];
                if (p.empty()) p.resize(T.dim());
                p[i] = y[i];
            }
        std::map<int, QVec> out;
        for (const auto& [w, p] : parts)
            for (const auto& [id, c] : coords(w, p)) {
                auto& o = out[owner[id]];
                if (o.empty()) o.resize(T.dim());
                for (int i = 0; i < T.dim(); ++i)
                    if (!vectors[id][i].is_zero()) o[i] = o[i] + c * vectors[id][i];
            }
        return out;
    }
};

inline SubDecomposition decompose(const Realized& R)
{
    const QModule& T = *R.ambient;
    const Signature s = T.sig;
    const int d = s.d();
    SubDecomposition D;
    std::map<std::vector<long>, std::vector<QVec>> byw;
    for (int i = 0; i < R.dim(); ++i) byw[R.weights[i]].push_back(R.basis[i]);
    std::vector<std::vector<long>> ws;
    for (const auto& [w, v] : byw) ws.push_back(w);
    std::sort(ws.begin(), ws.end(), std::greater<>());
    std::map<std::vector<long>, Echelon> ech;
    for (const auto& w : ws) {
        for (const auto& hv : singular_in_span(T, byw[w], d - 2)) {
            SubComponent c;
            c.lambda0 = Weight(subalgebra(s), std::vector<long>(w.begin(), w.end() - 1));
            c.e_last = w.back();
            c.hw = hv;
            const int cid = (int)D.comps.size();
            for (auto& v : lowering_closure(T, hv, d - 2)) {
                auto vw = vec_weight(T, v);
                if (!ech[vw].add(v)) throw Error(Errc::NotRealized, "subalgebra components are not independent");
                c.members.push_back((int)D.vectors.size());
                D.by_weight[vw].push_back((int)D.vectors.size());
                D.owner.push_back(cid);
                D.vectors.push_back(std::move(v));
            }
            D.comps.push_back(std::move(c));
        }
    }
    if ((int)D.vectors.size() != R.dim()) throw Error(Errc::NotRealized, "module is not a direct sum of subalgebra components");
    for (const auto& [w, ids] : D.by_weight) {
        const int k = (int)ids.size();
        Echelon e;
        std::vector<int> rows;
        for (int i = 0; i < T.dim() && (int)rows.size() < k; ++i) {
            QVec row(k);
            for (int j = 0; j < k; ++j) row[j] = D.vectors[ids[j]][i];
            if (e.add(row)) rows.push_back(i);
        }
        std::vector<QVec> M;
        for (int i : rows) {
            QVec row(k);
            for (int j = 0; j < k; ++j) row[j] = D.vectors[ids[j]][i];
            M.push_back(row);
        }
        D.solver[w] = {rows, inverse(M)};
    }
    return D;
}

} // namespace qwig::oracle
