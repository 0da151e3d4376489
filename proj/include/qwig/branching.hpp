#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "superweight.hpp"

namespace qwig {

inline Signature subalgebra(const Signature& s)
{
    if (s.n < 1) throw Error(Errc::SignatureMismatch, "no odd label to remove");
    return Signature{s.m, s.n - 1};
}

struct BranchingData {
    Weight lambda;
    Weight lambda0;
    std::vector<int> I0, I0bar, I1, I1tilde;
    long eta = 0;
    long e_last = 0;

    const Signature& sig() const { return lambda.sig; }
};

// Gelfand-Tsetlin betweenness plus block dominance of the subalgebra weight
inline bool is_branching(const Weight& L, const Weight& L0)
{
    const Signature s = L.sig;
    if (s.n < 1 || L0.sig != subalgebra(s)) return false;
    if (!L.integral() || !L0.integral()) return false;
    auto x = L.ints(), y = L0.ints();
    const int m = s.m, n = s.n;
    for (int i = 0; i < m; ++i)
        if (y[i] != x[i] && y[i] != x[i] - 1) return false;
    for (int mu = 0; mu + 1 < n; ++mu)
        if (!(x[m + mu] >= y[m + mu] && y[m + mu] >= x[m + mu + 1])) return false;
    return L0.dominant();
}

inline std::vector<Weight> branch_candidates(const Weight& L)
{
    const Signature s = L.sig;
    const Signature s0 = subalgebra(s);
    auto x = L.ints();
    const int m = s.m, n = s.n;
    std::vector<std::vector<long>> choices;
    for (int i = 0; i < m; ++i) choices.push_back({x[i] - 1, x[i]});
    for (int mu = 0; mu + 1 < n; ++mu) {
        std::vector<long> c;
        for (long v = x[m + mu + 1]; v <= x[m + mu]; ++v) c.push_back(v);
        choices.push_back(c);
    }
    std::vector<Weight> out;
    std::vector<long> cur(choices.size());
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == choices.size()) {
            Weight w(s0, cur);
            if (w.dominant()) out.push_back(w);
            return;
        }
        for (long v : choices[k]) {
            cur[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline BranchingData index_sets(const Weight& L, const Weight& L0)
{
    if (!L.dominant()) throw Error(Errc::NotDominant, "highest weight " + to_string(L) + " is not dominant");
    if (!is_branching(L, L0))
        throw Error(Errc::NotABranching, to_string(L0) + " does not branch from " + to_string(L));
    BranchingData b;
    b.lambda = L;
    b.lambda0 = L0;
    const Signature s = L.sig;
    auto x = L.ints(), y = L0.ints();
    for (int i = 1; i <= s.m; ++i) (y[i - 1] == x[i - 1] - 1 ? b.I0 : b.I0bar).push_back(i);
    for (int i = s.m + 1; i < s.d(); ++i) b.I1.push_back(i);
    b.I1tilde = b.I1;
    b.I1tilde.push_back(s.d());
    long eta = 0;
    for (int mu = 1; mu <= s.n; ++mu) eta += x[s.m + mu - 1];
    for (int mu = 1; mu < s.n; ++mu) eta -= y[s.m + mu - 1];
    b.eta = eta;
    b.e_last = (long)b.I0.size() + eta;
    return b;
}

// Lambda_0 shifted by +-eps_r inside the subalgebra
inline Weight shift_sub(const Weight& L0, int r, long by)
{
    check_index(L0.sig, r);
    Weight w(L0);
    w.c[r - 1] += by;
    return w;
}

} // namespace qwig
