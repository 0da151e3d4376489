#pragma once

// Dominant integral weights in a box and their branchings, shared by the property tests
// and the acceptance binary.

#include <functional>
#include <vector>

#include "qwig/branching.hpp"
#include "qwig/wigner.hpp"

namespace sweep {

using namespace qwig;

inline std::vector<Weight> dominant_box(const Signature& s, long lo, long hi)
{
    std::vector<Weight> out;
    std::vector<long> cur(s.d());
    auto rec = [&](auto&& self, int i) -> void {
        if (i == s.d()) {
            Weight w(s, cur);
            if (w.dominant()) out.push_back(w);
            return;
        }
        // dominance inside each block: keep components non-increasing
        bool block_start = i == 0 || i == s.m;
        long top = block_start ? hi : cur[i - 1];
        for (long v = lo; v <= top; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Both sides of the branching have well-defined closed forms.
inline bool generic(const BranchingData& b)
{
    for (Kind k : {Kind::lower, Kind::raise}) {
        Side sd = make_side(b, k);
        for (std::size_t i = 0; i < sd.K.size(); ++i)
            for (std::size_t j = i + 1; j < sd.K.size(); ++j)
                if (sd.a(sd.K[i]) == sd.a(sd.K[j])) return false;
        for (std::size_t i = 0; i < sd.R.size(); ++i)
            for (std::size_t j = i + 1; j < sd.R.size(); ++j)
                if (sd.shc(sd.R[i]) == sd.shc(sd.R[j])) return false;
    }
    return true;
}

struct Stats {
    long weights = 0, branchings = 0, generic = 0;
};

// every generic branching with m <= mmax, 1 <= n <= nmax, components in [lo, hi]
inline Stats for_each_branching(int mmax, int nmax, long lo, long hi, const std::function<void(const BranchingData&)>& f)
{
    Stats st;
    for (int m = 1; m <= mmax; ++m)
        for (int n = 1; n <= nmax; ++n)
            for (const Weight& L : dominant_box(Signature{m, n}, lo, hi)) {
                ++st.weights;
                for (const Weight& L0 : branch_candidates(L)) {
                    ++st.branchings;
                    BranchingData b = index_sets(L, L0);
                    if (!generic(b)) continue;
                    ++st.generic;
                    f(b);
                }
            }
    return st;
}

} // namespace sweep
