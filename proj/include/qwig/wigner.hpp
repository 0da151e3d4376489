#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branching.hpp"

namespace qwig {

enum class Kind { lower, raise };
enum class Form { root_product, qnumber_phase };

// Where a_{0r} is evaluated inside mu_r.
//   gamma_relation: mu_r(L, L0) = gamma_r(L, L0 -+ eps_r); equivalently the displayed
//                   product with a_{0r} taken at L0 and r counted as admissible.
//   shifted_root:   displayed product with literal index sets and a_{0r} taken at L0 -+ eps_r.
enum class MuConvention { gamma_relation, shifted_root };

// strict: only k, r in the admissible sets; extended: r outside them is evaluated
// with r counted as admissible (the projector identity is nonzero there).
enum class Admission { strict, extended };

inline const char* to_string(Kind k) { return k == Kind::lower ? "lower" : "raise"; }
inline const char* to_string(Form f) { return f == Form::root_product ? "root_product" : "qnumber_phase"; }
inline const char* to_string(MuConvention c) { return c == MuConvention::gamma_relation ? "gamma_relation" : "shifted_root"; }

inline RootVariant variant_of(Kind k) { return k == Kind::lower ? RootVariant::dual : RootVariant::adjoint; }

namespace detail {

inline std::vector<int> merged(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

inline bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Product of factors kept as two Laurent polynomials plus a power of (q - q^{-1}).
struct Acc {
    HalfLaurent num{1};
    HalfLaurent den{1};
    long qq = 0;
    long phase2 = 0; // doubled exponent of an overall q power
    int sign = 1;

    void mul(const HalfLaurent& p) { num *= p; }
    void div(const HalfLaurent& p, const char* what)
    {
        if (p.is_zero()) throw Error(Errc::DegenerateRoots, what);
        den *= p;
    }
    QFraction value() const
    {
        HalfLaurent n = num, d = den;
        for (long i = 0; i < qq; ++i) n *= qdiff();
        for (long i = 0; i < -qq; ++i) d *= qdiff();
        n = n.mul_term(phase2, Rational(sign));
        return QFraction(n, d);
    }
};

// (q - q^{-1}) a_x
inline HalfLaurent A(long x) { return root_numerator(x); }

} // namespace detail

// Everything the closed forms need about one branching and one side.
struct Side {
    Kind kind;
    Signature sig;
    std::vector<long> al;  // alpha_k (dual) or alpha-bar_k (adjoint), 1-based via at()
    std::vector<long> al0; // subalgebra roots at Lambda_0
    std::vector<int> K;    // I0 u I1~  or  I0bar u I1~
    std::vector<int> R;    // I0 u I1   or  I0bar u I1
    std::size_t n_even = 0; // |I0| (lower) or |I0bar| (raise)
    long eta = 0;
    long I0_size = 0;

    long a(int k) const { return al[k - 1]; }
    long a0(int r) const { return al0[r - 1]; }
    int s(int r) const { return parity(sig, r); }
    // classical value of the shifted subalgebra root: a_0l + (l) for lower, a_0l - (l) for raise
    long shc(int l) const { return kind == Kind::lower ? a0(l) + s(l) : a0(l) - s(l); }
    int sign_n() const { return ((n_even + sig.n - 1) % 2) ? -1 : 1; }

    // (q - q^{-1}) times  q^{-2(r)} a_{0r} + (r) q^{-(r)}   (lower)
    //                     q^{2(r)} a_{0r} - (r) q^{(r)}      (raise)
    HalfLaurent SH(int l) const
    {
        const int sl = s(l);
        const long dir = kind == Kind::lower ? -1 : 1;
        HalfLaurent t = detail::A(a0(l)).shifted(4 * dir * sl);
        HalfLaurent u = qdiff().mul_term(2 * dir * sl, Rational(sl));
        return kind == Kind::lower ? t + u : t - u;
    }
};

inline Side make_side(const BranchingData& b, Kind kind)
{
    Side sd;
    sd.kind = kind;
    sd.sig = b.sig();
    sd.al = classical_roots(b.lambda, variant_of(kind));
    sd.al0 = classical_roots(b.lambda0, variant_of(kind));
    const auto& ev = kind == Kind::lower ? b.I0 : b.I0bar;
    sd.K = detail::merged(ev, b.I1tilde);
    sd.R = detail::merged(ev, b.I1);
    sd.n_even = ev.size();
    sd.eta = b.eta;
    sd.I0_size = (long)b.I0.size();
    return sd;
}

// r counted as admissible even when the literal sets exclude it
inline Side force_admissible(Side sd, int r)
{
    if (r <= sd.sig.m && !detail::contains(sd.R, r)) {
        sd.R.push_back(r);
        sd.K.push_back(r);
        std::sort(sd.R.begin(), sd.R.end());
        std::sort(sd.K.begin(), sd.K.end());
        sd.n_even += 1;
    }
    return sd;
}

// ---- q-phases in closed form (valid for the literal index sets)

inline long xi(const BranchingData& b, int k, Kind kind)
{
    Side sd = make_side(b, kind);
    return -((long)b.I0.size() + sd.a(k) + b.eta);
}

inline long eta_phase(const BranchingData& b, int r, Kind kind)
{
    Side sd = make_side(b, kind);
    long I0 = (long)b.I0.size();
    return kind == Kind::lower ? I0 + b.eta - 3 * sd.a0(r) - sd.s(r) : b.eta + I0 - 3 * sd.a0(r) + sd.s(r);
}

inline long xi_coupled(const BranchingData& b, int k, int r, Kind kind)
{
    Side sd = make_side(b, kind);
    return sd.a(k) - sd.a0(r);
}

// ---- omega_k / omega-tilde_k

inline QFraction omega_entry(const Side& sd, int k, Form form, std::optional<long> closed_phase = std::nullopt)
{
    detail::Acc acc;
    if (form == Form::root_product) {
        for (int r : sd.R) {
            acc.mul(detail::A(sd.a(k)) - sd.SH(r));
            acc.qq -= 1;
        }
        for (int l : sd.K)
            if (l != k) {
                acc.div(detail::A(sd.a(k)) - detail::A(sd.a(l)), "coinciding characteristic roots");
                acc.qq += 1;
            }
    } else {
        long ph = 0;
        for (int r : sd.R) {
            acc.mul(qnum(sd.a(k) - sd.shc(r)));
            ph -= sd.a(k) + sd.shc(r);
        }
        for (int l : sd.K)
            if (l != k) {
                acc.div(qnum(sd.a(k) - sd.a(l)), "coinciding characteristic roots");
                ph += sd.a(k) + sd.a(l);
            }
        acc.phase2 = 2 * (closed_phase ? *closed_phase : ph);
    }
    return acc.value();
}

struct CoefficientTable {
    std::string kind; // lower, raise, coupled_lower, coupled_raise, mu, mu_tilde, gamma, gamma_tilde
    BranchingData branching;
    Form form = Form::root_product;
    std::string formula;
    std::map<std::pair<int, int>, QFraction> entries; // r = 0 when the entry has a single label
    std::vector<std::pair<int, int>> degenerate;      // labels left out because a denominator vanishes
};

inline CoefficientTable omega(const BranchingData& b, Kind kind, Form form = Form::root_product)
{
    Side sd = make_side(b, kind);
    CoefficientTable t;
    t.kind = to_string(kind);
    t.branching = b;
    t.form = form;
    t.formula = kind == Kind::lower ? "omega_k over I0 u I1~" : "omega~_k over I0bar u I1~";
    for (int k : sd.K) {
        std::optional<long> ph;
        if (form == Form::qnumber_phase) ph = xi(b, k, kind);
        t.entries[{k, 0}] = omega_entry(sd, k, form, ph);
    }
    return t;
}

inline CoefficientTable omega_lower(const BranchingData& b, Form f = Form::root_product) { return omega(b, Kind::lower, f); }
inline CoefficientTable omega_raise(const BranchingData& b, Form f = Form::root_product) { return omega(b, Kind::raise, f); }

// value of omega_k for any k in 1..d, zero outside the admissible set
inline QFraction omega_at(const CoefficientTable& t, int k)
{
    auto it = t.entries.find({k, 0});
    return it == t.entries.end() ? QFraction() : it->second;
}

// sum_k (a_k - shifted a_0r)^{-1} omega_k ; zero for every admissible r
inline QFraction omega_residual(const BranchingData& b, Kind kind, int r)
{
    Side sd = make_side(b, kind);
    if (!detail::contains(sd.R, r)) throw Error(Errc::AdmissibilityError, "r outside the admissible set");
    auto tab = omega(b, kind);
    QFraction tot;
    for (int k : sd.K) {
        // (a_k - sh_r) = (A_k - SH_r)/(q - q^{-1})
        HalfLaurent f = detail::A(sd.a(k)) - sd.SH(r);
        if (!f.is_zero()) {
            tot += QFraction(qdiff(), f) * tab.entries.at({k, 0});
            continue;
        }
        // omega_k carries the vanishing factor itself; the term is its limit with the factor cancelled
        detail::Acc acc;
        for (int l : sd.R)
            if (l != r) {
                acc.mul(detail::A(sd.a(k)) - sd.SH(l));
                acc.qq -= 1;
            }
        for (int l : sd.K)
            if (l != k) {
                acc.div(detail::A(sd.a(k)) - detail::A(sd.a(l)), "coinciding characteristic roots");
                acc.qq += 1;
            }
        tot += acc.value();
    }
    return tot;
}

// q -> 1 value of omega~_k built from classical roots
inline std::map<int, Rational> omega_classical(const BranchingData& b, Kind kind)
{
    Side sd = make_side(b, kind);
    std::map<int, Rational> out;
    for (int k : sd.K) {
        Rational v = 1;
        for (int r : sd.R) v *= Rational(sd.a(k) - sd.shc(r));
        for (int l : sd.K)
            if (l != k) {
                long d = sd.a(k) - sd.a(l);
                if (d == 0) throw Error(Errc::DegenerateRoots, "coinciding classical roots");
                v /= Rational(d);
            }
        out[k] = v;
    }
    return out;
}

// ---- gamma_r, mu_r

inline QFraction gamma_side(const Side& sd, int r, Form form)
{
    detail::Acc acc;
    acc.sign = sd.sign_n();
    if (form == Form::root_product) {
        HalfLaurent shr = sd.SH(r);
        for (int k : sd.K) {
            acc.mul(detail::A(sd.a(k)) - shr);
            acc.qq -= 1;
        }
        for (int l : sd.R)
            if (l != r) {
                acc.div(shr - sd.SH(l), "coinciding shifted subalgebra roots");
                acc.qq += 1;
            }
    } else {
        long ph = 0;
        for (int k : sd.K) {
            acc.mul(qnum(sd.a(k) - sd.shc(r)));
            ph -= sd.a(k) + sd.shc(r);
        }
        for (int l : sd.R)
            if (l != r) {
                acc.div(qnum(sd.shc(r) - sd.shc(l)), "coinciding shifted subalgebra roots");
                ph += sd.shc(r) + sd.shc(l);
            }
        acc.phase2 = 2 * ph;
    }
    return acc.value();
}

inline QFraction gamma(const BranchingData& b, int r, Kind kind, Form form = Form::root_product)
{
    Side sd = make_side(b, kind);
    if (!detail::contains(sd.R, r))
        throw Error(Errc::AdmissibilityError, "gamma_r needs r in the admissible set");
    return gamma_side(sd, r, form);
}

// displayed product  sign * prod_k (a_k - a0r) / prod_{l != r} (a0r - sh_l)  with a0r classical value x
inline QFraction mu_side(const Side& sd, int r, long x, Form form, std::optional<long> closed_phase)
{
    detail::Acc acc;
    acc.sign = sd.sign_n();
    if (form == Form::root_product) {
        HalfLaurent a0r = detail::A(x);
        for (int k : sd.K) {
            acc.mul(detail::A(sd.a(k)) - a0r);
            acc.qq -= 1;
        }
        for (int l : sd.R)
            if (l != r) {
                acc.div(a0r - sd.SH(l), "coinciding shifted subalgebra roots");
                acc.qq += 1;
            }
    } else {
        long ph = 0;
        for (int k : sd.K) {
            acc.mul(qnum(sd.a(k) - x));
            ph -= sd.a(k) + x;
        }
        for (int l : sd.R)
            if (l != r) {
                acc.div(qnum(x - sd.shc(l)), "coinciding shifted subalgebra roots");
                ph += x + sd.shc(l);
            }
        acc.phase2 = 2 * (closed_phase ? *closed_phase : ph);
    }
    return acc.value();
}

inline QFraction mu(const BranchingData& b, int r, Kind kind, Form form = Form::root_product,
                    MuConvention conv = MuConvention::gamma_relation)
{
    const Signature s = b.sig();
    if (r < 1 || r >= s.d()) throw Error(Errc::AdmissibilityError, "r must label a subalgebra index");
    Side sd = make_side(b, kind);
    const bool literal = detail::contains(sd.R, r);
    if (conv == MuConvention::gamma_relation) {
        Side f = force_admissible(sd, r);
        std::optional<long> ph;
        if (form == Form::qnumber_phase && literal) ph = eta_phase(b, r, kind);
        return mu_side(f, r, sd.a0(r), form, ph);
    }
    if (!literal) throw Error(Errc::AdmissibilityError, "r outside the admissible set");
    Weight shifted = shift_sub(b.lambda0, r, kind == Kind::lower ? -1 : 1);
    long x = classical_roots(shifted, variant_of(kind))[r - 1];
    return mu_side(sd, r, x, form, std::nullopt);
}

// ---- coupled omega_kr

inline QFraction coupled_side(const Side& sd, int k, int r, Form form)
{
    detail::Acc acc;
    if (form == Form::root_product) {
        HalfLaurent ak = detail::A(sd.a(k)), a0r = detail::A(sd.a0(r));
        for (int l : sd.R)
            if (l != r) {
                HalfLaurent sh = sd.SH(l);
                acc.mul(ak - sh);
                acc.div(a0r - sh, "coinciding shifted subalgebra roots");
            }
        for (int p : sd.K)
            if (p != k) {
                HalfLaurent ap = detail::A(sd.a(p));
                acc.mul(ap - a0r);
                acc.div(ap - ak, "coinciding characteristic roots");
            }
    } else {
        for (int l : sd.R)
            if (l != r) {
                acc.mul(qnum(sd.a(k) - sd.shc(l)));
                acc.div(qnum(sd.a0(r) - sd.shc(l)), "coinciding shifted subalgebra roots");
            }
        for (int p : sd.K)
            if (p != k) {
                acc.mul(qnum(sd.a(p) - sd.a0(r)));
                acc.div(qnum(sd.a(p) - sd.a(k)), "coinciding characteristic roots");
            }
        acc.phase2 = 2 * (sd.a(k) - sd.a0(r));
    }
    return acc.value();
}

inline QFraction omega_coupled(const BranchingData& b, int k, int r, Kind kind, Form form = Form::qnumber_phase,
                               Admission adm = Admission::strict)
{
    const Signature s = b.sig();
    check_index(s, k);
    if (r < 1 || r >= s.d()) throw Error(Errc::AdmissibilityError, "r must label a subalgebra index");
    Side sd = make_side(b, kind);
    const bool r_ok = detail::contains(sd.R, r);
    if (adm == Admission::strict) {
        if (!r_ok || !detail::contains(sd.K, k))
            throw Error(Errc::AdmissibilityError, "(k, r) outside the admissible sets");
        return coupled_side(sd, k, r, form);
    }
    Side f = force_admissible(sd, r);
    if (!detail::contains(f.K, k)) return QFraction();
    return coupled_side(f, k, r, form);
}

// omega_k mu_r (a_k - sh_r)^{-1} (a_k - a_0r)^{-1}, everything at the same branching
inline QFraction omega_coupled_composite(const BranchingData& b, int k, int r, Kind kind,
                                         MuConvention conv = MuConvention::gamma_relation)
{
    Side sd = make_side(b, kind);
    if (!detail::contains(sd.R, r) || !detail::contains(sd.K, k))
        throw Error(Errc::AdmissibilityError, "(k, r) outside the admissible sets");
    QFraction w = omega_entry(sd, k, Form::root_product);
    QFraction m = mu(b, r, kind, Form::root_product, conv);
    HalfLaurent f1 = detail::A(sd.a(k)) - sd.SH(r);
    HalfLaurent f2 = detail::A(sd.a(k)) - detail::A(sd.a0(r));
    if (f1.is_zero() || f2.is_zero()) throw Error(Errc::DegenerateRoots, "composite form is 0/0 here");
    return w * m * QFraction(qdiff() * qdiff(), f1 * f2);
}

inline CoefficientTable omega_coupled_table(const BranchingData& b, Kind kind, Form form = Form::qnumber_phase)
{
    Side sd = make_side(b, kind);
    CoefficientTable t;
    t.kind = kind == Kind::lower ? "coupled_lower" : "coupled_raise";
    t.branching = b;
    t.form = form;
    t.formula = "omega_kr, k over the K set, r over the R set";
    for (int k : sd.K)
        for (int r : sd.R) {
            try {
                t.entries[{k, r}] = coupled_side(sd, k, r, form);
            } catch (const Error& e) {
                if (e.code() != Errc::DegenerateRoots) throw;
                t.degenerate.emplace_back(k, r);
            }
        }
    return t;
}

// mu_r for every subalgebra label; degenerate entries are left out
inline CoefficientTable mu_table(const BranchingData& b, Kind kind, Form form = Form::root_product)
{
    CoefficientTable t;
    t.kind = kind == Kind::lower ? "mu" : "mu_tilde";
    t.branching = b;
    t.form = form;
    t.formula = "gamma relation: mu_r(L, L0) = gamma_r(L, L0 -+ eps_r)";
    for (int r = 1; r < b.sig().d(); ++r) {
        try {
            t.entries[{r, 0}] = mu(b, r, kind, form);
        } catch (const Error& e) {
            if (e.code() != Errc::DegenerateRoots) throw;
            t.degenerate.emplace_back(r, 0);
        }
    }
    return t;
}

// ---- signed square roots

struct SignedSquare {
    int phase = 1;
    QFraction square;
};

struct PhaseConvention {
    std::string name = "all_plus";
    std::map<std::tuple<Kind, int, int>, int> table; // used when name == "table"
};

inline SignedSquare rwc(const BranchingData& b, int k, std::optional<int> r, Kind kind,
                        const PhaseConvention& conv = PhaseConvention{})
{
    if (conv.name != "all_plus" && conv.name != "table")
        throw Error(Errc::UnknownPhaseConvention, "unknown phase convention '" + conv.name + "'");
    SignedSquare out;
    if (r) {
        out.square = omega_coupled(b, k, *r, kind);
    } else {
        auto t = omega(b, kind);
        auto it = t.entries.find({k, 0});
        if (it == t.entries.end()) throw Error(Errc::AdmissibilityError, "k outside the admissible set");
        out.square = it->second;
    }
    if (conv.name == "table") {
        auto it = conv.table.find({kind, k, r ? *r : 0});
        if (it != conv.table.end()) out.phase = it->second < 0 ? -1 : 1;
    }
    return out;
}

} // namespace qwig
