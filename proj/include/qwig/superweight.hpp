#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactq.hpp"

namespace qwig {

struct Signature {
    int m = 1;
    int n = 1;
    int d() const { return m + n; }
    friend bool operator==(const Signature& a, const Signature& b) { return a.m == b.m && a.n == b.n; }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
    friend bool operator<(const Signature& a, const Signature& b)
    {
        return a.m != b.m ? a.m < b.m : a.n < b.n;
    }
};

inline std::string to_string(const Signature& s)
{
    return "gl(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")";
}

inline void check_index(const Signature& s, int i)
{
    if (i < 1 || i > s.d())
        throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(s.d()));
}

// [i] in {0,1}
inline int grade(const Signature& s, int i)
{
    check_index(s, i);
    return i <= s.m ? 0 : 1;
}

// (i) = (-1)^[i]
inline int parity(const Signature& s, int i) { return grade(s, i) ? -1 : 1; }

struct Weight {
    Signature sig;
    std::vector<Rational> c;

    Weight() = default;
    Weight(Signature s, std::vector<Rational> comps) : sig(s), c(std::move(comps))
    {
        if ((int)c.size() != sig.d()) throw Error(Errc::SignatureMismatch, "weight length does not match signature");
    }
    Weight(Signature s, const std::vector<long>& comps) : sig(s)
    {
        if ((int)comps.size() != sig.d()) throw Error(Errc::SignatureMismatch, "weight length does not match signature");
        for (long x : comps) c.emplace_back(x);
    }

    static Weight zero(Signature s) { return Weight(s, std::vector<long>(s.d(), 0)); }
    static Weight unit(Signature s, int i)
    {
        check_index(s, i);
        std::vector<long> v(s.d(), 0);
        v[i - 1] = 1;
        return Weight(s, v);
    }

    const Rational& operator[](int i) const { return c[i - 1]; }

    bool integral() const
    {
        for (const auto& x : c)
            if (x.get_den() != 1) return false;
        return true;
    }

    std::vector<long> ints() const
    {
        std::vector<long> v;
        for (const auto& x : c) {
            if (x.get_den() != 1) throw Error(Errc::NonIntegralWeight, "weight component " + x.get_str() + " is not an integer");
            v.push_back(x.get_num().get_si());
        }
        return v;
    }

    bool dominant() const
    {
        for (int i = 1; i < sig.m; ++i) {
            Rational g = c[i - 1] - c[i];
            if (g.get_den() != 1 || sgn(g) < 0) return false;
        }
        for (int i = sig.m + 1; i < sig.d(); ++i) {
            Rational g = c[i - 1] - c[i];
            if (g.get_den() != 1 || sgn(g) < 0) return false;
        }
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b)
    {
        if (a.sig != b.sig) throw Error(Errc::SignatureMismatch, "adding weights of different algebras");
        Weight r(a);
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b)
    {
        if (a.sig != b.sig) throw Error(Errc::SignatureMismatch, "subtracting weights of different algebras");
        Weight r(a);
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend Weight operator*(const Rational& s, const Weight& a)
    {
        Weight r(a);
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.sig == b.sig && a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b)
    {
        if (a.sig != b.sig) return a.sig < b.sig;
        return a.c < b.c;
    }
};

// "1,0|0" ; the odd block may be empty ("1,0" or "1,0|")
inline Weight parse_weight(const std::string& text)
{
    std::string even = text, odd;
    auto bar = text.find('|');
    if (bar != std::string::npos) {
        even = text.substr(0, bar);
        odd = text.substr(bar + 1);
    }
    auto parts = [&](const std::string& s) {
        std::vector<Rational> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::string t;
            for (char ch : tok)
                if (ch != ' ') t.push_back(ch);
            if (t.empty()) continue;
            if (t[0] == '+') t = t.substr(1);
            Rational x;
            if (x.set_str(t, 10) != 0) throw Error(Errc::ParseError, "bad weight component '" + tok + "'");
            x.canonicalize();
            v.push_back(x);
        }
        return v;
    };
    auto e = parts(even), o = parts(odd);
    if (e.empty()) throw Error(Errc::ParseError, "weight '" + text + "' has an empty even block");
    Signature s{(int)e.size(), (int)o.size()};
    e.insert(e.end(), o.begin(), o.end());
    return Weight(s, e);
}

inline std::string to_string(const Weight& w)
{
    std::string s;
    for (int i = 1; i <= w.sig.d(); ++i) {
        if (i > 1) s += (i == w.sig.m + 1) ? "|" : ",";
        s += w[i].get_str();
    }
    if (w.sig.n == 0) s += "|";
    return s;
}

inline Rational bilinear_form(const Weight& a, const Weight& b)
{
    if (a.sig != b.sig) throw Error(Errc::SignatureMismatch, "bilinear form of weights of different algebras");
    Rational s = 0;
    for (int i = 1; i <= a.sig.d(); ++i) s += parity(a.sig, i) * a[i] * b[i];
    return s;
}

inline Weight rho(const Signature& s)
{
    std::vector<Rational> v;
    for (int i = 1; i <= s.m; ++i) v.emplace_back(s.m - s.n - 2 * i + 1, 2);
    for (int mu = 1; mu <= s.n; ++mu) v.emplace_back(s.m + s.n - 2 * mu + 1, 2);
    for (auto& x : v) x.canonicalize();
    return Weight(s, v);
}

// even and odd half sums from the positive roots eps_a - eps_b (a < b)
inline std::pair<Weight, Weight> rho_even_odd(const Signature& s)
{
    Weight r0 = Weight::zero(s), r1 = Weight::zero(s);
    const Rational half(1, 2);
    for (int a = 1; a <= s.d(); ++a)
        for (int b = a + 1; b <= s.d(); ++b) {
            Weight& t = (grade(s, a) == grade(s, b)) ? r0 : r1;
            t.c[a - 1] += half;
            t.c[b - 1] -= half;
        }
    return {r0, r1};
}

// (rho, eps_i)
inline Rational rho_dot(const Signature& s, int i) { return parity(s, i) * rho(s)[i]; }

enum class RootVariant { adjoint, dual };

inline const char* to_string(RootVariant v) { return v == RootVariant::adjoint ? "adjoint" : "dual"; }

// (1 - q^{-2 alpha}) ; the deformed root is this divided by q - q^{-1}
inline HalfLaurent root_numerator(long alpha)
{
    return HalfLaurent(1) - HalfLaurent::monomial(-4 * alpha);
}

inline QFraction root_value(long alpha) { return QFraction(root_numerator(alpha), qdiff()); }

struct RootSet {
    RootVariant variant = RootVariant::adjoint;
    std::vector<long> classical;
    std::vector<QFraction> deformed;
    bool distinct = true;

    long operator[](int r) const { return classical[r - 1]; }
};

inline std::vector<long> classical_roots(const Weight& L, RootVariant v)
{
    const auto x = L.ints();
    const int m = L.sig.m, n = L.sig.n;
    std::vector<long> r;
    for (int i = 1; i <= m; ++i) r.push_back(v == RootVariant::adjoint ? x[i - 1] + 1 - i : x[i - 1] + m - n - i);
    for (int mu = 1; mu <= n; ++mu) r.push_back(v == RootVariant::adjoint ? mu - m - 1 - x[m + mu - 1] : mu - n - x[m + mu - 1]);
    return r;
}

inline RootSet char_roots(const Weight& L, RootVariant v)
{
    RootSet rs;
    rs.variant = v;
    rs.classical = classical_roots(L, v);
    for (long a : rs.classical) rs.deformed.push_back(root_value(a));
    for (std::size_t i = 0; i < rs.classical.size(); ++i)
        for (std::size_t j = i + 1; j < rs.classical.size(); ++j)
            if (rs.classical[i] == rs.classical[j]) rs.distinct = false;
    return rs;
}

// the subalgebra gl(m|n-1) uses the same formulas with its own signature
inline RootSet subalgebra_roots(const Weight& L0, RootVariant v) { return char_roots(L0, v); }

struct GenericReport {
    std::vector<std::pair<int, int>> adjoint_pairs;
    std::vector<std::pair<int, int>> dual_pairs;
    bool generic() const { return adjoint_pairs.empty() && dual_pairs.empty(); }
};

inline GenericReport check_generic(const Weight& L)
{
    GenericReport g;
    auto scan = [](const std::vector<long>& r, std::vector<std::pair<int, int>>& out) {
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j)
                if (r[i] == r[j]) out.emplace_back((int)i + 1, (int)j + 1);
    };
    scan(classical_roots(L, RootVariant::adjoint), g.adjoint_pairs);
    scan(classical_roots(L, RootVariant::dual), g.dual_pairs);
    return g;
}

} // namespace qwig
