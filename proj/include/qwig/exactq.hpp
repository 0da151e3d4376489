#pragma once

// Exact arithmetic in Q(q^{1/2}). Exponents are stored doubled, so the
// monomial q^{e/2} is kept as the integer e.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qwig {

using Rational = mpq_class;
using Integer = mpz_class;

class HalfLaurent {
public:
    using Term = std::pair<long, Rational>;

    HalfLaurent() = default;
    HalfLaurent(long c) { if (c != 0) t_.emplace_back(0, Rational(c)); }
    HalfLaurent(const Rational& c)
    {
        if (sgn(c) != 0) t_.emplace_back(0, c);
        if (!t_.empty()) t_[0].second.canonicalize();
    }

    static HalfLaurent monomial(long e2, const Rational& c = 1)
    {
        HalfLaurent r;
        if (sgn(c) != 0) {
            r.t_.emplace_back(e2, c);
            r.t_[0].second.canonicalize();
        }
        return r;
    }

    // caller promises sorted, distinct, nonzero
    static HalfLaurent from_sorted(std::vector<Term> t)
    {
        HalfLaurent r;
        r.t_ = std::move(t);
        return r;
    }

    static HalfLaurent from_terms(std::vector<Term> t)
    {
        for (auto& x : t) x.second.canonicalize();
        std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        HalfLaurent r;
        for (auto& x : t) {
            if (!r.t_.empty() && r.t_.back().first == x.first)
                r.t_.back().second += x.second;
            else {
                if (!r.t_.empty() && sgn(r.t_.back().second) == 0) r.t_.pop_back();
                r.t_.push_back(std::move(x));
            }
        }
        if (!r.t_.empty() && sgn(r.t_.back().second) == 0) r.t_.pop_back();
        return r;
    }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t size() const { return t_.size(); }
    long min_exp() const { return t_.front().first; }
    long max_exp() const { return t_.back().first; }

    HalfLaurent operator-() const
    {
        HalfLaurent r(*this);
        for (auto& x : r.t_) x.second = -x.second;
        return r;
    }

    HalfLaurent& operator+=(const HalfLaurent& o) { *this = add(*this, o, false); return *this; }
    HalfLaurent& operator-=(const HalfLaurent& o) { *this = add(*this, o, true); return *this; }
    HalfLaurent& operator*=(const HalfLaurent& o) { *this = *this * o; return *this; }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) { return add(a, b, false); }
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return add(a, b, true); }

    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b)
    {
        if (a.t_.empty() || b.t_.empty()) return {};
        if (b.t_.size() == 1) return a.mul_term(b.t_[0].first, b.t_[0].second);
        if (a.t_.size() == 1) return b.mul_term(a.t_[0].first, a.t_[0].second);
        std::vector<Term> out;
        out.reserve(a.t_.size() * b.t_.size());
        for (const auto& x : a.t_)
            for (const auto& y : b.t_) out.emplace_back(x.first + y.first, x.second * y.second);
        return from_terms(std::move(out));
    }

    HalfLaurent mul_term(long e2, const Rational& c) const
    {
        HalfLaurent r;
        if (sgn(c) == 0) return r;
        r.t_.reserve(t_.size());
        for (const auto& x : t_) r.t_.emplace_back(x.first + e2, x.second * c);
        return r;
    }

    HalfLaurent shifted(long e2) const
    {
        HalfLaurent r(*this);
        for (auto& x : r.t_) x.first += e2;
        return r;
    }

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    Rational at_one() const
    {
        Rational s = 0;
        for (const auto& x : t_) s += x.second;
        return s;
    }

    long double eval(long double q0) const
    {
        long double s = 0;
        long double root = std::sqrt(q0);
        for (const auto& x : t_) s += x.second.get_d() * std::pow(root, (long double)x.first);
        return s;
    }

    long double eval_abs(long double q0) const
    {
        long double s = 0;
        long double root = std::sqrt(q0);
        for (const auto& x : t_) s += std::fabs(x.second.get_d()) * std::pow(root, (long double)x.first);
        return s;
    }

private:
    static HalfLaurent add(const HalfLaurent& a, const HalfLaurent& b, bool negate_b)
    {
        HalfLaurent r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
                r.t_.emplace_back(b.t_[j].first, negate_b ? Rational(-b.t_[j].second) : b.t_[j].second);
                ++j;
            } else {
                Rational c = negate_b ? Rational(a.t_[i].second - b.t_[j].second)
                                      : Rational(a.t_[i].second + b.t_[j].second);
                if (sgn(c) != 0) r.t_.emplace_back(a.t_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> t_;
};

namespace detail {

// dense integer polynomial, index = degree, no trailing zeros
using ZPoly = std::vector<Integer>;

inline void trim(ZPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Integer content(const ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void make_primitive(ZPoly& p)
{
    trim(p);
    if (p.empty()) return;
    Integer g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// pseudo-remainder of a by b (b nonzero)
inline ZPoly prem(ZPoly a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        Integer la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline ZPoly gcd_primitive(ZPoly a, ZPoly b)
{
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return ZPoly{Integer(1)};
        ZPoly r = prem(std::move(a), b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// exact quotient a / b over Z, b divides a
inline ZPoly divexact(const ZPoly& a, const ZPoly& b)
{
    if (b.size() == 1) {
        ZPoly q(a);
        for (auto& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
        return q;
    }
    ZPoly r(a);
    ZPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = r[k + b.size() - 1];
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.back().get_mpz_t());
        q[k] = c;
        if (sgn(c) != 0)
            for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
    }
    return q;
}

struct Split {
    long base = 0;       // lowest doubled exponent
    Rational scale;      // rational content
    ZPoly prim;          // primitive part in t^stride
};

inline Split split(const HalfLaurent& p, long stride)
{
    Split s;
    const auto& t = p.terms();
    s.base = t.front().first;
    Integer l = 1;
    for (const auto& x : t) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.second.get_den_mpz_t());
    s.prim.assign((t.back().first - s.base) / stride + 1, Integer(0));
    for (const auto& x : t) {
        Rational c = x.second * l;
        s.prim[(x.first - s.base) / stride] = c.get_num();
    }
    Integer g = content(s.prim);
    if (g != 1)
        for (auto& c : s.prim) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    s.scale = Rational(g, l);
    s.scale.canonicalize();
    return s;
}

inline HalfLaurent join(const ZPoly& p, long base, long stride, const Rational& scale)
{
    std::vector<HalfLaurent::Term> t;
    t.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (sgn(p[i]) != 0) t.emplace_back(base + (long)i * stride, Rational(p[i]) * scale);
    return HalfLaurent::from_sorted(std::move(t));
}

inline long exponent_stride(const HalfLaurent& a, const HalfLaurent& b)
{
    long g = 0;
    long ba = a.min_exp(), bb = b.min_exp();
    for (const auto& x : a.terms()) g = std::gcd(g, x.first - ba);
    for (const auto& x : b.terms()) g = std::gcd(g, x.first - bb);
    return g == 0 ? 1 : g;
}

} // namespace detail

// Reduce num/den to canonical form: den has lowest exponent 0 with coefficient 1,
// and num, den are coprime.
inline std::pair<HalfLaurent, HalfLaurent> normalize_pair(const HalfLaurent& num, const HalfLaurent& den)
{
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
    if (num.is_zero()) return {HalfLaurent(), HalfLaurent(1)};
    if (den.is_monomial()) {
        const auto& d = den.terms()[0];
        Rational inv = 1 / d.second;
        return {num.mul_term(-d.first, inv), HalfLaurent(1)};
    }
    long stride = detail::exponent_stride(num, den);
    detail::Split sn = detail::split(num, stride);
    detail::Split sd = detail::split(den, stride);
    if (sn.prim.size() > 1) {
        detail::ZPoly g = detail::gcd_primitive(sn.prim, sd.prim);
        if (g.size() > 1) {
            sn.prim = detail::divexact(sn.prim, g);
            sd.prim = detail::divexact(sd.prim, g);
        }
    }
    Rational d0 = Rational(sd.prim[0]);
    Rational dscale = 1 / d0;
    Rational nscale = sn.scale / sd.scale / d0;
    return {detail::join(sn.prim, sn.base - sd.base, stride, nscale), detail::join(sd.prim, 0, stride, dscale)};
}

class QFraction {
public:
    QFraction() : den_(1) {}
    QFraction(long c) : num_(c), den_(1) {}
    QFraction(const Rational& c) : num_(c), den_(1) {}
    QFraction(const HalfLaurent& p) : num_(p), den_(1) {}
    QFraction(const HalfLaurent& n, const HalfLaurent& d)
    {
        auto pr = normalize_pair(n, d);
        num_ = std::move(pr.first);
        den_ = std::move(pr.second);
    }

    static QFraction raw(HalfLaurent n, HalfLaurent d)
    {
        QFraction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    const HalfLaurent& num() const { return num_; }
    const HalfLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    QFraction operator-() const { return raw(-num_, den_); }

    friend QFraction operator+(const QFraction& a, const QFraction& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, a.den_);
        if (a.den_ == b.den_) return QFraction(a.num_ + b.num_, a.den_);
        if (b.den_.is_one()) return raw(a.num_ + b.num_ * a.den_, a.den_);
        if (a.den_.is_one()) return raw(a.num_ * b.den_ + b.num_, b.den_);
        return QFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QFraction operator-(const QFraction& a, const QFraction& b) { return a + (-b); }

    friend QFraction operator*(const QFraction& a, const QFraction& b)
    {
        if (a.is_zero() || b.is_zero()) return QFraction();
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
        if (b.num_.is_monomial() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
        if (a.num_.is_monomial() && a.den_.is_one()) return raw(a.num_ * b.num_, b.den_);
        return QFraction(a.num_ * b.num_, a.den_ * b.den_);
    }

    QFraction inverse() const
    {
        if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
        return QFraction(den_, num_);
    }

    friend QFraction operator/(const QFraction& a, const QFraction& b)
    {
        if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero fraction");
        if (a.is_zero()) return QFraction();
        return QFraction(a.num_ * b.den_, a.den_ * b.num_);
    }

    QFraction& operator+=(const QFraction& o) { return *this = *this + o; }
    QFraction& operator-=(const QFraction& o) { return *this = *this - o; }
    QFraction& operator*=(const QFraction& o) { return *this = *this * o; }
    QFraction& operator/=(const QFraction& o) { return *this = *this / o; }

    friend bool operator==(const QFraction& a, const QFraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QFraction& a, const QFraction& b) { return !(a == b); }

private:
    HalfLaurent num_;
    HalfLaurent den_;
};

// q^{e2/2}
inline HalfLaurent qpow2(long e2) { return HalfLaurent::monomial(e2); }

// q^x for x a multiple of 1/2
inline HalfLaurent qpow(const Rational& x)
{
    Rational y = x * 2;
    if (y.get_den() != 1) throw Error(Errc::NonIntegralWeight, "exponent is not a multiple of 1/2");
    return HalfLaurent::monomial(y.get_num().get_si());
}

// [x]_q = (q^x - q^-x)/(q - q^-1)
inline HalfLaurent qnum(long x)
{
    if (x == 0) return {};
    long a = std::labs(x);
    std::vector<HalfLaurent::Term> t;
    t.reserve(a);
    for (long j = a - 1; j >= 0; --j) t.emplace_back(2 * (a - 1 - 2 * j), Rational(x > 0 ? 1 : -1));
    return HalfLaurent::from_sorted(std::move(t));
}

// q - q^{-1}
inline HalfLaurent qdiff() { return HalfLaurent::from_sorted({{-2, Rational(-1)}, {2, Rational(1)}}); }

inline long double eval_numeric(const QFraction& f, long double q0)
{
    long double d = f.den().eval(q0);
    long double scale = f.den().eval_abs(q0);
    if (std::fabs(d) <= 1e-13L * scale) throw Error(Errc::PoleAtPoint, "denominator vanishes at sample point");
    return f.num().eval(q0) / d;
}

inline Rational limit_q1(const QFraction& f)
{
    Rational d = f.den().at_one();
    if (sgn(d) == 0) throw Error(Errc::PoleAtOne, "denominator vanishes at q = 1");
    return f.num().at_one() / d;
}

// ---- text form

namespace detail {

inline std::string exp_str(long e2)
{
    if (e2 == 0) return "";
    if (e2 == 2) return "q";
    if (e2 % 2 == 0) return "q^" + std::to_string(e2 / 2);
    return "q^{" + std::to_string(e2) + "/2}";
}

inline std::string poly_str(const HalfLaurent& p)
{
    if (p.is_zero()) return "0";
    std::string s;
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        Rational c = it->second;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        std::string body;
        std::string e = exp_str(it->first);
        if (e.empty())
            body = c.get_den() == 1 || t.size() == 1 ? c.get_str() : "(" + c.get_str() + ")";
        else if (c == 1)
            body = e;
        else if (c.get_den() == 1)
            body = c.get_str() + e;
        else
            body = "(" + c.get_str() + ")" + e;
        if (neg)
            s += "-";
        else if (!s.empty())
            s += "+";
        s += body;
    }
    return s;
}

class Parser {
public:
    explicit Parser(const std::string& s)
    {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    QFraction parse()
    {
        HalfLaurent n = primary();
        HalfLaurent d(1);
        if (peek() == '/') {
            ++i_;
            d = primary();
        }
        if (i_ != s_.size()) fail("trailing characters");
        if (d.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in '" + s_ + "'");
        return QFraction(n, d);
    }

private:
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(Errc::ParseError, why + " at position " + std::to_string(i_) + " in '" + s_ + "'");
    }

    bool rational_paren_ahead() const
    {
        // "(p/r)" or "(-p/r)" used as a coefficient
        std::size_t j = i_ + 1;
        if (j < s_.size() && s_[j] == '-') ++j;
        std::size_t k = j;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        if (k == j || k >= s_.size() || s_[k] != '/') return false;
        std::size_t l = k + 1;
        std::size_t m = l;
        while (m < s_.size() && std::isdigit(static_cast<unsigned char>(s_[m]))) ++m;
        return m > l && m < s_.size() && s_[m] == ')';
    }

    HalfLaurent primary()
    {
        if (peek() == '(' && !rational_paren_ahead()) {
            ++i_;
            HalfLaurent p = sum();
            if (peek() != ')') fail("expected ')'");
            ++i_;
            return p;
        }
        return sum();
    }

    HalfLaurent sum()
    {
        std::vector<HalfLaurent::Term> t;
        bool first = true;
        while (true) {
            char c = peek();
            if (c == '\0' || c == ')' || c == '/') break;
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto term = one_term();
            term.second *= sign;
            t.push_back(std::move(term));
            first = false;
        }
        if (first) fail("empty expression");
        return HalfLaurent::from_terms(std::move(t));
    }

    long integer()
    {
        std::size_t j = i_;
        if (peek() == '-' || peek() == '+') ++i_;
        std::size_t k = i_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        if (k == i_) fail("expected integer");
        return std::stol(s_.substr(j, i_ - j));
    }

    HalfLaurent::Term one_term()
    {
        Rational c = 1;
        bool have_coef = false;
        if (peek() == '(') {
            std::size_t j = ++i_;
            while (peek() != ')' && peek() != '\0') ++i_;
            if (peek() != ')') fail("expected ')'");
            c = Rational(s_.substr(j, i_ - j));
            c.canonicalize();
            ++i_;
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t j = i_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
            c = Rational(s_.substr(j, i_ - j));
            have_coef = true;
        }
        if (peek() == '*') ++i_;
        long e2 = 0;
        if (peek() == 'q') {
            ++i_;
            e2 = 2;
            if (peek() == '^') {
                ++i_;
                if (peek() == '{' || peek() == '(') {
                    char close = peek() == '{' ? '}' : ')';
                    ++i_;
                    long a = integer();
                    long b = 1;
                    if (peek() == '/') {
                        ++i_;
                        b = integer();
                    }
                    if (peek() != close) fail("unterminated exponent");
                    ++i_;
                    if (b != 1 && b != 2) fail("exponent must be a multiple of 1/2");
                    e2 = b == 1 ? 2 * a : a;
                } else {
                    e2 = 2 * integer();
                }
            }
        } else if (!have_coef) {
            fail("expected term");
        }
        return {e2, c};
    }

    std::string s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline std::string to_string(const HalfLaurent& p) { return detail::poly_str(p); }

inline std::string to_string(const QFraction& f)
{
    std::string n = detail::poly_str(f.num());
    if (f.den().is_one()) return n;
    std::string d = detail::poly_str(f.den());
    // a bare rational constant would read as a chain of divisions
    if (f.num().size() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
    if (f.den().size() > 1 || d.find('/') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

inline QFraction parse_qfraction(const std::string& s) { return detail::Parser(s).parse(); }

} // namespace qwig
