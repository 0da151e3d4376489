#pragma once

#include "superweight.hpp"

namespace qwig {

// Exponent of the C1-tilde eigenvalue: q^{-(L + 2 rho0, eps_i)} agrees with the supertrace of
// the characteristic matrix on every module the oracle builds; the minus sign is kept to show it does not.
enum class C1TildeForm { plus_rho0, minus_rho0 };

inline QFraction chi_v(const Weight& L, bool tilde)
{
    Rational e = bilinear_form(L, L + Rational(2) * rho(L.sig));
    return QFraction(qpow(tilde ? e : Rational(-e)));
}

inline QFraction chi_C1(const Weight& L, bool tilde, C1TildeForm form = C1TildeForm::plus_rho0)
{
    const Signature s = L.sig;
    const Weight r = rho(s);
    auto [r0, r1] = rho_even_odd(s);
    HalfLaurent tot;
    for (int i = 1; i <= s.d(); ++i) {
        const int p = parity(s, i);
        Rational e, x;
        if (!tilde) {
            e = p * (L[i] + 2 * r[i]);
            x = p * L[i];
        } else {
            const int sg = form == C1TildeForm::plus_rho0 ? 1 : -1;
            e = p * (L[i] + sg * 2 * r0[i]);
            x = p * (L[i] - 2 * r1[i]);
        }
        if (x.get_den() != 1) throw Error(Errc::NonIntegralWeight, "q-number of a non-integer");
        tot += (qpow(-e) * qnum(x.get_num().get_si())).mul_term(0, Rational(p));
    }
    return QFraction(tot);
}

} // namespace qwig
