#pragma once

#include <algorithm>

#include "vff/errors.hpp"
#include "vff/laurent_series.hpp"
#include "vff/polynomial.hpp"
#include "vff/rational.hpp"

namespace vff {

/// Square root in the coefficient field, used for the leading term of series
/// square roots. For Q this is the exact square root; for nested series it
/// recurses into sqrt_lift with the canonical (+) branch.
inline Rational field_sqrt(const Rational& x) {
    auto r = x.sqrt();
    if (!r) throw NonSquareResidue("field_sqrt: not a square in Q");
    return *r;
}

template <class F>
LaurentSeries<F> sqrt_lift(const LaurentSeries<F>& u, int sign_choice, long target_prec);

template <class F>
LaurentSeries<F> field_sqrt(const LaurentSeries<F>& x) {
    return sqrt_lift(x, +1, x.precision());
}

/// Square root of a series with even leading exponent and square leading
/// coefficient, by Newton iteration r <- (r + u/r)/2. The result r satisfies
/// r^2 = u to target_prec and its leading coefficient is sign_choice times
/// the canonical square root of the leading coefficient of u.
template <class F>
LaurentSeries<F> sqrt_lift(const LaurentSeries<F>& u, int sign_choice, long target_prec) {
    using LS = LaurentSeries<F>;
    if (u.is_zero_to_precision()) {
        if (u.is_exact()) throw ZeroInput("sqrt_lift: square root of zero");
        throw InsufficientPrecision("sqrt_lift: operand is zero to precision");
    }
    long e = u.ord();
    if (e % 2 != 0) throw OddLeadingExponent("sqrt_lift: odd leading exponent");
    F lead_root = field_sqrt(u.leading_coeff());
    if (sign_choice < 0) lead_root = -lead_root;

    if (u.term_count() == 1 && u.is_exact())
        return LS::monomial(lead_root, e / 2);

    if (target_prec >= LS::kExact)
        throw InsufficientPrecision("sqrt_lift: multi-term square root needs a finite target");
    if (u.precision() < target_prec)
        throw InsufficientPrecision("sqrt_lift: operand precision below target");

    // Normalize to a unit v = u / x^e, take its sqrt to relative precision
    // target - e, shift back by e/2; then r^2 = u holds modulo x^target.
    long rel = target_prec - e;
    if (rel < 1) throw InsufficientPrecision("sqrt_lift: target below leading exponent");
    LS v = u.shifted(-e).truncated(rel);
    LS r = LS::monomial(lead_root, 0, 1);
    LS half = LS::constant_term(F(1) / F(2));
    long cur = 1;
    while (cur < rel) {
        cur = std::min(2 * cur, rel);
        LS rc = r.widened_to(cur);
        r = half * (rc + v.truncated(cur) / rc);
    }
    return r.shifted(e / 2);
}

/// Lifts a simple residue root alpha of P (coefficients in the valuation ring
/// of a truncated-series field) to a series root, by Newton iteration with
/// quadratic precision doubling. P(result) = 0 to target_prec and
/// result = alpha mod the maximal ideal.
template <class F>
LaurentSeries<F> hensel_lift_root(const Polynomial<LaurentSeries<F>>& P, const F& alpha,
                                  long target_prec) {
    using LS = LaurentSeries<F>;
    if (P.is_zero()) throw ZeroInput("hensel_lift_root: zero polynomial");

    // Reduction of P modulo the maximal ideal (x), with the valuation-ring check.
    Polynomial<F> Pbar = P.template map<F>([](const LS& c) {
        if (c.is_zero_to_precision()) return F(0);
        if (c.ord() < 0)
            throw NegativeValue("hensel_lift_root: coefficient outside the valuation ring");
        return c.ord() == 0 ? c.leading_coeff() : F(0);
    });
    if (!is_negligible(Pbar(alpha)))
        throw NotARoot("hensel_lift_root: alpha is not a residue root");
    F dbar = Pbar.derivative()(alpha);
    if (is_negligible(dbar))
        throw NotSimpleRoot("hensel_lift_root: residue root is not simple");

    Polynomial<LS> Pd = P.derivative();
    LS beta = LS::constant_term(alpha, 1);
    long cur = 1;
    while (cur < target_prec) {
        cur = std::min(2 * cur, target_prec);
        LS b = beta.widened_to(cur);
        LS val = eval_truncated(P, b, cur);
        LS der = eval_truncated(Pd, b, cur);
        beta = b - val / der;
    }
    return beta;
}

/// Horner evaluation of a series-coefficient polynomial, truncating every
/// intermediate to the working precision.
template <class F>
LaurentSeries<F> eval_truncated(const Polynomial<LaurentSeries<F>>& P, const LaurentSeries<F>& x,
                                long prec) {
    using LS = LaurentSeries<F>;
    LS acc = LS::zero_to(prec);
    for (int i = P.degree(); i >= 0; --i) acc = (acc * x + P.coeff(i)).truncated(prec);
    return acc;
}

}  // namespace vff
