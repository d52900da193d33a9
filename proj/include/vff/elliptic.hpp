#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/polynomial.hpp"
#include "vff/rational.hpp"
#include "vff/rational_function.hpp"

namespace vff {

/// Short-ish Weierstrass curve y^2 = x^3 + a2 x^2 + a4 x + a6 over F.
/// The cubic must have simple zeros (nonzero discriminant).
template <class F>
struct WeierstrassCurve {
    F a2, a4, a6;

    Polynomial<F> cubic() const {
        return Polynomial<F>(std::vector<F>{a6, a4, a2, F(1)});
    }
    F f(const F& x) const { return ((x + a2) * x + a4) * x + a6; }

    /// Discriminant of the cubic x^3 + a2 x^2 + a4 x + a6.
    F cubic_discriminant() const {
        F c18(18), c4(4), c27(27);
        return c18 * a2 * a4 * a6 - c4 * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 -
               c4 * a4 * a4 * a4 - c27 * a6 * a6;
    }
    bool is_nonsingular() const { return !is_negligible(cubic_discriminant()); }
};

template <class F>
WeierstrassCurve<F> make_curve(F a2, F a4, F a6) {
    WeierstrassCurve<F> c{std::move(a2), std::move(a4), std::move(a6)};
    if (!c.is_nonsingular()) throw SingularCurve("make_curve: cubic has a multiple zero");
    return c;
}

/// Lifts a curve over Q into any field with an embedding of Q.
template <class F, class Fn>
WeierstrassCurve<F> map_curve(const WeierstrassCurve<Rational>& c, Fn&& embed) {
    return WeierstrassCurve<F>{embed(c.a2), embed(c.a4), embed(c.a6)};
}

/// Affine point or the point at infinity (the group identity).
template <class F>
struct CurvePoint {
    bool infinity = true;
    F x = F(0), y = F(0);

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(F px, F py) { return CurvePoint{false, std::move(px), std::move(py)}; }
};

template <class F>
bool on_curve(const WeierstrassCurve<F>& c, const CurvePoint<F>& p) {
    if (p.infinity) return true;
    return is_negligible(p.y * p.y - c.f(p.x));
}

template <class F>
CurvePoint<F> ec_neg(const CurvePoint<F>& p) {
    if (p.infinity) return p;
    return CurvePoint<F>::affine(p.x, -p.y);
}

namespace detail {

/// Group law without the on-curve validation (callers validated already).
template <class F>
CurvePoint<F> ec_add_raw(const WeierstrassCurve<F>& c, const CurvePoint<F>& p,
                         const CurvePoint<F>& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F slope(0);
    if (is_negligible(p.x - q.x)) {
        if (is_negligible(p.y + q.y)) return CurvePoint<F>::at_infinity();
        // tangent: (3x^2 + 2 a2 x + a4) / (2y)
        slope = (F(3) * p.x * p.x + F(2) * c.a2 * p.x + c.a4) / (F(2) * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    F x3 = slope * slope - c.a2 - p.x - q.x;
    F y3 = slope * (p.x - x3) - p.y;
    return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

}  // namespace detail

template <class F>
CurvePoint<F> ec_add(const WeierstrassCurve<F>& c, const CurvePoint<F>& p, const CurvePoint<F>& q) {
    if (!on_curve(c, p) || !on_curve(c, q)) throw PointNotOnCurve("ec_add: input not on curve");
    return detail::ec_add_raw(c, p, q);
}

/// n-fold multiple by double-and-add; n = 0 gives infinity, negative n negates.
template <class F>
CurvePoint<F> scalar_mul(const WeierstrassCurve<F>& c, long n, const CurvePoint<F>& p) {
    if (!on_curve(c, p)) throw PointNotOnCurve("scalar_mul: input not on curve");
    CurvePoint<F> base = n < 0 ? ec_neg(p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint<F> acc = CurvePoint<F>::at_infinity();
    while (k) {
        if (k & 1ul) acc = detail::ec_add_raw(c, acc, base);
        k >>= 1ul;
        if (k) base = detail::ec_add_raw(c, base, base);
    }
    return acc;
}

/// Rational roots of a Q-coefficient polynomial, by the rational root test
/// after clearing denominators.
std::vector<Rational> rational_roots(const Polynomial<Rational>& p);

/// The K-rational points of order dividing 2: infinity plus (r, 0) for each
/// rational root r of the cubic.
inline std::vector<CurvePoint<Rational>> two_torsion(const WeierstrassCurve<Rational>& c) {
    std::vector<CurvePoint<Rational>> out{CurvePoint<Rational>::at_infinity()};
    for (const Rational& r : rational_roots(c.cubic()))
        out.push_back(CurvePoint<Rational>::affine(r, Rational(0)));
    return out;
}

/// The quadratic twist d y^2 = f(x) of the base curve, presented through its
/// Weierstrass model y^2 = x^3 + a2 d x^2 + a4 d^2 x + a6 d^3 via
/// (X, Y) -> (dX, d^2 Y).
template <class F>
struct TwistData {
    WeierstrassCurve<Rational> base;
    F twist_scalar;

    WeierstrassCurve<F> model() const {
        const F& d = twist_scalar;
        return WeierstrassCurve<F>{F(base.a2) * d, F(base.a4) * d * d, F(base.a6) * d * d * d};
    }
};

using RF = RationalFunction<Rational>;

/// Coordinates (X_n, Y_n) of n*(Z,1) on the twist f(Z) Y^2 = f(X) over Q(Z),
/// as exact rational functions of Z.
std::pair<RF, RF> twist_multiples(const WeierstrassCurve<Rational>& curve, long n);

struct AsymptoticsReport {
    long n = 0;
    int x_order = 0;  // order at infinity of X_n - Z/n^2 (claim: >= 0)
    int y_order = 0;  // order at infinity of Y_n - 1/n^3 (claim: >= 1)
    bool pass = false;
};

/// Checks X_n = Z/n^2 + O(Z^0) and Y_n = 1/n^3 + O(Z^-1) exactly.
AsymptoticsReport asymptotics_check(const WeierstrassCurve<Rational>& curve, long n);

struct CuspReport {
    long n = 0;
    Rational residue;  // residue of X'_n / Y'_n at Z^-1 (claim: = n)
    bool pass = false;
};

/// With X' = Z^2 X_n / f(Z) and Y' = Z^3 Y_n / f(Z), the reduction modulo
/// Z^-1 lands on the cusp, where the group law is additive: the residue of
/// X'/Y' equals n.
CuspReport cusp_reduction_check(const WeierstrassCurve<Rational>& curve, long n);

/// Action of a twist point (X, Y) on E(Q): (x, y) -> (X(x), Y(x) y).
CurvePoint<Rational> twist_action(const WeierstrassCurve<Rational>& curve, const RF& X, const RF& Y,
                                  const CurvePoint<Rational>& p);

/// Group law on the twist f(Z) Y^2 = f(X) over Q(Z), through the Weierstrass
/// model of TwistData.
std::pair<RF, RF> twist_add(const WeierstrassCurve<Rational>& curve, const std::pair<RF, RF>& a,
                            const std::pair<RF, RF>& b);

}  // namespace vff
