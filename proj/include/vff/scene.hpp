#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "vff/biquadratic.hpp"
#include "vff/elliptic.hpp"
#include "vff/errors.hpp"
#include "vff/hensel.hpp"
#include "vff/laurent_series.hpp"
#include "vff/quadratic_form.hpp"
#include "vff/valuations.hpp"

namespace vff {

using LSQ = LaurentSeries<Rational>;
/// Exact rational functions in T; every coefficient the scene produces lives
/// here, inside Q((T)).
using QT = RationalFunction<Rational>;
/// The base field of the biquadratic tower: rational functions in Z over
/// Q(T). Exact, so the tower group law cancels exactly; truncated Laurent
/// series enter once, at the expansion boundary of the ledger.
using TB = RationalFunction<QT>;
/// Laurent series in (Z - gamma) whose coefficients are T-series.
using EpsSeries = LaurentSeries<LSQ>;
using Tower = BiquadraticElement<TB>;
using TowerRef = std::shared_ptr<const BiquadraticTower<TB>>;

/// Affine-or-infinity point with coordinates in the biquadratic tower.
struct TowerPoint {
    bool infinity = true;
    std::optional<Tower> x, y;

    static TowerPoint at_infinity() { return TowerPoint{}; }
    static TowerPoint affine(Tower px, Tower py) {
        return TowerPoint{false, std::move(px), std::move(py)};
    }
};

/// The concrete divisibility scene: the curve over Q, the substitutions
/// A = (T^-2 + lambda) Z and B = T^-2 + lambda Z, and the points
/// P1 = (A, s1), P2 = (B, s2) on E over the tower with s1^2 = f(A),
/// s2^2 = f(B).
class Scene {
public:
    Scene(WeierstrassCurve<Rational> curve, Rational lambda, long t_precision, long z_precision,
          long work_precision);

    const WeierstrassCurve<Rational>& base() const { return base_; }
    const Rational& lambda() const { return lambda_; }
    long t_precision() const { return t_precision_; }
    long z_precision() const { return z_precision_; }
    long work_precision() const { return work_precision_; }
    const TowerRef& tower() const { return tower_; }

    const TB& A() const { return A_; }
    const TB& B() const { return B_; }
    TowerPoint P1() const { return TowerPoint::affine(base_element(A_), s1()); }
    TowerPoint P2() const { return TowerPoint::affine(base_element(B_), s2()); }

    Tower base_element(TB v) const { return Tower::scalar(tower_, std::move(v)); }
    Tower scalar(const Rational& c) const { return base_element(embed(c)); }
    Tower s1() const { return Tower::s1(tower_); }
    Tower s2() const { return Tower::s2(tower_); }

    /// Embeds an exact rational constant into the tower base field.
    static TB embed(const Rational& c) { return TB(QT(c)); }

    /// f evaluated in the tower base field.
    TB f_of(const TB& x) const {
        return base_.cubic().map<TB>([](const Rational& c) { return embed(c); })(x);
    }

    /// Group law on E over the tower (chord/tangent with tower division).
    TowerPoint add(const TowerPoint& p, const TowerPoint& q) const;
    TowerPoint negate(const TowerPoint& p) const;
    TowerPoint scalar_multiple(long n, const TowerPoint& p) const;

    /// n P1 + r P2 computed by the tower group law (cached per scene).
    const TowerPoint& combo_point(long n, long r) const;

    /// y(n P1 + r P2); PointAtInfinity when the combination degenerates.
    Tower combo_y(long n, long r) const;

    /// y(P)^2 - f(x(P)); exactly zero for every computed point.
    Tower curve_defect(const TowerPoint& p) const;

private:
    WeierstrassCurve<Rational> base_;
    Rational lambda_;
    long t_precision_, z_precision_, work_precision_;
    TB A_, B_;
    TowerRef tower_;  // s1^2 = f(A), s2^2 = f(B)
    mutable std::map<std::pair<long, long>, TowerPoint> combo_cache_;
};

/// Scene construction with the spec defaults. Validates lambda != 0, a6 != 0
/// and nonsingularity.
Scene build_scene(const WeierstrassCurve<Rational>& curve, const Rational& lambda,
                  long t_precision = 12, long z_precision = 8);

/// The divisibility form <1, y(m P1 + P2)> x <1, y(n P1 + r P2)> x Q for an
/// anisotropic residue form Q with rational entries; 4 dim(Q) entries.
DiagonalForm<Tower> div_form(const Scene& scene, long m, long n, long r,
                             const DiagonalForm<Rational>& q);

struct GPolynomial {
    Polynomial<QT> g;            // exact, coefficients in the valuation ring
    long d = 0;                  // degree of the normalized numerator R_m
    Polynomial<Rational> mod_t;  // reduction modulo T (expect Z^d - m^2 Z^{d-1})
};

/// G(Z) = T^{2d} R_m(A) - T^{2d} S_m(A) B with the leading-term
/// normalization R_m = xi^d + ..., S_m = m^2 xi^{d-1} + ...; exact
/// computation over Q(T) plus the certified mod-T reduction.
GPolynomial g_polynomial(const Scene& scene, long m);

/// The Hensel root gamma of G with gamma = m^2 mod T, lifted to the scene's
/// working precision.
LSQ hensel_gamma(const Scene& scene, long m);

struct WLedgerReport {
    long m = 0;
    long t_precision = 0, z_precision = 0, work_precision = 0;
    int sign_branch = +1;  // sign chosen for sqrt(f(B)) so that the points reduce to opposites
    long x_equiv_order = 0;                              // order of X_m(A) - B at gamma; claim 1
    long y_equiv_order = 0;                              // order of Y_m(A) s1 - s2; claim 0
    long x_p3_order = 0;                                 // claim -2
    long y_p3_order = 0;                                 // claim -3
    std::vector<std::tuple<long, long, long>> pair_orders;  // (s, r, order); claim 0
    bool minus3_odd = false, minus2_even = false;

    bool pass() const {
        bool ok = x_equiv_order == 1 && y_equiv_order == 0 && x_p3_order == -2 &&
                  y_p3_order == -3 && minus3_odd && minus2_even;
        for (const auto& [s, r, order] : pair_orders) ok = ok && order == 0;
        return ok;
    }
};

/// The valuation ledger of the divisibility proof: expands every needed
/// quantity as a Laurent series in (Z - gamma) with T-series coefficients and
/// reports the exact orders, choosing the sign of sqrt(f(B)) that makes
/// m P1 and P2 reduce to opposite points. Escalates the internal T-precision
/// on InsufficientPrecision.
WLedgerReport w_ledger(const Scene& scene, long m,
                       const std::vector<std::pair<long, long>>& pairs);

}  // namespace vff
