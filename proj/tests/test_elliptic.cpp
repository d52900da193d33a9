#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vff/elliptic.hpp"

using namespace vff;
using Q = Rational;
using PolyQ = Polynomial<Q>;
using PtQ = CurvePoint<Q>;

namespace {

std::mt19937_64 rng(90210u);

Q random_rational() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    return Q(num(rng), den(rng));
}

RF random_rf() {
    std::uniform_int_distribution<int> deg(0, 1);
    std::uniform_int_distribution<long> small(-3, 3);
    auto poly = [&](int d) {
        std::vector<Q> c;
        for (int i = 0; i <= d; ++i) c.push_back(Q(small(rng)));
        return PolyQ(std::move(c));
    };
    PolyQ den = poly(deg(rng));
    while (den.is_zero()) den = poly(deg(rng));
    return RF(poly(deg(rng)), den);
}

/// Fits y^2 = x^3 + a2 x^2 + a4 x + a6 through three points with distinct x
/// by solving the linear system for (a2, a4, a6); a standard way to sample
/// random points that actually lie on a common curve.
template <class F>
std::optional<WeierstrassCurve<F>> curve_through(const std::array<F, 3>& xs,
                                                 const std::array<F, 3>& ys) {
    // Cramer on the Vandermonde-like system a2 x^2 + a4 x + a6 = y^2 - x^3
    auto det3 = [](const std::array<std::array<F, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::array<std::array<F, 3>, 3> A;
    std::array<F, 3> b{F(0), F(0), F(0)};
    for (int i = 0; i < 3; ++i) {
        A[i] = {xs[i] * xs[i], xs[i], F(1)};
        b[i] = ys[i] * ys[i] - xs[i] * xs[i] * xs[i];
    }
    F det = det3(A);
    if (is_negligible(det)) return std::nullopt;
    std::array<F, 3> coef;
    for (int j = 0; j < 3; ++j) {
        auto M = A;
        for (int i = 0; i < 3; ++i) M[i][j] = b[i];
        coef[j] = det3(M) / det;
    }
    WeierstrassCurve<F> c{coef[0], coef[1], coef[2]};
    if (!c.is_nonsingular()) return std::nullopt;
    return c;
}

const WeierstrassCurve<Q> kCurve = make_curve(Q(0), Q(1), Q(1));   // y^2 = x^3 + x + 1
const WeierstrassCurve<Q> kCurveX3p1 = make_curve(Q(0), Q(0), Q(1));  // y^2 = x^3 + 1

}  // namespace

TEST_CASE("group law on y^2 = x^3 + 1: doubling and chord examples") {
    PtQ p = PtQ::affine(Q(2), Q(3));
    REQUIRE(on_curve(kCurveX3p1, p));

    // hand duplication: slope 2, x3 = 0, y3 = 1
    PtQ dbl = ec_add(kCurveX3p1, p, p);
    CHECK(dbl.x == Q(0));
    CHECK(dbl.y == Q(1));
    CHECK(on_curve(kCurveX3p1, dbl));

    // chord: (2,3) + (0,1) = (-1, 0), a point of order 2
    PtQ s = ec_add(kCurveX3p1, p, PtQ::affine(Q(0), Q(1)));
    CHECK(s.x == Q(-1));
    CHECK(s.y == Q(0));
    CHECK(ec_add(kCurveX3p1, s, s).infinity);

    // identity and inverses
    CHECK(ec_add(kCurveX3p1, p, PtQ::at_infinity()).x == p.x);
    CHECK(ec_add(kCurveX3p1, p, ec_neg(p)).infinity);

    CHECK_THROWS_AS(ec_add(kCurveX3p1, PtQ::affine(Q(5), Q(5)), p), PointNotOnCurve);
}

TEST_CASE("scalar_mul: 0, negatives, equivalence with repeated addition") {
    PtQ p = PtQ::affine(Q(2), Q(3));
    CHECK(scalar_mul(kCurveX3p1, 0, p).infinity);

    PtQ triple = scalar_mul(kCurveX3p1, 3, p);
    CHECK(triple.x == Q(-1));
    CHECK(triple.y == Q(0));

    PtQ acc = PtQ::at_infinity();
    for (long n = 1; n <= 8; ++n) {
        acc = ec_add(kCurveX3p1, acc, p);
        PtQ viaScalar = scalar_mul(kCurveX3p1, n, p);
        CHECK(viaScalar.infinity == acc.infinity);
        if (!acc.infinity) {
            CHECK(viaScalar.x == acc.x);
            CHECK(viaScalar.y == acc.y);
        }
        PtQ neg = scalar_mul(kCurveX3p1, -n, p);
        PtQ negAcc = ec_neg(acc);
        CHECK(neg.infinity == negAcc.infinity);
        if (!neg.infinity) CHECK(neg.y == negAcc.y);
    }
}

TEST_CASE("group axioms over Q on random curves through random points") {
    int done = 0;
    while (done < 30) {
        std::array<Q, 3> xs{random_rational(), random_rational(), random_rational()};
        std::array<Q, 3> ys{random_rational(), random_rational(), random_rational()};
        if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2]) continue;
        auto curve = curve_through<Q>(xs, ys);
        if (!curve) continue;
        ++done;
        PtQ p = PtQ::affine(xs[0], ys[0]), q = PtQ::affine(xs[1], ys[1]),
            r = PtQ::affine(xs[2], ys[2]);
        REQUIRE(on_curve(*curve, p));
        REQUIRE(on_curve(*curve, q));
        REQUIRE(on_curve(*curve, r));

        // commutativity
        PtQ pq = ec_add(*curve, p, q), qp = ec_add(*curve, q, p);
        CHECK(pq.infinity == qp.infinity);
        if (!pq.infinity) {
            CHECK(pq.x == qp.x);
            CHECK(pq.y == qp.y);
        }
        // associativity
        PtQ l = ec_add(*curve, ec_add(*curve, p, q), r);
        PtQ rr = ec_add(*curve, p, ec_add(*curve, q, r));
        CHECK(l.infinity == rr.infinity);
        if (!l.infinity) {
            CHECK(l.x == rr.x);
            CHECK(l.y == rr.y);
        }
    }
}

TEST_CASE("group axioms over Q(Z) on random curves") {
    int done = 0;
    while (done < 30) {
        std::array<RF, 3> xs{random_rf(), random_rf(), random_rf()};
        std::array<RF, 3> ys{random_rf(), random_rf(), random_rf()};
        if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2]) continue;
        auto curve = curve_through<RF>(xs, ys);
        if (!curve) continue;
        ++done;
        auto p = CurvePoint<RF>::affine(xs[0], ys[0]);
        auto q = CurvePoint<RF>::affine(xs[1], ys[1]);
        auto r = CurvePoint<RF>::affine(xs[2], ys[2]);
        auto l = ec_add(*curve, ec_add(*curve, p, q), r);
        auto rr = ec_add(*curve, p, ec_add(*curve, q, r));
        CHECK(l.infinity == rr.infinity);
        if (!l.infinity) {
            CHECK(l.x == rr.x);
            CHECK(l.y == rr.y);
        }
    }
}

TEST_CASE("two_torsion") {
    // f = X^3 - 1 factors as (X-1)(X^2+X+1): torsion {inf, (1,0)}
    auto t1 = two_torsion(make_curve(Q(0), Q(0), Q(-1)));
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].infinity);
    CHECK(t1[1].x == Q(1));
    CHECK(t1[1].y == Q(0));

    // f = X^3 + X + 1 has no rational roots
    auto t2 = two_torsion(kCurve);
    CHECK(t2.size() == 1);
    CHECK(t2[0].infinity);

    // every affine 2-torsion point doubles to infinity
    auto curve3 = make_curve(Q(0), Q(-1), Q(0));  // x^3 - x = x(x-1)(x+1)
    auto t3 = two_torsion(curve3);
    CHECK(t3.size() == 4);
    for (const auto& p : t3)
        if (!p.infinity) CHECK(ec_add(curve3, p, p).infinity);
}

TEST_CASE("twist_multiples: identity, duplication oracle, negation") {
    auto [x1, y1] = twist_multiples(kCurve, 1);
    CHECK(x1 == RF::variable());
    CHECK(y1 == RF(1));

    auto [xm1, ym1] = twist_multiples(kCurve, -1);
    CHECK(xm1 == RF::variable());
    CHECK(ym1 == RF(-1));

    // independent duplication oracle for f = X^3 + X + 1:
    // X_2 = (((3Z^2+1)/2)^2 - 2 Z f(Z)) / f(Z)
    RF z = RF::variable();
    RF fz = z * z * z + z + RF(1);
    RF slope = (RF(3) * z * z + RF(1)) / RF(2);
    RF x2_oracle = (slope * slope - RF(2) * z * fz) / fz;
    auto [x2, y2] = twist_multiples(kCurve, 2);
    CHECK(x2 == x2_oracle);
    CHECK(x2 == RF(PolyQ({Q(1), Q(-8), Q(-2), Q(0), Q(1)}), PolyQ({Q(4), Q(4), Q(0), Q(4)})));

    CHECK_THROWS_AS(twist_multiples(kCurve, 0), ZeroMultiple);

    // twist identity f(Z) Y_n^2 = f(X_n) exactly, 1 <= n <= 6
    auto fofx = [&](const RF& x) {
        return kCurve.cubic().map<RF>([](const Q& c) { return RF(c); })(x);
    };
    for (long n = 1; n <= 6; ++n) {
        auto [xn, yn] = twist_multiples(kCurve, n);
        CHECK(fz * yn * yn == fofx(xn));
    }
}

TEST_CASE("asymptotics of X_n and Y_n at infinity") {
    // X_1 - Z = 0 is trivially O(Z^0)
    auto r1 = asymptotics_check(kCurve, 1);
    CHECK(r1.pass);

    // leading coefficient of X_2 is 1/4: X_2 - Z/4 = O(Z^0)
    auto r2 = asymptotics_check(kCurve, 2);
    CHECK(r2.pass);
    auto [x2, y2] = twist_multiples(kCurve, 2);
    CHECK(x2.num().leading() / x2.den().leading() == Q(1, 4));

    // leading coefficient of Y_3 is 1/27
    auto [x3, y3] = twist_multiples(kCurve, 3);
    CHECK(y3.num().leading() / y3.den().leading() == Q(1, 27));
    CHECK(y3.num().degree() == y3.den().degree());

    for (long n = 1; n <= 6; ++n) {
        CHECK(asymptotics_check(kCurve, n).pass);
        CHECK(asymptotics_check(kCurve, -n).pass);
    }
}

TEST_CASE("cusp reduction: residue of X'/Y' at Z^-1 equals n") {
    CHECK(cusp_reduction_check(kCurve, 1).residue == Q(1));
    CHECK(cusp_reduction_check(kCurve, 2).residue == Q(2));
    CHECK(cusp_reduction_check(kCurve, -3).residue == Q(-3));
    for (long n = 1; n <= 6; ++n) {
        CHECK(cusp_reduction_check(kCurve, n).pass);
        CHECK(cusp_reduction_check(kCurve, -n).pass);
    }
}

TEST_CASE("twist_action: identity, consistency with scalar_mul, poles") {
    PtQ p = PtQ::affine(Q(0), Q(1));  // on y^2 = x^3 + x + 1
    REQUIRE(on_curve(kCurve, p));

    // identity (Z, 1) acts trivially
    auto id = twist_action(kCurve, RF::variable(), RF(1), p);
    CHECK(id.x == p.x);
    CHECK(id.y == p.y);

    // (X_2, Y_2) acts as multiplication by 2 on sample points
    auto [x2, y2] = twist_multiples(kCurve, 2);
    for (const auto& pt : {PtQ::affine(Q(0), Q(1)), PtQ::affine(Q(0), Q(-1)),
                           PtQ::affine(Q(72), Q(611))}) {
        REQUIRE(on_curve(kCurve, pt));
        auto acted = twist_action(kCurve, x2, y2, pt);
        auto doubled = scalar_mul(kCurve, 2, pt);
        CHECK(acted.x == doubled.x);
        CHECK(acted.y == doubled.y);
    }

    // action at a pole of X_2: on y^2 = x^3 + 1 the 2-torsion x = -1 is a
    // pole of X_2 (denominator 4 f(Z))
    auto [px2, py2] = twist_multiples(kCurveX3p1, 2);
    CHECK_THROWS_AS(twist_action(kCurveX3p1, px2, py2, PtQ::affine(Q(-1), Q(0))), PoleAtPoint);

    // a pair that is not on the twist is rejected
    CHECK_THROWS_AS(twist_action(kCurve, RF::variable(), RF::variable(), p), PointNotOnCurve);
}

TEST_CASE("twist action composes like the twist group") {
    auto [x2, y2] = twist_multiples(kCurve, 2);
    auto [x3, y3] = twist_multiples(kCurve, 3);
    auto [x5, y5] = twist_multiples(kCurve, 5);
    auto sum = twist_add(kCurve, {x2, y2}, {x3, y3});
    CHECK(sum.first == x5);
    CHECK(sum.second == y5);

    // the action intertwines the twist-group sum with addition on E:
    // act_2(P) + act_3(P) = act_{2 (+) 3}(P) at sample points
    PtQ p = PtQ::affine(Q(0), Q(1));
    auto two = twist_action(kCurve, x2, y2, p);
    auto three = twist_action(kCurve, x3, y3, p);
    auto by5 = twist_action(kCurve, x5, y5, p);
    auto added = ec_add(kCurve, two, three);
    CHECK(added.x == by5.x);
    CHECK(added.y == by5.y);

    // composing the actions multiplies the indices: act_3(act_2(P)) = act_6(P)
    auto [x6, y6] = twist_multiples(kCurve, 6);
    auto composed = twist_action(kCurve, x3, y3, two);
    auto by6 = twist_action(kCurve, x6, y6, p);
    CHECK(composed.x == by6.x);
    CHECK(composed.y == by6.y);
}
