#include "vff/elliptic.hpp"

#include <algorithm>

namespace vff {

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            out.push_back(d);
            mpz_class q = a / d;
            if (q != d) out.push_back(q);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw ZeroInput("rational_roots: zero polynomial");
    // clear denominators to an integer polynomial
    mpz_class l(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : p.coeffs()) ic.push_back(c.num() * (l / c.den()));

    std::vector<Rational> roots;
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;  // strip x^k: 0 is a root
    if (low > 0) roots.push_back(Rational(0));
    if (low >= ic.size() - 1 && ic.size() - low <= 1) return roots;

    const mpz_class& c0 = ic[low];
    const mpz_class& lead = ic.back();
    std::set<Rational> found;
    for (const auto& num : divisors(c0))
        for (const auto& den : divisors(lead)) {
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (found.count(cand)) continue;
                if (p(cand).is_zero()) found.insert(cand);
            }
        }
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

std::pair<RF, RF> twist_multiples(const WeierstrassCurve<Rational>& curve, long n) {
    if (n == 0) throw ZeroMultiple("twist_multiples: n = 0 is the point at infinity");
    if (!curve.is_nonsingular()) throw SingularCurve("twist_multiples: singular curve");

    RF z = RF::variable();
    RF d = RF(curve.cubic().map<RF>([](const Rational& c) { return RF(c); })(z));
    TwistData<RF> twist{curve, d};
    WeierstrassCurve<RF> model = twist.model();

    // (Z, 1) on the twist corresponds to (dZ, d^2) on the model
    CurvePoint<RF> p0 = CurvePoint<RF>::affine(d * z, d * d);
    CurvePoint<RF> pn = scalar_mul(model, n, p0);
    if (pn.infinity) throw ZeroMultiple("twist_multiples: multiple is the point at infinity");
    return {pn.x / d, pn.y / (d * d)};
}

AsymptoticsReport asymptotics_check(const WeierstrassCurve<Rational>& curve, long n) {
    auto [xn, yn] = twist_multiples(curve, n);
    Rational n2(n * n), n3(n * n * n);
    RF z = RF::variable();
    RF dx = xn - z / RF(n2);
    RF dy = yn - RF(Rational(1) / n3);
    AsymptoticsReport r;
    r.n = n;
    // the zero function is O(Z^0) and O(Z^-1) alike; use a large stand-in order
    r.x_order = dx.is_zero() ? 1000 : dx.order_at_infinity();
    r.y_order = dy.is_zero() ? 1000 : dy.order_at_infinity();
    r.pass = r.x_order >= 0 && r.y_order >= 1;
    return r;
}

CuspReport cusp_reduction_check(const WeierstrassCurve<Rational>& curve, long n) {
    auto [xn, yn] = twist_multiples(curve, n);
    RF z = RF::variable();
    RF d = RF(curve.cubic().map<RF>([](const Rational& c) { return RF(c); })(z));
    RF xp = z * z * xn / d;
    RF yp = z * z * z * yn / d;
    RF ratio = xp / yp;
    CuspReport r;
    r.n = n;
    r.residue = ratio.residue_at_infinity();
    r.pass = r.residue == Rational(n);
    return r;
}

CurvePoint<Rational> twist_action(const WeierstrassCurve<Rational>& curve, const RF& X, const RF& Y,
                                  const CurvePoint<Rational>& p) {
    // the pair must satisfy f(Z) Y^2 = f(X) identically
    RF z = RF::variable();
    RF d = RF(curve.cubic().map<RF>([](const Rational& c) { return RF(c); })(z));
    RF fX = curve.cubic().map<RF>([](const Rational& c) { return RF(c); })(X);
    if (d * Y * Y != fX) throw PointNotOnCurve("twist_action: pair not on the twist");
    if (!on_curve(curve, p)) throw PointNotOnCurve("twist_action: point not on base curve");
    if (p.infinity) throw PoleAtPoint("twist_action: action is defined on affine points");
    if (X.has_pole_at(p.x) || Y.has_pole_at(p.x))
        throw PoleAtPoint("twist_action: X or Y has a pole at x(P)");
    auto out = CurvePoint<Rational>::affine(X(p.x), Y(p.x) * p.y);
    if (!on_curve(curve, out)) throw PointNotOnCurve("twist_action: image not on curve");
    return out;
}

std::pair<RF, RF> twist_add(const WeierstrassCurve<Rational>& curve, const std::pair<RF, RF>& a,
                            const std::pair<RF, RF>& b) {
    RF z = RF::variable();
    RF d = RF(curve.cubic().map<RF>([](const Rational& c) { return RF(c); })(z));
    TwistData<RF> twist{curve, d};
    WeierstrassCurve<RF> model = twist.model();
    auto pa = CurvePoint<RF>::affine(d * a.first, d * d * a.second);
    auto pb = CurvePoint<RF>::affine(d * b.first, d * d * b.second);
    CurvePoint<RF> s = ec_add(model, pa, pb);
    if (s.infinity) throw PointAtInfinity("twist_add: sum is the point at infinity");
    return {s.x / d, s.y / (d * d)};
}

}  // namespace vff
