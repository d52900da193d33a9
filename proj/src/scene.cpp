#include "vff/scene.hpp"

#include <algorithm>

namespace vff {

namespace {

/// X_m and Y_m over Q composed with a tower base element.
TB compose_rf(const RF& f, const TB& at) {
    auto embed = [](const Rational& c) { return Scene::embed(c); };
    TB num = f.num().map<TB>(embed)(at);
    TB den = f.den().map<TB>(embed)(at);
    return num / den;
}

QT qt_monomial(const Rational& c, long e) {
    using PolyQ = Polynomial<Rational>;
    if (e >= 0) return QT(PolyQ::monomial(c, static_cast<int>(e)));
    return QT(PolyQ(c), PolyQ::monomial(Rational(1), static_cast<int>(-e)));
}

/// T-order of an exact element of Q(T).
long qt_order(const QT& c) {
    auto ord = [](const Polynomial<Rational>& p) {
        for (int i = 0; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero()) return static_cast<long>(i);
        throw ZeroInput("qt_order: zero polynomial");
    };
    return ord(c.num()) - ord(c.den());
}

/// T-adic expansion of an exact element of Q(T) to the given precision.
LSQ qt_to_series(const QT& c, long prec) {
    auto series_of = [&](const Polynomial<Rational>& p) {
        return LSQ::from_coeffs(0, p.coeffs(), LSQ::kExact);
    };
    if (c.is_zero()) return LSQ::zero_to(prec);
    LSQ num = series_of(c.num());
    LSQ den = series_of(c.den());
    long shift = qt_order(c);
    LSQ num_unit = num.shifted(-num.ord()).truncated(prec - shift + 1);
    LSQ den_unit = den.shifted(-den.ord()).truncated(prec - shift + 1);
    return (num_unit / den_unit).shifted(shift).truncated(prec);
}

}  // namespace

Scene::Scene(WeierstrassCurve<Rational> curve, Rational lambda, long t_precision, long z_precision,
             long work_precision)
    : base_(std::move(curve)),
      lambda_(std::move(lambda)),
      t_precision_(t_precision),
      z_precision_(z_precision),
      work_precision_(work_precision) {
    if (lambda_.is_zero()) throw ZeroLambda("build_scene: lambda must be nonzero");
    if (!base_.is_nonsingular()) throw SingularCurve("build_scene: singular curve");
    if (base_.a6.is_zero()) throw SingularCurve("build_scene: a6 must be nonzero");

    using PolyQT = Polynomial<QT>;
    QT coefA = qt_monomial(Rational(1), -2) + QT(lambda_);
    A_ = TB(PolyQT({QT(0), coefA}));                                // (T^-2 + lambda) Z
    B_ = TB(PolyQT({qt_monomial(Rational(1), -2), QT(lambda_)}));   // T^-2 + lambda Z
    tower_ = std::make_shared<BiquadraticTower<TB>>(BiquadraticTower<TB>{f_of(A_), f_of(B_)});
}

Scene build_scene(const WeierstrassCurve<Rational>& curve, const Rational& lambda,
                  long t_precision, long z_precision) {
    return Scene(curve, lambda, t_precision, z_precision, t_precision + 24);
}

TowerPoint Scene::negate(const TowerPoint& p) const {
    if (p.infinity) return p;
    return TowerPoint::affine(*p.x, -*p.y);
}

TowerPoint Scene::add(const TowerPoint& p, const TowerPoint& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Tower a2 = scalar(base_.a2), a4 = scalar(base_.a4);
    Tower two = scalar(Rational(2));
    Tower slope = scalar(Rational(0));
    if (is_negligible(*p.x - *q.x)) {
        if (is_negligible(*p.y + *q.y)) return TowerPoint::at_infinity();
        const Tower& x = *p.x;
        slope = (scalar(Rational(3)) * x * x + two * a2 * x + a4) / (two * *p.y);
    } else {
        slope = (*q.y - *p.y) / (*q.x - *p.x);
    }
    Tower x3 = slope * slope - a2 - *p.x - *q.x;
    Tower y3 = slope * (*p.x - x3) - *p.y;
    return TowerPoint::affine(std::move(x3), std::move(y3));
}

TowerPoint Scene::scalar_multiple(long n, const TowerPoint& p) const {
    TowerPoint base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    TowerPoint acc = TowerPoint::at_infinity();
    while (k) {
        if (k & 1ul) acc = add(acc, base);
        k >>= 1ul;
        if (k) base = add(base, base);
    }
    return acc;
}

const TowerPoint& Scene::combo_point(long n, long r) const {
    auto key = std::make_pair(n, r);
    auto it = combo_cache_.find(key);
    if (it != combo_cache_.end()) return it->second;
    TowerPoint left = scalar_multiple(n, P1());
    TowerPoint right = scalar_multiple(r, P2());
    TowerPoint sum = add(left, right);
    return combo_cache_.emplace(key, std::move(sum)).first->second;
}

Tower Scene::combo_y(long n, long r) const {
    const TowerPoint& p = combo_point(n, r);
    if (p.infinity) throw PointAtInfinity("combo_y: n P1 + r P2 is the point at infinity");
    return *p.y;
}

Tower Scene::curve_defect(const TowerPoint& p) const {
    if (p.infinity) throw PointAtInfinity("curve_defect: point at infinity");
    const Tower& x = *p.x;
    Tower fx = x * x * x + scalar(base_.a2) * x * x + scalar(base_.a4) * x + scalar(base_.a6);
    return *p.y * *p.y - fx;
}

DiagonalForm<Tower> div_form(const Scene& scene, long m, long n, long r,
                             const DiagonalForm<Rational>& q) {
    if (m % 2 == 0) throw EvenM("div_form: m must be odd");
    Tower one = scene.scalar(Rational(1));
    Tower y1 = scene.combo_y(m, 1);
    Tower y2 = scene.combo_y(n, r);
    DiagonalForm<Tower> p1(std::vector<Tower>{one, y1});
    DiagonalForm<Tower> p2(std::vector<Tower>{one, y2});
    std::vector<Tower> qe;
    for (const auto& c : q.entries()) qe.push_back(scene.scalar(c));
    return tensor(tensor(p1, p2), DiagonalForm<Tower>(std::move(qe)));
}

GPolynomial g_polynomial(const Scene& scene, long m) {
    if (m % 2 == 0 || m == 0) throw EvenM("g_polynomial: m must be odd and nonzero");
    auto [xm, ym] = twist_multiples(scene.base(), m);

    // leading-term normalization: R_m = m^2 num (leading 1),
    // S_m = m^2 den (leading m^2 xi^{d-1})
    long d = xm.num().degree();
    Rational m2(m * m);
    if (xm.den().degree() != d - 1 || xm.num().leading() * m2 != Rational(1))
        throw Error("g_polynomial: unexpected normalization of X_m");
    Polynomial<Rational> Rm = m2 * xm.num();
    Polynomial<Rational> Sm = m2 * xm.den();

    using PolyQT = Polynomial<QT>;
    auto lift = [](const Polynomial<Rational>& p) {
        return p.map<QT>([](const Rational& c) { return QT(c); });
    };
    QT coefA = qt_monomial(Rational(1), -2) + QT(scene.lambda());
    PolyQT Aqt({QT(0), coefA});
    PolyQT Bqt({qt_monomial(Rational(1), -2), QT(scene.lambda())});

    QT t2d = qt_monomial(Rational(1), 2 * d);
    PolyQT G = t2d * lift(Rm).compose(Aqt) - (t2d * lift(Sm).compose(Aqt)) * Bqt;

    GPolynomial out;
    out.d = d;
    out.g = G;
    std::vector<Rational> residues;
    for (int i = 0; i <= G.degree(); ++i) {
        const QT& c = G.coeff(i);
        if (c.is_zero()) {
            residues.push_back(Rational(0));
            continue;
        }
        if (qt_order(c) < 0)
            throw Error("g_polynomial: coefficient escapes the valuation ring");
        residues.push_back(c.residue_at(Rational(0)));
    }
    out.mod_t = Polynomial<Rational>(std::move(residues));
    return out;
}

LSQ hensel_gamma(const Scene& scene, long m) {
    GPolynomial gp = g_polynomial(scene, m);
    long prec = scene.work_precision();
    Polynomial<LSQ> gseries = gp.g.map<LSQ>([&](const QT& c) { return qt_to_series(c, prec); });
    return hensel_lift_root(gseries, Rational(m * m), prec);
}

namespace {

/// Expansion of a Z-polynomial with exact Q(T) coefficients around Z = gamma,
/// through T-series at the given working precision.
EpsSeries expand_poly(const Polynomial<QT>& p, const LSQ& gamma, long terms, long wp) {
    Polynomial<LSQ> ps = p.map<LSQ>([&](const QT& c) { return qt_to_series(c, wp); });
    auto sh = ps.taylor_shift(gamma, static_cast<size_t>(terms));
    return EpsSeries::from_coeffs(0, std::move(sh), terms);
}

EpsSeries expand_rf(const TB& f, const LSQ& gamma, long terms, long wp) {
    EpsSeries num = expand_poly(f.num(), gamma, terms, wp);
    EpsSeries den = expand_poly(f.den(), gamma, terms, wp);
    return num / den;
}

/// Expansion of a tower element given the series for s1 and s2.
EpsSeries expand_tower(const Tower& t, const LSQ& gamma, long terms, long wp, const EpsSeries& sa,
                       const EpsSeries& sb) {
    EpsSeries acc = expand_rf(t.coord(0), gamma, terms, wp);
    if (!is_negligible(t.coord(1))) acc = acc + expand_rf(t.coord(1), gamma, terms, wp) * sa;
    if (!is_negligible(t.coord(2))) acc = acc + expand_rf(t.coord(2), gamma, terms, wp) * sb;
    if (!is_negligible(t.coord(3)))
        acc = acc + expand_rf(t.coord(3), gamma, terms, wp) * sa * sb;
    return acc;
}

long certified_order(const EpsSeries& s, const char* what) {
    if (s.is_zero_to_precision())
        throw InsufficientPrecision(std::string(what) + ": series is zero to precision");
    return s.ord();
}

WLedgerReport ledger_at_precision(const Scene& scene, long m,
                                  const std::vector<std::pair<long, long>>& pairs) {
    WLedgerReport rep;
    rep.m = m;
    rep.t_precision = scene.t_precision();
    rep.z_precision = scene.z_precision();
    rep.work_precision = scene.work_precision();

    LSQ gamma = hensel_gamma(scene, m);
    long terms = scene.z_precision() + 6;
    long wp = scene.work_precision();

    auto [xm, ym] = twist_multiples(scene.base(), m);
    TB XmA = compose_rf(xm, scene.A());
    TB YmA = compose_rf(ym, scene.A());
    TB H = XmA - scene.B();

    rep.x_equiv_order = certified_order(expand_rf(H, gamma, terms, wp), "X_m(A) - B");

    // sqrt series for f(A) and f(B) at gamma; the sign of sqrt(f(B)) is the
    // branch choice (conjugating by sigma2 replaces w by w o sigma)
    EpsSeries fa = expand_rf(scene.f_of(scene.A()), gamma, terms, wp);
    EpsSeries fb = expand_rf(scene.f_of(scene.B()), gamma, terms, wp);
    EpsSeries sa = sqrt_lift(fa, +1, fa.precision());
    EpsSeries sb_plus = sqrt_lift(fb, +1, fb.precision());

    EpsSeries ym_series = expand_rf(YmA, gamma, terms, wp);
    EpsSeries d_plus = ym_series * sa - sb_plus;
    EpsSeries d_minus = ym_series * sa + sb_plus;
    long ord_plus = d_plus.is_zero_to_precision() ? terms : d_plus.ord();
    long ord_minus = d_minus.is_zero_to_precision() ? terms : d_minus.ord();
    // exactly one branch makes m P1 and P2 reduce to opposite points
    // (difference a unit); the other reduces them to equal points
    if (ord_plus == 0 && ord_minus >= 1)
        rep.sign_branch = +1;
    else if (ord_minus == 0 && ord_plus >= 1)
        rep.sign_branch = -1;
    else
        throw NoValidSignChoice("w_ledger: neither sqrt(f(B)) branch gives opposite reductions");
    EpsSeries sb = rep.sign_branch > 0 ? sb_plus : -sb_plus;
    rep.y_equiv_order = rep.sign_branch > 0 ? ord_plus : ord_minus;

    const TowerPoint& p3 = scene.combo_point(m, 1);
    if (p3.infinity) throw PointAtInfinity("w_ledger: P3 is the point at infinity");
    rep.x_p3_order = certified_order(expand_tower(*p3.x, gamma, terms, wp, sa, sb), "x(P3)");
    rep.y_p3_order = certified_order(expand_tower(*p3.y, gamma, terms, wp, sa, sb), "y(P3)");

    for (const auto& [s, r] : pairs) {
        if (s == 0) throw Error("w_ledger: pair with s = 0");
        Tower y = scene.combo_y(s + r * m, r);  // s P1 + r P3 = (s + r m) P1 + r P2
        long order =
            certified_order(expand_tower(y, gamma, terms, wp, sa, sb), "y(s P1 + r P3)");
        rep.pair_orders.emplace_back(s, r, order);
    }

    rep.minus3_odd = LexValue::of({-3}).is_odd();
    rep.minus2_even = !LexValue::of({-2}).is_odd();
    return rep;
}

}  // namespace

WLedgerReport w_ledger(const Scene& scene, long m,
                       const std::vector<std::pair<long, long>>& pairs) {
    // escalate the working precision instead of guessing when a series
    // cannot be certified
    for (int attempt = 0;; ++attempt) {
        long wp = scene.work_precision() + 24 * attempt;
        try {
            Scene working(scene.base(), scene.lambda(), scene.t_precision(), scene.z_precision(),
                          wp);
            return ledger_at_precision(working, m, pairs);
        } catch (const InsufficientPrecision&) {
            if (attempt >= 2) throw;
        }
    }
}

}  // namespace vff
