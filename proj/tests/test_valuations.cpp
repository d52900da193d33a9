#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vff/valuations.hpp"

using namespace vff;
using Q = Rational;

namespace {

std::mt19937_64 rng(77001u);

SparsePoly random_sparse(size_t nvars, int max_terms = 4, int max_exp = 6) {
    std::uniform_int_distribution<int> nterms(1, max_terms), expd(0, max_exp), coef(-9, 9);
    SparsePoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        SparsePoly::Exponents e(nvars);
        for (auto& x : e) x = expd(rng);
        int c = coef(rng);
        while (c == 0) c = coef(rng);
        p.add_term(e, Q(c));
    }
    return p;
}

MultivariateRatio random_ratio(size_t nvars) {
    SparsePoly num = random_sparse(nvars);
    SparsePoly den = random_sparse(nvars);
    while (den.is_zero()) den = random_sparse(nvars);
    while (num.is_zero()) num = random_sparse(nvars);
    return {num, den};
}

}  // namespace

TEST_CASE("is_odd on lexicographic values") {
    CHECK(LexValue::of({1, 0}).is_odd());
    CHECK(!LexValue::of({2, 4}).is_odd());
    CHECK(LexValue::of({0, 3}).is_odd());   // odd witnesses exist in Z^2
    CHECK(LexValue::of({1, 4}).is_odd());
    CHECK(LexValue::of({-3}).is_odd());
    CHECK(!LexValue::of({-2}).is_odd());
    CHECK_THROWS_AS(LexValue::infinity().is_odd(), InfinityInput);
}

TEST_CASE("parity is stable under even shifts") {
    std::uniform_int_distribution<long> d(-20, 20);
    for (int i = 0; i < 200; ++i) {
        LexValue g = LexValue::of({d(rng), d(rng)});
        LexValue h = LexValue::of({d(rng), d(rng)});
        LexValue even = h + h;
        CHECK(g.is_odd() == (g + even).is_odd());
    }
}

TEST_CASE("lex order basics and infinity") {
    CHECK(LexValue::of({0, 1}) < LexValue::of({1, 0}));
    CHECK(LexValue::of({1, -5}) > LexValue::of({0, 100}));
    CHECK(LexValue::of({2, 3}) < LexValue::infinity());
    CHECK(!(LexValue::infinity() < LexValue::infinity()));
}

TEST_CASE("monomial_value on monomials, sums, zero") {
    MonomialValuation v(2);
    CHECK(v.value(SparsePoly::monomial(Q(1), {2, 3})) == LexValue::of({2, 3}));
    // X1 + X2: lex-min of {(1,0),(0,1)} is (0,1)
    SparsePoly s;
    s.add_term({1, 0}, Q(1));
    s.add_term({0, 1}, Q(1));
    CHECK(v.value(s) == LexValue::of({0, 1}));
    CHECK(v.value(SparsePoly()) == LexValue::infinity());
}

TEST_CASE("valuation axioms for the monomial valuation, 2 and 3 variables") {
    for (size_t nvars : {2u, 3u}) {
        MonomialValuation v(nvars);
        for (int i = 0; i < 500; ++i) {
            MultivariateRatio x = random_ratio(nvars), y = random_ratio(nvars);
            LexValue vx = v.value(x), vy = v.value(y);
            CHECK(v.value(x * y) == vx + vy);
            LexValue vsum = v.value(x + y);
            LexValue vmin = vx < vy ? vx : vy;
            CHECK(vsum >= vmin);
            if (!(vx == vy)) CHECK(vsum == vmin);
        }
    }
}

TEST_CASE("residue of the monomial valuation is a ring homomorphism") {
    MonomialValuation v(2);
    auto zero = LexValue::of({0, 0});
    int done = 0;
    while (done < 200) {
        MultivariateRatio x = random_ratio(2), y = random_ratio(2);
        if (!(v.value(x) >= zero) || !(v.value(y) >= zero)) continue;
        ++done;
        CHECK(v.residue(x * y) == v.residue(x) * v.residue(y));
        CHECK(v.residue(x + y) == v.residue(x) + v.residue(y));
    }
    // pole
    MultivariateRatio pole{SparsePoly::constant(Q(1), 2), SparsePoly::monomial(Q(1), {1, 0})};
    CHECK_THROWS_AS(v.residue(pole), NegativeValue);
}

TEST_CASE("compose_project splits lexicographic blocks") {
    auto [u, v] = compose_project(LexValue::of({2, 3}), 1);
    CHECK(v == LexValue::of({2}));
    CHECK(u == LexValue::of({3}));

    // odd leading block forces oddness of the whole value
    CHECK(LexValue::of({1, 4}).is_odd());
    auto [u2, v2] = compose_project(LexValue::of({1, 4}), 1);
    CHECK(v2.is_odd());

    // kernel membership: leading block zero
    auto [u3, v3] = compose_project(LexValue::of({0, 5}), 1);
    CHECK(v3 == LexValue::of({0}));
    CHECK(u3 == LexValue::of({5}));

    CHECK_THROWS_AS(compose_project(LexValue::infinity(), 1), InfinityInput);
}

TEST_CASE("compose_project respects the order") {
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 300; ++i) {
        LexValue a = LexValue::of({d(rng), d(rng), d(rng)});
        LexValue b = LexValue::of({d(rng), d(rng), d(rng)});
        auto [ua, va] = compose_project(a, 2);
        auto [ub, vb] = compose_project(b, 2);
        if (va < vb) CHECK(a < b);
    }
}

TEST_CASE("T-adic residue and point residues") {
    TAdicValuation tv;
    auto s = LaurentSeries<Q>::from_coeffs(0, {Q(3), Q(5)}, 2);  // 3 + 5T + O(T^2)
    CHECK(tv.residue(s) == Q(3));
    CHECK(tv.ivalue(s) == 0);
    CHECK(tv.value(LaurentSeries<Q>::monomial(Q(1), 2)) == LexValue::rank_one(2));
    CHECK_THROWS_AS(tv.residue(LaurentSeries<Q>::monomial(Q(1), -1)), NegativeValue);

    PointValuation pv{Q(1)};
    using PolyQ = Polynomial<Q>;
    RationalFunction<Q> f(PolyQ({Q(-1), Q(0), Q(1)}), PolyQ({Q(2), Q(1)}));
    CHECK(pv.residue(f) == Q(0));
    CHECK(pv.ivalue(f) == 1);
    RationalFunction<Q> g(PolyQ::one(), PolyQ({Q(-1), Q(1)}));
    CHECK_THROWS_AS(pv.residue(g), NegativeValue);
    CHECK(pv.uniformizer().order_at(Q(1)) == 1);
}
