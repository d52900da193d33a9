#pragma once

#include <string>
#include <utility>

#include "vff/errors.hpp"
#include "vff/polynomial.hpp"

namespace vff {

/// Brings num/den to canonical form: coprime parts, monic denominator.
/// Exact coefficient fields always reach it; over truncated coefficients a
/// step whose correctness cannot be certified (nonzero division remainder,
/// or not enough precision to invert a leading term) is skipped, so values
/// stay correct and only canonicity is weakened.
template <class F>
void reduce_fraction(Polynomial<F>& num, Polynomial<F>& den) {
    try {
        Polynomial<F> g = Polynomial<F>::gcd(num, den);
        if (g.degree() > 0) {
            auto [qn, rn] = divrem(num, g);
            auto [qd, rd] = divrem(den, g);
            if (rn.is_zero() && rd.is_zero()) {
                num = std::move(qn);
                den = std::move(qd);
            }
        }
    } catch (const Error&) {
    }
    try {
        F inv = F(1) / den.leading();
        num = inv * num;
        den = inv * den;
    } catch (const Error&) {
    }
}

/// Ratio of polynomials over F in canonical form: coprime numerator and
/// denominator, monic denominator. Equality is therefore componentwise.
template <class F>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial<F>::one()) {}
    RationalFunction(long n) : num_(Polynomial<F>(F(n))), den_(Polynomial<F>::one()) {}
    explicit RationalFunction(F c) : num_(Polynomial<F>(std::move(c))), den_(Polynomial<F>::one()) {}
    explicit RationalFunction(Polynomial<F> p) : num_(std::move(p)), den_(Polynomial<F>::one()) {}
    RationalFunction(Polynomial<F> num, Polynomial<F> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction variable() {
        return RationalFunction(Polynomial<F>::monomial(F(1), 1));
    }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction inverse() const { return RationalFunction(1) / *this; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        // cross-multiplied, so it also holds when a cancellation could not be
        // certified over inexact coefficients
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Value at a point; the point must not be a pole.
    F operator()(const F& x) const {
        F d = den_(x);
        if (is_negligible(d)) throw PoleAtPoint("RationalFunction: evaluation at a pole");
        return num_(x) / d;
    }

    bool has_pole_at(const F& x) const { return is_negligible(den_(x)); }

    /// Order of vanishing at x = gamma: multiplicity in the numerator minus
    /// multiplicity in the denominator. Exact-coefficient fields only.
    int order_at(const F& gamma) const {
        if (is_zero()) throw ZeroInput("order_at: zero function");
        return multiplicity(num_, gamma) - multiplicity(den_, gamma);
    }

    /// Order of vanishing at infinity: deg(den) - deg(num).
    int order_at_infinity() const {
        if (is_zero()) throw ZeroInput("order_at: zero function");
        return den_.degree() - num_.degree();
    }

    /// Image in the residue field of the valuation at gamma (requires
    /// nonnegative order there).
    F residue_at(const F& gamma) const {
        if (is_zero()) return F(0);
        int mn = multiplicity(num_, gamma), md = multiplicity(den_, gamma);
        if (mn - md < 0) throw NegativeValue("residue_at: pole (element not in valuation ring)");
        if (mn - md > 0) return F(0);
        Polynomial<F> n = num_, d = den_;
        for (int i = 0; i < mn; ++i) {
            n = divide_out(n, gamma);
            d = divide_out(d, gamma);
        }
        return n(gamma) / d(gamma);
    }

    /// Residue at infinity: 0 for positive order, ratio of leading
    /// coefficients for order 0.
    F residue_at_infinity() const {
        if (is_zero()) return F(0);
        int o = order_at_infinity();
        if (o < 0) throw NegativeValue("residue_at_infinity: pole at infinity");
        if (o > 0) return F(0);
        return num_.leading() / den_.leading();
    }

    std::string str(const std::string& var = "x") const {
        if (is_polynomial() && is_negligible(den_.leading() - F(1))) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    static int multiplicity(Polynomial<F> p, const F& gamma) {
        int m = 0;
        while (!p.is_zero() && is_negligible(p(gamma))) {
            p = divide_out(p, gamma);
            ++m;
        }
        return m;
    }

    /// p / (x - gamma), requiring that gamma is a root.
    static Polynomial<F> divide_out(const Polynomial<F>& p, const F& gamma) {
        Polynomial<F> linear(std::vector<F>{-gamma, F(1)});
        return divrem(p, linear).first;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<F>::one();
            return;
        }
        reduce_fraction(num_, den_);
    }

    Polynomial<F> num_, den_;
};

template <class F>
bool is_negligible(const RationalFunction<F>& f) { return f.is_zero(); }

/// Gcd of polynomials in Z over Q(T) by evaluation-interpolation over Q[T]
/// after clearing denominators (one evaluation certifies coprimality); keeps
/// the exact coefficient work polynomial-sized where the plain Euclidean
/// loop squares the nested fraction degrees.
Polynomial<RationalFunction<Rational>> poly_gcd(const Polynomial<RationalFunction<Rational>>& a,
                                                const Polynomial<RationalFunction<Rational>>& b);

/// Fraction reduction for Q(T)-coefficient polynomials, performed entirely
/// in the Q[T][Z] domain (bivariate gcd plus exact divisions) to avoid
/// nested-fraction growth.
void reduce_fraction(Polynomial<RationalFunction<Rational>>& num,
                     Polynomial<RationalFunction<Rational>>& den);

}  // namespace vff
