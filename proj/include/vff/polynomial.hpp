#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/rational.hpp"

namespace vff {

/// Univariate polynomial with coefficients in F, stored by ascending degree.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is non-negligible (for inexact F, coefficients that are zero
/// to their stated precision are trimmed like zeros).
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(F constant) {
        if (!is_negligible(constant)) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(F(1)); }
    /// The monomial c * x^k.
    static Polynomial monomial(F c, int k) {
        std::vector<F> v(static_cast<size_t>(k) + 1, F(0));
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<size_t>(i)];
    }
    const F& leading() const {
        if (c_.empty()) throw ZeroInput("Polynomial: leading coefficient of zero");
        return c_.back();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& x : c_) r.push_back(-x);
        Polynomial p;
        p.c_ = std::move(r);
        return p;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const F& s, const Polynomial& p) {
        std::vector<F> r;
        r.reserve(p.c_.size());
        for (const F& x : p.c_) r.push_back(s * x);
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division; requires an invertible (certainly nonzero) leading
    /// coefficient of the divisor.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DivisionByZero("Polynomial: division by zero polynomial");
        Polynomial rem = a;
        if (a.degree() < b.degree()) return {Polynomial(), rem};
        std::vector<F> q(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
        F lead_inv = F(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            F factor = rem.leading() * lead_inv;
            q[static_cast<size_t>(shift)] = factor;
            // rem -= factor * x^shift * b
            std::vector<F> rc = rem.c_;
            for (int i = 0; i <= b.degree(); ++i)
                rc[static_cast<size_t>(i + shift)] =
                    rc[static_cast<size_t>(i + shift)] - factor * b.coeff(i);
            rc.resize(static_cast<size_t>(rem.degree()));  // leading term cancels by construction
            rem = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(q)), rem};
    }

    /// Leading-coefficient-1 rescaling.
    Polynomial monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / leading();
        return inv * *this;
    }

    /// Monic gcd (dispatches to a coefficient-type-specific routine).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b) { return poly_gcd(a, b); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<F> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.push_back(F(static_cast<long>(i)) * c_[i]);
        return Polynomial(std::move(r));
    }

    /// Horner evaluation at a point of F.
    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner composition: this(q), valued in F[x].
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial(*it);
        return acc;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = one(), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    /// Coefficients of p(gamma + eps) as a polynomial in eps, truncated to
    /// eps^max_terms (exclusive). Plain truncated Horner.
    std::vector<F> taylor_shift(const F& gamma, size_t max_terms) const {
        std::vector<F> acc;  // polynomial in eps, ascending
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            // acc = acc * (gamma + eps) + coeff
            std::vector<F> next(std::min(acc.size() + 1, max_terms), F(0));
            for (size_t i = 0; i < acc.size(); ++i) {
                if (i < next.size()) next[i] = next[i] + acc[i] * gamma;
                if (i + 1 < next.size()) next[i + 1] = next[i + 1] + acc[i];
            }
            if (!next.empty())
                next[0] = next[0] + *it;
            else
                next.push_back(*it);
            acc = std::move(next);
        }
        acc.resize(max_terms, F(0));
        return acc;
    }

    template <class G, class Fn>
    Polynomial<G> map(Fn&& fn) const {
        std::vector<G> r;
        r.reserve(c_.size());
        for (const F& x : c_) r.push_back(fn(x));
        return Polynomial<G>(std::move(r));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (is_negligible(coeff(i))) continue;
            if (!out.empty()) out += " + ";
            out += coeff_str(coeff(i));
            if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    static std::string coeff_str(const Rational& c) { return c.str(); }
    template <class G>
    static std::string coeff_str(const G& c) { return "(" + c.str() + ")"; }

    void normalize() {
        while (!c_.empty() && is_negligible(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
bool is_negligible(const Polynomial<F>& p) { return p.is_zero(); }

/// Monic gcd by the plain Euclidean algorithm; fine for truncated-series
/// coefficients where there is no coefficient swell.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        a = divrem(a, b).second;
        std::swap(a, b);
    }
    return a.monic();
}

/// Over Q, the Euclidean remainder sequence suffers severe coefficient
/// growth; this overload runs a primitive pseudo-remainder sequence on the
/// integer parts instead.
Polynomial<Rational> poly_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b);

}  // namespace vff
