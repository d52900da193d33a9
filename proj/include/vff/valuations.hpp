#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/laurent_series.hpp"
#include "vff/rational.hpp"
#include "vff/rational_function.hpp"

namespace vff {

/// Element of a lexicographically ordered Z^k value group, or the absorbing
/// value infinity (the value of 0).
class LexValue {
public:
    static LexValue infinity() {
        LexValue v;
        v.inf_ = true;
        return v;
    }
    static LexValue of(std::vector<long> components) {
        LexValue v;
        v.c_ = std::move(components);
        return v;
    }
    static LexValue rank_one(long n) { return of({n}); }

    bool is_infinity() const { return inf_; }
    const std::vector<long>& components() const {
        if (inf_) throw InfinityInput("LexValue: infinity has no components");
        return c_;
    }
    size_t rank() const { return c_.size(); }

    /// True iff the element is not twice another element of Z^k, i.e. some
    /// component is odd.
    bool is_odd() const {
        if (inf_) throw InfinityInput("is_odd: infinite value");
        for (long x : c_)
            if (x % 2 != 0) return true;
        return false;
    }

    friend LexValue operator+(const LexValue& a, const LexValue& b) {
        if (a.inf_ || b.inf_) return infinity();
        check_same_rank(a, b);
        std::vector<long> r(a.c_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
        return of(std::move(r));
    }
    friend LexValue operator-(const LexValue& a, const LexValue& b) {
        if (a.inf_) return infinity();
        if (b.inf_) throw InfinityInput("LexValue: cannot subtract infinity");
        check_same_rank(a, b);
        std::vector<long> r(a.c_);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
        return of(std::move(r));
    }

    friend bool operator==(const LexValue& a, const LexValue& b) {
        return a.inf_ == b.inf_ && a.c_ == b.c_;
    }
    /// Lexicographic order; infinity is greater than everything.
    friend bool operator<(const LexValue& a, const LexValue& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        check_same_rank(a, b);
        return a.c_ < b.c_;
    }
    friend bool operator<=(const LexValue& a, const LexValue& b) { return a < b || a == b; }
    friend bool operator>(const LexValue& a, const LexValue& b) { return b < a; }
    friend bool operator>=(const LexValue& a, const LexValue& b) { return b <= a; }

    std::string str() const {
        if (inf_) return "inf";
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + ")";
    }

private:
    static void check_same_rank(const LexValue& a, const LexValue& b) {
        if (a.c_.size() != b.c_.size())
            throw Error("LexValue: mixed value-group ranks");
    }
    bool inf_ = false;
    std::vector<long> c_;
};

/// Splits the value of a composed valuation w into the image under the
/// quotient map (v part, the leading k1 components) and the kernel
/// coordinates (u part, the trailing components), realizing the exact
/// sequence 0 -> G_u -> G_w -> G_v -> 0 concretely for lexicographic groups.
/// Returns {u_part, v_part}.
inline std::pair<LexValue, LexValue> compose_project(const LexValue& w, size_t k1) {
    if (w.is_infinity()) throw InfinityInput("compose_project: infinite value");
    const auto& c = w.components();
    if (k1 > c.size()) throw Error("compose_project: k1 exceeds rank");
    std::vector<long> v(c.begin(), c.begin() + static_cast<long>(k1));
    std::vector<long> u(c.begin() + static_cast<long>(k1), c.end());
    return {LexValue::of(std::move(u)), LexValue::of(std::move(v))};
}

/// Sparse multivariate polynomial over Q, exponent vector -> coefficient.
/// Keys are compared lexicographically, so the map minimum is the term of
/// minimal monomial valuation.
class SparsePoly {
public:
    using Exponents = std::vector<int>;

    SparsePoly() = default;
    static SparsePoly monomial(Rational c, Exponents e) {
        SparsePoly p;
        if (!c.is_zero()) p.t_.emplace(std::move(e), std::move(c));
        return p;
    }
    static SparsePoly constant(Rational c, size_t nvars) {
        return monomial(std::move(c), Exponents(nvars, 0));
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return t_; }

    void add_term(const Exponents& e, const Rational& c) {
        for (int x : e)
            if (x < 0) throw Error("SparsePoly: negative exponent");
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

private:
    std::map<Exponents, Rational> t_;
};

/// Ratio of sparse multivariate polynomials, not kept reduced (the monomial
/// valuation and its residue are well defined on any representative).
struct MultivariateRatio {
    SparsePoly num, den;

    MultivariateRatio(SparsePoly n, SparsePoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZero("MultivariateRatio: zero denominator");
    }

    friend MultivariateRatio operator*(const MultivariateRatio& a, const MultivariateRatio& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend MultivariateRatio operator+(const MultivariateRatio& a, const MultivariateRatio& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
};

/// Monomial valuation on Q(X_1,...,X_k) with value group Z^k ordered
/// lexicographically by the fixed variable order: the value of a monomial is
/// its exponent vector, of a polynomial the minimum over its terms, and of a
/// ratio the difference. The residue field is Q.
struct MonomialValuation {
    size_t nvars;

    explicit MonomialValuation(size_t k) : nvars(k) {
        if (k < 1) throw Error("MonomialValuation: needs at least one variable");
    }

    size_t rank() const { return nvars; }

    LexValue value(const SparsePoly& p) const {
        if (p.is_zero()) return LexValue::infinity();
        const auto& e = p.terms().begin()->first;  // map keeps lex-minimal first
        return LexValue::of(std::vector<long>(e.begin(), e.end()));
    }

    LexValue value(const MultivariateRatio& x) const {
        if (x.num.is_zero()) return LexValue::infinity();
        return value(x.num) - value(x.den);
    }

    /// Residue map into Q. Distinct monomials have distinct values, so an
    /// element of value 0 has well-defined minimal terms in numerator and
    /// denominator with equal exponents; the residue is their ratio.
    Rational residue(const MultivariateRatio& x) const {
        LexValue v = value(x);
        if (v.is_infinity()) return Rational(0);
        if (v < LexValue::of(std::vector<long>(nvars, 0)))
            throw NegativeValue("residue: element not in the valuation ring");
        if (LexValue::of(std::vector<long>(nvars, 0)) < v) return Rational(0);
        return x.num.terms().begin()->second / x.den.terms().begin()->second;
    }
};

/// The T-adic valuation on truncated Laurent series over Q, bundled with its
/// residue map (constant term) and uniformizer.
struct TAdicValuation {
    size_t rank() const { return 1; }

    LexValue value(const LaurentSeries<Rational>& x) const { return LexValue::rank_one(ivalue(x)); }

    long ivalue(const LaurentSeries<Rational>& x) const {
        if (x.is_zero_to_precision()) {
            if (x.is_exact()) throw ZeroInput("TAdicValuation: value of zero");
            throw InsufficientPrecision("TAdicValuation: value not certified by precision");
        }
        return x.ord();
    }

    Rational residue(const LaurentSeries<Rational>& x) const {
        if (x.is_zero_to_precision()) {
            if (x.is_exact()) return Rational(0);
            if (x.precision() <= 0)
                throw InsufficientPrecision("TAdicValuation: residue not determined");
            return Rational(0);
        }
        if (x.ord() < 0) throw NegativeValue("TAdicValuation: negative value");
        return x.ord() == 0 ? x.leading_coeff() : Rational(0);
    }

    LaurentSeries<Rational> uniformizer() const {
        return LaurentSeries<Rational>::monomial(Rational(1), 1);
    }
};

/// The discrete valuation on Q-coefficient rational functions at the point
/// x = gamma, with residue map evaluation at gamma.
struct PointValuation {
    Rational gamma;

    size_t rank() const { return 1; }
    LexValue value(const RationalFunction<Rational>& f) const {
        if (f.is_zero()) return LexValue::infinity();
        return LexValue::rank_one(f.order_at(gamma));
    }
    long ivalue(const RationalFunction<Rational>& f) const { return f.order_at(gamma); }
    Rational residue(const RationalFunction<Rational>& f) const { return f.residue_at(gamma); }
    RationalFunction<Rational> uniformizer() const {
        return RationalFunction<Rational>(
            Polynomial<Rational>(std::vector<Rational>{-gamma, Rational(1)}));
    }
};

}  // namespace vff
