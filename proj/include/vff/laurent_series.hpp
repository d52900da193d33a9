#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/rational.hpp"

namespace vff {

/// Truncated Laurent series sum_{e >= lead} c_{e} x^e + O(x^prec): every term
/// of exponent >= prec is unknown. Exact values (finitely many terms, nothing
/// unknown) carry the sentinel precision kExact; they arise from constants and
/// monomials and survive ring operations, but any inversion of a multi-term
/// series must happen at finite precision.
///
/// Precision is propagated pessimistically: the precision of a sum is the
/// minimum of the operands', of a product min(e1+p2, e2+p1). Coefficients that
/// are zero (for nested coefficient types: zero to their own precision) are
/// trimmed; a series with no known nonzero coefficient is "zero to precision".
template <class F>
class LaurentSeries {
public:
    static constexpr long kExact = 1L << 40;

    LaurentSeries() : lead_(kExact), prec_(kExact) {}
    LaurentSeries(long constant) : LaurentSeries(constant_term(F(constant), kExact)) {}

    static LaurentSeries zero_to(long prec) {
        LaurentSeries s;
        s.lead_ = prec;
        s.prec_ = prec;
        return s;
    }
    static LaurentSeries constant_term(F c, long prec = kExact) { return monomial(std::move(c), 0, prec); }
    static LaurentSeries monomial(F c, long e, long prec = kExact) {
        LaurentSeries s;
        s.prec_ = prec;
        if (e < prec && !is_negligible(c)) {
            s.lead_ = e;
            s.c_.push_back(std::move(c));
        } else {
            s.lead_ = prec;
        }
        return s;
    }
    static LaurentSeries from_coeffs(long lead, std::vector<F> coeffs, long prec) {
        LaurentSeries s;
        s.lead_ = lead;
        s.c_ = std::move(coeffs);
        s.prec_ = prec;
        s.normalize();
        return s;
    }

    bool is_zero_to_precision() const { return c_.empty(); }
    bool is_exact() const { return prec_ >= kExact; }
    long precision() const { return prec_; }

    /// Leading exponent; only meaningful for series with a known nonzero term.
    long ord() const {
        if (c_.empty()) {
            if (is_exact()) throw ZeroInput("LaurentSeries: ord of exact zero");
            throw InsufficientPrecision("LaurentSeries: ord of series that is zero to precision");
        }
        return lead_;
    }

    const F& leading_coeff() const {
        if (c_.empty()) throw ZeroInput("LaurentSeries: no leading coefficient");
        return c_.front();
    }

    /// Coefficient of x^e; throws if that exponent is beyond the precision.
    F coeff(long e) const {
        if (e >= prec_) throw InsufficientPrecision("LaurentSeries: coefficient beyond precision");
        if (c_.empty() || e < lead_ || e >= lead_ + static_cast<long>(c_.size())) return F(0);
        return c_[static_cast<size_t>(e - lead_)];
    }

    size_t term_count() const { return c_.size(); }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (F& x : r.c_) x = -x;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        return add_impl(a, b, false);
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return add_impl(a, b, true);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        long prec = sat_min(sat_add(a.first_exponent(), b.prec_), sat_add(b.first_exponent(), a.prec_));
        if (a.c_.empty() || b.c_.empty()) return zero_to(prec);
        long lo = a.lead_ + b.lead_;
        if (lo >= prec) return zero_to(prec);
        size_t full = a.c_.size() + b.c_.size() - 1;
        size_t n = prec >= kExact ? full
                                  : std::min<size_t>(full, static_cast<size_t>(prec - lo));
        std::vector<F> r(n, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (i >= n) break;
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return from_coeffs(lo, std::move(r), prec);
    }

    /// Multiplicative inverse. Exact monomials invert exactly; otherwise the
    /// result has precision p - 2e. Inverting an exact multi-term series has
    /// no finite representation: truncate first.
    LaurentSeries inverse() const {
        if (c_.empty()) {
            if (is_exact()) throw DivisionByZero("LaurentSeries: inverse of zero");
            throw InsufficientPrecision("LaurentSeries: inverse of series that is zero to precision");
        }
        if (c_.size() == 1) {
            long prec = is_exact() ? kExact : prec_ - 2 * lead_;
            return monomial(F(1) / c_.front(), -lead_, prec);
        }
        if (is_exact())
            throw InsufficientPrecision(
                "LaurentSeries: inverse of exact multi-term series needs explicit truncation");
        // Long division of 1 by the unit part, to relative precision p - e.
        long rel = prec_ - lead_;  // number of known coefficients
        std::vector<F> inv(static_cast<size_t>(rel), F(0));
        F c0inv = F(1) / c_.front();
        for (long k = 0; k < rel; ++k) {
            F acc = (k == 0) ? F(1) : F(0);
            for (long j = 1; j <= k && j < static_cast<long>(c_.size()); ++j)
                acc = acc - c_[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
            inv[static_cast<size_t>(k)] = acc * c0inv;
        }
        return from_coeffs(-lead_, std::move(inv), prec_ - 2 * lead_);
    }

    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        return a * b.inverse();
    }

    /// Restricts the stated precision (never increases it).
    LaurentSeries truncated(long prec) const {
        if (prec >= prec_) return *this;
        LaurentSeries r = *this;
        r.prec_ = prec;
        if (!r.c_.empty()) {
            long keep = prec - r.lead_;
            if (keep <= 0)
                r.c_.clear();
            else if (keep < static_cast<long>(r.c_.size()))
                r.c_.resize(static_cast<size_t>(keep));
        }
        r.normalize();
        return r;
    }

    /// Reinterprets the stored coefficients as an exact Laurent polynomial
    /// known to precision at least prec. Newton-style iterations use this on
    /// their approximants (which are genuine exact polynomials whose higher
    /// terms get corrected); it is the one deliberate way precision grows.
    LaurentSeries widened_to(long prec) const {
        if (prec <= prec_) return *this;
        return from_coeffs(c_.empty() ? prec : lead_, c_, prec);
    }

    /// Multiplies by x^k (exact shift).
    LaurentSeries shifted(long k) const {
        LaurentSeries r = *this;
        r.lead_ = sat_add(r.lead_, k);
        r.prec_ = sat_add(r.prec_, k);
        return r;
    }

    /// Agreement of all coefficients both series know about.
    friend bool agree_to_min_precision(const LaurentSeries& a, const LaurentSeries& b) {
        return (a - b).is_zero_to_precision();
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.lead_ == b.lead_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }

    std::string str(const std::string& var = "T") const {
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_negligible(c_[i])) continue;
            if (!out.empty()) out += " + ";
            long e = lead_ + static_cast<long>(i);
            out += coeff_str(c_[i]);
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(" + var + "^" + std::to_string(prec_) + ")";
        return out;
    }

private:
    static std::string coeff_str(const Rational& c) { return c.str(); }
    template <class G>
    static std::string coeff_str(const G& c) { return "(" + c.str() + ")"; }

    static LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, bool negate_b) {
        long prec = std::min(a.prec_, b.prec_);
        long lo = std::min(a.first_exponent(), b.first_exponent());
        long hi = std::max(a.last_known(), b.last_known()) + 1;
        hi = std::min(hi, prec);
        if (lo >= hi) return zero_to(prec);
        std::vector<F> r(static_cast<size_t>(hi - lo), F(0));
        a.accumulate(r, lo, hi, false);
        b.accumulate(r, lo, hi, negate_b);
        return from_coeffs(lo, std::move(r), prec);
    }

    static long sat_add(long a, long b) {
        long s = a + b;
        return s >= kExact ? kExact : s;
    }
    static long sat_min(long a, long b) { return std::min(a, b); }

    // First exponent about which anything is known (lead, or prec when zero).
    long first_exponent() const { return c_.empty() ? prec_ : lead_; }
    // Exponent of the last stored coefficient; a sentinel far below any real
    // exponent when nothing is stored (an empty series must not widen the
    // coefficient window of a sum).
    long last_known() const {
        return c_.empty() ? -kExact : lead_ + static_cast<long>(c_.size()) - 1;
    }

    void accumulate(std::vector<F>& r, long lo, long prec, bool negate) const {
        for (size_t i = 0; i < c_.size(); ++i) {
            long e = lead_ + static_cast<long>(i);
            if (e >= prec) break;
            size_t k = static_cast<size_t>(e - lo);
            r[k] = negate ? r[k] - c_[i] : r[k] + c_[i];
        }
    }

    void normalize() {
        // drop unknown-range coefficients
        if (!c_.empty() && prec_ < kExact) {
            long keep = prec_ - lead_;
            if (keep <= 0)
                c_.clear();
            else if (keep < static_cast<long>(c_.size()))
                c_.resize(static_cast<size_t>(keep));
        }
        // trim negligible leading coefficients
        size_t drop = 0;
        while (drop < c_.size() && is_negligible(c_[drop])) ++drop;
        if (drop) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
            lead_ += static_cast<long>(drop);
        }
        while (!c_.empty() && is_negligible(c_.back())) c_.pop_back();
        if (c_.empty()) lead_ = prec_;
    }

    long lead_;
    std::vector<F> c_;
    long prec_;
};

template <class F>
bool is_negligible(const LaurentSeries<F>& s) { return s.is_zero_to_precision(); }
template <class F>
bool certainly_nonzero(const LaurentSeries<F>& s) { return !s.is_zero_to_precision(); }

}  // namespace vff
