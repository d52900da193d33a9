#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "vff/errors.hpp"

namespace vff {

/// Exact rational number. Always kept reduced with positive denominator;
/// zero is 0/1. Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZero("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "p/q", or decimal-free signed integers with optional sign.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s));
            mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw Error("Rational: cannot parse '" + s + "'");
        }
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    bool is_square() const {
        if (sign() < 0) return false;
        return mpz_perfect_square_p(num().get_mpz_t()) &&
               mpz_perfect_square_p(den().get_mpz_t());
    }

    /// Nonnegative exact square root; nullopt when not a square in Q.
    std::optional<Rational> sqrt() const {
        if (!is_square()) return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(n, d);
    }

    std::string str() const {
        if (den() == 1) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

private:
    mpq_class v_;
};

inline bool is_negligible(const Rational& x) { return x.is_zero(); }
inline bool certainly_nonzero(const Rational& x) { return !x.is_zero(); }

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace vff
