#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>

#include "vff/errors.hpp"

namespace vff {

/// The fixed radicand pair (d1, d2) of a biquadratic extension
/// F(s1, s2) with s1^2 = d1, s2^2 = d2. The extension is a field when d1,
/// d2 and d1 d2 are nonsquares in F; that is not checked at run time (the
/// scenes that build towers guarantee it generically).
template <class F>
struct BiquadraticTower {
    F d1, d2;
};

enum class TowerAut { sigma1, sigma2 };

/// Element c0 + c1 s1 + c2 s2 + c3 s1 s2 of the biquadratic extension.
/// Immutable tower reference shared across all elements of one scene.
template <class F>
class BiquadraticElement {
public:
    using Tower = std::shared_ptr<const BiquadraticTower<F>>;

    BiquadraticElement(Tower tower, std::array<F, 4> coords)
        : t_(std::move(tower)), c_(std::move(coords)) {
        if (!t_) throw Error("BiquadraticElement: null tower");
    }

    static BiquadraticElement scalar(Tower tower, F c) {
        return BiquadraticElement(std::move(tower), {std::move(c), F(0), F(0), F(0)});
    }
    static BiquadraticElement s1(Tower tower) {
        return BiquadraticElement(std::move(tower), {F(0), F(1), F(0), F(0)});
    }
    static BiquadraticElement s2(Tower tower) {
        return BiquadraticElement(std::move(tower), {F(0), F(0), F(1), F(0)});
    }

    const Tower& tower() const { return t_; }
    const std::array<F, 4>& coords() const { return c_; }
    const F& coord(size_t i) const { return c_[i]; }

    bool is_negligible_element() const {
        for (const F& x : c_)
            if (!is_negligible(x)) return false;
        return true;
    }
    /// True when the element lies in the base field (s-components negligible).
    bool in_base() const {
        return is_negligible(c_[1]) && is_negligible(c_[2]) && is_negligible(c_[3]);
    }

    BiquadraticElement operator-() const {
        return BiquadraticElement(t_, {-c_[0], -c_[1], -c_[2], -c_[3]});
    }
    friend BiquadraticElement operator+(const BiquadraticElement& a, const BiquadraticElement& b) {
        a.check_tower(b);
        return BiquadraticElement(a.t_, {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
                                         a.c_[3] + b.c_[3]});
    }
    friend BiquadraticElement operator-(const BiquadraticElement& a, const BiquadraticElement& b) {
        return a + (-b);
    }
    friend BiquadraticElement operator*(const BiquadraticElement& a, const BiquadraticElement& b) {
        a.check_tower(b);
        const F& d1 = a.t_->d1;
        const F& d2 = a.t_->d2;
        const auto& x = a.c_;
        const auto& y = b.c_;
        F c0 = x[0] * y[0] + d1 * x[1] * y[1] + d2 * x[2] * y[2] + d1 * d2 * x[3] * y[3];
        F c1 = x[0] * y[1] + x[1] * y[0] + d2 * (x[2] * y[3] + x[3] * y[2]);
        F c2 = x[0] * y[2] + x[2] * y[0] + d1 * (x[1] * y[3] + x[3] * y[1]);
        F c3 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
        return BiquadraticElement(a.t_, {std::move(c0), std::move(c1), std::move(c2), std::move(c3)});
    }

    /// Inverse through the product of the three nontrivial conjugates:
    /// x sigma1(x) sigma2(x) sigma1(sigma2(x)) lies in the base field.
    BiquadraticElement inverse() const {
        if (is_negligible_element()) throw DivisionByZero("BiquadraticElement: inverse of zero");
        BiquadraticElement conj_prod = conj(TowerAut::sigma1) * conj(TowerAut::sigma2) *
                                       conj(TowerAut::sigma1).conj(TowerAut::sigma2);
        BiquadraticElement norm = *this * conj_prod;
        if (!norm.in_base())
            throw Error("BiquadraticElement: conjugate norm escaped the base field");
        if (is_negligible(norm.c_[0]))
            throw DivisionByZero("BiquadraticElement: zero conjugate norm");
        F inv = F(1) / norm.c_[0];
        return BiquadraticElement(t_, {conj_prod.c_[0] * inv, conj_prod.c_[1] * inv,
                                       conj_prod.c_[2] * inv, conj_prod.c_[3] * inv});
    }
    friend BiquadraticElement operator/(const BiquadraticElement& a, const BiquadraticElement& b) {
        return a * b.inverse();
    }

    /// sigma1 negates the s1-components (c1, c3); sigma2 negates (c2, c3).
    BiquadraticElement conj(TowerAut which) const {
        if (which == TowerAut::sigma1)
            return BiquadraticElement(t_, {c_[0], -c_[1], c_[2], -c_[3]});
        return BiquadraticElement(t_, {c_[0], c_[1], -c_[2], -c_[3]});
    }

    std::string str() const {
        return "(" + coord_str(c_[0]) + ") + (" + coord_str(c_[1]) + ")*s1 + (" +
               coord_str(c_[2]) + ")*s2 + (" + coord_str(c_[3]) + ")*s1s2";
    }

private:
    template <class G>
    static std::string coord_str(const G& c) { return c.str(); }

    void check_tower(const BiquadraticElement& o) const {
        if (t_ != o.t_) throw Error("BiquadraticElement: mixed towers");
    }

    Tower t_;
    std::array<F, 4> c_;
};

template <class F>
BiquadraticElement<F> tower_conjugate(const BiquadraticElement<F>& x, TowerAut which) {
    return x.conj(which);
}

template <class F>
bool is_negligible(const BiquadraticElement<F>& x) { return x.is_negligible_element(); }

}  // namespace vff
