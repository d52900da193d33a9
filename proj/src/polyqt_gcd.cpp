#include <optional>
#include <vector>

#include "vff/rational_function.hpp"

namespace vff {

namespace {

using PolyQ = Polynomial<Rational>;
using QT = RationalFunction<Rational>;

/// Polynomial in Z with Q[T] coefficients, ascending in Z.
using Bivar = std::vector<PolyQ>;

void trim(Bivar& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

PolyQ content(const Bivar& p) {
    PolyQ g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g.is_zero() ? PolyQ::one() : g;
}

Bivar divide_coeffs(Bivar p, const PolyQ& d) {
    if (d.degree() == 0) {
        Rational inv = Rational(1) / d.coeff(0);
        for (auto& c : p) c = inv * c;
        return p;
    }
    for (auto& c : p) {
        auto [q, r] = divrem(c, d);
        if (!r.is_zero()) throw Error("bivar gcd: inexact content division");
        c = std::move(q);
    }
    return p;
}

Bivar primitive_part(Bivar p) {
    trim(p);
    if (p.empty()) return p;
    return divide_coeffs(std::move(p), content(p));
}

long t_degree(const Bivar& p) {
    long d = 0;
    for (const auto& c : p) d = std::max<long>(d, c.degree());
    return d;
}

PolyQ evaluate_in_z(const Bivar& p, const Rational& t) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& coeff : p) c.push_back(coeff(t));
    return PolyQ(std::move(c));
}

Polynomial<QT> to_qt(const Bivar& p) {
    std::vector<QT> c;
    c.reserve(p.size());
    for (const auto& coeff : p) c.push_back(QT(coeff));
    return Polynomial<QT>(c);
}

/// Incremental Newton interpolation of several Q-valued sequences over
/// common nodes.
struct NewtonInterp {
    std::vector<Rational> nodes;
    std::vector<std::vector<Rational>> diffs;  // divided differences per sequence

    explicit NewtonInterp(size_t sequences) : diffs(sequences) {}

    void add_point(const Rational& t, const std::vector<Rational>& values) {
        for (size_t s = 0; s < diffs.size(); ++s) {
            Rational acc = values[s];
            // next divided difference from the previous ones
            for (size_t i = 0; i < diffs[s].size(); ++i)
                acc = (acc - diffs[s][i]) / (t - nodes[i]);
            diffs[s].push_back(acc);
        }
        nodes.push_back(t);
    }

    bool last_difference_zero() const {
        for (const auto& d : diffs)
            if (!d.back().is_zero()) return false;
        return true;
    }

    /// The interpolants ignoring the final (zero) divided difference.
    std::vector<PolyQ> polynomials() const {
        std::vector<PolyQ> out;
        for (const auto& d : diffs) {
            PolyQ acc;
            // Horner over the Newton basis, highest node first
            for (size_t i = d.size(); i-- > 0;) {
                PolyQ node({-nodes[i], Rational(1)});
                acc = acc * node + PolyQ(d[i]);
            }
            out.push_back(acc);
        }
        return out;
    }
};

/// Dense evaluation-interpolation gcd over Q[T][Z] (Brown's algorithm with
/// exact rational evaluations). A single evaluation certifies coprimality;
/// otherwise the monic specialized gcds, scaled by the gcd of the leading
/// coefficients, are interpolated in T and the result is verified by exact
/// division, so unlucky evaluation points can only cost retries.
std::optional<Bivar> gcd_by_interpolation(const Bivar& a, const Bivar& b) {
    const PolyQ& lead_a = a.back();
    const PolyQ& lead_b = b.back();
    PolyQ lcg = poly_gcd(lead_a, lead_b);
    long max_points = t_degree(a) + t_degree(b) + lcg.degree() + 4;

    size_t dz_best = std::min(a.size(), b.size());  // exclusive bound
    std::optional<NewtonInterp> interp;
    long t_int = 0;
    for (long used = 0; used <= 2 * max_points + 8; ++t_int) {
        Rational t(t_int);
        if (lead_a(t).is_zero() || lead_b(t).is_zero()) continue;  // bad reduction
        ++used;
        PolyQ ga = evaluate_in_z(a, t), gb = evaluate_in_z(b, t);
        PolyQ g = poly_gcd(ga, gb);
        size_t dz = static_cast<size_t>(g.degree());
        if (dz == 0) return Bivar{PolyQ::one()};  // coprime certificate
        if (dz > dz_best) continue;  // unlucky point, skip
        if (dz < dz_best) {
            dz_best = dz;  // all earlier points were unlucky
            interp.emplace(dz + 1);
            used = 1;
        }
        // impose the leading coefficient lcg(t) on the monic gcd
        Rational scale = lcg(t);
        std::vector<Rational> values;
        values.reserve(dz + 1);
        for (size_t i = 0; i <= dz; ++i) values.push_back(scale * g.coeff(static_cast<int>(i)));
        interp->add_point(t, values);

        if (interp->nodes.size() >= 2 && interp->last_difference_zero()) {
            auto coeffs = interp->polynomials();
            Bivar cand(coeffs.begin(), coeffs.end());
            cand = primitive_part(std::move(cand));
            if (cand.empty()) continue;
            Polynomial<QT> gq = to_qt(cand);
            if (divrem(to_qt(a), gq).second.is_zero() && divrem(to_qt(b), gq).second.is_zero())
                return cand;
        }
    }
    return std::nullopt;  // give up; caller falls back to the remainder sequence
}

/// Primitive pseudo-remainder fallback (exact but with coefficient growth).
Bivar primitive_rem(Bivar a, const Bivar& b) {
    trim(a);
    const PolyQ& lb = b.back();
    size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        size_t shift = a.size() - 1 - db;
        PolyQ la = a.back();
        for (auto& c : a) c = c * lb;
        for (size_t i = 0; i <= db; ++i) a[i + shift] = a[i + shift] - la * b[i];
        a = primitive_part(std::move(a));  // top coefficient cancels exactly
    }
    return a;
}

Bivar gcd_by_remainders(Bivar a, Bivar b) {
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        Bivar r = primitive_rem(a, b);
        if (r.empty()) return b;
        if (r.size() == 1) return {PolyQ::one()};
        a = std::move(b);
        b = std::move(r);
    }
}

Bivar bivar_gcd(Bivar a, Bivar b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    if (auto g = gcd_by_interpolation(a, b)) return *g;
    return gcd_by_remainders(std::move(a), std::move(b));
}

/// Clears Q(T) denominators: p scaled by the lcm of its coefficient
/// denominators, returned with Q[T] coefficients.
Bivar clear_denominators(const Polynomial<QT>& p) {
    PolyQ l = PolyQ::one();
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        PolyQ g = poly_gcd(l, c.den());
        l = l * divrem(c.den(), g).first;
    }
    Bivar out;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) {
            out.push_back(PolyQ());
            continue;
        }
        auto [q, r] = divrem(l, c.den());
        if (!r.is_zero()) throw Error("bivar gcd: lcm accumulation failed");
        out.push_back(c.num() * q);
    }
    trim(out);
    return out;
}

}  // namespace

Polynomial<QT> poly_gcd(const Polynomial<QT>& a, const Polynomial<QT>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Bivar g = bivar_gcd(clear_denominators(a), clear_denominators(b));
    std::vector<QT> coeffs;
    coeffs.reserve(g.size());
    for (auto& c : g) coeffs.emplace_back(std::move(c));
    return Polynomial<QT>(std::move(coeffs)).monic();
}

}  // namespace vff
