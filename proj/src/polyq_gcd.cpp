#include <vector>

#include "vff/polynomial.hpp"

namespace vff {

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending, trailing zeros trimmed

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Content-free copy with positive leading coefficient.
ZPoly primitive_part(ZPoly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

/// Primitive remainder: reduces a modulo b with lead(b) scalings, stripping
/// the content after every step so coefficients stay near the subresultant
/// bound instead of growing by bits(lead(b)) per reduction.
ZPoly primitive_rem(ZPoly a, const ZPoly& b) {
    trim(a);
    const mpz_class& lb = b.back();
    long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long shift = static_cast<long>(a.size()) - 1 - db;
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
        a = primitive_part(std::move(a));
    }
    return a;
}

ZPoly z_gcd(ZPoly a, ZPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        ZPoly r = primitive_rem(a, b);
        if (r.empty()) return b;
        if (r.size() == 1) return {mpz_class(1)};
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace

Polynomial<Rational> poly_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto clear = [](const Polynomial<Rational>& p) {
        mpz_class l(1);
        for (const auto& c : p.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        ZPoly out;
        for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
        return out;
    };
    ZPoly g = z_gcd(clear(a), clear(b));
    std::vector<Rational> coeffs;
    coeffs.reserve(g.size());
    for (const auto& c : g) coeffs.emplace_back(c);
    return Polynomial<Rational>(std::move(coeffs)).monic();
}

}  // namespace vff
