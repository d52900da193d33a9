#include "vff/hilbert.hpp"

#include <set>

#include "vff/errors.hpp"

namespace vff {

namespace {

/// (p-adic valuation, unit part) of a nonzero integer at prime p.
std::pair<long, mpz_class> split_at(const mpz_class& n, const mpz_class& p) {
    long v = 0;
    mpz_class u = n;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
        u /= p;
        ++v;
    }
    return {v, u};
}

int legendre(const mpz_class& a, const mpz_class& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

/// Square-class representative of a nonzero rational: num * den.
mpz_class square_class(const Rational& a) { return a.num() * a.den(); }

bool is_square_in_Qp(const mpz_class& a, const mpz_class& p) {
    if (a == 0) return false;
    auto [v, u] = split_at(a, p);
    if (v % 2 != 0) return false;
    if (p == 2) {
        mpz_class m = u % 8;
        if (m < 0) m += 8;
        return m == 1;
    }
    return legendre(u, p) == 1;
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_trial(mpz_class n, long limit) {
    if (n == 0) throw ZeroInput("factor_trial: zero");
    std::vector<std::pair<mpz_class, int>> out;
    n = abs(n);
    for (mpz_class p = 2; p * p <= n && p <= limit; p == 2 ? p = 3 : p += 2) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) {
        mpz_class lim(limit);
        if (n > lim * lim)
            throw FactorizationLimit("factor_trial: cofactor beyond trial-division bound");
        out.emplace_back(n, 1);  // cofactor below limit^2 with no factor <= limit is prime
    }
    return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("hilbert_symbol: zero argument");
    mpz_class x = square_class(a), y = square_class(b);
    if (place.is_real()) return (x < 0 && y < 0) ? -1 : +1;

    const mpz_class& p = place.prime_value();
    auto [alpha, u] = split_at(x, p);
    auto [beta, w] = split_at(y, p);
    if (p == 2) {
        auto eps = [](const mpz_class& m) { return ((m - 1) / 2) % 2 != 0; };
        auto omega = [](const mpz_class& m) { return ((m * m - 1) / 8) % 2 != 0; };
        bool minus = (eps(u) && eps(w)) ^ (alpha % 2 != 0 && omega(w)) ^ (beta % 2 != 0 && omega(u));
        return minus ? -1 : +1;
    }
    int s = +1;
    if (alpha % 2 != 0 && beta % 2 != 0 && ((p - 1) / 2) % 2 != 0) s = -s;
    if (beta % 2 != 0) s *= legendre(u, p);
    if (alpha % 2 != 0) s *= legendre(w, p);
    return s;
}

IsotropyVerdict<Rational> isotropic_over_Q(const DiagonalForm<Rational>& q) {
    const auto& e = q.entries();
    size_t n = e.size();
    if (n == 1) return {false, std::nullopt};
    if (n == 2) return {(-(e[0] * e[1])).is_square(), std::nullopt};

    int pos = 0, neg = 0;
    for (const auto& a : e) (a.sign() > 0 ? pos : neg)++;
    bool indefinite = pos > 0 && neg > 0;
    if (n >= 5) return {indefinite, std::nullopt};
    if (!indefinite) return {false, std::nullopt};

    // Places carrying a possible local obstruction: 2 and the odd primes
    // dividing some entry (numerator or denominator).
    std::set<mpz_class> primes{mpz_class(2)};
    for (const auto& a : e)
        for (const auto& [p, exp] : factor_trial(square_class(a))) primes.insert(p);

    Rational det(1);
    for (const auto& a : e) det *= a;

    for (const auto& p : primes) {
        Place place = Place::prime(p);
        int hasse = +1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) hasse *= hilbert_symbol(e[i], e[j], place);
        if (n == 3) {
            if (hasse != hilbert_symbol(Rational(-1), -det, place)) return {false, std::nullopt};
        } else {  // n == 4: anisotropic over Q_p iff det is a square there and
                  // the Hasse invariant differs from (-1,-1)_p
            if (is_square_in_Qp(square_class(det), p) &&
                hasse != hilbert_symbol(Rational(-1), Rational(-1), place))
                return {false, std::nullopt};
        }
    }
    return {true, std::nullopt};
}

}  // namespace vff
