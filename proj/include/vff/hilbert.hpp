#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "vff/quadratic_form.hpp"
#include "vff/rational.hpp"

namespace vff {

/// A place of Q: the real place or a finite prime.
struct Place {
    static Place real() { return Place{}; }
    static Place prime(mpz_class prime) { return Place{std::move(prime)}; }

    bool is_real() const { return !p.has_value(); }
    const mpz_class& prime_value() const { return *p; }

    std::optional<mpz_class> p;
};

/// Trial-division factorization, (prime, exponent) pairs with primes
/// ascending. Throws FactorizationLimit when a cofactor beyond limit^2
/// remains (it could be composite with two large factors).
std::vector<std::pair<mpz_class, int>> factor_trial(mpz_class n, long limit = 1000000);

/// Hilbert symbol (a,b) at a place of Q: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution in the completion. Closed-form evaluation via
/// Legendre symbols (odd p), the 2-adic unit formula (p = 2), and sign
/// inspection (real place).
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Exact isotropy decision over Q by the local-global principle:
/// dim 1 anisotropic; dim 2 iff -a1 a2 is a square; dim 3 and 4 via Hilbert
/// symbols and Hasse invariants at the relevant places; dim >= 5 iff
/// indefinite over the reals. Does not produce witnesses.
IsotropyVerdict<Rational> isotropic_over_Q(const DiagonalForm<Rational>& q);

}  // namespace vff
