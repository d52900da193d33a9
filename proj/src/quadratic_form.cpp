#include "vff/quadratic_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "vff/errors.hpp"
#include "vff/valuations.hpp"

namespace vff {

namespace {

// Enumeration order 0, 1, -1, 2, -2, ... so small witnesses are found first
// and the reported witness is the first zero in this order.
long nth_candidate(long i) { return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); }

using IntPoly = std::vector<long long>;  // integer polynomial in T, ascending

struct IntPolyHash {
    size_t operator()(const IntPoly& v) const {
        size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= std::hash<long long>{}(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Core meet-in-the-middle search for sum_i a_i(T) x_i(T)^2 = 0 with integer
/// polynomial coordinates of degree <= max_degree and coefficient height <=
/// height. Entries are integer polynomials; the value of a half-assignment
/// is an integer polynomial of fixed length, used as the hash key.
struct MitmSearch {
    std::vector<IntPoly> entries;
    long height;
    int max_degree;
    size_t value_len;

    explicit MitmSearch(std::vector<IntPoly> e, long h, int d)
        : entries(std::move(e)), height(h), max_degree(d) {
        size_t max_entry = 0;
        for (const auto& a : entries) max_entry = std::max(max_entry, a.size());
        value_len = max_entry + 2 * static_cast<size_t>(max_degree);
    }

    // x(T)^2 * a(T) accumulated into acc
    void accumulate(IntPoly& acc, const IntPoly& a, const long* x) const {
        for (int i = 0; i <= max_degree; ++i)
            for (int j = 0; j <= max_degree; ++j) {
                long long xij = static_cast<long long>(x[i]) * x[j];
                if (xij == 0) continue;
                for (size_t k = 0; k < a.size(); ++k)
                    acc[static_cast<size_t>(i + j) + k] += xij * a[k];
            }
    }

    /// Enumerates assignments for the coordinates [from, to), calling
    /// fn(value, flat coords); stops early when fn returns true.
    bool enumerate(size_t from, size_t to,
                   const std::function<bool(const IntPoly&, const std::vector<long>&)>& fn) const {
        size_t vars = (to - from) * static_cast<size_t>(max_degree + 1);
        std::vector<long> flat(vars, 0), counter(vars, 0);
        long limit = 2 * height + 1;
        while (true) {
            IntPoly value(value_len, 0);
            for (size_t c = from; c < to; ++c)
                accumulate(value, entries[c], &flat[(c - from) * static_cast<size_t>(max_degree + 1)]);
            if (fn(value, flat)) return true;
            size_t pos = 0;
            while (pos < vars) {
                if (++counter[pos] < limit) {
                    flat[pos] = nth_candidate(counter[pos]);
                    break;
                }
                counter[pos] = 0;
                flat[pos] = 0;
                ++pos;
            }
            if (pos == vars) return false;
        }
    }

    /// Flat coordinate list for [from, to) -> per-coordinate integer polys.
    std::vector<IntPoly> unflatten(const std::vector<long>& flat) const {
        std::vector<IntPoly> out;
        size_t per = static_cast<size_t>(max_degree + 1);
        for (size_t c = 0; c * per < flat.size(); ++c)
            out.emplace_back(flat.begin() + static_cast<long>(c * per),
                             flat.begin() + static_cast<long>((c + 1) * per));
        return out;
    }

    std::optional<std::vector<IntPoly>> run() const {
        size_t n = entries.size();
        size_t k1 = n / 2;  // hashed half: the smaller one
        size_t per = static_cast<size_t>(max_degree + 1);

        double hash_states = std::pow(2.0 * static_cast<double>(height) + 1.0,
                                      static_cast<double>(k1 * per));
        double probe_states = std::pow(2.0 * static_cast<double>(height) + 1.0,
                                       static_cast<double>((n - k1) * per));
        if (hash_states > 2.5e7 || probe_states > 4.0e8)
            throw Error("witness_search: search space beyond budget at this height");

        std::unordered_map<IntPoly, std::vector<long>, IntPolyHash> table;
        std::optional<std::vector<long>> lo_nontrivial_zero;
        IntPoly zero_value(value_len, 0);
        enumerate(0, k1, [&](const IntPoly& v, const std::vector<long>& x) {
            table.emplace(v, x);
            if (!lo_nontrivial_zero && v == zero_value &&
                std::any_of(x.begin(), x.end(), [](long t) { return t != 0; }))
                lo_nontrivial_zero = x;
            return false;
        });

        // a witness living entirely in the hashed half
        if (lo_nontrivial_zero) {
            std::vector<long> full = *lo_nontrivial_zero;
            full.resize(n * per, 0);
            return unflatten(full);
        }

        std::optional<std::vector<IntPoly>> result;
        enumerate(k1, n, [&](const IntPoly& v, const std::vector<long>& x) {
            IntPoly needed(value_len, 0);
            for (size_t i = 0; i < value_len; ++i) needed[i] = -v[i];
            auto it = table.find(needed);
            if (it == table.end()) return false;
            bool nonzero = std::any_of(x.begin(), x.end(), [](long t) { return t != 0; }) ||
                           std::any_of(it->second.begin(), it->second.end(),
                                       [](long t) { return t != 0; });
            if (!nonzero) return false;
            std::vector<long> full = it->second;
            full.insert(full.end(), x.begin(), x.end());
            result = unflatten(full);
            return true;
        });
        return result;
    }
};

/// Common-denominator integer scaling; isotropy and witnesses are invariant
/// under scaling the whole form.
std::vector<IntPoly> scale_to_integer_polys(const std::vector<Polynomial<Rational>>& entries,
                                            long height, int max_degree) {
    mpz_class l(1);
    for (const auto& p : entries)
        for (const auto& c : p.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<IntPoly> out;
    for (const auto& p : entries) {
        IntPoly ip;
        for (const auto& c : p.coeffs()) {
            mpz_class z = c.num() * (l / c.den());
            mpz_class worst = abs(z) * height * height * static_cast<long>(entries.size()) *
                              (max_degree + 1) * (max_degree + 1);
            if (!worst.fits_slong_p()) throw Error("witness_search: entries/height too large");
            ip.push_back(z.get_si());
        }
        if (ip.empty()) ip.push_back(0);
        out.push_back(std::move(ip));
    }
    return out;
}

}  // namespace

IsotropyVerdict<Rational> witness_search(const DiagonalForm<Rational>& q, long height_bound) {
    if (height_bound < 1) throw Error("witness_search: height bound must be >= 1");
    std::vector<Polynomial<Rational>> as_polys;
    for (const auto& a : q.entries()) as_polys.push_back(Polynomial<Rational>(a));
    MitmSearch search(scale_to_integer_polys(as_polys, height_bound, 0), height_bound, 0);
    auto found = search.run();
    if (!found) return {false, std::nullopt};
    std::vector<Rational> w;
    for (const auto& ip : *found) w.push_back(Rational(static_cast<long>(ip[0])));
    if (!q.eval(w).is_zero()) throw Error("witness_search: internal arithmetic mismatch");
    return {true, w};
}

IsotropyVerdict<Polynomial<Rational>> witness_search(const DiagonalForm<Polynomial<Rational>>& q,
                                                     long height_bound, int max_degree) {
    if (height_bound < 1) throw Error("witness_search: height bound must be >= 1");
    if (max_degree < 0) throw Error("witness_search: negative degree bound");
    MitmSearch search(scale_to_integer_polys(q.entries(), height_bound, max_degree), height_bound,
                      max_degree);
    auto found = search.run();
    if (!found) return {false, std::nullopt};
    std::vector<Polynomial<Rational>> w;
    for (const auto& ip : *found) {
        std::vector<Rational> cs;
        for (long long c : ip) cs.push_back(Rational(static_cast<long>(c)));
        w.push_back(Polynomial<Rational>(std::move(cs)));
    }
    Polynomial<Rational> val;
    for (size_t i = 0; i < q.dim(); ++i) val = val + q.entry(i) * w[i] * w[i];
    if (!val.is_zero()) throw Error("witness_search: internal arithmetic mismatch");
    return {true, w};
}

IsotropyVerdict<Rational> witness_search_escalating(const DiagonalForm<Rational>& q,
                                                    long max_height) {
    std::vector<long> rungs{16, 64, 256, 1024, 4096};
    while (!rungs.empty() && rungs.back() >= max_height) rungs.pop_back();
    rungs.push_back(max_height);
    for (long h : rungs) {
        try {
            auto v = witness_search(q, h);
            if (v.isotropic) return v;
        } catch (const Error&) {
            break;  // enumeration budget exhausted; report not-found honestly
        }
    }
    return {false, std::nullopt};
}

IsotropyVerdict<LaurentSeries<Rational>> hensel_isotropy_lift(
    const ResidueWitness& witness, const DiagonalForm<LaurentSeries<Rational>>& q,
    long target_prec) {
    using LS = LaurentSeries<Rational>;
    TAdicValuation val;
    LS t = val.uniformizer();
    const long vt = 1;

    // classify entries by value parity and build the candidate vector from
    // the witness, scaled the same way residue_split scales
    std::vector<LS> x(q.dim(), LS());
    std::vector<size_t> part_index;
    std::vector<Rational> residues;
    std::vector<long> shifts;
    size_t wpos = 0;
    long maxk = 0;
    bool want_even = witness.part == ResidueWitness::Part::even;
    for (size_t i = 0; i < q.dim(); ++i) {
        long v = val.ivalue(q.entry(i));
        bool even = (v % 2 == 0);
        if (even != want_even) continue;
        long k = even ? v / 2 : (v - vt) / 2;
        if (wpos >= witness.coords.size())
            throw DegenerateWitness("hensel_isotropy_lift: witness shorter than the part");
        Rational cj = witness.coords[wpos++];
        LS unit = even ? q.entry(i).shifted(-2 * k) : (q.entry(i) * t.inverse()).shifted(-2 * k);
        residues.push_back(val.residue(unit));
        part_index.push_back(i);
        shifts.push_back(k);
        maxk = std::max({maxk, k, -k});
        if (!cj.is_zero()) x[i] = LS::monomial(cj, -k);
    }
    if (wpos != witness.coords.size())
        throw DegenerateWitness("hensel_isotropy_lift: witness longer than the part");

    // the witness must zero the residue form and be nontrivial
    Rational residue_value(0);
    size_t pivot = part_index.size();
    for (size_t j = 0; j < part_index.size(); ++j) {
        residue_value += residues[j] * witness.coords[j] * witness.coords[j];
        if (pivot == part_index.size() && !witness.coords[j].is_zero()) pivot = j;
    }
    if (pivot == part_index.size() || !residue_value.is_zero())
        throw DegenerateWitness("hensel_isotropy_lift: not a residue isotropy witness");

    size_t i0 = part_index[pivot];
    long k0 = shifts[pivot];
    const LS& a0 = q.entry(i0);

    long work = target_prec + 2 * maxk + vt + 10;
    x[i0] = x[i0].truncated(work - k0);

    auto form_value = [&](const std::vector<LS>& vec) {
        LS acc = LS::zero_to(LS::kExact);
        for (size_t i = 0; i < q.dim(); ++i) {
            if (vec[i].is_exact() && vec[i].is_zero_to_precision()) continue;
            acc = acc + q.entry(i) * vec[i] * vec[i];
        }
        return acc;
    };

    bool converged = false;
    for (int iter = 0; iter < 64 && !converged; ++iter) {
        LS f = form_value(x);
        LS head = f.truncated(target_prec);
        if (head.is_zero_to_precision()) {
            if (head.precision() < target_prec)
                throw InsufficientPrecision("hensel_isotropy_lift: residual precision too low");
            converged = true;
            break;
        }
        LS der = LS(2) * a0 * x[i0];
        x[i0] = (x[i0] - f / der).truncated(work - k0);
    }
    if (!converged) throw InsufficientPrecision("hensel_isotropy_lift: no convergence");
    return {true, x};
}

}  // namespace vff
