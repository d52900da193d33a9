#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/laurent_series.hpp"
#include "vff/polynomial.hpp"
#include "vff/rational.hpp"

namespace vff {

/// Diagonal quadratic form <a_1,...,a_n>: nonempty list of nonzero entries.
template <class F>
class DiagonalForm {
public:
    explicit DiagonalForm(std::vector<F> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw ZeroEntry("DiagonalForm: empty entry list");
        for (const F& a : e_)
            if (is_negligible(a)) throw ZeroEntry("DiagonalForm: zero entry");
    }

    size_t dim() const { return e_.size(); }
    const std::vector<F>& entries() const { return e_; }
    const F& entry(size_t i) const { return e_[i]; }

    /// Value of the form on a coordinate vector (same length as the form).
    template <class C>
    F eval(const std::vector<C>& x) const {
        F acc(0);
        for (size_t i = 0; i < e_.size(); ++i) acc = acc + e_[i] * F(x[i]) * F(x[i]);
        return acc;
    }
    F eval(const std::vector<F>& x) const {
        F acc(0);
        for (size_t i = 0; i < e_.size(); ++i) acc = acc + e_[i] * x[i] * x[i];
        return acc;
    }

    /// Entry-multiset equality (entry order is not canonicalized).
    friend bool same_up_to_reordering(const DiagonalForm& a, const DiagonalForm& b) {
        if (a.dim() != b.dim()) return false;
        std::vector<bool> used(b.dim(), false);
        for (const F& x : a.e_) {
            bool found = false;
            for (size_t j = 0; j < b.e_.size(); ++j) {
                if (!used[j] && is_negligible(x - b.e_[j])) {
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = "<";
        for (size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + entry_str(e_[i]);
        return s + ">";
    }

private:
    static std::string entry_str(const Rational& c) { return c.str(); }
    template <class G>
    static std::string entry_str(const G& c) { return c.str(); }

    std::vector<F> e_;
};

/// Orthogonal sum: concatenation of the entries.
template <class F>
DiagonalForm<F> orth_sum(const DiagonalForm<F>& a, const DiagonalForm<F>& b) {
    std::vector<F> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return DiagonalForm<F>(std::move(e));
}

/// Tensor product: all pairwise products, row major.
template <class F>
DiagonalForm<F> tensor(const DiagonalForm<F>& a, const DiagonalForm<F>& b) {
    std::vector<F> e;
    e.reserve(a.dim() * b.dim());
    for (const F& x : a.entries())
        for (const F& y : b.entries()) e.push_back(x * y);
    return DiagonalForm<F>(std::move(e));
}

/// Pfister form <1,a_1> x ... x <1,a_q>; the empty product is <1>.
template <class F>
DiagonalForm<F> pfister(const std::vector<F>& gens) {
    DiagonalForm<F> q(std::vector<F>{F(1)});
    for (const F& a : gens) {
        if (is_negligible(a)) throw ZeroGenerator("pfister: zero generator");
        q = tensor(q, DiagonalForm<F>(std::vector<F>{F(1), a}));
    }
    return q;
}

/// Result of an isotropy decision or bounded search. A present witness is an
/// exact nontrivial zero; isotropic == false from a bounded search only means
/// "nothing within the bound".
template <class C>
struct IsotropyVerdict {
    bool isotropic = false;
    std::optional<std::vector<C>> witness;
};

/// Bounded search for an isotropy witness with integer coordinates of height
/// <= height_bound, smallest heights first. Meet-in-the-middle on the value
/// of the two halves of the form.
IsotropyVerdict<Rational> witness_search(const DiagonalForm<Rational>& q, long height_bound);

/// Same, over forms whose entries are polynomials (in T, say): coordinates
/// are integer-coefficient polynomials of degree <= max_degree and height
/// <= height_bound.
IsotropyVerdict<Polynomial<Rational>> witness_search(const DiagonalForm<Polynomial<Rational>>& q,
                                                     long height_bound, int max_degree = 0);

/// witness_search with an escalating height ladder up to max_height.
IsotropyVerdict<Rational> witness_search_escalating(const DiagonalForm<Rational>& q,
                                                    long max_height);

/// Residue reduction of a form over a rank-one discretely valued field with
/// respect to an element t of odd value: entries of even value 2k land in the
/// first residue form as res(a u^-2k), entries of odd value contribute
/// res(a t^-1 u^-2j) to the second (u the uniformizer). Scaling by the even
/// powers of u preserves the isotropy class.
template <class V, class X>
std::pair<DiagonalForm<Rational>, DiagonalForm<Rational>> residue_split(const DiagonalForm<X>& q,
                                                                        const X& t, const V& val) {
    if (val.rank() != 1)
        throw UnsupportedValueGroup("residue_split: needs a rank-one discrete valuation");
    long vt = val.ivalue(t);
    if (vt % 2 == 0) throw Error("residue_split: t must have odd value");
    X u = val.uniformizer();
    X tinv = X(1) / t;
    std::vector<Rational> even_part, odd_part;
    for (const X& a : q.entries()) {
        long v = val.ivalue(a);
        X scaled = a;
        if (v % 2 == 0) {
            for (long i = 0; i < v / 2; ++i) scaled = scaled / (u * u);
            for (long i = 0; i > v / 2; --i) scaled = scaled * (u * u);
            Rational r = val.residue(scaled);
            if (r.is_zero()) throw ZeroResidue("residue_split: unit residue not certified");
            even_part.push_back(r);
        } else {
            long j = (v - vt) / 2;
            scaled = scaled * tinv;
            for (long i = 0; i < j; ++i) scaled = scaled / (u * u);
            for (long i = 0; i > j; --i) scaled = scaled * (u * u);
            Rational r = val.residue(scaled);
            if (r.is_zero()) throw ZeroResidue("residue_split: unit residue not certified");
            odd_part.push_back(r);
        }
    }
    if (even_part.empty() || odd_part.empty())
        throw Error("residue_split: form has no entries in one parity class");
    return {DiagonalForm<Rational>(std::move(even_part)),
            DiagonalForm<Rational>(std::move(odd_part))};
}

/// Residue witness for one of the two residue forms of a split.
struct ResidueWitness {
    enum class Part { even, odd };
    Part part = Part::even;
    std::vector<Rational> coords;
};

/// Lifts a residue isotropy witness to a vector zeroing the form over the
/// truncated-series field to target_prec, by Newton iteration on the first
/// nonzero witness coordinate (char 0, so a nonzero coordinate of a genuine
/// residue zero is automatically a simple zero).
IsotropyVerdict<LaurentSeries<Rational>> hensel_isotropy_lift(
    const ResidueWitness& witness, const DiagonalForm<LaurentSeries<Rational>>& q,
    long target_prec);

}  // namespace vff
