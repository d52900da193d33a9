#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

namespace vff {

/// Element of Z x Z with componentwise addition.
struct ZxZ {
    long long a = 0, b = 0;

    friend ZxZ operator+(ZxZ x, ZxZ y) { return {x.a + y.a, x.b + y.b}; }
    friend ZxZ operator-(ZxZ x, ZxZ y) { return {x.a - y.a, x.b - y.b}; }
    friend ZxZ operator*(long long r, ZxZ x) { return {r * x.a, r * x.b}; }
    friend bool operator==(ZxZ x, ZxZ y) { return x.a == y.a && x.b == y.b; }

    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// The divisibility relation: d1 | d2 iff d2 = r d1 for some integer r
/// (module divisibility, the canonical total extension of the defined
/// fragment where d1 = (a,1) with a odd forces c = a d).
bool mid(ZxZ d1, ZxZ d2);

/// One multiplication instance a*b = c with its encoding witness.
struct MulInstance {
    long long a = 0, b = 0, c = 0;
    bool holds = false;
    std::optional<ZxZ> witness;
};

/// Decides whether some X in Z x Z satisfies
///   (1,1) | X,   (-1,1) | (X - 2(b,0)),   (2(a,0) + (1,1)) | (X + 2(c,0)),
/// which happens exactly when c = a b; the witness is then (b,b).
MulInstance mul_holds(long long a, long long b, long long c);

/// True iff x satisfies the three divisibility relations for (a, b, c).
bool relations_hold(long long a, long long b, long long c, ZxZ x);

struct ZxZReport {
    long long range = 0, box = 0;
    unsigned long long triples = 0;
    unsigned long long discrepancies = 0;
    // (a, b, c, what went wrong) for the first discrepancy, if any
    std::optional<std::tuple<long long, long long, long long, std::string>> first_counterexample;
    bool all_brute_witnesses_diagonal = true;  // every brute-force witness is (b,b)
    bool pass() const { return discrepancies == 0; }
};

/// For all |a|,|b|,|c| <= range, compares mul_holds against the ground truth
/// c = a b and against an independent brute-force search for X over the box
/// |x1|,|x2| <= box; also confirms the brute force finds nothing spurious
/// when c != a b and that every found witness is (b,b).
ZxZReport verify_encoding(long long range, long long box);

}  // namespace vff
