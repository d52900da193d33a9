#include "vff/zxz.hpp"

namespace vff {

bool mid(ZxZ d1, ZxZ d2) {
    if (d1.a == 0 && d1.b == 0) return d2.a == 0 && d2.b == 0;
    if (d1.a != 0) {
        if (d2.a % d1.a != 0) return false;
        long long r = d2.a / d1.a;
        return r * d1.b == d2.b;
    }
    // d1 = (0, b) with b != 0
    if (d2.a != 0) return false;
    return d2.b % d1.b == 0;
}

bool relations_hold(long long a, long long b, long long c, ZxZ x) {
    ZxZ one_one{1, 1}, minus_one{-1, 1};
    ZxZ third = 2 * ZxZ{a, 0} + one_one;  // (2a+1, 1), odd first component
    return mid(one_one, x) && mid(minus_one, x - 2 * ZxZ{b, 0}) &&
           mid(third, x + 2 * ZxZ{c, 0});
}

MulInstance mul_holds(long long a, long long b, long long c) {
    // relation 1 forces X = (x,x); relation 2 forces x = b; relation 3 then
    // reads (2a+1,1) | (b+2c, b), i.e. b + 2c = (2a+1) b, i.e. c = a b.
    MulInstance out{a, b, c, false, std::nullopt};
    if (a * b == c) {
        out.holds = true;
        out.witness = ZxZ{b, b};
    }
    return out;
}

ZxZReport verify_encoding(long long range, long long box) {
    ZxZReport rep;
    rep.range = range;
    rep.box = box;
    for (long long a = -range; a <= range; ++a)
        for (long long b = -range; b <= range; ++b)
            for (long long c = -range; c <= range; ++c) {
                ++rep.triples;
                bool truth = (a * b == c);
                MulInstance inst = mul_holds(a, b, c);

                // independent search over the whole box
                bool found = false;
                ZxZ found_x{0, 0};
                for (long long x1 = -box; x1 <= box && !found; ++x1)
                    for (long long x2 = -box; x2 <= box; ++x2)
                        if (relations_hold(a, b, c, ZxZ{x1, x2})) {
                            found = true;
                            found_x = ZxZ{x1, x2};
                            break;
                        }

                std::string what;
                if (inst.holds != truth) what = "mul_holds disagrees with a*b=c";
                else if (found != truth) what = "brute force disagrees with a*b=c";
                else if (truth && !(inst.witness && relations_hold(a, b, c, *inst.witness)))
                    what = "stated witness fails the relations";
                if (!what.empty()) {
                    ++rep.discrepancies;
                    if (!rep.first_counterexample) rep.first_counterexample = {a, b, c, what};
                }
                if (found && !(found_x == ZxZ{b, b})) rep.all_brute_witnesses_diagonal = false;
            }
    return rep;
}

}  // namespace vff
