#pragma once

#include <stdexcept>
#include <string>

namespace vff {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define VFF_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

VFF_DEFINE_ERROR(DivisionByZero);
VFF_DEFINE_ERROR(InsufficientPrecision);
VFF_DEFINE_ERROR(ZeroInput);
VFF_DEFINE_ERROR(NotSimpleRoot);
VFF_DEFINE_ERROR(NotARoot);
VFF_DEFINE_ERROR(OddLeadingExponent);
VFF_DEFINE_ERROR(NonSquareResidue);
VFF_DEFINE_ERROR(InfinityInput);
VFF_DEFINE_ERROR(NegativeValue);
VFF_DEFINE_ERROR(UnsupportedValueGroup);
VFF_DEFINE_ERROR(ZeroResidue);
VFF_DEFINE_ERROR(DegenerateWitness);
VFF_DEFINE_ERROR(FactorizationLimit);
VFF_DEFINE_ERROR(ZeroGenerator);
VFF_DEFINE_ERROR(ZeroEntry);
VFF_DEFINE_ERROR(PointNotOnCurve);
VFF_DEFINE_ERROR(PoleAtPoint);
VFF_DEFINE_ERROR(ZeroMultiple);
VFF_DEFINE_ERROR(EvenM);
VFF_DEFINE_ERROR(PointAtInfinity);
VFF_DEFINE_ERROR(SingularCurve);
VFF_DEFINE_ERROR(ZeroLambda);
VFF_DEFINE_ERROR(NoValidSignChoice);

#undef VFF_DEFINE_ERROR

}  // namespace vff
