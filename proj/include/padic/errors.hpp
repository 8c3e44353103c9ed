#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Base class for all arithmetic / precision failures raised by this library.
struct PadicError : std::runtime_error {
    explicit PadicError(const std::string& what) : std::runtime_error(what) {}
};

// Divisor (or pivot) is indistinguishable from 0 at the working precision.
struct DivisionByIndistinguishableZero : PadicError {
    explicit DivisionByIndistinguishableZero(const std::string& what = "division by a value indistinguishable from zero")
        : PadicError(what) {}
};

// No significant digit survives the operation at the working precision.
struct PrecisionExhausted : PadicError {
    explicit PrecisionExhausted(const std::string& what = "precision exhausted") : PadicError(what) {}
};

// A rank decision depends on digits beyond the working precision.
struct AmbiguousRank : PadicError {
    explicit AmbiguousRank(const std::string& what = "rank decision ambiguous at precision") : PadicError(what) {}
};

// A distance value outside the attainable set of the extension was supplied.
struct InvalidDistance : PadicError {
    explicit InvalidDistance(const std::string& what = "distance not attainable in this extension") : PadicError(what) {}
};

struct NonPrimeDegree : PadicError {
    explicit NonPrimeDegree(const std::string& what = "extension degree is not prime") : PadicError(what) {}
};

struct UnsupportedDegree : PadicError {
    explicit UnsupportedDegree(const std::string& what = "degree outside the cataloged range") : PadicError(what) {}
};

// A catalog failed one of the exact mass identities.
struct MassMismatch : PadicError {
    explicit MassMismatch(const std::string& what) : PadicError(what) {}
};

struct OverlappingBalls : PadicError {
    explicit OverlappingBalls(const std::string& what = "balls are not disjoint") : PadicError(what) {}
};

// The Kac-Rice estimator was applied to a polynomial with a common zero of P and P'.
struct DegenerateRoot : PadicError {
    explicit DegenerateRoot(const std::string& what = "polynomial has a degenerate root") : PadicError(what) {}
};

// Cell enumeration exceeded the configured budget.
struct BudgetExceeded : PadicError {
    explicit BudgetExceeded(const std::string& what = "cell budget exceeded") : PadicError(what) {}
};

// Root-isolation recursion ran out of depth before certification.
struct DepthExhausted : PadicError {
    explicit DepthExhausted(const std::string& what = "recursion depth exhausted without certification")
        : PadicError(what) {}
};

struct NotGenerator : PadicError {
    explicit NotGenerator(const std::string& what = "element does not generate the extension") : PadicError(what) {}
};

// Rank/zero decisions are refused when they sit closer than this many digits
// to the working precision.
inline constexpr long kSafetyMarginDigits = 8;

}  // namespace padic
