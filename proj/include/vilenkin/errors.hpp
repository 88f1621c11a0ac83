#pragma once

#include <stdexcept>
#include <string>

namespace vilenkin {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A norm series diverges (function not in the target space).
struct DivergentNorm : Error {
    using Error::Error;
};

// An operator's defining integral diverges for the given input.
struct DivergentOperator : Error {
    using Error::Error;
};

// Parameters fail a theorem hypothesis. `hypothesis` names the violated
// inequality as stated.
struct HypothesisViolation : Error {
    std::string hypothesis;
    HypothesisViolation(const std::string& hyp, const std::string& detail)
        : Error(hyp + (detail.empty() ? "" : " -- " + detail)), hypothesis(hyp) {}
};

struct InvalidParams : Error {
    using Error::Error;
};

struct InvalidGeometry : Error {
    using Error::Error;
};

// Tail algebra would need k^m with m > 2.
struct UnrepresentableResult : Error {
    using Error::Error;
};

// A constant's denominator exponent is zero. Excluded by every validated
// hypothesis set; kept as a distinct error for unvalidated direct calls.
struct PoleAtUnitRatio : Error {
    using Error::Error;
};

// p-adic arithmetic lost all retained digits.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// All retained digits are zero but exact zero cannot be certified.
struct PrecisionIndeterminate : Error {
    using Error::Error;
};

}  // namespace vilenkin
