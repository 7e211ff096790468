#pragma once

#include <stdexcept>
#include <string>

namespace fibform {

// Input that must be prime is not.
struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Prime outside the range the construction covers (2, and 3/5 where excluded).
struct UnsupportedPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Flat cyclotomic coefficients are not constant on residue classes: the
// element does not lie in the quadratic subfield (or an upstream step broke).
struct ConstancyViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A value that must be an integer (or have denominator dividing 4) is not.
struct IntegralityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Continued-fraction expansion of a perfect square was requested.
struct NotIrrational : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of budget before completing.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A complete search found nothing; signals a counterexample, never expected.
struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fibform
