// Error types shared by every extcalc module.
//
// All computations are exact; anything that cannot be answered exactly is an
// error, never an approximation.  The three conditions a caller can meet are:
//   * UnsupportedPair  — the requested Ext-family has no implemented
//                        presentation (it is genuinely not an exponential
//                        functor of the source variable);
//   * OverflowError    — an exact integer result does not fit in 64 bits;
//   * InvalidParams    — arguments violate a documented precondition
//                        (non-prime p, negative degree, twist out of range,
//                        malformed expression, ...).
#pragma once

#include <stdexcept>
#include <string>

namespace extcalc {

/// Base class for all extcalc errors.
class ExtcalcError : public std::runtime_error {
public:
    explicit ExtcalcError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested (source kind, target kind) pair has no closed-form
/// presentation.  Distinct from "the answer is zero".
class UnsupportedPair : public ExtcalcError {
public:
    explicit UnsupportedPair(const std::string& what) : ExtcalcError(what) {}
};

/// An exact integer computation left the range of std::int64_t.
class OverflowError : public ExtcalcError {
public:
    explicit OverflowError(const std::string& what) : ExtcalcError(what) {}
};

/// Arguments violate a documented precondition.
class InvalidParams : public ExtcalcError {
public:
    explicit InvalidParams(const std::string& what) : ExtcalcError(what) {}
};

} // namespace extcalc
