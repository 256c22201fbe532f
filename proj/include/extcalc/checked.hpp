// Overflow-checked 64-bit integer arithmetic.
//
// Dimensions, degrees and binomial-type counts are exact machine integers.
// Every addition/multiplication that could conceivably overflow goes through
// these helpers, which throw OverflowError instead of wrapping.
#pragma once

#include <cstdint>

#include "extcalc/errors.hpp"

namespace extcalc {

using Dim = std::int64_t;

/// a + b, throwing OverflowError if the exact sum leaves int64 range.
inline Dim checked_add(Dim a, Dim b) {
    Dim out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

/// a * b, throwing OverflowError if the exact product leaves int64 range.
inline Dim checked_mul(Dim a, Dim b) {
    Dim out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

/// base^exp for exp >= 0, overflow-checked.
inline Dim checked_pow(Dim base, int exp) {
    if (exp < 0) throw InvalidParams("checked_pow: negative exponent");
    Dim out = 1;
    for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
    return out;
}

/// True iff p is a prime number (trial division; inputs here are tiny).
inline bool is_prime(Dim p) {
    if (p < 2) return false;
    for (Dim d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Throws InvalidParams unless p is prime.
inline void require_prime(Dim p) {
    if (!is_prime(p)) throw InvalidParams("p must be prime");
}

} // namespace extcalc
