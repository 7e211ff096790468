#pragma once

#include <cstdint>

#include "fibform/errors.hpp"
#include "fibform/modarith.hpp"

namespace fibform {

/// Per-prime derived data for the cyclotomic construction: the signed prime
/// p* = (-1)^((p-1)/2) p, the smallest primitive root g (tau sends zeta to
/// zeta^g), and the residue/non-residue sets.
struct PrimeContext {
    std::uint64_t p = 0;
    std::int64_t p_star = 0;
    std::uint64_t g = 0;
    ResidueSets classes;

    bool case_one() const { return p % 4 == 1; } // p* = +p
};

/// Valid for primes p >= 7. p = 5 is excluded because sqrt5 already lies in
/// Q(zeta_5) and the degree-2(p-1) Galois setup collapses; p = 3 because the
/// residue sum is 1 mod 3 rather than 0. Both get direct witnesses downstream.
inline PrimeContext make_context(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("make_context: " + std::to_string(p) + " is not prime");
    if (p < 7) throw UnsupportedPrime("make_context: p = " + std::to_string(p) + " is outside the construction");
    PrimeContext ctx;
    ctx.p = p;
    ctx.p_star = (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
    ctx.g = primitive_root(p);
    ctx.classes = quadratic_residues(p);
    return ctx;
}

} // namespace fibform
