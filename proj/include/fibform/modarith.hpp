#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fibform/errors.hpp"

namespace fibform {

// Modular and integer primitives for machine-range moduli. Indices p stay
// machine-range throughout; only values like F_p are big.

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

/// Deterministic primality for all 64-bit inputs (fixed Miller-Rabin witness
/// set, sound up to 3.3e24).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_odd_prime(std::uint64_t p) { return p != 2 && is_prime(p); }

/// Legendre symbol (a/p) by Euler's criterion.
inline int legendre(std::int64_t a, std::uint64_t p) {
    if (!is_odd_prime(p)) throw NotPrime("legendre: modulus must be an odd prime");
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

/// Quadratic residues R and non-residues N of Z_p^*, each sorted ascending.
struct ResidueSets {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> residues;
    std::vector<std::uint64_t> nonresidues;
    std::vector<bool> residue_mask; // indexed by value in [0, p)

    bool is_residue(std::uint64_t x) const { return residue_mask[x % p]; }
};

inline ResidueSets quadratic_residues(std::uint64_t p) {
    if (!is_odd_prime(p)) throw NotPrime("quadratic_residues: modulus must be an odd prime");
    ResidueSets sets;
    sets.p = p;
    sets.residue_mask.assign(p, false);
    for (std::uint64_t t = 1; t <= (p - 1) / 2; ++t) {
        sets.residue_mask[mul_mod(t, t, p)] = true;
    }
    for (std::uint64_t x = 1; x < p; ++x) {
        (sets.residue_mask[x] ? sets.residues : sets.nonresidues).push_back(x);
    }
    return sets;
}

namespace detail {

inline std::vector<std::uint64_t> prime_factors_trial_division(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            factors.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

} // namespace detail

/// Smallest generator of Z_p^*, verified against every prime factor of p-1.
inline std::uint64_t primitive_root(std::uint64_t p) {
    if (!is_odd_prime(p)) throw NotPrime("primitive_root: modulus must be an odd prime");
    const auto factors = detail::prime_factors_trial_division(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generates = true;
        for (std::uint64_t q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw std::logic_error("primitive_root: no generator found"); // unreachable for prime p
}

/// Floor square root of a nonnegative big integer.
inline mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

} // namespace fibform
