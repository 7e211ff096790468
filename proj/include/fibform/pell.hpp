#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fibform/errors.hpp"
#include "fibform/modarith.hpp"
#include "fibform/representation.hpp"

namespace fibform {

/// Continued fraction sqrt(D) = [a0; period...], minimal period, last term 2*a0.
struct CFExpansion {
    std::uint64_t D = 0;
    std::uint64_t a0 = 0;
    std::vector<std::uint64_t> period;
};

/// Standard (P,Q) recurrence from (0,1): P' = aQ - P, Q' = (D - P'^2)/Q,
/// a = (a0 + P)/Q, stopping at the first Q = 1.
inline CFExpansion cf_sqrt(std::uint64_t D) {
    const mpz_class d(static_cast<unsigned long>(D));
    if (mpz_perfect_square_p(d.get_mpz_t()))
        throw NotIrrational("cf_sqrt: " + std::to_string(D) + " is a perfect square");
    CFExpansion cf;
    cf.D = D;
    cf.a0 = mpz_class(sqrt(d)).get_ui();
    std::uint64_t P = 0, Q = 1, a = cf.a0;
    do {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (cf.a0 + P) / Q;
        cf.period.push_back(a);
    } while (Q != 1);
    return cf;
}

/// Solution of x^2 - D y^2 = norm, norm in {+1, -1}.
struct PellSolution {
    mpz_class x, y;
    int norm = 1;
};

/// Fundamental +-1 solution: the convergent one step before the period ends,
/// with norm (-1)^(period length).
inline PellSolution pell_pm1_fundamental(std::uint64_t D) {
    const CFExpansion cf = cf_sqrt(D);
    const std::size_t l = cf.period.size();
    mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (std::size_t i = 0; i < l; ++i) {
        const std::uint64_t t = i == 0 ? cf.a0 : cf.period[i - 1];
        mpz_class h = t * h1 + h2, k = t * k1 + k2;
        h2 = std::move(h1);
        k2 = std::move(k1);
        h1 = std::move(h);
        k1 = std::move(k);
    }
    return {std::move(h1), std::move(k1), l % 2 == 0 ? 1 : -1};
}

/// Unit (X + Y sqrt(p))/2 of the maximal order, X^2 - p Y^2 = norm4 in {+4, -4}.
/// X and Y share parity, so multiplication by it keeps (u, v) integral.
struct PellUnit {
    mpz_class X, Y;
    int norm4 = 4;
};

/// Minimal (Y, then X) solution of X^2 - pY^2 = +-4, p = 1 mod 4.
///
/// Either the maximal order has a half-integral unit, in which case its cube
/// is the +-1 fundamental solution and y1 = Y(pY^2 +- 3)/2 forces Y^3 <= y1
/// for p >= 5, or there is none and (2x1, 2y1) is minimal. The ascending scan
/// below therefore finds the true minimum while staying far below the naive
/// 2*y1 ceiling, which matters once y1 has thousands of digits.
inline PellUnit fundamental_unit4(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("fundamental_unit4: " + std::to_string(p) + " is not prime");
    if (p % 4 != 1 || p < 5)
        throw std::invalid_argument("fundamental_unit4: need a prime = 1 mod 4, >= 5");
    const PellSolution s1 = pell_pm1_fundamental(p);
    for (mpz_class Y = 1; Y * Y * Y <= s1.y; ++Y) {
        const mpz_class base = p * Y * Y;
        if (is_perfect_square(base - 4)) return {isqrt(base - 4), Y, -4};
        if (is_perfect_square(base + 4)) return {isqrt(base + 4), Y, 4};
    }
    return {2 * s1.x, 2 * s1.y, 4 * s1.norm};
}

/// The fundamental +4 unit: fundamental_unit4 itself, or its square
/// ((X^2 + pY^2)/2, XY) when that has norm -4.
inline PellUnit norm_plus4_unit(std::uint64_t p) {
    PellUnit f = fundamental_unit4(p);
    if (f.norm4 == 4) return f;
    return {(f.X * f.X + p * f.Y * f.Y) / 2, f.X * f.Y, 4};
}

enum class OrbitDirection { Forward, Backward };

/// Multiplies (u + v sqrt(p))/2 by the given +4 unit (or its inverse), which
/// preserves u^2 - pv^2. Results are normalized to nonnegative u, v.
inline Representation orbit_step(const Representation& rep, const PellUnit& unit,
                                 OrbitDirection dir) {
    if (rep.case_tag != CaseTag::CaseI)
        throw std::invalid_argument("orbit_step: unit orbits only apply to u^2 - pv^2");
    if (unit.norm4 != 4 || unit.X * unit.X - rep.p * mpz_class(unit.Y * unit.Y) != 4)
        throw std::invalid_argument("orbit_step: unit must have norm +4");
    const mpz_class Y = dir == OrbitDirection::Forward ? unit.Y : mpz_class(-unit.Y);
    mpz_class nu = rep.u * unit.X + rep.p * mpz_class(rep.v * Y);
    mpz_class nv = rep.u * Y + rep.v * unit.X;
    if (mpz_odd_p(nu.get_mpz_t()) || mpz_odd_p(nv.get_mpz_t()))
        throw IntegralityViolation("orbit_step: parity mismatch between unit and representation");
    Representation out = rep;
    out.u = abs(nu / 2);
    out.v = abs(nv / 2);
    return out;
}

/// Walks backward while u strictly decreases, landing on the minimal-u member
/// of the orbit. Idempotent.
inline Representation reduce_in_orbit(Representation rep) {
    const PellUnit unit = norm_plus4_unit(rep.p);
    for (;;) {
        Representation back = orbit_step(rep, unit, OrbitDirection::Backward);
        if (back.u >= rep.u) return rep;
        rep = std::move(back);
    }
}

} // namespace fibform
