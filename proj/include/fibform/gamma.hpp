#pragma once

#include <cstdint>
#include <utility>

#include "fibform/cyclo.hpp"
#include "fibform/dyadic.hpp"
#include "fibform/fib.hpp"
#include "fibform/prime_context.hpp"

namespace fibform {

/// Gauss period eta_R = sum over r in R of zeta^r.
inline CycloPoly gauss_period(const PrimeContext& ctx) {
    std::vector<ZAlpha> flat(ctx.p);
    for (std::uint64_t r : ctx.classes.residues) flat[r] = ZAlpha(1);
    return CycloPoly::from_flat(ctx.p, flat);
}

/// Gamma = prod over r in R of (alpha - beta zeta^r), the relative norm of
/// alpha - beta zeta down to the fixed field of tau^2. Built as a binomial
/// chain in the flat basis; each factor costs O(p) coefficient additions
/// because multiplying by alpha or by -beta = alpha - 1 never multiplies.
inline CycloPoly compute_gamma(const PrimeContext& ctx) {
    const std::uint64_t p = ctx.p;
    std::vector<ZAlpha> cur(p), nxt(p);
    cur[0] = ZAlpha(1);
    for (std::uint64_t r : ctx.classes.residues) {
        for (std::uint64_t i = 0; i < p; ++i) {
            std::uint64_t j = i + r;
            if (j >= p) j -= p;
            nxt[j] = cur[i].times_alpha_minus_one();
        }
        for (std::uint64_t i = 0; i < p; ++i) nxt[i] += cur[i].times_alpha();
        cur.swap(nxt);
    }
    return CycloPoly::from_flat(p, cur);
}

/// Gamma * tau(Gamma) must be the rational constant F_p.
inline bool verify_norm_product(const PrimeContext& ctx, const CycloPoly& gamma) {
    const CycloPoly product = poly_mul(gamma, apply_tau(gamma, ctx));
    return product == CycloPoly::constant(ctx.p, ZAlpha(fib(ctx.p)));
}

/// sigma5(Gamma) = Gamma when p = 1 mod 4, and -tau(Gamma) when p = 3 mod 4.
inline bool verify_sigma5_relation(const PrimeContext& ctx, const CycloPoly& gamma) {
    const CycloPoly image = apply_sigma5(gamma);
    if (ctx.case_one()) return image == gamma;
    return image == -apply_tau(gamma, ctx);
}

/// eta_R^2 + eta_R + (1-p*)/4 = 0, certifying sqrt(p*) = 2 eta_R + 1 (the
/// sign convention the coordinate extraction relies on).
inline bool gauss_period_check(const PrimeContext& ctx) {
    const CycloPoly eta = gauss_period(ctx);
    const mpz_class c = (1 - mpz_class(ctx.p_star)) / 4;
    const CycloPoly relation = poly_mul(eta, eta) + eta + CycloPoly::constant(ctx.p, ZAlpha(c));
    return relation.is_zero();
}

/// Exact coordinates (w, x, y, z) of Gamma = w + x sqrt5 + y sqrt(p*) +
/// z sqrt(5 p*), denominators dividing 4, with sqrt(p*) = 2 eta_R + 1.
struct KCoordinates {
    Dyadic w, x, y, z;
};

inline KCoordinates extract_K_coordinates(const PrimeContext& ctx, const CycloPoly& gamma) {
    const ResidueDecomposition dec = residue_decompose(gamma, ctx);
    // Gamma = -(dR+dN)/2 + ((dR-dN)/2) sqrt(p*); embed each Z[alpha] part on {1, sqrt5}.
    const ZAlpha rational_part2 = -(dec.dR + dec.dN); // 2 * (w + x sqrt5)
    const ZAlpha radical_part2 = dec.dR - dec.dN;     // 2 * (y + z sqrt5)
    KCoordinates k{Dyadic(2 * rational_part2.a() + rational_part2.b(), 2),
                   Dyadic(rational_part2.b(), 2),
                   Dyadic(2 * radical_part2.a() + radical_part2.b(), 2),
                   Dyadic(radical_part2.b(), 2)};

    // Rebuild 4*Gamma from the coordinates via eta_R and compare exactly.
    const ZAlpha four_rational(2 * rational_part2.a(), 2 * rational_part2.b());
    const ZAlpha four_radical(2 * radical_part2.a(), 2 * radical_part2.b());
    CycloPoly rebuilt = gauss_period(ctx) * (ZAlpha(2) * four_radical) +
                        CycloPoly::constant(ctx.p, four_rational + four_radical);
    if (rebuilt != gamma * ZAlpha(4))
        throw std::logic_error("extract_K_coordinates: reconstruction failed");
    return k;
}

/// Integer coordinates on the integral basis {1, (1+sqrt5)/2, (1+sqrt(p*))/2,
/// (1+sqrt5)(1+sqrt(p*))/4}, inverting w = a+b/2+c/2+d/4, x = b/2+d/4,
/// y = c/2+d/4, z = d/4.
struct IntegralBasisCoords {
    mpz_class a, b, c, d;
};

inline IntegralBasisCoords integral_basis_coords(const KCoordinates& k) {
    IntegralBasisCoords out;
    out.d = k.z.integer_scaled(2);
    out.b = (k.x - k.z).integer_scaled(1);
    out.c = (k.y - k.z).integer_scaled(1);
    out.a = (k.w - k.x - k.y + k.z).integer_scaled(0);
    return out;
}

} // namespace fibform
