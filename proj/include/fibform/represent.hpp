#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibform/gamma.hpp"
#include "fibform/pell.hpp"
#include "fibform/prime_context.hpp"
#include "fibform/representation.hpp"

namespace fibform {

/// represent() plus the intermediates worth inspecting: the pair as it falls
/// out of the Gamma coordinates (before orbit reduction) and the exact
/// coordinates themselves. The witnesses p = 3, 5 carry neither.
struct RepresentationDetail {
    Representation rep;
    std::optional<Representation> raw;
    std::optional<KCoordinates> coords;
};

namespace detail {

/// (u, v) read off the coordinates of Gamma = w + x sqrt5 + y sqrt(p*)
/// + z sqrt(5 p*). The case symmetry forces two coordinates to vanish;
/// the surviving two are halves of the solution.
inline Representation pair_from_coords(const PrimeContext& ctx, const KCoordinates& k) {
    Representation rep{ctx.p, case_for_prime(ctx.p), 0, 0, 4 * fib(ctx.p)};
    const bool case_one = rep.case_tag == CaseTag::CaseI;
    const Dyadic& must_vanish = case_one ? k.x : k.w;
    if (!must_vanish.is_zero() || !k.z.is_zero())
        throw std::logic_error("represent: coordinates violate the case symmetry");
    rep.u = abs((case_one ? k.w : k.x).integer_scaled(1));
    rep.v = abs(k.y.integer_scaled(1));
    return rep;
}

} // namespace detail

inline RepresentationDetail represent_detail(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("represent: " + std::to_string(p) + " is not prime");
    if (p == 2) throw UnsupportedPrime("represent: p = 2 is not covered");
    if (p == 3) return {{3, CaseTag::CaseII, 1, 1, 8}, std::nullopt, std::nullopt};
    if (p == 5) return {{5, CaseTag::CaseI, 5, 1, 20}, std::nullopt, std::nullopt};

    const PrimeContext ctx = make_context(p);
    const CycloPoly gamma = compute_gamma(ctx);
    const KCoordinates coords = extract_K_coordinates(ctx, gamma);
    Representation raw = detail::pair_from_coords(ctx, coords);

    Representation rep = raw.case_tag == CaseTag::CaseI ? reduce_in_orbit(raw) : raw;
    if (!verify_representation(rep))
        throw std::logic_error("represent: constructed pair fails the form identity");
    return {std::move(rep), std::move(raw), coords};
}

/// The verified representation of 4 F_p, orbit-reduced in CaseI.
inline Representation represent(std::uint64_t p) {
    return represent_detail(p).rep;
}

/// First k members of the CaseI solution family: represent(p) followed by
/// forward unit-orbit steps. Strictly increasing in u, each verified.
inline std::vector<Representation> generate_solutions(std::uint64_t p, std::size_t k) {
    if (is_prime(p) && p != 2 && p % 4 != 1)
        throw std::invalid_argument("generate_solutions: the solution family needs p = 1 mod 4");
    std::vector<Representation> out;
    if (k == 0) return out;
    out.reserve(k);
    out.push_back(represent(p));
    const PellUnit unit = norm_plus4_unit(p);
    while (out.size() < k) {
        Representation next = orbit_step(out.back(), unit, OrbitDirection::Forward);
        if (next.u <= out.back().u || !verify_representation(next))
            throw std::logic_error("generate_solutions: orbit step did not grow");
        out.push_back(std::move(next));
    }
    return out;
}

} // namespace fibform
