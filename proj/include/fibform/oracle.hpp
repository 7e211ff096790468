#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fibform/errors.hpp"
#include "fibform/fib.hpp"
#include "fibform/modarith.hpp"
#include "fibform/representation.hpp"

namespace fibform {

/// Bounds for the brute-force searches. The prime cutoff keeps F_p small
/// enough that the scans stay sub-second; the v ceiling exists because
/// u^2 - pv^2 solutions are not a priori small.
struct SearchBudget {
    mpz_class max_v = 1000000;
    std::uint64_t enabled_max_p = 59;
};

namespace detail {

inline void check_oracle_budget(std::uint64_t p, const SearchBudget& budget) {
    if (budget.max_v <= 0 || budget.enabled_max_p == 0)
        throw std::invalid_argument("oracle: budgets must be positive");
    if (p > budget.enabled_max_p)
        throw BudgetExceeded("oracle: prime " + std::to_string(p) + " above cutoff " +
                             std::to_string(budget.enabled_max_p));
}

} // namespace detail

/// Exhaustive scan for the minimal-u solution of 5u^2 + pv^2 = 4F_p. The u
/// range is complete, so NotFound would be a genuine counterexample.
inline Representation brute_force_case2(std::uint64_t p, const SearchBudget& budget = {}) {
    if (!is_prime(p) || p % 4 != 3)
        throw std::invalid_argument("brute_force_case2: need a prime = 3 mod 4");
    detail::check_oracle_budget(p, budget);
    Representation rep{p, CaseTag::CaseII, 0, 0, 4 * fib(p)};
    const mpz_class u_max = isqrt(rep.target / 5);
    for (mpz_class u = 0; u <= u_max; ++u) {
        const mpz_class rest = rep.target - 5 * mpz_class(u * u);
        if (rest % p != 0) continue;
        const mpz_class vv = rest / p;
        if (!is_perfect_square(vv)) continue;
        rep.u = u;
        rep.v = isqrt(vv);
        return rep;
    }
    throw NotFound("brute_force_case2: no representation at p = " + std::to_string(p));
}

/// Bounded scan for the minimal-v solution of u^2 - pv^2 = 4F_p, testing
/// 4F_p + pv^2 for squareness with the increment p(2v+1) carried along.
inline Representation brute_force_case1(std::uint64_t p, const SearchBudget& budget = {}) {
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("brute_force_case1: need a prime = 1 mod 4");
    detail::check_oracle_budget(p, budget);
    Representation rep{p, CaseTag::CaseI, 0, 0, 4 * fib(p)};
    mpz_class candidate = rep.target;
    for (mpz_class v = 0; v <= budget.max_v; ++v) {
        if (is_perfect_square(candidate)) {
            rep.u = isqrt(candidate);
            rep.v = v;
            return rep;
        }
        candidate += p * mpz_class(2 * v + 1);
    }
    throw BudgetExceeded("brute_force_case1: no solution with v <= " + budget.max_v.get_str() +
                         " at p = " + std::to_string(p));
}

} // namespace fibform
