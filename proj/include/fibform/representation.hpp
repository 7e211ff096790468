#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "fibform/fib.hpp"

namespace fibform {

/// Which quadratic form represents 4F_p: u^2 - p v^2 for p = 1 mod 4,
/// 5u^2 + p v^2 for p = 3 mod 4.
enum class CaseTag { CaseI, CaseII };

inline std::string to_string(CaseTag tag) {
    return tag == CaseTag::CaseI ? "CaseI" : "CaseII";
}

inline CaseTag case_from_string(const std::string& s) {
    if (s == "CaseI") return CaseTag::CaseI;
    if (s == "CaseII") return CaseTag::CaseII;
    throw std::invalid_argument("unknown case tag: " + s);
}

inline CaseTag case_for_prime(std::uint64_t p) {
    return p % 4 == 1 ? CaseTag::CaseI : CaseTag::CaseII;
}

/// A solution (u, v) of the case form at prime p, with target = 4 F_p.
struct Representation {
    std::uint64_t p = 0;
    CaseTag case_tag = CaseTag::CaseI;
    mpz_class u, v;
    mpz_class target;
};

/// Value of the case form at (u, v).
inline mpz_class form_value(CaseTag tag, const mpz_class& u, const mpz_class& v, std::uint64_t p) {
    if (tag == CaseTag::CaseI) return u * u - p * mpz_class(v * v);
    return 5 * mpz_class(u * u) + p * mpz_class(v * v);
}

/// Exact recheck of the defining identity form(u, v) = 4 F_p.
inline bool verify_representation(const Representation& rep) {
    if (rep.case_tag != case_for_prime(rep.p)) return false;
    if (rep.target != 4 * fib(rep.p)) return false;
    return form_value(rep.case_tag, rep.u, rep.v, rep.p) == rep.target;
}

} // namespace fibform
