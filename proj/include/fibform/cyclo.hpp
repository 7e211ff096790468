#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fibform/prime_context.hpp"
#include "fibform/zalpha.hpp"

namespace fibform {

/// Element of Z[alpha][zeta_p] in canonical form modulo Phi_p: coefficients
/// c_0..c_{p-2} on the basis {1, zeta, ..., zeta^{p-2}}, with the reduction
/// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}). Canonical form makes equality
/// coefficient-wise; Galois actions go through the flat view of size p, which
/// unlike the canonical basis is stable under exponent permutations.
class CycloPoly {
public:
    explicit CycloPoly(std::uint64_t p) : p_(p), c_(p - 1) {}

    static CycloPoly constant(std::uint64_t p, ZAlpha v) {
        CycloPoly f(p);
        f.c_[0] = std::move(v);
        return f;
    }

    /// zeta^e for any e (reduced mod p; e = p-1 canonicalizes).
    static CycloPoly zeta_power(std::uint64_t p, std::uint64_t e) {
        std::vector<ZAlpha> flat(p);
        flat[e % p] = ZAlpha(1);
        return from_flat(p, flat);
    }

    /// From a lift sum flat_i zeta^i with exponents 0..p-1.
    static CycloPoly from_flat(std::uint64_t p, const std::vector<ZAlpha>& flat) {
        CycloPoly f(p);
        const ZAlpha& top = flat[p - 1];
        for (std::uint64_t i = 0; i + 1 < p; ++i) f.c_[i] = flat[i] - top;
        return f;
    }

    std::uint64_t prime() const { return p_; }
    const ZAlpha& coeff(std::uint64_t i) const { return c_[i]; }
    const std::vector<ZAlpha>& coeffs() const { return c_; }

    /// Coefficients on exponents 0..p-1 (index p-1 set to zero).
    std::vector<ZAlpha> flat() const {
        std::vector<ZAlpha> out(p_);
        for (std::uint64_t i = 0; i + 1 < p_; ++i) out[i] = c_[i];
        return out;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const CycloPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycloPoly& o) const { return !(*this == o); }

    CycloPoly operator+(const CycloPoly& o) const {
        check_same_prime(o);
        CycloPoly out(p_);
        for (std::uint64_t i = 0; i + 1 < p_; ++i) out.c_[i] = c_[i] + o.c_[i];
        return out;
    }
    CycloPoly operator-(const CycloPoly& o) const {
        check_same_prime(o);
        CycloPoly out(p_);
        for (std::uint64_t i = 0; i + 1 < p_; ++i) out.c_[i] = c_[i] - o.c_[i];
        return out;
    }
    CycloPoly operator-() const {
        CycloPoly out(p_);
        for (std::uint64_t i = 0; i + 1 < p_; ++i) out.c_[i] = -c_[i];
        return out;
    }
    CycloPoly operator*(const ZAlpha& s) const {
        CycloPoly out(p_);
        for (std::uint64_t i = 0; i + 1 < p_; ++i) out.c_[i] = c_[i] * s;
        return out;
    }

    void check_same_prime(const CycloPoly& o) const {
        if (p_ != o.p_) throw std::invalid_argument("CycloPoly: mismatched primes");
    }

private:
    std::uint64_t p_;
    std::vector<ZAlpha> c_;
};

/// Cyclic convolution (zeta^p = 1) followed by canonical reduction.
inline CycloPoly poly_mul(const CycloPoly& f, const CycloPoly& g) {
    f.check_same_prime(g);
    const std::uint64_t p = f.prime();
    std::vector<ZAlpha> acc(p);
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (std::uint64_t j = 0; j + 1 < p; ++j) {
            if (g.coeff(j).is_zero()) continue;
            acc[(i + j) % p] += f.coeff(i) * g.coeff(j);
        }
    }
    return CycloPoly::from_flat(p, acc);
}

/// tau^k: exponent permutation i -> g^k i mod p on the flat support.
inline CycloPoly apply_tau(const CycloPoly& f, const PrimeContext& ctx, std::uint64_t k = 1) {
    if (f.prime() != ctx.p) throw std::invalid_argument("apply_tau: mismatched primes");
    const std::uint64_t p = ctx.p;
    const std::uint64_t gk = pow_mod(ctx.g, k % (p - 1), p);
    std::vector<ZAlpha> out(p);
    const std::vector<ZAlpha> in = f.flat();
    for (std::uint64_t i = 0; i < p; ++i) out[mul_mod(i, gk, p)] = in[i];
    return CycloPoly::from_flat(p, out);
}

/// sigma5: coefficient-wise Z[alpha] conjugation, exponents untouched.
inline CycloPoly apply_sigma5(const CycloPoly& f) {
    const std::uint64_t p = f.prime();
    std::vector<ZAlpha> flat(p);
    for (std::uint64_t i = 0; i + 1 < p; ++i) flat[i] = f.coeff(i).conj();
    return CycloPoly::from_flat(p, flat);
}

/// Flat coefficients (d_R, d_N) of an element of the fixed field of tau^2,
/// i.e. f = d_R eta_R + d_N eta_N for the Gauss periods eta over R and N.
struct ResidueDecomposition {
    ZAlpha dR;
    ZAlpha dN;
};

/// Converts canonical form to the flat basis {zeta, ..., zeta^{p-1}} by
/// d_i = c_i - c_0 (with c_{p-1} = 0) and requires d to be constant on each
/// residue class.
inline ResidueDecomposition residue_decompose(const CycloPoly& f, const PrimeContext& ctx) {
    if (f.prime() != ctx.p) throw std::invalid_argument("residue_decompose: mismatched primes");
    const ZAlpha& c0 = f.coeff(0);
    auto flat_coeff = [&](std::uint64_t i) {
        return (i + 1 < ctx.p ? f.coeff(i) : ZAlpha()) - c0;
    };
    ResidueDecomposition dec{flat_coeff(ctx.classes.residues.front()),
                             flat_coeff(ctx.classes.nonresidues.front())};
    for (std::uint64_t r : ctx.classes.residues) {
        if (flat_coeff(r) != dec.dR)
            throw ConstancyViolation("residue_decompose: coefficients not constant on R");
    }
    for (std::uint64_t n : ctx.classes.nonresidues) {
        if (flat_coeff(n) != dec.dN)
            throw ConstancyViolation("residue_decompose: coefficients not constant on N");
    }
    return dec;
}

} // namespace fibform
