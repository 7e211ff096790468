#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>
#include <mpfr.h>

namespace fibform {

/// Consecutive Fibonacci numbers (F_n, F_{n+1}).
struct FibPair {
    std::uint64_t n = 0;
    mpz_class fn;
    mpz_class fn1;
};

/// Fast doubling: F_{2k} = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2.
inline FibPair fib_pair(std::uint64_t n) {
    mpz_class a = 0; // F_0
    mpz_class b = 1; // F_1
    if (n == 0) return {n, a, b};
    mpz_class even, odd;
    for (int i = std::bit_width(n) - 1; i >= 0; --i) {
        even = a * (2 * b - a);
        odd = a * a + b * b;
        if ((n >> i) & 1) {
            a = odd;
            b = even + odd;
        } else {
            a = even;
            b = odd;
        }
    }
    return {n, a, b};
}

inline mpz_class fib(std::uint64_t n) { return fib_pair(n).fn; }

/// |F_n - prod_{t=1}^{n-1} (alpha - beta zeta_n^t)| evaluated in complex
/// floating arithmetic at the given precision. Sanity range only; the exact
/// prime-index product lives in the gamma layer.
inline double product_formula_residual(unsigned n, unsigned precision_bits = 128) {
    if (n < 2 || n > 40) throw std::domain_error("product_formula_residual: n must be in [2, 40]");
    const mpfr_prec_t prec = precision_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : precision_bits;

    mpfr_t sqrt5, alpha, beta, theta, c, s, fr, fi, pr, pi, t0, t1;
    mpfr_inits2(prec, sqrt5, alpha, beta, theta, c, s, fr, fi, pr, pi, t0, t1, static_cast<mpfr_ptr>(nullptr));

    mpfr_sqrt_ui(sqrt5, 5, MPFR_RNDN);
    mpfr_add_ui(alpha, sqrt5, 1, MPFR_RNDN);
    mpfr_div_ui(alpha, alpha, 2, MPFR_RNDN); // (1+sqrt5)/2
    mpfr_ui_sub(beta, 1, sqrt5, MPFR_RNDN);
    mpfr_div_ui(beta, beta, 2, MPFR_RNDN); // (1-sqrt5)/2

    mpfr_set_ui(pr, 1, MPFR_RNDN);
    mpfr_set_ui(pi, 0, MPFR_RNDN);
    for (unsigned t = 1; t < n; ++t) {
        mpfr_const_pi(theta, MPFR_RNDN);
        mpfr_mul_ui(theta, theta, 2 * t, MPFR_RNDN);
        mpfr_div_ui(theta, theta, n, MPFR_RNDN);
        mpfr_sin_cos(s, c, theta, MPFR_RNDN);
        // factor = alpha - beta * e^{i theta}
        mpfr_mul(fr, beta, c, MPFR_RNDN);
        mpfr_sub(fr, alpha, fr, MPFR_RNDN);
        mpfr_mul(fi, beta, s, MPFR_RNDN);
        mpfr_neg(fi, fi, MPFR_RNDN);
        // (pr, pi) *= (fr, fi)
        mpfr_mul(t0, pr, fr, MPFR_RNDN);
        mpfr_mul(t1, pi, fi, MPFR_RNDN);
        mpfr_sub(t0, t0, t1, MPFR_RNDN);
        mpfr_mul(t1, pr, fi, MPFR_RNDN);
        mpfr_mul(pr, pi, fr, MPFR_RNDN);
        mpfr_add(pi, pr, t1, MPFR_RNDN);
        mpfr_set(pr, t0, MPFR_RNDN);
    }

    const mpz_class fn = fib(n);
    mpfr_sub_z(pr, pr, fn.get_mpz_t(), MPFR_RNDN);
    mpfr_hypot(t0, pr, pi, MPFR_RNDN);
    const double residual = mpfr_get_d(t0, MPFR_RNDN);

    mpfr_clears(sqrt5, alpha, beta, theta, c, s, fr, fi, pr, pi, t0, t1, static_cast<mpfr_ptr>(nullptr));
    return residual;
}

} // namespace fibform
