#pragma once

#include <ostream>
#include <utility>

#include <gmpxx.h>

#include "fibform/dyadic.hpp"

namespace fibform {

/// Element a + b*alpha of Z[alpha], alpha = (1+sqrt5)/2, with alpha^2 = alpha + 1.
/// The coefficient domain for all cyclotomic arithmetic: staying in the basis
/// {1, alpha} keeps every intermediate denominator-free.
class ZAlpha {
public:
    ZAlpha() : a_(0), b_(0) {}
    ZAlpha(mpz_class a) : a_(std::move(a)), b_(0) {} // NOLINT: implicit from integers
    ZAlpha(long a) : a_(a), b_(0) {}                 // NOLINT
    ZAlpha(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {}

    static ZAlpha alpha() { return {0, 1}; }
    static ZAlpha beta() { return {1, -1}; } // 1 - alpha

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    bool operator==(const ZAlpha& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const ZAlpha& o) const { return !(*this == o); }

    ZAlpha operator+(const ZAlpha& o) const { return {a_ + o.a_, b_ + o.b_}; }
    ZAlpha operator-(const ZAlpha& o) const { return {a_ - o.a_, b_ - o.b_}; }
    ZAlpha operator-() const { return {-a_, -b_}; }
    ZAlpha& operator+=(const ZAlpha& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }

    /// (a+b alpha)(c+d alpha) = (ac+bd) + (ad+bc+bd) alpha.
    ZAlpha operator*(const ZAlpha& o) const {
        mpz_class bd = b_ * o.b_;
        return {a_ * o.a_ + bd, a_ * o.b_ + b_ * o.a_ + bd};
    }

    /// x * alpha, additions only.
    ZAlpha times_alpha() const { return {b_, a_ + b_}; }
    /// x * (alpha - 1) = -x * beta, additions only.
    ZAlpha times_alpha_minus_one() const { return {b_ - a_, a_}; }

    /// Conjugation sigma5 on coefficients: alpha -> beta, i.e. a+b alpha -> (a+b) - b alpha.
    ZAlpha conj() const { return {a_ + b_, -b_}; }

    /// a^2 + ab - b^2; equals x * conj(x).
    mpz_class norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    /// Coordinates (a + b/2, b/2) of a + b alpha in the basis {1, sqrt5}.
    std::pair<Dyadic, Dyadic> embed_sqrt5() const {
        return {Dyadic(2 * a_ + b_, 1), Dyadic(b_, 1)};
    }

    friend std::ostream& operator<<(std::ostream& os, const ZAlpha& x) {
        os << x.a_;
        if (x.b_ >= 0) os << "+";
        return os << x.b_ << "a";
    }

private:
    mpz_class a_, b_;
};

} // namespace fibform
