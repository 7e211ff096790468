#pragma once

#include <string>
#include <utility>

#include <gmpxx.h>

#include "fibform/errors.hpp"

namespace fibform {

/// Dyadic rational num / 2^k, kept normalized (num odd or k = 0). The
/// extraction pipeline only ever produces denominators dividing 4.
class Dyadic {
public:
    Dyadic() : num_(0), k_(0) {}
    Dyadic(mpz_class n) : num_(std::move(n)), k_(0) {} // NOLINT: implicit from integers
    Dyadic(long n) : num_(n), k_(0) {}                 // NOLINT
    Dyadic(mpz_class n, unsigned k) : num_(std::move(n)), k_(k) { normalize(); }

    const mpz_class& numerator() const { return num_; }
    unsigned log2_denominator() const { return k_; }
    mpz_class denominator() const { return mpz_class(1) << k_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return k_ == 0; }

    /// this * 2^s, which must be an integer.
    mpz_class integer_scaled(unsigned s) const {
        if (k_ > s) throw IntegralityViolation("dyadic value " + str() + " is not integral after scaling by 2^" + std::to_string(s));
        return num_ << (s - k_);
    }

    mpz_class as_integer() const { return integer_scaled(0); }

    Dyadic operator-() const { return Dyadic(-num_, k_); }
    Dyadic operator+(const Dyadic& o) const {
        if (k_ >= o.k_) return Dyadic(num_ + (o.num_ << (k_ - o.k_)), k_);
        return Dyadic((num_ << (o.k_ - k_)) + o.num_, o.k_);
    }
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, k_ + o.k_); }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && k_ == o.k_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    /// Exact halving (denominator grows).
    Dyadic halved() const { return Dyadic(num_, k_ + 1); }

    std::string str() const {
        if (k_ == 0) return num_.get_str();
        return num_.get_str() + "/" + denominator().get_str();
    }

private:
    void normalize() {
        while (k_ > 0 && mpz_even_p(num_.get_mpz_t())) {
            num_ >>= 1;
            --k_;
        }
    }

    mpz_class num_;
    unsigned k_;
};

} // namespace fibform
