#pragma once

// Arbitrary-precision signed integers. GMP supplies the magnitude
// arithmetic; the wrapper pins the value semantics the rest of the
// library relies on (unique zero, exact ops, decimal round-trip).

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "cuboid/errors.hpp"

namespace cuboid {

class Int {
public:
    Int() : v_(0) {}
    Int(int n) : v_(static_cast<long>(n)) {}
    Int(long n) : v_(n) {}
    explicit Int(mpz_class v) : v_(std::move(v)) {}

    // Parses an optionally signed decimal string.
    static Int from_string(std::string_view text) {
        try {
            if (text.empty()) throw std::invalid_argument("empty");
            return Int(mpz_class(std::string(text), 10));
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid integer literal: \"" + std::string(text) + "\"");
        }
    }

    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }

    std::string str() const { return v_.get_str(); }
    const mpz_class& raw() const { return v_; }

    // Value must fit in a signed long.
    long to_long() const { return v_.get_si(); }
    bool fits_long() const { return v_.fits_slong_p(); }

    Int operator-() const { return Int(mpz_class(-v_)); }

    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

    friend Int operator+(const Int& a, const Int& b) { return Int(mpz_class(a.v_ + b.v_)); }
    friend Int operator-(const Int& a, const Int& b) { return Int(mpz_class(a.v_ - b.v_)); }
    friend Int operator*(const Int& a, const Int& b) { return Int(mpz_class(a.v_ * b.v_)); }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpz_class v_;
};

inline Int abs(const Int& a) { return Int(mpz_class(::abs(a.raw()))); }

// Nonnegative gcd; gcd(0,0) = 0.
inline Int gcd(const Int& a, const Int& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(g));
}

// Nonnegative lcm; lcm(x,0) = 0.
inline Int lcm(const Int& a, const Int& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Int(std::move(l));
}

inline Int pow(const Int& a, unsigned long e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), a.raw().get_mpz_t(), e);
    return Int(std::move(p));
}

// Quotient of an exact division; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b.is_zero()) throw NotDivisible("integer division by zero");
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    if (rem != 0) throw NotDivisible("inexact integer division");
    return Int(std::move(q));
}

inline bool divides(const Int& d, const Int& a) {
    if (d.is_zero()) return a.is_zero();
    return mpz_divisible_p(a.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

}  // namespace cuboid
