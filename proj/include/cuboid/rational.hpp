#pragma once

// Canonical rationals over Int: gcd(|num|, den) = 1 and den > 0, so
// equality is structural. Comparisons cross-multiply canonical forms;
// nothing here ever rounds.

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "cuboid/errors.hpp"
#include "cuboid/integer.hpp"

namespace cuboid {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}

    // Canonicalizes; throws ZeroDenominator if den = 0.
    Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominator();
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        if (num_.is_zero()) den_ = Int(1);
    }

    // Parses "n" or "n/d" with decimal components.
    static Rat from_string(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rat(Int::from_string(text));
        return Rat(Int::from_string(text.substr(0, slash)),
                   Int::from_string(text.substr(slash + 1)));
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    std::string str() const {
        return den_.is_one() ? num_.str() : num_.str() + "/" + den_.str();
    }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw ZeroDenominator();
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Denominators are positive, so cross-multiplication preserves order.
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    Int num_;
    Int den_;
};

inline int sign(const Rat& x) { return x.sign(); }
inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

}  // namespace cuboid
