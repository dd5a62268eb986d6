#pragma once

// Dense univariate polynomials over Int (UPolyZ) and Rat (UPolyQ).
// Coefficients are stored by ascending exponent with trailing zeros
// trimmed, so representations are unique and deg(0) is a sentinel
// (std::nullopt) rather than a number that could leak into arithmetic.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/integer.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

template <class T>
class UPoly {
public:
    UPoly() : var_("x") {}
    explicit UPoly(std::string var) : var_(std::move(var)) {}
    UPoly(std::vector<T> coeffs, std::string var = "x")
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static UPoly constant(T value, std::string var = "x") {
        return UPoly(std::vector<T>{std::move(value)}, std::move(var));
    }
    // x^k with unit coefficient
    static UPoly monomial(std::size_t k, T coeff, std::string var = "x") {
        std::vector<T> c(k + 1);
        c[k] = std::move(coeff);
        return UPoly(std::move(c), std::move(var));
    }

    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    // Degree of a known-nonzero polynomial.
    std::size_t deg() const { return c_.size() - 1; }

    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const { return c_.back(); }
    const T& trailing() const { return c_.front(); }

    UPoly operator-() const {
        UPoly r(var_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UPoly(std::move(c), a.var_);
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.var_);
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c), a.var_);
    }
    friend UPoly operator*(const UPoly& a, const T& k) {
        if (k.is_zero()) return UPoly(a.var_);
        std::vector<T> c(a.c_);
        for (auto& x : c) x *= k;
        return UPoly(std::move(c), a.var_);
    }
    friend UPoly operator*(const T& k, const UPoly& a) { return a * k; }

    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    // Multiplies by var^k.
    UPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<T> c(c_.size() + k, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return UPoly(std::move(c), var_);
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].str();
            if (i > 0) out += "*" + var_ + "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::string var_;
    std::vector<T> c_;
};

using UPolyZ = UPoly<Int>;
using UPolyQ = UPoly<Rat>;

template <class T>
UPoly<T> pow(const UPoly<T>& base, unsigned long e) {
    UPoly<T> result = UPoly<T>::constant(T(1), base.var());
    UPoly<T> b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// ---- evaluation ----

inline Int eval(const UPolyZ& p, const Int& x) {
    Int v(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeffs()[i];
    return v;
}

inline Rat eval(const UPolyQ& p, const Rat& x) {
    Rat v(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeffs()[i];
    return v;
}

// Scaled Horner: returns d^deg * p(n/d), an integer.
inline Int eval_scaled(const UPolyZ& p, const Rat& x) {
    Int num(0), dp(1);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        num = num * x.num() + p.coeffs()[i] * dp;
        dp *= x.den();
    }
    return num;
}

// Exact value of p(n/d); the Horner loop stays in integer arithmetic.
inline Rat eval(const UPolyZ& p, const Rat& x) {
    if (p.is_zero()) return Rat(0);
    return Rat(eval_scaled(p, x), pow(x.den(), p.deg()));
}

// Sign of p(x) without forming the rational value (d > 0 in canonical form).
inline int eval_sign(const UPolyZ& p, const Rat& x) {
    if (p.is_zero()) return 0;
    return eval_scaled(p, x).sign();
}

// ---- calculus / structure ----

template <class T>
UPoly<T> derivative(const UPoly<T>& p) {
    if (p.is_zero() || p.deg() == 0) return UPoly<T>(p.var());
    std::vector<T> c(p.deg());
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        c[i - 1] = p.coeffs()[i] * T(static_cast<long>(i));
    return UPoly<T>(std::move(c), p.var());
}

// Long division over a field; returns {quotient, remainder}.
inline std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& f, const UPolyQ& g) {
    if (g.is_zero()) throw ZeroPolynomial("divmod");
    UPolyQ q(f.var()), r = f;
    while (!r.is_zero() && r.deg() >= g.deg()) {
        Rat t = r.leading() / g.leading();
        std::size_t k = r.deg() - g.deg();
        UPolyQ term = UPolyQ::monomial(k, t, f.var());
        q += term;
        r -= term * g;
    }
    return {q, r};
}

// Exact quotient f / g, in the same coefficient ring; throws NotDivisible
// (with the degree of the surviving remainder) if g does not divide f.
inline UPolyZ exact_div(const UPolyZ& f, const UPolyZ& g) {
    if (g.is_zero()) throw ZeroPolynomial("exact_div");
    UPolyZ q(f.var()), r = f;
    while (!r.is_zero() && r.deg() >= g.deg()) {
        if (!divides(g.leading(), r.leading()))
            throw NotDivisible("exact_div: leading coefficient not divisible", r.deg());
        Int t = exact_div(r.leading(), g.leading());
        std::size_t k = r.deg() - g.deg();
        UPolyZ term = UPolyZ::monomial(k, t, f.var());
        q += term;
        r -= term * g;
    }
    if (!r.is_zero()) throw NotDivisible("exact_div: nonzero remainder", r.deg());
    return q;
}

inline UPolyQ exact_div(const UPolyQ& f, const UPolyQ& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw NotDivisible("exact_div: nonzero remainder", r.deg());
    return q;
}

// content > 0, content * primitive = p, primitive keeps p's leading sign.
inline std::pair<Int, UPolyZ> content_primitive(const UPolyZ& p) {
    if (p.is_zero()) throw ZeroPolynomial("content_primitive");
    Int c(0);
    for (const auto& a : p.coeffs()) c = gcd(c, a);
    std::vector<Int> prim;
    prim.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) prim.push_back(exact_div(a, c));
    return {c, UPolyZ(std::move(prim), p.var())};
}

inline UPolyZ primitive_part(const UPolyZ& p) { return content_primitive(p).second; }

// Pseudo-remainder r with lc(g)^(deg f - deg g + 1) * f = q*g + r (the
// multiplier is lc^0 = 1 when deg f < deg g). multiplier_sign reports the
// sign of the multiplier actually applied.
inline UPolyZ pseudo_rem(const UPolyZ& f, const UPolyZ& g, int* multiplier_sign = nullptr) {
    if (g.is_zero()) throw ZeroPolynomial("pseudo_rem");
    if (f.is_zero() || f.deg() < g.deg()) {
        if (multiplier_sign) *multiplier_sign = 1;
        return f;
    }
    const Int& d = g.leading();
    std::size_t e = f.deg() - g.deg() + 1;
    UPolyZ r = f;
    while (!r.is_zero() && r.deg() >= g.deg()) {
        UPolyZ t = UPolyZ::monomial(r.deg() - g.deg(), r.leading(), f.var());
        r = r * d - t * g;
        --e;
    }
    for (std::size_t i = 0; i < e; ++i) r = r * d;
    if (multiplier_sign)
        *multiplier_sign = (d.sign() < 0 && ((f.deg() - g.deg() + 1) & 1)) ? -1 : 1;
    return r;
}

// Primitive gcd with positive leading coefficient (primitive PRS; naive
// Euclid over Q blows up on the degree-56 residuals this library meets).
inline UPolyZ gcd(const UPolyZ& f0, const UPolyZ& g0) {
    if (f0.is_zero() && g0.is_zero()) throw ZeroPolynomial("gcd");
    auto normalize = [](const UPolyZ& p) {
        UPolyZ prim = primitive_part(p);
        return prim.leading().sign() < 0 ? -prim : prim;
    };
    if (f0.is_zero()) return normalize(g0);
    if (g0.is_zero()) return normalize(f0);
    UPolyZ f = primitive_part(f0), g = primitive_part(g0);
    if (f.deg() < g.deg()) std::swap(f, g);
    while (true) {
        if (g.deg() == 0) return UPolyZ::constant(Int(1), f.var());
        UPolyZ r = pseudo_rem(f, g);
        if (r.is_zero()) return normalize(g);
        f = std::move(g);
        g = primitive_part(r);
    }
}

// Primitive part of p / gcd(p, p'), positive leading coefficient: same
// roots as p, all simple.
inline UPolyZ squarefree_part(const UPolyZ& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree_part");
    if (p.deg() == 0) return UPolyZ::constant(Int(1), p.var());
    UPolyZ g = gcd(p, derivative(p));
    UPolyZ q = exact_div(primitive_part(p), g);
    UPolyZ prim = primitive_part(q);
    return prim.leading().sign() < 0 ? -prim : prim;
}

inline bool is_squarefree(const UPolyZ& p) {
    if (p.is_zero()) return false;
    if (p.deg() == 0) return true;
    return gcd(p, derivative(p)).deg() == 0;
}

// All positive divisors, by trial-division factorization.
inline std::vector<Int> divisors(const Int& n0) {
    Int n = abs(n0);
    std::vector<std::pair<Int, unsigned>> factors;
    Int p(2);
    while (p * p <= n) {
        unsigned e = 0;
        while (divides(p, n)) {
            n = exact_div(n, p);
            ++e;
        }
        if (e) factors.emplace_back(p, e);
        p += (p == Int(2)) ? Int(1) : Int(2);
    }
    if (n > Int(1)) factors.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [q, e] : factors) {
        std::size_t base = divs.size();
        Int qk(1);
        for (unsigned k = 1; k <= e; ++k) {
            qk *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * qk);
        }
    }
    return divs;
}

// The exact set { x in Q : p(x) = 0 }, ascending. Strips any x^k factor
// first (zero is reported iff the trailing coefficient vanished), then
// tests every +-(divisor of trailing)/(divisor of leading) candidate in
// lowest terms by exact Horner evaluation.
inline std::vector<Rat> rational_roots(const UPolyZ& p0) {
    if (p0.is_zero()) throw ZeroPolynomial("rational_roots");
    std::set<Rat> roots;
    std::size_t shift = 0;
    while (shift < p0.coeffs().size() && p0.coeffs()[shift].is_zero()) ++shift;
    if (shift > 0) roots.insert(Rat(0));
    std::vector<Int> c(p0.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p0.coeffs().end());
    UPolyZ p(std::move(c), p0.var());
    if (p.deg() >= 1) {
        std::vector<Int> nums = divisors(p.trailing());
        std::vector<Int> dens = divisors(p.leading());
        for (const Int& n : nums)
            for (const Int& d : dens) {
                Rat cand(n, d);
                if (eval_sign(p, cand) == 0) roots.insert(cand);
                if (eval_sign(p, -cand) == 0) roots.insert(-cand);
            }
    }
    return {roots.begin(), roots.end()};
}

// Clears denominators by the positive lcm; roots and signs are preserved.
inline UPolyZ clear_denominators(const UPolyQ& p) {
    Int l(1);
    for (const auto& a : p.coeffs()) l = lcm(l, a.den());
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(a.num() * exact_div(l, a.den()));
    return UPolyZ(std::move(c), p.var());
}

inline UPolyQ to_upoly_q(const UPolyZ& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return UPolyQ(std::move(c), p.var());
}

}  // namespace cuboid
