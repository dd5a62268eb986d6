#pragma once

// Sturm chains and exact real-root counting. The chain is the canonical
// one (p, p', then negated remainders), with primitive-part reduction by
// strictly positive scalars at every step -- a negative content would
// silently flip Sturm signs, and these counts are proof obligations.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/integer.hpp"
#include "cuboid/rational.hpp"
#include "cuboid/upoly.hpp"

namespace cuboid {

// A point of the extended real line; MinusInfinity < Finite(x) < PlusInfinity.
class ExtendedPoint {
public:
    enum class Kind { MinusInfinity, Finite, PlusInfinity };

    static ExtendedPoint minus_infinity() { return ExtendedPoint(Kind::MinusInfinity, Rat(0)); }
    static ExtendedPoint plus_infinity() { return ExtendedPoint(Kind::PlusInfinity, Rat(0)); }
    static ExtendedPoint finite(Rat x) { return ExtendedPoint(Kind::Finite, std::move(x)); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const Rat& value() const { return value_; }

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator<(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.value_ < b.value_;
        if (a.kind_ == Kind::MinusInfinity) return true;
        if (a.kind_ == Kind::PlusInfinity) return false;
        return b.kind_ == Kind::PlusInfinity;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::MinusInfinity: return "-inf";
            case Kind::PlusInfinity: return "+inf";
            default: return value_.str();
        }
    }

private:
    ExtendedPoint(Kind k, Rat v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rat value_;
};

// Open interval with rational endpoints certified to contain exactly
// root_count roots.
struct Bracket {
    Rat lo;
    Rat hi;
    std::size_t root_count = 0;
};

class SturmChain {
public:
    // Canonical chain of p: primitive p, primitive p', then negated
    // primitive pseudo-remainders until exhaustion. Every reduction scalar
    // is positive, so member signs agree with the exact remainders'.
    explicit SturmChain(const UPolyZ& p) {
        if (p.is_zero()) throw ZeroPolynomial("sturm_chain");
        polys_.push_back(primitive_part(p));
        if (polys_[0].deg() == 0) return;
        polys_.push_back(primitive_part(derivative(polys_[0])));
        while (polys_.back().deg() > 0) {
            int msign = 1;
            UPolyZ r = pseudo_rem(polys_[polys_.size() - 2], polys_.back(), &msign);
            if (r.is_zero()) break;
            UPolyZ next = primitive_part(r);
            polys_.push_back(msign > 0 ? -next : next);
        }
    }

    const std::vector<UPolyZ>& polys() const { return polys_; }
    std::size_t size() const { return polys_.size(); }

private:
    std::vector<UPolyZ> polys_;
};

inline SturmChain sturm_chain(const UPolyZ& p) { return SturmChain(p); }

// Sign of p at a point of the extended line; at +-infinity the sign comes
// from the leading coefficient and the degree parity.
inline int sign_at(const UPolyZ& p, const ExtendedPoint& x) {
    if (p.is_zero()) return 0;
    switch (x.kind()) {
        case ExtendedPoint::Kind::Finite: return eval_sign(p, x.value());
        case ExtendedPoint::Kind::PlusInfinity: return p.leading().sign();
        default: return (p.deg() % 2 == 0) ? p.leading().sign() : -p.leading().sign();
    }
}

// Number of sign changes of the chain at x, zeros skipped.
inline std::size_t sign_variations(const SturmChain& c, const ExtendedPoint& x) {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& p : c.polys()) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

namespace detail {

inline std::size_t count_roots_chain(const SturmChain& c, const ExtendedPoint& lo,
                                     const ExtendedPoint& hi) {
    if (!(lo < hi)) throw Error("count_real_roots: endpoints out of order");
    if (lo.is_finite() && sign_at(c.polys()[0], lo) == 0) throw EndpointIsRoot(lo.str());
    if (hi.is_finite() && sign_at(c.polys()[0], hi) == 0) throw EndpointIsRoot(hi.str());
    std::size_t vlo = sign_variations(c, lo), vhi = sign_variations(c, hi);
    if (vlo < vhi) throw Error("count_real_roots: sign variations not monotone (broken chain)");
    return vlo - vhi;
}

}  // namespace detail

// Number of distinct real roots of p in the open interval (lo, hi); the
// finite endpoints must not be roots.
inline std::size_t count_real_roots(const UPolyZ& p, const ExtendedPoint& lo,
                                    const ExtendedPoint& hi) {
    return detail::count_roots_chain(SturmChain(p), lo, hi);
}

inline std::size_t count_real_roots(const UPolyQ& p, const ExtendedPoint& lo,
                                    const ExtendedPoint& hi) {
    return count_real_roots(clear_denominators(p), lo, hi);
}

// B = 1 + max |a_i| / |a_n|; every real root lies in (-B, B).
inline Rat cauchy_bound(const UPolyZ& p) {
    if (p.is_zero()) throw ZeroPolynomial("cauchy_bound");
    if (p.deg() < 1) throw Error("cauchy_bound: constant polynomial");
    Rat m(0);
    for (std::size_t i = 0; i < p.deg(); ++i)
        m = std::max(m, Rat(abs(p.coeff(i)), abs(p.leading())));
    return Rat(1) + m;
}

// Isolates all roots in (0, +inf) of a squarefree p with p(0) != 0 into
// disjoint open brackets, each certified by a Sturm count of exactly one.
// Bisection of (0, cauchy_bound); the midpoint slides right in smaller
// steps if it happens to hit a root.
inline std::vector<Bracket> isolate_positive_roots(const UPolyZ& p) {
    if (p.is_zero()) throw ZeroPolynomial("isolate_positive_roots");
    if (p.deg() >= 1 && !is_squarefree(p)) throw NotSquarefree("isolate_positive_roots");
    if (eval_sign(p, Rat(0)) == 0) throw ZeroIsRoot();
    std::vector<Bracket> out;
    if (p.deg() == 0) return out;

    SturmChain chain(p);
    auto count = [&](const Rat& lo, const Rat& hi) {
        return detail::count_roots_chain(chain, ExtendedPoint::finite(lo),
                                         ExtendedPoint::finite(hi));
    };
    Rat bound = cauchy_bound(p);
    std::deque<std::pair<Rat, Rat>> work{{Rat(0), bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.front();
        work.pop_front();
        std::size_t k = count(lo, hi);
        if (k == 0) continue;
        if (k == 1) {
            out.push_back({lo, hi, 1});
            continue;
        }
        Rat cut = (lo + hi) / Rat(2);
        for (long step = 3; eval_sign(p, cut) == 0; step += 2)
            cut = lo + (hi - lo) / Rat(step);
        work.emplace_front(cut, hi);
        work.emplace_front(lo, cut);
    }
    std::sort(out.begin(), out.end(), [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace cuboid
