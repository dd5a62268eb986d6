#pragma once

// Resultants and discriminants in a designated variable, two ways:
//
//  * direct fraction-free Bareiss elimination on the Sylvester matrix,
//    with polynomial entries (fine for small matrices, e.g. 6x6);
//  * evaluation-interpolation: specialize the remaining variables on an
//    integer grid exceeding the output degree bound, take exact integer
//    determinants, and interpolate (the only tractable route for the
//    31x31 case, and embarrassingly parallel over abscissae).
//
// Both paths are exact and must agree; the test suite cross-checks them.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/integer.hpp"
#include "cuboid/mpoly.hpp"
#include "cuboid/parallel.hpp"
#include "cuboid/rational.hpp"
#include "cuboid/upoly.hpp"

namespace cuboid {

template <class R>
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, R fill) : n_(n), a_(n * n, std::move(fill)) {}
    std::size_t dim() const { return n_; }
    R& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
    }

private:
    std::size_t n_;
    std::vector<R> a_;
};

// Exact (fraction-free) determinant; works over any integral domain with
// exact_div. All intermediate divisions are exact by construction.
template <class R>
R bareiss_determinant(SquareMatrix<R> m) {
    const std::size_t n = m.dim();
    if (n == 0) throw Error("bareiss_determinant: empty matrix");
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return m.at(0, 0) - m.at(0, 0);  // singular: zero of R
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = (k == 0) ? std::move(t) : exact_div(t, m.at(k - 1, k - 1));
            }
        }
    }
    return negate ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

// Exact multivariate quotient f / g; throws NotDivisible if g does not
// divide f (leading-term reduction under the canonical term order).
inline MPoly exact_div(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("exact_div");
    if (f.vars() != g.vars())
        throw VariableMismatch("exact_div: variable lists differ");
    const auto& glead = *g.terms().begin();
    MPoly q(f.vars());
    MPoly r = f;
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        MPoly::Exps e(rlead.first);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < glead.first[i])
                throw NotDivisible("exact_div: leading term " + r.term_str(rlead.first, rlead.second) +
                                   " not divisible");
            e[i] -= glead.first[i];
        }
        if (!divides(glead.second, rlead.second))
            throw NotDivisible("exact_div: leading coefficient not divisible");
        Int c = exact_div(rlead.second, glead.second);
        MPoly t = MPoly::monomial(f.vars(), std::move(e), std::move(c));
        q += t;
        r -= t * g;
    }
    return q;
}

inline MPoly derivative_in(const MPoly& p, const std::string& var) {
    std::size_t i = p.var_index(var);
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        MPoly::Exps e2(e);
        e2[i] -= 1;
        r.add_term(std::move(e2), c * Int(static_cast<long>(e[i])));
    }
    return r;
}

using SylvesterMatrix = SquareMatrix<MPoly>;

// The (deg f + deg g)-square Sylvester matrix of f and g in var: deg g
// banded rows of f's descending coefficients, then deg f rows of g's.
// det = Res_var(f, g).
inline SylvesterMatrix sylvester_matrix(const MPoly& f, const MPoly& g, const std::string& var) {
    if (f.vars() != g.vars())
        throw VariableMismatch("sylvester_matrix: variable lists differ");
    auto df = degree(f, var), dg = degree(g, var);
    if (!df || *df < 1) throw DegreeZero("sylvester_matrix(f)");
    if (!dg || *dg < 1) throw DegreeZero("sylvester_matrix(g)");
    const std::size_t m = *df, n = *dg;
    SylvesterMatrix s(m + n, MPoly(f.vars()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s.at(i, i + j) = coeff_in(f, var, m - j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.at(n + i, i + j) = coeff_in(g, var, n - j);
    return s;
}

// Scalar Sylvester matrix from descending coefficient lists of *formal*
// degrees m = f_desc.size()-1, n = g_desc.size()-1. Keeping the formal
// band structure is what makes grid evaluation commute with specializing
// parameters that kill the true leading coefficient.
inline SquareMatrix<Int> sylvester_scalar(const std::vector<Int>& f_desc,
                                          const std::vector<Int>& g_desc) {
    const std::size_t m = f_desc.size() - 1, n = g_desc.size() - 1;
    SquareMatrix<Int> s(m + n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s.at(i, i + j) = f_desc[j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.at(n + i, i + j) = g_desc[j];
    return s;
}

// Res_var(f, g), by fraction-free Bareiss on the Sylvester matrix.
inline MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    return bareiss_determinant(sylvester_matrix(f, g, var));
}

// Unique polynomial of degree <= degree_bound through the given points
// (Newton's divided differences, exact over Rat).
inline UPolyQ interpolate(const std::vector<std::pair<Rat, Rat>>& points,
                          std::size_t degree_bound, const std::string& var = "x") {
    const std::size_t n = points.size();
    if (n < degree_bound + 1)
        throw Error("interpolate: need at least degree_bound+1 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateAbscissa(points[i].first.str());
    std::vector<Rat> dd;
    dd.reserve(n);
    for (const auto& p : points) dd.push_back(p.second);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
    UPolyQ result = UPolyQ::constant(dd[n - 1], var);
    for (std::size_t k = n - 1; k-- > 0;) {
        UPolyQ linear({-points[k].first, Rat(1)}, var);
        result = result * linear + UPolyQ::constant(dd[k], var);
    }
    if (!result.is_zero() && result.deg() > degree_bound)
        throw DegreeExceeded(result.deg(), degree_bound);
    return result;
}

namespace detail {

// Descending coefficient lists of formal degree deg(p, var), entries over
// the remaining variables.
inline std::vector<MPoly> descending_coeffs(const MPoly& p, const std::string& var) {
    auto d = degree(p, var);
    std::vector<MPoly> out;
    out.reserve(*d + 1);
    for (std::size_t k = *d + 1; k-- > 0;) out.push_back(coeff_in(p, var, k));
    return out;
}

inline UPolyZ integral_coeffs(const UPolyQ& p, const std::string& what) {
    for (const auto& c : p.coeffs())
        if (!c.is_integer()) throw Error(what + ": non-integer interpolated coefficient " + c.str());
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(a.num());
    return UPolyZ(std::move(c), p.var());
}

}  // namespace detail

// Res_var(f, g) by evaluation-interpolation. Supports one or two remaining
// variables; abscissae are the consecutive integers 0,1,2,... so runs are
// reproducible. Grid determinants run `jobs` wide; output is identical for
// any width.
inline MPoly resultant_grid(const MPoly& f, const MPoly& g, const std::string& var,
                            unsigned jobs = 1) {
    if (f.vars() != g.vars())
        throw VariableMismatch("resultant_grid: variable lists differ");
    auto df = degree(f, var), dg = degree(g, var);
    if (!df || *df < 1) throw DegreeZero("resultant_grid(f)");
    if (!dg || *dg < 1) throw DegreeZero("resultant_grid(g)");
    const std::size_t m = *df, n = *dg;

    // Remaining variables that actually occur, with Res degree bounds
    // bound_w = n*deg_w(f) + m*deg_w(g).
    std::vector<std::size_t> rem;
    std::vector<std::size_t> bound;
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (f.vars()[i] == var) continue;
        std::size_t dfw = 0, dgw = 0;
        for (const auto& [e, c] : f.terms()) dfw = std::max<std::size_t>(dfw, e[i]);
        for (const auto& [e, c] : g.terms()) dgw = std::max<std::size_t>(dgw, e[i]);
        if (dfw == 0 && dgw == 0) continue;
        rem.push_back(i);
        bound.push_back(n * dfw + m * dgw);
    }
    if (rem.size() > 2)
        throw Error("resultant_grid: more than two remaining variables");

    std::vector<MPoly> fc = detail::descending_coeffs(f, var);
    std::vector<MPoly> gc = detail::descending_coeffs(g, var);
    auto det_at = [&](const std::vector<Int>& point) {
        std::vector<Int> fv, gv;
        fv.reserve(fc.size());
        gv.reserve(gc.size());
        for (const auto& c : fc) fv.push_back(evaluate_int(c, point));
        for (const auto& c : gc) gv.push_back(evaluate_int(c, point));
        return bareiss_determinant(sylvester_scalar(fv, gv));
    };
    std::vector<Int> base(f.vars().size(), Int(0));

    if (rem.empty()) {
        Int v = det_at(base);
        return MPoly::constant(f.vars(), std::move(v));
    }

    if (rem.size() == 1) {
        const std::size_t npts = bound[0] + 1;
        std::vector<Int> values(npts, Int(0));
        parallel_for(npts, jobs, [&](std::size_t i) {
            std::vector<Int> point = base;
            point[rem[0]] = Int(static_cast<long>(i));
            values[i] = det_at(point);
        });
        std::vector<std::pair<Rat, Rat>> pts;
        pts.reserve(npts);
        for (std::size_t i = 0; i < npts; ++i)
            pts.emplace_back(Rat(Int(static_cast<long>(i))), Rat(values[i]));
        UPolyZ res = detail::integral_coeffs(interpolate(pts, bound[0], f.vars()[rem[0]]),
                                             "resultant_grid");
        return from_univariate(res, f.vars(), f.vars()[rem[0]]);
    }

    // Two remaining variables: tensor grid, interpolate the second variable
    // along each row, then the first variable coefficient-by-coefficient.
    const std::size_t n0 = bound[0] + 1, n1 = bound[1] + 1;
    std::vector<Int> grid(n0 * n1, Int(0));
    parallel_for(n0 * n1, jobs, [&](std::size_t idx) {
        std::vector<Int> point = base;
        point[rem[0]] = Int(static_cast<long>(idx / n1));
        point[rem[1]] = Int(static_cast<long>(idx % n1));
        grid[idx] = det_at(point);
    });
    // rows[i] = coefficients (in var rem[1]) of the slice at rem[0] = i
    std::vector<UPolyZ> rows(n0);
    parallel_for(n0, jobs, [&](std::size_t i) {
        std::vector<std::pair<Rat, Rat>> pts;
        pts.reserve(n1);
        for (std::size_t j = 0; j < n1; ++j)
            pts.emplace_back(Rat(Int(static_cast<long>(j))), Rat(grid[i * n1 + j]));
        rows[i] = detail::integral_coeffs(interpolate(pts, bound[1], f.vars()[rem[1]]),
                                          "resultant_grid");
    });
    MPoly result(f.vars());
    for (std::size_t k = 0; k < n1; ++k) {
        std::vector<std::pair<Rat, Rat>> pts;
        pts.reserve(n0);
        for (std::size_t i = 0; i < n0; ++i)
            pts.emplace_back(Rat(Int(static_cast<long>(i))), Rat(rows[i].coeff(k)));
        UPolyZ ck = detail::integral_coeffs(interpolate(pts, bound[0], f.vars()[rem[0]]),
                                            "resultant_grid");
        for (std::size_t e0 = 0; e0 < ck.coeffs().size(); ++e0) {
            if (ck.coeffs()[e0].is_zero()) continue;
            MPoly::Exps e(f.vars().size(), 0);
            e[rem[0]] = static_cast<std::uint32_t>(e0);
            e[rem[1]] = static_cast<std::uint32_t>(k);
            result.add_term(std::move(e), ck.coeffs()[e0]);
        }
    }
    return result;
}

namespace detail {

inline MPoly disc_from_resultant(const MPoly& res, const MPoly& f, const std::string& var,
                                 std::size_t n) {
    MPoly lc = lc_in(f, var);
    MPoly d = exact_div(res, lc);  // always exact over an integral domain
    return (n * (n - 1) / 2) % 2 == 1 ? -d : d;
}

}  // namespace detail

// (-1)^(n(n-1)/2) * Res_var(f, f') / lc_var(f), n = deg_var f >= 2.
inline MPoly discriminant(const MPoly& f, const std::string& var) {
    auto d = degree(f, var);
    if (!d || *d < 2) throw DegreeZero("discriminant");
    return detail::disc_from_resultant(resultant(f, derivative_in(f, var), var), f, var, *d);
}

// Same value via the evaluation-interpolation path; the division by the
// leading coefficient happens after interpolating the full resultant.
inline MPoly discriminant_grid(const MPoly& f, const std::string& var, unsigned jobs = 1) {
    auto d = degree(f, var);
    if (!d || *d < 2) throw DegreeZero("discriminant_grid");
    return detail::disc_from_resultant(resultant_grid(f, derivative_in(f, var), var, jobs),
                                       f, var, *d);
}

}  // namespace cuboid
