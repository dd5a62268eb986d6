#pragma once

// Sparse multivariate polynomials over Int with named variables. Terms
// live in a map keyed by exponent vector under descending graded-lex
// order, so iteration order (and hence printing and file output) is
// canonical. No zero coefficient is ever stored.
//
// Variable alignment between operands is explicit (aligned/renamed/
// restricted helpers); arithmetic on mismatched variable lists throws
// instead of silently unifying.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/errors.hpp"
#include "cuboid/integer.hpp"
#include "cuboid/rational.hpp"
#include "cuboid/upoly.hpp"

namespace cuboid {

class MPoly {
public:
    using Exps = std::vector<std::uint32_t>;

    struct GradedLexDesc {
        bool operator()(const Exps& a, const Exps& b) const {
            unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
            unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
            if (da != db) return da > db;
            return a > b;
        }
    };
    using TermMap = std::map<Exps, Int, GradedLexDesc>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, Int value) {
        MPoly p(std::move(vars));
        p.add_term(Exps(p.vars_.size(), 0), std::move(value));
        return p;
    }
    static MPoly variable(std::vector<std::string> vars, const std::string& name) {
        MPoly p(std::move(vars));
        Exps e(p.vars_.size(), 0);
        e[p.var_index(name)] = 1;
        p.add_term(std::move(e), Int(1));
        return p;
    }
    static MPoly monomial(std::vector<std::string> vars, Exps exps, Int coeff) {
        MPoly p(std::move(vars));
        p.add_term(std::move(exps), std::move(coeff));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw UnknownVariable(name);
        return static_cast<std::size_t>(it - vars_.begin());
    }
    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    Int coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(Exps e, Int c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.accumulate(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const Int& k) {
        MPoly r(a.vars_);
        if (k.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * k);
        return r;
    }
    friend MPoly operator*(const Int& k, const MPoly& a) { return a * k; }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += term_str(e, c);
        }
        return out;
    }

    std::string term_str(const Exps& e, const Int& c) const {
        std::string out = c.str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*" + vars_[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    }

private:
    void check_same_vars(const MPoly& o) const {
        if (vars_ != o.vars_)
            throw VariableMismatch("variable lists differ; align operands first");
    }
    void accumulate(const Exps& e, Int c) { add_term(e, std::move(c)); }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MPoly pow(const MPoly& base, unsigned long e) {
    MPoly result = MPoly::constant(base.vars(), Int(1));
    MPoly b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Max exponent of var over stored terms; nullopt for the zero polynomial.
inline std::optional<std::size_t> degree(const MPoly& p, const std::string& var) {
    std::size_t i = p.var_index(var);
    if (p.is_zero()) return std::nullopt;
    std::size_t d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max<std::size_t>(d, e[i]);
    return d;
}

inline std::size_t total_degree(const MPoly& p) {
    std::size_t d = 0;
    for (const auto& [e, c] : p.terms())
        d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), 0ul));
    return d;
}

// Coefficient of var^k, over the same variable list (var slot zeroed).
inline MPoly coeff_in(const MPoly& p, const std::string& var, std::size_t k) {
    std::size_t i = p.var_index(var);
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i] != k) continue;
        MPoly::Exps e2(e);
        e2[i] = 0;
        r.add_term(std::move(e2), c);
    }
    return r;
}

inline MPoly lc_in(const MPoly& p, const std::string& var) {
    auto d = degree(p, var);
    if (!d) return MPoly(p.vars());
    return coeff_in(p, var, *d);
}

// Ascending coefficient list of p in var, each over the same variable list.
inline std::vector<MPoly> coeff_list_in(const MPoly& p, const std::string& var) {
    auto d = degree(p, var);
    std::vector<MPoly> out;
    if (!d) return out;
    out.reserve(*d + 1);
    for (std::size_t k = 0; k <= *d; ++k) out.push_back(coeff_in(p, var, k));
    return out;
}

// Embeds p into a superset variable list (UnknownVariable if some variable
// carrying a nonzero exponent has no slot in new_vars).
inline MPoly aligned(const MPoly& p, std::vector<std::string> new_vars) {
    std::vector<std::ptrdiff_t> where(p.vars().size(), -1);
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), p.vars()[i]);
        if (it != new_vars.end()) where[i] = it - new_vars.begin();
    }
    MPoly r(std::move(new_vars));
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exps e2(r.vars().size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw UnknownVariable(p.vars()[i]);
            e2[static_cast<std::size_t>(where[i])] = e[i];
        }
        r.add_term(std::move(e2), c);
    }
    return r;
}

inline MPoly renamed(const MPoly& p, const std::string& old_name, const std::string& new_name) {
    std::size_t i = p.var_index(old_name);
    std::vector<std::string> vars = p.vars();
    vars[i] = new_name;
    MPoly r(std::move(vars));
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
}

// Drops variables that never occur and sorts the rest alphabetically.
inline MPoly restricted_sorted(const MPoly& p) {
    std::vector<std::string> eff;
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        for (const auto& [e, c] : p.terms())
            if (e[i] != 0) {
                eff.push_back(p.vars()[i]);
                break;
            }
    std::sort(eff.begin(), eff.end());
    return aligned(p, std::move(eff));
}

// Structural equality after aligning both sides to a common variable list.
inline bool equivalent(const MPoly& a, const MPoly& b) {
    std::vector<std::string> all = a.vars();
    for (const auto& v : b.vars())
        if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    std::sort(all.begin(), all.end());
    return aligned(a, all).terms() == aligned(b, all).terms();
}

// Exact substitution var <- repl, expanded to canonical form. repl must be
// over the same variable list (align first).
inline MPoly substitute(const MPoly& p, const std::string& var, const MPoly& repl) {
    if (p.vars() != repl.vars())
        throw VariableMismatch("substitute: replacement over a different variable list");
    auto d = degree(p, var);
    if (!d) return MPoly(p.vars());
    // Horner in repl over the coefficient slices.
    MPoly result = coeff_in(p, var, *d);
    for (std::size_t k = *d; k-- > 0;) result = result * repl + coeff_in(p, var, k);
    return result;
}

// den^deg_var(p) * p(var <- num/den): the denominator-cleared substitution
// of a rational replacement. num and den must share p's variable list.
inline MPoly substitute_cleared(const MPoly& p, const std::string& var, const MPoly& num,
                                const MPoly& den) {
    if (p.vars() != num.vars() || p.vars() != den.vars())
        throw VariableMismatch("substitute_cleared: operands over different variable lists");
    auto d = degree(p, var);
    if (!d) return MPoly(p.vars());
    MPoly result = coeff_in(p, var, *d);
    for (std::size_t k = *d; k-- > 0;)
        result = result * num + coeff_in(p, var, k) * pow(den, *d - k);
    return result;
}

// content > 0 and primitive part preserving the original sign.
inline std::pair<Int, MPoly> content_primitive(const MPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("content_primitive");
    Int c(0);
    for (const auto& [e, coef] : p.terms()) c = gcd(c, coef);
    MPoly prim(p.vars());
    for (const auto& [e, coef] : p.terms()) prim.add_term(e, exact_div(coef, c));
    return {c, prim};
}

// Componentwise minimum exponent vector over all terms.
inline MPoly::Exps monomial_content(const MPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("monomial_content");
    MPoly::Exps m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

// Term-wise exponent subtraction; every term must dominate the monomial.
inline MPoly divide_by_monomial(const MPoly& p, const MPoly::Exps& m) {
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exps e2(e);
        for (std::size_t i = 0; i < e2.size(); ++i) {
            if (e2[i] < m[i])
                throw NotDivisible("divide_by_monomial: term " + p.term_str(e, c) +
                                   " not divisible");
            e2[i] -= m[i];
        }
        r.add_term(std::move(e2), c);
    }
    return r;
}

// Rewrites var^(2k) as newvar^k in every term; throws OddExponent (with the
// offending term) when some exponent of var is odd.
inline MPoly halve_exponents(const MPoly& p, const std::string& var, const std::string& newvar) {
    std::size_t i = p.var_index(var);
    std::vector<std::string> vars = p.vars();
    vars[i] = newvar;
    MPoly r(std::move(vars));
    for (const auto& [e, c] : p.terms()) {
        if (e[i] % 2 != 0) throw OddExponent(p.term_str(e, c));
        MPoly::Exps e2(e);
        e2[i] /= 2;
        r.add_term(std::move(e2), c);
    }
    return r;
}

// Flips the global sign so the lex-leading coefficient (w.r.t. the
// polynomial's own variable order) is positive.
inline MPoly lex_sign_normalized(const MPoly& p) {
    if (p.is_zero()) return p;
    const MPoly::Exps* lead = nullptr;
    const Int* lead_c = nullptr;
    for (const auto& [e, c] : p.terms())
        if (!lead || e > *lead) {
            lead = &e;
            lead_c = &c;
        }
    return lead_c->sign() < 0 ? -p : p;
}

// Exact evaluation at a rational point (one value per variable, aligned
// with p.vars()).
inline Rat evaluate(const MPoly& p, const std::vector<Rat>& point) {
    Rat acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rat t{c};
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

// Integer-point evaluation with per-variable power tables.
inline Int evaluate_int(const MPoly& p, const std::vector<Int>& point) {
    std::vector<std::vector<Int>> pows(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) pows[i].push_back(Int(1));
    Int acc(0);
    for (const auto& [e, c] : p.terms()) {
        Int t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (pows[i].size() <= e[i]) pows[i].push_back(pows[i].back() * point[i]);
            t *= pows[i][e[i]];
        }
        acc += t;
    }
    return acc;
}

// p must be (effectively) univariate in var.
inline UPolyZ to_univariate(const MPoly& p, const std::string& var) {
    std::size_t i = p.var_index(var);
    auto d = degree(p, var);
    std::vector<Int> c(d ? *d + 1 : 0, Int(0));
    for (const auto& [e, coef] : p.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != i && e[j] != 0)
                throw VariableMismatch("to_univariate: term " + p.term_str(e, coef) +
                                       " involves " + p.vars()[j]);
        c[e[i]] += coef;
    }
    return UPolyZ(std::move(c), var);
}

inline MPoly from_univariate(const UPolyZ& p, std::vector<std::string> vars,
                             const std::string& var) {
    MPoly r(std::move(vars));
    std::size_t i = r.var_index(var);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        MPoly::Exps e(r.vars().size(), 0);
        e[i] = static_cast<std::uint32_t>(k);
        r.add_term(std::move(e), p.coeffs()[k]);
    }
    return r;
}

// The monic quintic ansatz R(u) = u^5 + a u^4 + b u^3 + c u^2 + d u + e
// whose coefficients are themselves ring variables.
struct QuinticAnsatz {
    std::string a = "a", b = "b", c = "c", d = "d", e = "e";

    MPoly build(const std::vector<std::string>& vars, const std::string& uvar) const {
        MPoly u = MPoly::variable(vars, uvar);
        MPoly R = pow(u, 5);
        const std::string coeffs[5] = {a, b, c, d, e};
        for (std::size_t k = 0; k < 5; ++k)
            R += MPoly::variable(vars, coeffs[k]) * pow(u, 4 - k);
        return R;
    }
};

}  // namespace cuboid
