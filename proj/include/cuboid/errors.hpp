#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuboid {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& op)
        : Error(op + ": zero polynomial") {}
};

// Exact division failed; remainder_degree is the degree of the nonzero
// remainder (univariate case) or npos when not applicable.
struct NotDivisible : Error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    explicit NotDivisible(const std::string& what, std::size_t rem_deg = npos)
        : Error(what), remainder_degree(rem_deg) {}
    std::size_t remainder_degree;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& var)
        : Error("unknown variable: " + var) {}
};

// A term with an odd exponent where an even one was required; carries the
// offending term in printable form.
struct OddExponent : Error {
    explicit OddExponent(const std::string& term)
        : Error("odd exponent in term " + term), term(term) {}
    std::string term;
};

struct DegreeZero : Error {
    explicit DegreeZero(const std::string& op)
        : Error(op + ": polynomial is constant in the eliminated variable") {}
};

struct DuplicateAbscissa : Error {
    explicit DuplicateAbscissa(const std::string& x)
        : Error("duplicate abscissa " + x) {}
};

struct DegreeExceeded : Error {
    DegreeExceeded(std::size_t got, std::size_t bound)
        : Error("interpolant degree " + std::to_string(got) +
                " exceeds bound " + std::to_string(bound)) {}
};

struct EndpointIsRoot : Error {
    explicit EndpointIsRoot(const std::string& x)
        : Error("interval endpoint " + x + " is a root") {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& op)
        : Error(op + ": polynomial is not squarefree") {}
};

struct ZeroIsRoot : Error {
    ZeroIsRoot() : Error("zero is a root of the polynomial") {}
};

struct InvalidInstance : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

}  // namespace cuboid
