#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "afschur/errors.hpp"

namespace afschur {

/// Arbitrary-precision integer coefficient type.
using Int = boost::multiprecision::cpp_int;

/// An element of Z[v, v^-1], stored as a sorted list of (exponent, coefficient)
/// pairs with no zero coefficients.  Equality is structural equality.
class Laurent {
public:
    using Term = std::pair<long, Int>;

    Laurent() = default;
    Laurent(long c);  // NOLINT(google-explicit-constructor)
    Laurent(Int c);   // NOLINT(google-explicit-constructor)

    /// c * v^e
    static Laurent term(Int c, long e);
    /// v^e
    static Laurent v_pow(long e);
    /// Builds from an arbitrary term list (merges duplicates, drops zeros).
    static Laurent from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::vector<Term>& terms() const { return terms_; }
    Int coeff(long e) const;
    long min_exp() const;  // pre: nonzero
    long max_exp() const;  // pre: nonzero

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

    /// The bar involution v -> v^-1.
    Laurent bar() const;

    /// Exact division; throws DivisionNotExact when b does not divide a.
    static Laurent div_exact(const Laurent& a, const Laurent& b);

    /// True iff every coefficient is >= 0.
    bool is_nonneg() const;
    /// True iff the element lies in v^-1 Z[v^-1].
    bool in_v_inverse() const;
    /// Sum of the terms with negative exponent.
    Laurent negative_part() const;
    /// True iff bar(p) == -p and the constant term vanishes.
    bool is_bar_antisymmetric() const;

    /// Human-readable form, e.g. "v^2 - 1 + 3v^-4"; "0" for zero.
    std::string str() const;

private:
    std::vector<Term> terms_;

    void normalize();
};

/// Gaussian binomial [c; a] via the product formula, evaluated exactly.
/// Every division performed is exact (asserted).
Laurent gauss_binom(long c, long a);

/// Balanced quantum integer [m] = (v^m - v^-m)/(v - v^-1).
Laurent quantum_int(long m);

/// [m]! = [1][2]...[m].
Laurent quantum_factorial(long m);

}  // namespace afschur
