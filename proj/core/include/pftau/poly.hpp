#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pftau/rational.hpp"

namespace pftau {

/// Monomial in the time variables t_1, t_2, ...: (index, exponent) pairs with
/// ascending indices and positive exponents. The empty list is the constant
/// monomial.
using Monomial = std::vector<std::pair<long, long>>;

/// Weighted degree with deg t_m = m, the grading in which s_lambda is
/// homogeneous of degree |lambda|.
long weighted_degree(const Monomial& mono);

/// Exact sparse polynomial in t_1, t_2, ... over the rationals, graded by
/// weighted degree. Used by the closed-identity checks (symbolic-by-degree
/// mode); plain series evaluation never touches this type.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT: ring constant
    SparsePoly(Rational c);                         // NOLINT: ring constant

    /// The variable t_m; m must be >= 1.
    static SparsePoly var(long m);

    bool is_zero() const { return terms_.empty(); }

    /// Largest weighted degree among the terms; -1 for the zero polynomial.
    long degree() const;

    /// Smallest weighted degree among the terms; -1 for the zero polynomial.
    long min_degree() const;

    /// Term map, free of zero coefficients.
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// Coefficient of the given monomial (0 off the support).
    Rational coefficient(const Monomial& mono) const;

    /// Copy with all terms of weighted degree > cap dropped.
    SparsePoly truncated(long cap) const;

    /// Substitution t_m -> -t_m for every m.
    SparsePoly negate_vars() const;

    /// Numeric substitution t_m = times[m-1] (0 beyond the list).
    Rational evaluate(const std::vector<Rational>& times) const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);
    SparsePoly& operator/=(const Rational& c);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
    SparsePoly operator-() const;

    bool operator==(const SparsePoly&) const = default;

    /// Readable form like "1/2*t1^2 + -1*t2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend SparsePoly mul_trunc(const SparsePoly& a, const SparsePoly& b, long cap);

private:
    void add_term(const Monomial& mono, const Rational& coeff);

    std::map<Monomial, Rational> terms_;
};

/// Product with every term of weighted degree > cap dropped as it forms.
SparsePoly mul_trunc(const SparsePoly& a, const SparsePoly& b, long cap);

/// exp(p) through weighted degree cap; p must have no constant term.
SparsePoly exp_truncated(const SparsePoly& p, long cap);

/// (1 - p)^{-1} through weighted degree cap; p must have no constant term.
SparsePoly inv_one_minus(const SparsePoly& p, long cap);

}  // namespace pftau
