#pragma once

#include <string>

#include "pftau/rational.hpp"

namespace pftau {

/// Element r + s*sqrt(2) of the quadratic ring over the rationals.
///
/// Needed only for the 2^(-l/2) prefactors of the mixed series, where l may
/// be odd; everything else in the library stays in plain rationals.
struct Root2Scalar {
    Rational r;  // rational part
    Rational s;  // coefficient of sqrt(2)

    Root2Scalar() = default;
    Root2Scalar(Rational rat) : r(std::move(rat)) {}  // NOLINT: implicit by design
    Root2Scalar(Rational rat, Rational surd) : r(std::move(rat)), s(std::move(surd)) {}

    /// 2^(k/2) for any integer k: rational for even k, a sqrt(2) multiple for odd k.
    static Root2Scalar pow2_half(long k);

    bool is_zero() const { return r.is_zero() && s.is_zero(); }
    bool is_rational() const { return s.is_zero(); }

    Root2Scalar& operator+=(const Root2Scalar& o) { r += o.r; s += o.s; return *this; }
    Root2Scalar& operator-=(const Root2Scalar& o) { r -= o.r; s -= o.s; return *this; }
    Root2Scalar& operator*=(const Root2Scalar& o);
    Root2Scalar& operator/=(const Rational& d) { r /= d; s /= d; return *this; }

    friend Root2Scalar operator/(Root2Scalar a, const Rational& d) { return a /= d; }

    friend Root2Scalar operator+(Root2Scalar a, const Root2Scalar& b) { return a += b; }
    friend Root2Scalar operator-(Root2Scalar a, const Root2Scalar& b) { return a -= b; }
    friend Root2Scalar operator*(Root2Scalar a, const Root2Scalar& b) { return a *= b; }
    Root2Scalar operator-() const { return {-r, -s}; }

    friend bool operator==(const Root2Scalar& a, const Root2Scalar& b) {
        return a.r == b.r && a.s == b.s;
    }

    /// "p/q + r/s*sqrt2"; both components always printed.
    std::string to_string() const { return r.to_string() + " + " + s.to_string() + "*sqrt2"; }
};

inline Root2Scalar& Root2Scalar::operator*=(const Root2Scalar& o) {
    // (r + s*sqrt2)(r' + s'*sqrt2) = rr' + 2ss' + (rs' + sr')*sqrt2
    Rational nr = r * o.r + Rational(2) * s * o.s;
    Rational ns = r * o.s + s * o.r;
    r = std::move(nr);
    s = std::move(ns);
    return *this;
}

inline Root2Scalar Root2Scalar::pow2_half(long k) {
    const long half = (k >= 0 ? k : k - 1) / 2;  // floor(k/2)
    Rational even = Rational(2).pow(half);
    if (k % 2 == 0) return Root2Scalar(even);
    // 2^(k/2) = 2^floor(k/2) * sqrt2 for odd k (both signs of k).
    return Root2Scalar(Rational(0), even);
}

} // namespace pftau
