#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace pftau {

/// Arbitrary-precision rational with value semantics.
///
/// Wraps GMP's mpq_class and keeps the canonical form invariant (numerator
/// and denominator coprime, denominator positive).  The wrapper exists so
/// that generic code (Pfaffian expansion, polynomial rings) sees a plain
/// regular type instead of gmpxx expression templates.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                  // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n);
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" in base 10.  Throws ParseError on junk.
    static Rational from_string(const std::string& text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inv() const;
    /// Integer power; negative exponents invert (throws on zero base).
    Rational pow(long e) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational inv(const Rational& r) { return r.inv(); }
inline Rational pow(const Rational& r, long e) { return r.pow(e); }

/// n! as an exact integer-valued rational; n must be >= 0.
Rational factorial(long n);
/// n!! = n(n-2)(n-4)...; (-1)!! = 0!! = 1.  n must be >= -1.
Rational double_factorial(long n);
/// Binomial coefficient with integer arguments, 0 when k < 0 or k > n.
Rational binomial(long n, long k);

} // namespace pftau
