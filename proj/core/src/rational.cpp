#include "pftau/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "pftau/errors.hpp"

namespace pftau {

Rational::Rational(long long n) : v_(0) {
    mpz_class z;
    if (n >= 0) {
        z = static_cast<unsigned long>(n);
    } else {
        // Avoid overflow on LLONG_MIN by negating in the unsigned domain.
        z = static_cast<unsigned long>(-(n + 1));
        z += 1;
        z = -z;
    }
    v_ = mpq_class(z);
}

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : inv();
    const unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                                  : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), mpq_numref(base.v_.get_mpq_t()), k);
    mpz_pow_ui(den.get_mpz_t(), mpq_denref(base.v_.get_mpq_t()), k);
    Rational r;
    r.v_ = mpq_class(num) / mpq_class(den);
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

Rational double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument < -1");
    if (n <= 0) return Rational(1);
    mpz_class z;
    mpz_2fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(z);
}

} // namespace pftau
