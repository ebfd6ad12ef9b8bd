#include "pftau/qschur.hpp"

#include <stdexcept>

#include "pftau/linalg.hpp"

namespace pftau {

namespace {

void require_odd_support(const TimeVector& tprime) {
    for (const auto& [m, value] : tprime.entries())
        if (m % 2 == 0)
            throw std::invalid_argument("q functions: t' has a nonzero even entry");
}

const TimeVector& validated_odd(const TimeVector& tprime) {
    require_odd_support(tprime);
    return tprime;
}

}  // namespace

Rational q_poly(long k, const TimeVector& tprime) {
    if (k < 0) return Rational(0);
    require_odd_support(tprime);
    return complete_homogeneous(k, tprime.scaled(Rational(2)));
}

Rational q_ab(long a, long b, const TimeVector& tprime) {
    require_odd_support(tprime);
    // Reuse the scaled-table trick through QTable on 2t': its entries sit at
    // 1/2 * (2t') = t'.
    return QTable(tprime.scaled(Rational(2))).q_pair(a, b);
}

Rational bigQ_half(const StrictPartition& alpha, const TimeVector& tprime) {
    return QTable(tprime).bigQ(alpha);
}

QTable::QTable(const TimeVector& tprime) : h_(validated_odd(tprime)) {}

Rational QTable::q(long k) const { return k < 0 ? Rational(0) : h_.h(k); }

Rational QTable::q_pair(long a, long b) const {
    if (a < 0 || b < 0)
        throw std::invalid_argument("q_pair: indices must be nonnegative");
    Rational sum = q(a) * q(b);
    for (long k = 1; k <= b; ++k) {
        const Rational term = Rational(2) * q(a + k) * q(b - k);
        if (k % 2 == 1) sum -= term; else sum += term;
    }
    return sum;
}

Rational QTable::bigQ(const StrictPartition& alpha) const {
    const StrictPartition padded = alpha.padded_even();
    const auto& parts = padded.parts();
    const std::size_t n = parts.size();
    SkewMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            a.set_upper(i, j, q_pair(parts[i], parts[j]));
    return pfaffian(a);
}

}  // namespace pftau
