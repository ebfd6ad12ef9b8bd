#include "pftau/schur.hpp"

#include <set>

namespace pftau {

Rational complete_homogeneous(long k, const TimeVector& t) {
    if (k < 0) return Rational(0);
    return HomogeneousTable(t).h(k);
}

HomogeneousTable::HomogeneousTable(const TimeVector& t) : times_(t.entries()) {
    h_.push_back(Rational(1));
}

Rational HomogeneousTable::h(long k) const {
    if (k < 0) return Rational(0);
    while (static_cast<long>(h_.size()) <= k) {
        const long n = static_cast<long>(h_.size());
        Rational acc(0);
        for (const auto& [m, tm] : times_) {
            if (m > n) break;
            acc += Rational(m) * tm * h_[n - m];
        }
        h_.push_back(acc / Rational(n));
    }
    return h_[k];
}

Rational HomogeneousTable::schur(const Partition& lambda) const {
    const long l = static_cast<long>(lambda.length());
    if (l == 0) return Rational(1);
    h(lambda.part(1) + l - 1);  // grow the cache once, outside the determinant
    Matrix<Rational> m(l, l, Rational(0));
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            const long k = lambda.part(i + 1) - (i + 1) + (j + 1);
            if (k >= 0) m(i, j) = h_[k];
        }
    return det_subset(m);
}

Rational schur(const Partition& lambda, const TimeVector& t) {
    return HomogeneousTable(t).schur(lambda);
}

SparsePoly schur_poly(const Partition& lambda) {
    const long kmax =
        lambda.empty() ? 0 : lambda.part(1) + static_cast<long>(lambda.length()) - 1;
    std::vector<SparsePoly> times;
    times.reserve(kmax);
    for (long m = 1; m <= kmax; ++m) times.push_back(SparsePoly::var(m));
    return schur_generic(lambda, times);
}

Rational schur_miwa(const Partition& lambda, const std::vector<Rational>& x) {
    const long n = static_cast<long>(x.size());
    if (static_cast<long>(lambda.length()) > n) return Rational(0);
    const std::set<Rational> distinct(x.begin(), x.end());
    if (static_cast<long>(distinct.size()) != n) {
        const long cap =
            lambda.empty() ? 1 : lambda.part(1) + static_cast<long>(lambda.length()) - 1;
        return schur(lambda, miwa_times(x, cap));
    }
    if (n == 0) return Rational(1);
    Matrix<Rational> m(n, n);
    for (long i = 0; i < n; ++i) {
        const long exponent = lambda.part(i + 1) + n - (i + 1);
        for (long j = 0; j < n; ++j) m(i, j) = x[j].pow(exponent);
    }
    Rational vandermonde(1);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) vandermonde *= x[i] - x[j];
    return det_fraction_free(std::move(m)) / vandermonde;
}

}  // namespace pftau
