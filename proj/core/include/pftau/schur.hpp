#pragma once

#include <map>
#include <vector>

#include "pftau/linalg.hpp"
#include "pftau/partition.hpp"
#include "pftau/poly.hpp"
#include "pftau/rational.hpp"
#include "pftau/time_vector.hpp"

namespace pftau {

/// h_0 .. h_kmax of the generating function exp(sum_m t_m z^m), over any
/// commutative Q-algebra T (needs T(int), +=, *, and /= by Rational), via
/// the Newton recurrence k h_k = sum_{m=1}^{k} m t_m h_{k-m}. times[m-1]
/// holds t_m; entries beyond the list are zero.
template <typename T>
std::vector<T> homogeneous_prefix(const std::vector<T>& times, long kmax) {
    std::vector<T> h;
    h.reserve(kmax + 1);
    h.push_back(T(1));
    for (long k = 1; k <= kmax; ++k) {
        T acc(0);
        const long mmax = std::min<long>(k, static_cast<long>(times.size()));
        for (long m = 1; m <= mmax; ++m) {
            T term = times[m - 1] * h[k - m];
            term *= T(static_cast<int>(m));
            acc += term;
        }
        acc /= Rational(k);
        h.push_back(std::move(acc));
    }
    return h;
}

/// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) of order l(lambda),
/// reading h_k from a precomputed table (index k, h_k = 0 for k < 0).
template <typename T>
T schur_from_h(const Partition& lambda, const std::vector<T>& h) {
    const long l = static_cast<long>(lambda.length());
    if (l == 0) return T(1);
    Matrix<T> m(l, l, T(0));
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            const long k = lambda.part(i + 1) - (i + 1) + (j + 1);
            if (k >= 0) m(i, j) = h[k];
        }
    return det_subset(m);
}

/// s_lambda over generic ring times (used with substituted polynomial times
/// by the closed-identity checks).
template <typename T>
T schur_generic(const Partition& lambda, const std::vector<T>& times) {
    const long kmax =
        lambda.empty() ? 0 : lambda.part(1) + static_cast<long>(lambda.length()) - 1;
    return schur_from_h(lambda, homogeneous_prefix(times, kmax));
}

/// h_k(t); 0 for k < 0.
Rational complete_homogeneous(long k, const TimeVector& t);

/// Lazily grown table of h_k values for one time vector, shared across the
/// many Schur evaluations of a series sum. Not thread-safe; give each worker
/// its own instance.
class HomogeneousTable {
public:
    explicit HomogeneousTable(const TimeVector& t);

    /// h_k(t); 0 for k < 0.
    Rational h(long k) const;

    /// Jacobi-Trudi evaluation of s_lambda(t).
    Rational schur(const Partition& lambda) const;

private:
    std::map<long, Rational> times_;
    mutable std::vector<Rational> h_;
};

/// One-shot Jacobi-Trudi evaluation; s_empty = 1.
Rational schur(const Partition& lambda, const TimeVector& t);

/// s_lambda as an exact polynomial in the t variables.
SparsePoly schur_poly(const Partition& lambda);

/// Bialternant form det(x_j^{lambda_i + n - i}) / prod_{i<j}(x_i - x_j);
/// 0 when l(lambda) > n; falls back to the Jacobi-Trudi form on Miwa times
/// when the x_i are not pairwise distinct.
Rational schur_miwa(const Partition& lambda, const std::vector<Rational>& x);

}  // namespace pftau
