#include "pftau/linalg.hpp"

#include <vector>

#include "pftau/errors.hpp"

namespace pftau {
namespace {

// Pfaffian over the active index set, expanding matchings of the first
// surviving row.  Indices are into the original matrix.
Rational pfaffian_rec(const SkewMatrix& a, std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    if (n == 0) return Rational(1);
    Rational acc(0);
    const std::size_t first = idx[0];
    for (std::size_t j = 1; j < n; ++j) {
        const Rational entry = a.at(first, idx[j]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(n - 2);
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(idx[k]);
        Rational term = entry * pfaffian_rec(a, rest);
        // Pairing the first row with the j-th remaining index carries
        // sign (-1)^(j-1).
        if (j % 2 == 0) acc -= term; else acc += term;
    }
    return acc;
}

Rational hafnian_rec(const Matrix<Rational>& m, std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    if (n == 0) return Rational(1);
    Rational acc(0);
    const std::size_t first = idx[0];
    for (std::size_t j = 1; j < n; ++j) {
        // Read the entry from whichever triangle is above the diagonal so
        // the diagonal itself never contributes.
        const std::size_t r = std::min(first, idx[j]);
        const std::size_t c = std::max(first, idx[j]);
        const Rational entry = m(r, c);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(n - 2);
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(idx[k]);
        acc += entry * hafnian_rec(m, rest);
    }
    return acc;
}

} // namespace

Rational pfaffian(const SkewMatrix& a) {
    if (a.size() % 2 != 0)
        throw OddDimensionError("pfaffian: odd dimension");
    std::vector<std::size_t> idx(a.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pfaffian_rec(a, idx);
}

Rational hafnian(const Matrix<Rational>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hafnian: square matrix required");
    if (m.rows() % 2 != 0)
        throw OddDimensionError("hafnian: odd dimension");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return hafnian_rec(m, idx);
}

Rational det_fraction_free(Matrix<Rational> m) {
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("det_fraction_free: square matrix required");
    if (n == 0) return Rational(1);
    Rational prev_pivot(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t pivot_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) { pivot_row = i; break; }
            if (m(pivot_row, k).is_zero()) return Rational(0);
            m.swap_rows(k, pivot_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss step: the division by the previous pivot is exact.
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
            }
            m(i, k) = Rational(0);
        }
        prev_pivot = m(k, k);
    }
    Rational det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace pftau
