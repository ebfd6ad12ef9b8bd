#pragma once

#include "pftau/matrix.hpp"
#include "pftau/rational.hpp"

namespace pftau {

/// Pfaffian of an antisymmetric matrix by first-row expansion:
///   Pf(A) = sum_j (-1)^j A[0][j] Pf(A with rows/cols 0 and j removed).
/// Exact and ample for the dimensions this library meets (n <= ~12).
/// Pf of the empty matrix is 1.  Throws OddDimensionError for odd n.
Rational pfaffian(const SkewMatrix& a);

/// Hafnian (unsigned perfect-matching sum) of a symmetric matrix.
/// Only entries above the diagonal are read, so the result is independent
/// of the diagonal by construction.  Throws OddDimensionError for odd n.
Rational hafnian(const Matrix<Rational>& m);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Serves as the independent oracle for pfaffian(A)^2 = det(A).
Rational det_fraction_free(Matrix<Rational> m);

/// Determinant over an arbitrary commutative ring via dynamic programming
/// on column subsets (no divisions).  Cost O(2^n * n), fine for n <= ~12;
/// used for determinants of polynomial-valued matrices.
template <typename T>
T det_subset(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det_subset: square matrix required");
    if (n == 0) return T(1);
    if (n > 24) throw std::invalid_argument("det_subset: dimension too large");
    // minor[mask] = determinant of the submatrix on the first popcount(mask)
    // rows and the column set given by mask.
    std::vector<T> minor(std::size_t(1) << n, T(0));
    minor[0] = T(1);
    for (std::size_t mask = 1; mask < minor.size(); ++mask) {
        const int row = __builtin_popcountll(mask) - 1;
        T acc = T(0);
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            // Laplace expansion along the submatrix's last row: the cofactor
            // sign is (-1)^(row + column position within the subset).
            T term = m(row, j) * minor[mask ^ (std::size_t(1) << j)];
            if ((row + pos) % 2 == 1) acc -= term; else acc += term;
            ++pos;
        }
        minor[mask] = std::move(acc);
    }
    return minor[minor.size() - 1];
}

} // namespace pftau
