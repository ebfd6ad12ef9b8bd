#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pftau/rational.hpp"

namespace pftau {

/// Dense row-major matrix over an arbitrary ring.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Antisymmetric rational matrix stored as its strict upper triangle.
///
/// The diagonal is implicitly zero and the lower triangle is the negated
/// mirror, so antisymmetry holds by construction rather than by discipline.
class SkewMatrix {
public:
    explicit SkewMatrix(std::size_t n) : n_(n), upper_(n * (n - 1) / 2) {}

    std::size_t size() const { return n_; }

    /// Sets the entry at i < j; the mirrored entry follows automatically.
    void set_upper(std::size_t i, std::size_t j, Rational value) {
        upper_[index(i, j)] = std::move(value);
    }

    Rational at(std::size_t i, std::size_t j) const {
        if (i == j) return Rational(0);
        if (i < j) return upper_[index(i, j)];
        return -upper_[index(j, i)];
    }

    /// Full dense copy, for determinant cross-checks.
    Matrix<Rational> to_dense() const {
        Matrix<Rational> m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                m(i, j) = at(i, j);
        return m;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i >= j || j >= n_)
            throw std::out_of_range("SkewMatrix: need i < j < n");
        // Row-major packing of the strict upper triangle.
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t n_;
    std::vector<Rational> upper_;
};

} // namespace pftau
