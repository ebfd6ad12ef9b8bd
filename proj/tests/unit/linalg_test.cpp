#include "pftau/linalg.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "pftau/errors.hpp"

using pftau::Matrix;
using pftau::Rational;
using pftau::SkewMatrix;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

SkewMatrix random_skew(std::size_t n, std::mt19937& rng) {
    SkewMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            a.set_upper(i, j, random_rational(rng));
    return a;
}

// Signed perfect-matching sum straight from the definition: each matching
// {(i1,j1),...,(in,jn)} with i1 < i2 < ... and ik < jk contributes
// sgn(i1 j1 i2 j2 ...) * prod A[ik][jk].
void matching_sum(const SkewMatrix& a, std::vector<std::size_t>& seq,
                  std::vector<bool>& used, Rational& acc) {
    const std::size_t n = a.size();
    if (seq.size() == n) {
        long inversions = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (seq[x] > seq[y]) ++inversions;
        Rational term = inversions % 2 == 0 ? Rational(1) : Rational(-1);
        for (std::size_t k = 0; k < n; k += 2) term *= a.at(seq[k], seq[k + 1]);
        acc += term;
        return;
    }
    std::size_t first = 0;
    while (used[first]) ++first;
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        seq.push_back(first);
        seq.push_back(j);
        matching_sum(a, seq, used, acc);
        seq.pop_back();
        seq.pop_back();
        used[j] = false;
    }
    used[first] = false;
}

Rational pfaffian_by_definition(const SkewMatrix& a) {
    if (a.size() == 0) return Rational(1);
    Rational acc(0);
    std::vector<std::size_t> seq;
    std::vector<bool> used(a.size(), false);
    matching_sum(a, seq, used, acc);
    return acc;
}

// Unsigned matching sum over the full symmetric matrix.
Rational hafnian_by_definition(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> order;
    std::vector<bool> used(n, false);
    Rational acc(0);
    // Recursively pair the smallest free index with every later free index.
    auto rec = [&](auto&& self) -> void {
        std::size_t first = 0;
        while (first < n && used[first]) ++first;
        if (first == n) {
            Rational term(1);
            for (std::size_t k = 0; k < order.size(); k += 2)
                term *= m(order[k], order[k + 1]);
            acc += term;
            return;
        }
        used[first] = true;
        for (std::size_t j = first + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            order.push_back(first);
            order.push_back(j);
            self(self);
            order.pop_back();
            order.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec(rec);
    return acc;
}

// Cofactor expansion along the first row; independent determinant oracle.
Rational det_by_cofactors(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Rational> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const Rational term = m(0, j) * det_by_cofactors(minor);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

}  // namespace

TEST_CASE("pfaffian small cases") {
    SkewMatrix empty(0);
    CHECK(pftau::pfaffian(empty) == Rational(1));

    SkewMatrix two(2);
    two.set_upper(0, 1, Rational(5, 7));
    CHECK(pftau::pfaffian(two) == Rational(5, 7));

    SkewMatrix ones(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) ones.set_upper(i, j, Rational(1));
    CHECK(pftau::pfaffian(ones) == Rational(1));  // 1 - 1 + 1

    SkewMatrix odd(3);
    CHECK_THROWS_AS(pftau::pfaffian(odd), pftau::OddDimensionError);
}

TEST_CASE("pfaffian agrees with the matching-sum definition") {
    std::mt19937 rng(20240811);
    for (std::size_t n : {2u, 4u, 6u}) {
        for (int rep = 0; rep < 10; ++rep) {
            SkewMatrix a = random_skew(n, rng);
            CHECK(pftau::pfaffian(a) == pfaffian_by_definition(a));
        }
    }
}

TEST_CASE("pfaffian squared equals the determinant") {
    std::mt19937 rng(987654321);
    int cases = 0;
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        for (int rep = 0; rep < 50; ++rep) {
            SkewMatrix a = random_skew(n, rng);
            const Rational pf = pftau::pfaffian(a);
            CHECK(pf * pf == pftau::det_fraction_free(a.to_dense()));
            ++cases;
        }
    }
    CHECK(cases == 200);
}

TEST_CASE("fraction-free determinant against cofactor expansion") {
    std::mt19937 rng(1357);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            Matrix<Rational> m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
            CHECK(pftau::det_fraction_free(m) == det_by_cofactors(m));
        }
    }

    Matrix<Rational> empty(0, 0);
    CHECK(pftau::det_fraction_free(empty) == Rational(1));

    Matrix<Rational> singular(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            singular(i, j) = Rational(static_cast<long>(i) + 1, static_cast<long>(j) + 1);
    // Rank one: every row is a multiple of (1, 1/2, 1/3).
    CHECK(pftau::det_fraction_free(singular) == Rational(0));
}

TEST_CASE("subset-DP determinant matches the fraction-free one") {
    std::mt19937 rng(24680);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            Matrix<Rational> m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
            CHECK(pftau::det_subset(m) == pftau::det_fraction_free(m));
        }
    }
}

TEST_CASE("hafnian small cases and diagonal independence") {
    Matrix<Rational> two(2, 2);
    two(0, 1) = Rational(3, 4);
    two(1, 0) = Rational(3, 4);
    CHECK(pftau::hafnian(two) == Rational(3, 4));

    Matrix<Rational> ones(4, 4, Rational(1));
    CHECK(pftau::hafnian(ones) == Rational(3));  // (4-1)!! matchings

    Matrix<Rational> odd(3, 3);
    CHECK_THROWS_AS(pftau::hafnian(odd), pftau::OddDimensionError);
    Matrix<Rational> empty(0, 0);
    CHECK(pftau::hafnian(empty) == Rational(1));

    std::mt19937 rng(11223344);
    Matrix<Rational> m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            m(i, j) = random_rational(rng);
            m(j, i) = m(i, j);
        }
    CHECK(pftau::hafnian(m) == hafnian_by_definition(m));
    Matrix<Rational> perturbed = m;
    for (std::size_t i = 0; i < 6; ++i) perturbed(i, i) = Rational(17, 3);
    CHECK(pftau::hafnian(perturbed) == pftau::hafnian(m));
}

namespace {

Rational random_positive(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

Rational difference_ratio_product(const std::vector<Rational>& x) {
    Rational acc(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            acc *= (x[i] - x[j]) / (x[i] + x[j]);
    return acc;
}

}  // namespace

TEST_CASE("Pfaffian of the sum-ratio kernel is the difference-ratio product") {
    std::mt19937 rng(5150);
    // Even sizes: the kernel (x_i - x_j)/(x_i + x_j) has Pfaffian equal to
    // the product of the same ratios over i < j.
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Rational> x(2 * n);
            for (Rational& v : x) v = random_positive(rng);
            SkewMatrix a(2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i)
                for (std::size_t j = i + 1; j < 2 * n; ++j)
                    a.set_upper(i, j, (x[i] - x[j]) / (x[i] + x[j]));
            CHECK(pftau::pfaffian(a) == difference_ratio_product(x));
        }
    }
    // Odd sizes: border the kernel with a column of ones.
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t odd = 2 * n - 1;
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Rational> x(odd);
            for (Rational& v : x) v = random_positive(rng);
            SkewMatrix a(odd + 1);
            for (std::size_t i = 0; i < odd; ++i) {
                for (std::size_t j = i + 1; j < odd; ++j)
                    a.set_upper(i, j, (x[i] - x[j]) / (x[i] + x[j]));
                a.set_upper(i, odd, Rational(1));
            }
            CHECK(pftau::pfaffian(a) == difference_ratio_product(x));
        }
    }
}

TEST_CASE("Pfaffian of the squared-denominator kernel splits into product times hafnian") {
    std::mt19937 rng(6174);
    // Even sizes: Pf[(x_i - x_j)/(x_i + x_j)^2] equals the difference-ratio
    // product times the hafnian of 1/(x_i + x_j).
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Rational> x(2 * n);
            for (Rational& v : x) v = random_positive(rng);
            SkewMatrix a(2 * n);
            Matrix<Rational> c(2 * n, 2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i)
                for (std::size_t j = i + 1; j < 2 * n; ++j) {
                    const Rational s = x[i] + x[j];
                    a.set_upper(i, j, (x[i] - x[j]) / (s * s));
                    c(i, j) = Rational(1) / s;
                    c(j, i) = c(i, j);
                }
            CHECK(pftau::pfaffian(a) ==
                  difference_ratio_product(x) * pftau::hafnian(c));
        }
    }
    // Odd sizes: border both kernels with the column 1/x_i.
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t odd = 2 * n - 1;
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Rational> x(odd);
            for (Rational& v : x) v = random_positive(rng);
            SkewMatrix a(odd + 1);
            Matrix<Rational> c(odd + 1, odd + 1);
            for (std::size_t i = 0; i < odd; ++i) {
                for (std::size_t j = i + 1; j < odd; ++j) {
                    const Rational s = x[i] + x[j];
                    a.set_upper(i, j, (x[i] - x[j]) / (s * s));
                    c(i, j) = Rational(1) / s;
                    c(j, i) = c(i, j);
                }
                a.set_upper(i, odd, Rational(1) / x[i]);
                c(i, odd) = Rational(1) / x[i];
                c(odd, i) = c(i, odd);
            }
            CHECK(pftau::pfaffian(a) ==
                  difference_ratio_product(x) * pftau::hafnian(c));
        }
    }
}

TEST_CASE("skew matrix storage") {
    SkewMatrix a(3);
    a.set_upper(0, 2, Rational(4));
    CHECK(a.at(0, 2) == Rational(4));
    CHECK(a.at(2, 0) == Rational(-4));
    CHECK(a.at(1, 1) == Rational(0));
    CHECK_THROWS_AS(a.set_upper(2, 1, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(a.set_upper(1, 3, Rational(1)), std::out_of_range);
}
