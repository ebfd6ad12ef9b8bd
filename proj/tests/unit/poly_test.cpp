#include "pftau/poly.hpp"

#include <stdexcept>

#include "doctest.h"
#include "pftau/rational.hpp"

using pftau::mul_trunc;
using pftau::Rational;
using pftau::SparsePoly;

namespace {

SparsePoly t(long m) { return SparsePoly::var(m); }

}  // namespace

TEST_CASE("weighted degree grades t_m with degree m") {
    CHECK(pftau::weighted_degree({}) == 0);
    CHECK(pftau::weighted_degree({{1, 2}}) == 2);
    CHECK(pftau::weighted_degree({{1, 1}, {3, 2}}) == 7);
    CHECK(t(4).degree() == 4);
    CHECK((t(1) * t(1) * t(2)).degree() == 4);
    CHECK_THROWS_AS(SparsePoly::var(0), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
    const SparsePoly p = t(1) + t(2);
    const SparsePoly sq = p * p;
    CHECK(sq == t(1) * t(1) + Rational(2) * (t(1) * t(2)) + t(2) * t(2));
    CHECK((sq - sq).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK((-p) + p == SparsePoly(0));
    SparsePoly q = p;
    q *= Rational(3, 2);
    q /= Rational(3);
    CHECK(q == p * Rational(1, 2));
}

TEST_CASE("coefficient lookup and printing") {
    const SparsePoly p = Rational(1, 2) * (t(1) * t(1)) - t(2);
    CHECK(p.coefficient({{1, 2}}) == Rational(1, 2));
    CHECK(p.coefficient({{2, 1}}) == Rational(-1));
    CHECK(p.coefficient({{5, 1}}) == Rational(0));
    CHECK(SparsePoly(0).to_string() == "0");
    CHECK(t(3).to_string() == "t3");
}

TEST_CASE("truncation on the weighted grading") {
    const SparsePoly p = t(1) + t(1) * t(2) + t(4);  // degrees 1, 3, 4
    CHECK(p.truncated(3) == t(1) + t(1) * t(2));
    CHECK(p.truncated(0).is_zero());
    CHECK(p.min_degree() == 1);
    CHECK(SparsePoly(0).min_degree() == -1);
}

TEST_CASE("variable negation flips odd total exponent") {
    const SparsePoly p = t(1) * t(1) + t(3) - t(1) * t(2);
    CHECK(p.negate_vars() == t(1) * t(1) - t(3) - t(1) * t(2));
    CHECK(p.negate_vars().negate_vars() == p);
}

TEST_CASE("numeric evaluation") {
    const SparsePoly p = Rational(1, 2) * (t(1) * t(1)) + t(2);
    CHECK(p.evaluate({Rational(3), Rational(1, 2)}) == Rational(5));
    CHECK(p.evaluate({Rational(3)}) == Rational(9, 2));  // t_2 beyond the list is 0
    CHECK(SparsePoly(Rational(7)).evaluate({}) == Rational(7));
}

TEST_CASE("truncated multiplication matches the full product") {
    const SparsePoly a = t(1) + t(2) * t(2);
    const SparsePoly b = SparsePoly(1) + t(3);
    CHECK(mul_trunc(a, b, 4) == (a * b).truncated(4));
    CHECK(mul_trunc(a, b, 7) == a * b);
    CHECK(mul_trunc(a, b, 0).is_zero());
}

TEST_CASE("exp_truncated against the hand-expanded series") {
    const SparsePoly t1 = t(1);
    SparsePoly expect = SparsePoly(1) + t1 + Rational(1, 2) * (t1 * t1) +
                        Rational(1, 6) * (t1 * t1 * t1) +
                        Rational(1, 24) * (t1 * t1 * t1 * t1);
    CHECK(pftau::exp_truncated(t1, 4) == expect);
    // Weighted truncation: through degree 2, exp(t1 + t2) keeps 1 + t1 + t2 + t1^2/2.
    CHECK(pftau::exp_truncated(t(1) + t(2), 2) ==
          SparsePoly(1) + t(1) + t(2) + Rational(1, 2) * (t(1) * t(1)));
    CHECK(pftau::exp_truncated(SparsePoly(0), 5) == SparsePoly(1));
    CHECK_THROWS_AS(pftau::exp_truncated(SparsePoly(1), 3), std::invalid_argument);
}

TEST_CASE("exp turns sums into products") {
    const SparsePoly a = t(1);
    const SparsePoly b = t(2) - t(1);
    const long cap = 6;
    CHECK(mul_trunc(pftau::exp_truncated(a, cap), pftau::exp_truncated(b, cap), cap) ==
          pftau::exp_truncated(a + b, cap));
}

TEST_CASE("inv_one_minus is the geometric series") {
    CHECK(pftau::inv_one_minus(t(1), 3) ==
          SparsePoly(1) + t(1) + t(1) * t(1) + t(1) * t(1) * t(1));
    const SparsePoly p = t(1) + t(2);
    const SparsePoly inv = pftau::inv_one_minus(p, 5);
    CHECK(mul_trunc(SparsePoly(1) - p, inv, 5) == SparsePoly(1));
    CHECK_THROWS_AS(pftau::inv_one_minus(SparsePoly(Rational(1, 2)), 3),
                    std::invalid_argument);
}
