#pragma once

#include <vector>

#include "pftau/partition.hpp"
#include "pftau/rational.hpp"
#include "pftau/time_vector.hpp"

namespace pftau {

/// Product of the hook lengths of lambda; 1 for the empty partition.
Rational hook_product(const Partition& lambda);

/// Product of (1 - q^h) over the hook lengths h of lambda.
Rational hook_product_q(const Partition& lambda, const Rational& q);

/// n(lambda) = sum_i (i-1) lambda_i.
long n_statistic(const Partition& lambda);

/// Rising factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1. Negative index
/// inverts: (a)_{-k} = 1/((a-1)...(a-k)), raising PoleError on a zero factor.
Rational poch(const Rational& a, long m);

/// q-Pochhammer (x; q)_m = (1-x)(1-xq)...(1-xq^{m-1}); (x; q)_0 = 1.
/// Negative index inverts: (x; q)_{-k} = 1/prod_{j=1..k}(1-xq^{-j}), raising
/// PoleError on a zero factor.
Rational qpoch(const Rational& x, const Rational& q, long m);

/// (a)_lambda = prod_i (a-i+1)_{lambda_i}.
Rational poch(const Rational& a, const Partition& lambda);

/// (x; q)_lambda = prod_i (x q^{1-i}; q)_{lambda_i}, with x standing for q^a.
Rational qpoch(const Rational& x, const Rational& q, const Partition& lambda);

/// (a)_{lambda, beta} = prod_i (a - (i-1) beta/2)_{lambda_i} for beta in
/// {1, 2, 4}; beta = 2 recovers (a)_lambda.
Rational gen_poch(const Rational& a, const Partition& lambda, int beta);

/// c_k(a) = prod_{i=1..k} (a-i)^{k-i}, the constant relating (a)_lambda to a
/// product of single Pochhammers over the shifted parts.
Rational poch_factor_c(const Rational& a, long k);

/// c_k(a, q) with x standing for q^a: prod_{i=1..k} (1 - x q^{-i})^{k-i}.
Rational qpoch_factor_c(const Rational& x, const Rational& q, long k);

/// Closed-form value of s_lambda at the special times (hook, hook-content,
/// q-hook, q-hook-content). With frobenius_form set, evaluates the
/// Frobenius-coordinate product instead; both agree with
/// schur(lambda, special_times(kind, cap)) for cap >= |lambda|.
/// Throws PoleError when a denominator factor vanishes (e.g. q a root of
/// unity dividing a hook) and std::invalid_argument for the Miwa kind.
Rational eval_closed_form(const Partition& lambda, const SpecialTimesKind& kind,
                          bool frobenius_form = false);

/// Odd orthogonal character of the rectangular label ((p/2)^m), m = y.size(),
/// evaluated at x_j = y_j^2 so that the half-integer powers of x are Laurent
/// monomials in y. Throws std::domain_error when the denominator alternant
/// vanishes (repeated or degenerate y).
Rational so_char_rect(long p, const std::vector<Rational>& y);

}  // namespace pftau
