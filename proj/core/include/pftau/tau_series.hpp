#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pftau/coefficient_family.hpp"
#include "pftau/partition.hpp"
#include "pftau/rational.hpp"
#include "pftau/root2.hpp"
#include "pftau/time_vector.hpp"

namespace pftau {

/// Caps that make every series in this header a finite sum.
///
/// max_weight bounds the weight of the Schur shapes that are summed.
/// n_rows is the row bound for operations that do not take the row count as
/// an explicit argument; operations with an explicit N argument ignore the
/// field on input and echo the N they used instead.  max_part optionally
/// bounds the largest part and frob_cap optionally bounds the Frobenius
/// arm/leg values of the double sums; negative means unbounded.  threads is
/// the worker count for the term map.  Every sum is exact, so the thread
/// count never changes the value, only the wall time.
struct TruncationSpec {
    long max_weight = 0;
    long n_rows = 0;
    long max_part = -1;
    long frob_cap = -1;
    int threads = 1;
};

/// A truncated series evaluation: the exact value, the number of enumerated
/// terms (contributing or not), and the caps that were in force.
struct SeriesValue {
    Root2Scalar value;
    long terms_included = 0;
    TruncationSpec truncation;

    /// The value as a plain rational.  Throws std::domain_error when the
    /// sqrt(2) component is nonzero (only mixed_tau produces one).
    Rational rational() const;
};

/// Both sides of a closed-form identity, truncated to the same graded degree.
struct IdentityPair {
    Rational lhs;
    Rational rhs;

    bool match() const { return lhs == rhs; }
};

/// Lattice weight profile w(n), defined on all integers.
using WeightFn = std::function<Rational(long)>;

/// Generic coupling matrix entry for the coupled double sum.
using CouplingFn = std::function<Rational(long, long)>;

/// Single-species lattice sum
///   sum over l(lambda) <= N, |lambda| <= cap of
///     Abar_h * prod_{i=1}^{N} weight(h_i) * s_lambda(t),
/// where h = shifted_parts(lambda, N) and Abar_h is bordered_pfaffian(fam, h).
/// The weight product runs over all N shifted parts, so the empty shape
/// contributes Abar_(N-1,...,0) * prod_{j<N} weight(j) rather than 1.
/// tr.max_part additionally bounds lambda_1 when set.
SeriesValue s1(const TimeVector& t, long N, const CoefficientFamily& fam,
               const TruncationSpec& tr);

/// The same sum as s1 at Miwa times t_m = (1/m) sum_i x_i^m, evaluated
/// without enumerating partitions: the two-point kernel
///   K_ij = sum_{p > q >= 0} A_pq w_p w_q (x_i^p x_j^q - x_j^p x_i^q)
/// and, for odd N, the border column B_i = sum_k a_k w_k x_i^k are expanded
/// as series in an auxiliary grading variable z (one power of z per lattice
/// level), the Pfaffian is taken over polynomials, and the z-window
/// [C(N,2), C(N,2)+cap] is divided by the Vandermonde prod_{i<j}(x_i - x_j).
/// Grading z-degree C(N,2)+d corresponds exactly to |lambda| = d, so the
/// result equals s1 truncated at the same cap.  N is the length of x;
/// N = 0 gives 1.  Throws std::invalid_argument when the x_i are not
/// distinct and nonzero.
SeriesValue s1_pfaffian_miwa(const std::vector<Rational>& x,
                             const CoefficientFamily& fam,
                             const TruncationSpec& tr);

/// Two-species sum over Frobenius coordinates
///   1 + sum over pairs alpha, beta of equal length k >= 1 of
///     Abar_alpha * Bbar_beta * s_(alpha|beta)(t)
///       * prod_i weightA(alpha_i) * prod_i weightB(-beta_i - 1),
/// with alpha, beta strictly decreasing and >= 0 (a final 0 is significant:
/// the pairs are exactly the Frobenius coordinates of shapes of rank k).
/// Truncated by |(alpha|beta)| <= cap; tr.frob_cap bounds the arm/leg
/// values when set.
SeriesValue s2(const TimeVector& t, const CoefficientFamily& famA,
               const CoefficientFamily& famB, const TruncationSpec& tr);

/// Strict-partition sum
///   sum over strict alpha with positive parts, |alpha| <= cap, of
///     Abar_alpha * prod_i weight(alpha_i) * Q_alpha(t'/2),
/// where Abar_alpha is bordered_pfaffian(fam, alpha) (border column for odd
/// length).  The empty alpha contributes 1.  t' must have odd entries only.
SeriesValue sbkp_tau(const TimeVector& tprime, const CoefficientFamily& fam,
                     const TruncationSpec& tr);

/// Mixed two-family sum, valued in Z[sqrt(2)]-like scalars:
///   sum over l(lambda) <= N, |lambda| <= cap of
///     2^(-l(lambda)/2) * prod_{i=1}^{N} weights(lambda_i - i)
///       * s_lambda(t) * Q_{h}(t'/2),
/// where h = shifted_parts(lambda, N) read as a strict partition (a final
/// zero drops out of Q).  l(lambda) counts nonzero rows, so odd lengths
/// carry one factor of sqrt(2)^(-1).
SeriesValue mixed_tau(const TimeVector& t, const TimeVector& tprime,
                      const WeightFn& weights, long N, const TruncationSpec& tr);

/// Charged variant of s1: the kernel indices are shifted by l,
///   c_l * sum over l(lambda) <= N, |lambda| <= cap of
///     bordered_pfaffian(fam, h, l) * prod_{i=1}^{N} weight(h_i + l)
///       * s_lambda(t),
/// with c_l = prod_{0 <= j < l} weight(j) for l > 0, 1 for l = 0, and
/// 1 / prod_{l <= j < 0} weight(j) for l < 0.  lbkp_tau(0, ...) is s1.
SeriesValue lbkp_tau(long l, const TimeVector& t, long N,
                     const CoefficientFamily& fam, const TruncationSpec& tr);

/// Coupled double sum over pairs of strictly decreasing lists of equal
/// length (zeros significant, as in s2):
///   1 + sum over alpha, beta of length k >= 1 of
///     Q_alpha(t'/2) * det(d(alpha_i, beta_j)) * Q_beta(t''/2),
/// truncated by sum(alpha) + sum(beta) + k <= cap, with tr.frob_cap
/// bounding the list values when set.  With
/// d(n, m) = weightA(n) * weightB(-m-1) * s_(n|m)(t) the determinant
/// collapses by the Giambelli identity and the series reproduces the s2 sum
/// with Q-kernel families on both sides.
SeriesValue coupled_bkp_tau(const TimeVector& tprime, const TimeVector& tdblprime,
                            const CouplingFn& d, const TruncationSpec& tr);

/// Closed-form identity catalog, exponential and fixed-area forms.  Both
/// sides are evaluated exactly at t and truncated to the same graded degree;
/// the operation never asserts, it reports the two values.
///
/// Names and conventions (cap = graded degree bound):
///   ALL_EXP         sum_{|lambda| <= cap} s_lambda
///                     = [exp(1/2 sum m t_m^2 + sum t_{2m-1})]_{<= cap}
///   ALL_SIGNED_EXP  like ALL_EXP with (-1)^{|lambda|} on the left and
///                     - sum t_{2m-1} in the exponent
///   FAT_EXP         sum over lambda = mu cup mu
///                     = [exp(1/2 sum m t_m^2 - sum t_{2m})]_{<= cap}
///   EVEN_ROWS_EXP   sum over lambda with even rows
///                     = [exp(1/2 sum m t_m^2 + sum t_{2m})]_{<= cap}
/// Fixed-area forms (cap = T is the area index, not a bound):
///   ALL_AREA        sum_{|lambda| = T} s_lambda(t) = s_(T)(t~) with
///                     t~_{2m-1} = t_{2m-1}, t~_{2m} = (m/2) t_m^2
///   ALL_AREA_SIGNED (-1)^T sum_{|lambda| = T} s_lambda(t) = s_(T)(t~) with
///                     t~_{2m-1} = -t_{2m-1}, t~_{2m} = (m/2) t_m^2
///   FAT_AREA        sum_{|mu| = T} s_{mu cup mu}(t) = s_(T)(t~) with
///                     t~_m = (m/2) t_m^2 - t_{2m}
///   EVEN_ROWS_AREA  sum over even-row lambda with |lambda| = 2T
///                     = s_(T)(t~) with t~_m = (m/2) t_m^2 + t_{2m}
/// Throws std::invalid_argument for an unknown name.
IdentityPair closed_identity(const std::string& name, const TimeVector& t,
                             long cap);

/// Closed-form identity catalog, finite-variable product forms:
///   ALL_PRODUCT  sum_{|lambda| <= cap} s_lambda(x)
///                  = [prod_i (1-x_i)^-1 prod_{i<j} (1-x_i x_j)^-1]_{<= cap}
///   FAT_PRODUCT  sum over lambda = mu cup mu, |lambda| <= cap, of
///                  s_lambda(x) = [prod_{i<j} (1-x_i x_j)^-1]_{<= cap}
/// The left side evaluates Schur functions at Miwa times of x; the right
/// side expands the product by total degree in x.
IdentityPair closed_identity(const std::string& name,
                             const std::vector<Rational>& x, long cap);

enum class HypergeomKind { PHI, QPHI, PSI1, PSI4, QPSI1, QPSI4 };

/// Hypergeometric-coefficient Schur sums with lattice offset n.
///
///   PHI    sum over lambda in the beta-class, l(lambda) <= N, of
///            prod_u (a_u + n)_lambda / prod_v (b_v + n)_lambda * s_lambda(t)
///          with (a)_lambda = prod_i (a - i + 1)_{lambda_i} (rising factors)
///          and beta-classes: 1 = all shapes, 2 = self-complementary shapes
///          (shifted parts pair to a common sum), 4 = fat shapes.
///   QPHI   the q-analog: (q^{a_u + n}; q)_lambda ratios; each a_u + n and
///          b_v + n must be an integer.
///   PSI4   sum over all mu with l(mu) <= N of
///            prod (a_u + n)_{mu,4} / prod (b_v + n)_{mu,4} * s_{mu cup mu}(t)
///          where (a)_{mu,beta} = prod_i (a - (i-1) beta/2)_{mu_i}.
///   PSI1   sum over even-row lambda with l(lambda) <= N of
///            prod (a_u + n)_{lambda,1} / ... * s_lambda(t).
///   QPSI4, QPSI1  the q-analogs; QPSI1 steps by q^(1/2), so q must be a
///          square of a rational (std::domain_error otherwise).
///
/// beta selects the summation class for PHI/QPHI and must be 1 (the default)
/// for the PSI kinds.  The weight cap applies to the Schur shape (so 2|mu|
/// for the PSI4 kinds).  Throws PoleError when a denominator coefficient
/// vanishes and std::invalid_argument for malformed parameters.
SeriesValue hypergeom(HypergeomKind kind, const std::vector<Rational>& a,
                      const std::vector<Rational>& b, long n, long N,
                      const TimeVector& t, const Rational& q,
                      const TruncationSpec& tr, int beta = 1);

/// Convenience overload for the plain kinds, which ignore q.
SeriesValue hypergeom(HypergeomKind kind, const std::vector<Rational>& a,
                      const std::vector<Rational>& b, long n, long N,
                      const TimeVector& t, const TruncationSpec& tr,
                      int beta = 1);

/// Resummation cross-check at principally specialized times.  Left side:
///   sum_{|lambda| <= cap} prod_n [w(p_n)/w(q_n)] * s_lambda(t_infty)
/// over Frobenius coordinates p_n = alpha_n, q_n = -beta_n - 1 of lambda,
/// with s_lambda(t_infty) from the hook closed form.  Right side: the same
/// series resummed as a sum over pairs p_1 > ... > p_k >= 0 > q_k > ... > q_1
/// of the Cauchy-determinant factor
///   prod_{n<m} (p_n-p_m)(q_n-q_m) / ((p_n-q_m)(p_m-q_n))
///     * prod_n w(p_n) / (w(q_n) (p_n-q_n) p_n! (-q_n-1)!).
/// Exact equality of the two sides validates the resummation.
IdentityPair frobenius_resummation_check(const WeightFn& weights, long cap);

}  // namespace pftau
