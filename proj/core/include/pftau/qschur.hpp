#pragma once

#include "pftau/partition.hpp"
#include "pftau/rational.hpp"
#include "pftau/schur.hpp"
#include "pftau/time_vector.hpp"

namespace pftau {

/// q_k(t') from exp(2 xi(t', z)) = sum_k q_k(t') z^k, i.e. q_k = h_k(2t');
/// 0 for k < 0. Throws when t' carries a nonzero even entry.
Rational q_poly(long k, const TimeVector& tprime);

/// q_{a,b}(t') = q_a q_b + 2 sum_{k=1}^{b} (-1)^k q_{a+k} q_{b-k} for
/// a, b >= 0. Antisymmetry (hence q_{a,a} = 0) follows from the
/// orthogonality of the q_k; the tests exercise it rather than the code
/// imposing it.
Rational q_ab(long a, long b, const TimeVector& tprime);

/// Q_alpha(1/2 t') = Pf[q_{alpha_i,alpha_j}(1/2 t')] over alpha stripped of
/// its padding zero and then padded back to even length with a single zero
/// part; Q_empty = 1. Takes the unhalved t'.
Rational bigQ_half(const StrictPartition& alpha, const TimeVector& tprime);

/// Cached q-function state for one t', shared across the many Q evaluations
/// of a series sum. Mirrors bigQ_half: all values are taken at 1/2 t'.
/// Not thread-safe; give each worker its own instance.
class QTable {
public:
    /// Takes the unhalved t'; throws on a nonzero even entry.
    explicit QTable(const TimeVector& tprime);

    /// q_k(1/2 t'); 0 for k < 0.
    Rational q(long k) const;

    /// q_{a,b}(1/2 t') by the defining sum; a, b >= 0.
    Rational q_pair(long a, long b) const;

    /// Q_alpha(1/2 t').
    Rational bigQ(const StrictPartition& alpha) const;

private:
    HomogeneousTable h_;  // q_k(1/2 t') = h_k(t')
};

}  // namespace pftau
