#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pftau/qschur.hpp"
#include "pftau/rational.hpp"
#include "pftau/time_vector.hpp"

namespace pftau {

/// The (A, a, w) data behind every Pfaffian-weighted partition sum: an
/// antisymmetric coefficient matrix A_{nm} over all integer indices, a
/// border vector a_n completing odd-size Pfaffians, and site weights
/// w_n = e^{-U_n} (w_n = 0 excludes the site). Entries are antisymmetric by
/// construction; weights default to 1 everywhere until set_weights.
class CoefficientFamily {
public:
    /// Structural ids. A0: sgn(n-m) cut off to a box [0, L] with border 1
    /// there; A1: sgn(n-m) everywhere, border 1; A2: sgn(n-m) on the
    /// antidiagonal n+m = 2c, border 0; A3: halved Q-pair values of a fixed
    /// odd time vector, border q_n; A4: +-1 on the adjacent pairs
    /// (m+1, m), border 1 at 0; A5/A6/A7: antisymmetric ratios of a profile
    /// f; Custom: caller-supplied entry and border.
    enum class Id { A0, A1, A2, A3, A4, A5, A6, A7, Custom };

    using ProfileFn = std::function<Rational(long)>;
    using EntryFn = std::function<Rational(long, long)>;

    static CoefficientFamily a0(long cutoff);
    static CoefficientFamily a1();
    static CoefficientFamily a2(long c);
    static CoefficientFamily a3(const TimeVector& tprime);
    static CoefficientFamily a4();
    static CoefficientFamily a5(ProfileFn f);
    static CoefficientFamily a6(ProfileFn f);
    static CoefficientFamily a7(ProfileFn f);
    /// entry is sampled only at n > m and extended antisymmetrically.
    static CoefficientFamily custom(EntryFn entry, ProfileFn border);

    Id id() const { return id_; }

    /// A_{nm}; total and antisymmetric on all integer pairs. The ratio
    /// families throw PoleError where the profile makes a denominator
    /// vanish.
    Rational entry(long n, long m) const;

    /// Border vector a_n.
    Rational border(long n) const;

    /// w_n = e^{-U_n}; 1 until set_weights installs a profile.
    Rational weight(long n) const;

    void set_weights(ProfileFn w);

    /// Deep copy with its own q-value cache, safe to hand to another
    /// thread. (A3 instances share a lazily grown cache; all other ids are
    /// stateless and fork() is a plain copy.)
    CoefficientFamily fork() const;

private:
    explicit CoefficientFamily(Id id) : id_(id) {}

    Id id_;
    long cutoff_ = 0;      // A0
    long pair_sum_ = 0;    // A2: entries live on n + m == pair_sum_
    TimeVector tprime_;    // A3
    std::shared_ptr<QTable> qtable_;  // A3; shared cache, see fork()
    ProfileFn f_;          // A5..A7
    EntryFn entry_fn_;     // Custom
    ProfileFn border_fn_;  // Custom
    ProfileFn weight_fn_;  // empty means all-ones
};

/// Pfaffian of the coefficient matrix sampled at the strictly decreasing
/// index list h, every index shifted by l: even lists use the entries
/// alone, odd lists gain a final border column, the empty list gives 1.
/// Throws std::invalid_argument unless h strictly decreases.
Rational bordered_pfaffian(const CoefficientFamily& fam, const std::vector<long>& h,
                           long l = 0);

}  // namespace pftau
