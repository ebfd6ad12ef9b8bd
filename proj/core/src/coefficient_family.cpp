#include "pftau/coefficient_family.hpp"

#include <stdexcept>
#include <utility>

#include "pftau/conventions.hpp"
#include "pftau/errors.hpp"
#include "pftau/linalg.hpp"
#include "pftau/matrix.hpp"

namespace pftau {

namespace {

int sgn(long n, long m) { return n > m ? 1 : (n < m ? -1 : 0); }

Rational checked_ratio(const Rational& num, const Rational& den) {
    if (den.is_zero()) throw PoleError("coefficient entry: denominator vanishes");
    return num / den;
}

}  // namespace

CoefficientFamily CoefficientFamily::a0(long cutoff) {
    if (cutoff < 0) throw std::invalid_argument("a0: cutoff must be >= 0");
    CoefficientFamily fam(Id::A0);
    fam.cutoff_ = cutoff;
    return fam;
}

CoefficientFamily CoefficientFamily::a1() { return CoefficientFamily(Id::A1); }

CoefficientFamily CoefficientFamily::a2(long c) {
    if (c < 1) throw std::invalid_argument("a2: center must be >= 1");
    CoefficientFamily fam(Id::A2);
    fam.pair_sum_ = 2 * c + conventions::kPairSumOffset;
    return fam;
}

CoefficientFamily CoefficientFamily::a3(const TimeVector& tprime) {
    CoefficientFamily fam(Id::A3);
    fam.tprime_ = tprime;
    fam.qtable_ = std::make_shared<QTable>(tprime);
    return fam;
}

CoefficientFamily CoefficientFamily::a4() { return CoefficientFamily(Id::A4); }

CoefficientFamily CoefficientFamily::a5(ProfileFn f) {
    CoefficientFamily fam(Id::A5);
    fam.f_ = std::move(f);
    return fam;
}

CoefficientFamily CoefficientFamily::a6(ProfileFn f) {
    CoefficientFamily fam(Id::A6);
    fam.f_ = std::move(f);
    return fam;
}

CoefficientFamily CoefficientFamily::a7(ProfileFn f) {
    CoefficientFamily fam(Id::A7);
    fam.f_ = std::move(f);
    return fam;
}

CoefficientFamily CoefficientFamily::custom(EntryFn entry, ProfileFn border) {
    CoefficientFamily fam(Id::Custom);
    fam.entry_fn_ = std::move(entry);
    fam.border_fn_ = std::move(border);
    return fam;
}

Rational CoefficientFamily::entry(long n, long m) const {
    if (n == m) return Rational(0);
    switch (id_) {
        case Id::A0:
            if (n < 0 || m < 0 || n > cutoff_ || m > cutoff_) return Rational(0);
            return Rational(sgn(n, m));
        case Id::A1:
            return Rational(conventions::kConstantSign * sgn(n, m));
        case Id::A2:
            if (n + m != pair_sum_) return Rational(0);
            return Rational(conventions::kPairSumSign * sgn(n, m));
        case Id::A3: {
            if (n < 0 || m < 0) return Rational(0);
            const Rational half(1, 2);
            return n > m ? half * qtable_->q_pair(n, m)
                         : -(half * qtable_->q_pair(m, n));
        }
        case Id::A4:
            if (n == m + 1) return Rational(conventions::kAdjacentSign);
            if (m == n + 1) return Rational(-conventions::kAdjacentSign);
            return Rational(0);
        case Id::A5:
            return checked_ratio(f_(n) - f_(m), f_(n) + f_(m));
        case Id::A6:
            return checked_ratio(f_(n) - f_(m), Rational(1) - f_(n) * f_(m));
        case Id::A7: {
            const Rational sum = f_(n) + f_(m);
            return checked_ratio(f_(n) - f_(m), sum * sum);
        }
        case Id::Custom:
            return n > m ? entry_fn_(n, m) : -entry_fn_(m, n);
    }
    throw std::logic_error("CoefficientFamily::entry: unhandled id");
}

Rational CoefficientFamily::border(long n) const {
    switch (id_) {
        case Id::A0:
            return (n >= 0 && n <= cutoff_) ? Rational(1) : Rational(0);
        case Id::A1:
            return Rational(1);
        case Id::A2:
            return Rational(0);
        case Id::A3:
            return n >= 0 ? qtable_->q(n) : Rational(0);
        case Id::A4:
            return n == 0 ? Rational(1) : Rational(0);
        case Id::A5:
        case Id::A6:
            // No closed odd-size form pins these; constant 1 keeps the
            // series and Pfaffian routes consistent with each other.
            return Rational(1);
        case Id::A7:
            return checked_ratio(Rational(1), f_(n));
        case Id::Custom:
            return border_fn_(n);
    }
    throw std::logic_error("CoefficientFamily::border: unhandled id");
}

Rational CoefficientFamily::weight(long n) const {
    return weight_fn_ ? weight_fn_(n) : Rational(1);
}

void CoefficientFamily::set_weights(ProfileFn w) { weight_fn_ = std::move(w); }

CoefficientFamily CoefficientFamily::fork() const {
    CoefficientFamily copy(*this);
    if (id_ == Id::A3) copy.qtable_ = std::make_shared<QTable>(tprime_);
    return copy;
}

Rational bordered_pfaffian(const CoefficientFamily& fam, const std::vector<long>& h,
                           long l) {
    const long n = static_cast<long>(h.size());
    for (long i = 0; i + 1 < n; ++i)
        if (h[i] <= h[i + 1])
            throw std::invalid_argument("bordered_pfaffian: h must strictly decrease");
    if (n == 0) return Rational(1);
    const long size = (n % 2 == 0) ? n : n + 1;
    SkewMatrix tilde(size);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            tilde.set_upper(i, j, fam.entry(h[i] + l, h[j] + l));
    if (size != n)
        for (long i = 0; i < n; ++i) tilde.set_upper(i, n, fam.border(h[i] + l));
    return pfaffian(tilde);
}

}  // namespace pftau
