#pragma once

#include <map>
#include <string>
#include <vector>

#include "pftau/rational.hpp"

namespace pftau {

/// Finitely supported time vector (t_1, t_2, t_3, ...). The odd_only flag
/// marks BKP-side times t', whose even entries must stay zero.
class TimeVector {
public:
    TimeVector() = default;
    explicit TimeVector(bool odd_only) : odd_only_(odd_only) {}

    static TimeVector from_entries(const std::map<long, Rational>& entries,
                                   bool odd_only = false);

    /// Parses "m:val" pairs, e.g. "1:1,3:-2/5"; empty text is the zero vector.
    static TimeVector from_string(const std::string& text, bool odd_only = false);

    bool odd_only() const { return odd_only_; }
    bool is_zero() const { return entries_.empty(); }

    /// t_m; zero off the support. Throws on m < 1.
    Rational at(long m) const;

    /// Sets t_m, erasing zero values. Throws on m < 1, or on a nonzero even
    /// entry when the vector is odd-only.
    void set(long m, Rational value);

    const std::map<long, Rational>& entries() const { return entries_; }

    /// (t_1, ..., t_kmax) as a dense list.
    std::vector<Rational> dense(long kmax) const;

    /// Entrywise scaling f*t, keeping the odd-only flag.
    TimeVector scaled(const Rational& f) const;

    /// t -> -t.
    TimeVector negated() const { return scaled(Rational(-1)); }

    /// Value equality on the entries; the odd-only marker does not take part.
    friend bool operator==(const TimeVector& a, const TimeVector& b) {
        return a.entries_ == b.entries_;
    }

    /// "1:1,3:-2/5"; the zero vector prints as "".
    std::string to_string() const;

private:
    std::map<long, Rational> entries_;
    bool odd_only_ = false;
};

/// Comma-separated rational list, e.g. "1/2,-1/3"; empty text is the empty
/// list. Throws ParseError on junk.
std::vector<Rational> parse_rational_list(const std::string& text);

/// Tags for the special time specializations that admit closed-form Schur
/// evaluations, plus the Miwa substitution.
class SpecialTimesKind {
public:
    enum class Tag {
        TInfty,  ///< (1, 0, 0, ...)
        TA1,     ///< t_m = a/m
        TInfQ,   ///< t_m = 1/(m(1-q^m))
        TAQ,     ///< t_m = (1-q^{am})/(m(1-q^m)), integer a
        Miwa,    ///< t_m = (a/m) sum_i x_i^m
    };

    static SpecialTimesKind t_infty();
    static SpecialTimesKind t_a1(Rational a);
    static SpecialTimesKind t_inf_q(Rational q);
    static SpecialTimesKind t_a_q(long a, Rational q);
    static SpecialTimesKind miwa(std::vector<Rational> x, Rational scale = Rational(1));

    /// Parses "tinf", "ta:3/2", "tq:1/2", "taq:3,1/2", "miwa:1/2,1/3".
    static SpecialTimesKind from_string(const std::string& text);

    Tag tag() const { return tag_; }
    const Rational& a() const { return a_; }
    long a_exponent() const { return a_exponent_; }
    const Rational& q() const { return q_; }
    const std::vector<Rational>& x() const { return x_; }
    const Rational& scale() const { return a_; }

private:
    explicit SpecialTimesKind(Tag tag) : tag_(tag) {}

    Tag tag_;
    Rational a_;       // TA1 parameter; doubles as the Miwa scale
    long a_exponent_ = 0;
    Rational q_;
    std::vector<Rational> x_;
};

/// The specialization's t_m for m <= degree_cap, exactly. Throws
/// std::domain_error when a q-kind hits q in {0, 1} or a vanishing 1 - q^m.
TimeVector special_times(const SpecialTimesKind& kind, long degree_cap);

/// Miwa times with scale 1: t_m = (1/m) sum_i x_i^m for m <= cap.
TimeVector miwa_times(const std::vector<Rational>& x, long cap);

}  // namespace pftau
