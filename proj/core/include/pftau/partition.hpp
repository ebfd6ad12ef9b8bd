#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pftau {

/// Integer partition in canonical form: weakly decreasing positive parts.
/// The empty partition is the default-constructed value.
class Partition {
public:
    Partition() = default;

    /// Accepts a weakly decreasing list; trailing zeros are stripped.
    /// Throws std::invalid_argument on negative or increasing entries.
    explicit Partition(std::vector<long> parts);

    /// Number of (nonzero) parts.
    std::size_t length() const { return parts_.size(); }

    /// Sum of the parts.
    long weight() const;

    bool empty() const { return parts_.empty(); }

    /// 1-based row access; rows beyond length() are 0.
    long part(std::size_t i) const;

    const std::vector<long>& parts() const { return parts_; }

    /// Transpose of the Young diagram.
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;

    /// Lexicographic order on the part vectors (for map keys and sorting).
    bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

    /// Bracket form, e.g. "[3,3,1]"; the empty partition prints as "[]".
    std::string to_string() const;
    static Partition from_string(const std::string& text);

private:
    std::vector<long> parts_;
};

/// Strict partition: strictly decreasing parts, all >= 0. At most one part
/// can be 0 and it is necessarily last; it serves only to pad Pfaffian
/// evaluations to even size. Predicates and length() ignore it.
class StrictPartition {
public:
    StrictPartition() = default;

    /// Throws std::invalid_argument unless the list is strictly decreasing
    /// with nonnegative entries.
    explicit StrictPartition(std::vector<long> parts);

    /// Number of nonzero parts.
    std::size_t length() const;

    /// Number of listed parts, including a trailing zero.
    std::size_t padded_size() const { return parts_.size(); }

    bool has_trailing_zero() const;

    long weight() const;

    /// 1-based access; entries beyond the list are 0.
    long part(std::size_t i) const;

    const std::vector<long>& parts() const { return parts_; }

    /// Copy without the padding zero.
    StrictPartition stripped() const;

    /// Copy with one zero appended when the list has odd size, so that
    /// Pfaffians of the listed parts are over an even index set.
    StrictPartition padded_even() const;

    /// The same parts read as an ordinary partition (zero stripped).
    Partition to_partition() const;

    /// Requires all parts of lambda distinct.
    static StrictPartition from_partition(const Partition& lambda);

    bool operator==(const StrictPartition&) const = default;
    bool operator<(const StrictPartition& rhs) const { return parts_ < rhs.parts_; }

    std::string to_string() const;
    static StrictPartition from_string(const std::string& text);

private:
    std::vector<long> parts_;
};

/// Frobenius coordinates (alpha | beta): arm and leg lengths measured from
/// the main diagonal. Both lists always have the same size, and a final 0 is
/// significant here; the one-box partition is (0|0).
struct FrobeniusCoords {
    StrictPartition alpha;
    StrictPartition beta;
};

/// Families of partitions that the generating sums range over.
class ClassTag {
public:
    enum class Kind {
        All,                      ///< every partition
        Strict,                   ///< distinct (positive) parts
        Fat,                      ///< rows come in equal consecutive pairs
        SelfComplementary,        ///< diagram equals its rotated complement; rows pair to a constant
        FatStrict,                ///< strict, consecutive parts in descending pairs (a, a-1)
        SelfComplementaryStrict,  ///< strict, first/last parts pair to a constant
        EvenRows,                 ///< every part even
        Box,                      ///< fits into an N x M rectangle
    };

    static ClassTag all() { return ClassTag(Kind::All); }
    static ClassTag strict() { return ClassTag(Kind::Strict); }
    static ClassTag fat() { return ClassTag(Kind::Fat); }
    static ClassTag self_complementary(long c);
    static ClassTag fat_strict() { return ClassTag(Kind::FatStrict); }
    static ClassTag self_complementary_strict(long c);
    static ClassTag even_rows() { return ClassTag(Kind::EvenRows); }
    static ClassTag box(long rows, long cols);

    Kind kind() const { return kind_; }

    /// Pair-sum constant 2c for the self-complementary kinds.
    long c() const { return c_; }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

private:
    explicit ClassTag(Kind kind) : kind_(kind) {}

    Kind kind_;
    long c_ = 0;
    long rows_ = 0;
    long cols_ = 0;
};

/// All partitions of weight T belonging to the class, in reverse
/// lexicographic order: for T=4 and the full set,
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_by_weight(long T, const ClassTag& cls);

/// All partitions with at most `rows` rows and parts at most `cols`,
/// in reverse lexicographic order; binomial(rows+cols, rows) of them.
std::vector<Partition> enumerate_in_box(long rows, long cols);

/// h_i = lambda_i - i + N for i = 1..N. Strictly decreasing, h_N >= 0.
/// Throws std::invalid_argument when N < length(lambda).
std::vector<long> shifted_parts(const Partition& lambda, long N);

/// Frobenius coordinates of lambda: alpha_i = lambda_i - i,
/// beta_i = conjugate(lambda)_i - i over the diagonal boxes.
FrobeniusCoords frobenius(const Partition& lambda);

/// Inverse of frobenius(). Throws std::invalid_argument when the two
/// coordinate lists have different sizes.
Partition from_frobenius(const FrobeniusCoords& coords);

/// Membership test for the given class.
bool classify(const Partition& lambda, const ClassTag& cls);

/// Same test on a strict partition; the padding zero is ignored.
bool classify(const StrictPartition& alpha, const ClassTag& cls);

Partition conjugate(const Partition& lambda);

/// The partition with Frobenius coordinates (alpha | alpha - 1).
/// Requires alpha free of zero parts.
Partition double_strict(const StrictPartition& alpha);

/// Each row repeated twice: (l1, l1, l2, l2, ...).
Partition union_double(const Partition& lambda);

}  // namespace pftau
