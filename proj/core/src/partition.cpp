#include "pftau/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "pftau/errors.hpp"

namespace pftau {

namespace {

std::vector<long> parse_bracket_list(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw ParseError("partition literal must look like \"[3,3,1]\", got: " + text);
    }
    const std::string body = s.substr(1, s.size() - 2);
    std::vector<long> parts;
    if (body.empty()) {
        return parts;
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = body.find(',', pos);
        const std::string item =
            comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad integer \"" + item + "\" in partition literal: " + text);
        }
        if (used != item.size() || item.empty()) {
            throw ParseError("bad integer \"" + item + "\" in partition literal: " + text);
        }
        parts.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return parts;
}

std::string format_bracket_list(const std::vector<long>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(parts[i]);
    }
    out += ']';
    return out;
}

}  // namespace

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
        if (i != 0 && parts_[i - 1] < parts_[i]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::part(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<long> out;
    const long cols = parts_.empty() ? 0 : parts_[0];
    for (long j = 1; j <= cols; ++j) {
        long count = 0;
        for (long p : parts_) {
            if (p < j) {
                break;
            }
            ++count;
        }
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    return format_bracket_list(parts_);
}

Partition Partition::from_string(const std::string& text) {
    try {
        return Partition(parse_bracket_list(text));
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("invalid partition ") + text + ": " + err.what());
    }
}

StrictPartition::StrictPartition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("strict partition parts must be nonnegative");
        }
        if (i != 0 && parts_[i - 1] <= parts_[i]) {
            throw std::invalid_argument("strict partition parts must be strictly decreasing");
        }
    }
}

std::size_t StrictPartition::length() const {
    return parts_.size() - (has_trailing_zero() ? 1 : 0);
}

bool StrictPartition::has_trailing_zero() const {
    return !parts_.empty() && parts_.back() == 0;
}

long StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long StrictPartition::part(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
}

StrictPartition StrictPartition::stripped() const {
    if (!has_trailing_zero()) {
        return *this;
    }
    std::vector<long> out(parts_.begin(), parts_.end() - 1);
    return StrictPartition(std::move(out));
}

StrictPartition StrictPartition::padded_even() const {
    std::vector<long> out = stripped().parts();
    if (out.size() % 2 != 0) {
        out.push_back(0);
    }
    return StrictPartition(std::move(out));
}

Partition StrictPartition::to_partition() const {
    return Partition(stripped().parts());
}

StrictPartition StrictPartition::from_partition(const Partition& lambda) {
    return StrictPartition(lambda.parts());
}

std::string StrictPartition::to_string() const {
    return format_bracket_list(parts_);
}

StrictPartition StrictPartition::from_string(const std::string& text) {
    try {
        return StrictPartition(parse_bracket_list(text));
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("invalid strict partition ") + text + ": " + err.what());
    }
}

ClassTag ClassTag::self_complementary(long c) {
    if (c < 1) {
        throw std::invalid_argument("pair-sum parameter c must be positive");
    }
    ClassTag tag(Kind::SelfComplementary);
    tag.c_ = c;
    return tag;
}

ClassTag ClassTag::self_complementary_strict(long c) {
    if (c < 1) {
        throw std::invalid_argument("pair-sum parameter c must be positive");
    }
    ClassTag tag(Kind::SelfComplementaryStrict);
    tag.c_ = c;
    return tag;
}

ClassTag ClassTag::box(long rows, long cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("box dimensions must be nonnegative");
    }
    ClassTag tag(Kind::Box);
    tag.rows_ = rows;
    tag.cols_ = cols;
    return tag;
}

namespace {

bool parts_all_distinct(const std::vector<long>& p) {
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i - 1] == p[i]) {
            return false;
        }
    }
    return true;
}

/// Pads to even size with one zero and checks that symmetric pairs sum to
/// the same constant 2c throughout.
bool pairs_sum_to(const std::vector<long>& values, long two_c) {
    std::vector<long> v = values;
    if (v.size() % 2 != 0) {
        v.push_back(0);
    }
    for (std::size_t i = 0; i < v.size() / 2; ++i) {
        if (v[i] + v[v.size() - 1 - i] != two_c) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool classify(const Partition& lambda, const ClassTag& cls) {
    const std::vector<long>& p = lambda.parts();
    switch (cls.kind()) {
        case ClassTag::Kind::All:
            return true;
        case ClassTag::Kind::Strict:
            return parts_all_distinct(p);
        case ClassTag::Kind::Fat: {
            if (p.size() % 2 != 0) {
                return false;
            }
            for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
                if (p[i] != p[i + 1]) {
                    return false;
                }
            }
            return true;
        }
        case ClassTag::Kind::SelfComplementary: {
            const long two_n =
                static_cast<long>(lambda.length() + (lambda.length() % 2));
            if (2 * cls.c() < two_n) {
                return false;
            }
            return pairs_sum_to(shifted_parts(lambda, two_n), 2 * cls.c());
        }
        case ClassTag::Kind::FatStrict: {
            if (!parts_all_distinct(p)) {
                return false;
            }
            std::vector<long> a = p;
            if (a.size() % 2 != 0) {
                a.push_back(0);
            }
            for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
                if (a[i] != a[i + 1] + 1) {
                    return false;
                }
            }
            return true;
        }
        case ClassTag::Kind::SelfComplementaryStrict:
            return parts_all_distinct(p) && pairs_sum_to(p, 2 * cls.c());
        case ClassTag::Kind::EvenRows:
            return std::all_of(p.begin(), p.end(), [](long v) { return v % 2 == 0; });
        case ClassTag::Kind::Box:
            return static_cast<long>(lambda.length()) <= cls.rows() &&
                   lambda.part(1) <= cls.cols();
    }
    return false;
}

bool classify(const StrictPartition& alpha, const ClassTag& cls) {
    return classify(alpha.to_partition(), cls);
}

namespace {

void gen_by_weight(long remaining, long max_part, std::vector<long>& prefix,
                   const ClassTag& cls, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition lambda(prefix);
        if (classify(lambda, cls)) {
            out.push_back(std::move(lambda));
        }
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_by_weight(remaining - p, p, prefix, cls, out);
        prefix.pop_back();
    }
}

void gen_in_box(long rows_left, long max_part, std::vector<long>& prefix,
                std::vector<Partition>& out) {
    if (rows_left > 0) {
        for (long p = max_part; p >= 1; --p) {
            prefix.push_back(p);
            gen_in_box(rows_left - 1, p, prefix, out);
            prefix.pop_back();
        }
    }
    out.push_back(Partition(prefix));
}

}  // namespace

std::vector<Partition> enumerate_by_weight(long T, const ClassTag& cls) {
    if (T < 0) {
        throw std::invalid_argument("partition weight must be nonnegative");
    }
    std::vector<Partition> out;
    std::vector<long> prefix;
    gen_by_weight(T, T, prefix, cls, out);
    return out;
}

std::vector<Partition> enumerate_in_box(long rows, long cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("box dimensions must be nonnegative");
    }
    std::vector<Partition> out;
    std::vector<long> prefix;
    gen_in_box(rows, cols, prefix, out);
    return out;
}

std::vector<long> shifted_parts(const Partition& lambda, long N) {
    if (N < static_cast<long>(lambda.length())) {
        throw std::invalid_argument("shifted_parts needs N >= length(lambda)");
    }
    std::vector<long> h;
    h.reserve(static_cast<std::size_t>(N));
    for (long i = 1; i <= N; ++i) {
        h.push_back(lambda.part(static_cast<std::size_t>(i)) - i + N);
    }
    return h;
}

FrobeniusCoords frobenius(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<long> alpha;
    std::vector<long> beta;
    for (std::size_t i = 1; lambda.part(i) >= static_cast<long>(i); ++i) {
        alpha.push_back(lambda.part(i) - static_cast<long>(i));
        beta.push_back(conj.part(i) - static_cast<long>(i));
    }
    return FrobeniusCoords{StrictPartition(std::move(alpha)),
                           StrictPartition(std::move(beta))};
}

Partition from_frobenius(const FrobeniusCoords& coords) {
    if (coords.alpha.padded_size() != coords.beta.padded_size()) {
        throw std::invalid_argument(
            "Frobenius coordinate lists must have equal length");
    }
    const long k = static_cast<long>(coords.alpha.padded_size());
    std::vector<long> parts;
    for (long i = 1; i <= k; ++i) {
        parts.push_back(coords.alpha.part(static_cast<std::size_t>(i)) + i);
    }
    if (k > 0) {
        // Rows below the diagonal are recovered from the column lengths
        // beta_j + j.
        const long rows = coords.beta.part(1) + 1;
        for (long i = k + 1; i <= rows; ++i) {
            long count = 0;
            for (long j = 1; j <= k; ++j) {
                if (coords.beta.part(static_cast<std::size_t>(j)) + j >= i) {
                    ++count;
                }
            }
            parts.push_back(count);
        }
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    return lambda.conjugate();
}

Partition double_strict(const StrictPartition& alpha) {
    if (alpha.has_trailing_zero()) {
        throw std::invalid_argument("double_strict requires positive parts");
    }
    std::vector<long> legs;
    legs.reserve(alpha.padded_size());
    for (long a : alpha.parts()) {
        legs.push_back(a - 1);
    }
    return from_frobenius(FrobeniusCoords{alpha, StrictPartition(std::move(legs))});
}

Partition union_double(const Partition& lambda) {
    std::vector<long> parts;
    parts.reserve(2 * lambda.length());
    for (long p : lambda.parts()) {
        parts.push_back(p);
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace pftau
