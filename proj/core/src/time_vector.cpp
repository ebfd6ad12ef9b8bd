#include "pftau/time_vector.hpp"

#include <sstream>
#include <stdexcept>

#include "pftau/errors.hpp"

namespace pftau {

TimeVector TimeVector::from_entries(const std::map<long, Rational>& entries,
                                    bool odd_only) {
    TimeVector t(odd_only);
    for (const auto& [m, value] : entries) t.set(m, value);
    return t;
}

TimeVector TimeVector::from_string(const std::string& text, bool odd_only) {
    TimeVector t(odd_only);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(pos, end - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("time vector entry lacks ':': \"" + item + "\"");
        long m = 0;
        try {
            std::size_t used = 0;
            m = std::stol(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError("bad time index in \"" + item + "\"");
        }
        t.set(m, Rational::from_string(item.substr(colon + 1)));
        pos = end + 1;
    }
    return t;
}

Rational TimeVector::at(long m) const {
    if (m < 1) throw std::invalid_argument("TimeVector: index must be >= 1");
    auto it = entries_.find(m);
    return it == entries_.end() ? Rational(0) : it->second;
}

void TimeVector::set(long m, Rational value) {
    if (m < 1) throw std::invalid_argument("TimeVector: index must be >= 1");
    if (value.is_zero()) {
        entries_.erase(m);
        return;
    }
    if (odd_only_ && m % 2 == 0)
        throw std::invalid_argument("TimeVector: even entry in an odd-only vector");
    entries_[m] = std::move(value);
}

std::vector<Rational> TimeVector::dense(long kmax) const {
    std::vector<Rational> out(kmax > 0 ? kmax : 0, Rational(0));
    for (const auto& [m, value] : entries_) {
        if (m <= kmax) out[m - 1] = value;
    }
    return out;
}

TimeVector TimeVector::scaled(const Rational& f) const {
    TimeVector out(odd_only_);
    if (f.is_zero()) return out;
    for (const auto& [m, value] : entries_) out.entries_[m] = f * value;
    return out;
}

std::string TimeVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, value] : entries_) {
        if (!first) os << ",";
        first = false;
        os << m << ":" << value.to_string();
    }
    return os.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        out.push_back(Rational::from_string(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

SpecialTimesKind SpecialTimesKind::t_infty() { return SpecialTimesKind(Tag::TInfty); }

SpecialTimesKind SpecialTimesKind::t_a1(Rational a) {
    SpecialTimesKind k(Tag::TA1);
    k.a_ = std::move(a);
    return k;
}

SpecialTimesKind SpecialTimesKind::t_inf_q(Rational q) {
    SpecialTimesKind k(Tag::TInfQ);
    k.q_ = std::move(q);
    return k;
}

SpecialTimesKind SpecialTimesKind::t_a_q(long a, Rational q) {
    SpecialTimesKind k(Tag::TAQ);
    k.a_exponent_ = a;
    k.q_ = std::move(q);
    return k;
}

SpecialTimesKind SpecialTimesKind::miwa(std::vector<Rational> x, Rational scale) {
    SpecialTimesKind k(Tag::Miwa);
    k.x_ = std::move(x);
    k.a_ = std::move(scale);
    return k;
}

SpecialTimesKind SpecialTimesKind::from_string(const std::string& text) {
    if (text == "tinf") return t_infty();
    const std::size_t colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "ta") return t_a1(Rational::from_string(args));
    if (name == "tq") return t_inf_q(Rational::from_string(args));
    if (name == "taq") {
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos)
            throw ParseError("taq needs two parameters: \"" + text + "\"");
        const Rational a = Rational::from_string(args.substr(0, comma));
        if (!a.is_integer())
            throw ParseError("taq exponent must be an integer: \"" + text + "\"");
        return t_a_q(a.num().get_si(), Rational::from_string(args.substr(comma + 1)));
    }
    if (name == "miwa") return miwa(parse_rational_list(args));
    throw ParseError("unknown time specialization \"" + text + "\"");
}

TimeVector special_times(const SpecialTimesKind& kind, long degree_cap) {
    if (degree_cap < 1)
        throw std::invalid_argument("special_times: degree cap must be >= 1");
    TimeVector t;
    switch (kind.tag()) {
        case SpecialTimesKind::Tag::TInfty:
            t.set(1, Rational(1));
            break;
        case SpecialTimesKind::Tag::TA1:
            for (long m = 1; m <= degree_cap; ++m) t.set(m, kind.a() / Rational(m));
            break;
        case SpecialTimesKind::Tag::TInfQ:
        case SpecialTimesKind::Tag::TAQ: {
            const Rational& q = kind.q();
            if (q.is_zero() || q == Rational(1))
                throw std::domain_error("special_times: q must avoid 0 and 1");
            for (long m = 1; m <= degree_cap; ++m) {
                const Rational den = Rational(1) - q.pow(m);
                if (den.is_zero())
                    throw std::domain_error("special_times: 1 - q^m vanishes");
                Rational num = kind.tag() == SpecialTimesKind::Tag::TInfQ
                                   ? Rational(1)
                                   : Rational(1) - q.pow(kind.a_exponent() * m);
                t.set(m, num / (Rational(m) * den));
            }
            break;
        }
        case SpecialTimesKind::Tag::Miwa:
            for (long m = 1; m <= degree_cap; ++m) {
                Rational power_sum(0);
                for (const Rational& xi : kind.x()) power_sum += xi.pow(m);
                t.set(m, kind.scale() * power_sum / Rational(m));
            }
            break;
    }
    return t;
}

TimeVector miwa_times(const std::vector<Rational>& x, long cap) {
    return special_times(SpecialTimesKind::miwa(x), cap);
}

}  // namespace pftau
