#include "pftau/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pftau {

long weighted_degree(const Monomial& mono) {
    long deg = 0;
    for (const auto& [var, exp] : mono) deg += var * exp;
    return deg;
}

SparsePoly::SparsePoly(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

SparsePoly SparsePoly::var(long m) {
    if (m < 1) throw std::invalid_argument("SparsePoly::var: index must be >= 1");
    SparsePoly p;
    p.terms_.emplace(Monomial{{m, 1}}, Rational(1));
    return p;
}

long SparsePoly::degree() const {
    long deg = -1;
    for (const auto& [mono, coeff] : terms_) deg = std::max(deg, weighted_degree(mono));
    return deg;
}

long SparsePoly::min_degree() const {
    if (terms_.empty()) return -1;
    long deg = weighted_degree(terms_.begin()->first);
    for (const auto& [mono, coeff] : terms_) deg = std::min(deg, weighted_degree(mono));
    return deg;
}

Rational SparsePoly::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparsePoly SparsePoly::truncated(long cap) const {
    SparsePoly out;
    for (const auto& [mono, coeff] : terms_)
        if (weighted_degree(mono) <= cap) out.terms_.emplace(mono, coeff);
    return out;
}

SparsePoly SparsePoly::negate_vars() const {
    SparsePoly out;
    for (const auto& [mono, coeff] : terms_) {
        long total_exp = 0;
        for (const auto& [var, exp] : mono) total_exp += exp;
        out.terms_.emplace(mono, total_exp % 2 == 0 ? coeff : -coeff);
    }
    return out;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& times) const {
    Rational sum(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (const auto& [var, exp] : mono) {
            const Rational value =
                var <= static_cast<long>(times.size()) ? times[var - 1] : Rational(0);
            term *= value.pow(exp);
        }
        sum += term;
    }
    return sum;
}

void SparsePoly::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [mono, coeff] : terms_) coeff *= c;
    }
    return *this;
}

SparsePoly& SparsePoly::operator/=(const Rational& c) { return *this *= c.inv(); }

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

}  // namespace

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mul_monomials(ma, mb), ca * cb);
    return out;
}

SparsePoly mul_trunc(const SparsePoly& a, const SparsePoly& b, long cap) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_) {
        const long da = weighted_degree(ma);
        if (da > cap) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + weighted_degree(mb) > cap) continue;
            out.add_term(mul_monomials(ma, mb), ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool lead = true;
        if (!(coeff == Rational(1)) || mono.empty()) {
            os << coeff.to_string();
            lead = false;
        }
        for (const auto& [var, exp] : mono) {
            if (!lead) os << "*";
            lead = false;
            os << "t" << var;
            if (exp > 1) os << "^" << exp;
        }
    }
    return os.str();
}

SparsePoly exp_truncated(const SparsePoly& p, long cap) {
    if (!p.coefficient({}).is_zero())
        throw std::invalid_argument("exp_truncated: nonzero constant term");
    const SparsePoly arg = p.truncated(cap);
    SparsePoly sum(1);
    SparsePoly power(1);
    Rational factorial_inv(1);
    const long min_deg = arg.is_zero() ? cap + 1 : arg.min_degree();
    for (long k = 1; k * min_deg <= cap; ++k) {
        power = mul_trunc(power, arg, cap);
        factorial_inv /= Rational(k);
        sum += power * factorial_inv;
        if (power.is_zero()) break;
    }
    return sum;
}

SparsePoly inv_one_minus(const SparsePoly& p, long cap) {
    if (!p.coefficient({}).is_zero())
        throw std::invalid_argument("inv_one_minus: nonzero constant term");
    const SparsePoly arg = p.truncated(cap);
    SparsePoly sum(1);
    SparsePoly power(1);
    const long min_deg = arg.is_zero() ? cap + 1 : arg.min_degree();
    for (long k = 1; k * min_deg <= cap; ++k) {
        power = mul_trunc(power, arg, cap);
        sum += power;
        if (power.is_zero()) break;
    }
    return sum;
}

}  // namespace pftau
