#include "pftau/tau_series.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pftau/closed_forms.hpp"
#include "pftau/errors.hpp"
#include "pftau/linalg.hpp"
#include "pftau/matrix.hpp"
#include "pftau/poly.hpp"
#include "pftau/qschur.hpp"
#include "pftau/schur.hpp"

namespace pftau {

Rational SeriesValue::rational() const {
    if (!value.is_rational())
        throw std::domain_error("SeriesValue: value has a sqrt(2) component");
    return value.r;
}

namespace {

void check_caps(const TruncationSpec& tr) {
    if (tr.max_weight < 0)
        throw std::invalid_argument("TruncationSpec: max_weight must be >= 0");
}

int worker_count(const TruncationSpec& tr, std::size_t items) {
    long n = tr.threads < 1 ? 1 : tr.threads;
    if (items > 0 && n > long(items)) n = long(items);
    return int(n);
}

/// Deterministic chunked map-reduce.  Worker contexts are created serially
/// (coefficient families and Schur tables are not safe to share), then each
/// worker sums a contiguous index range.  All arithmetic is exact, so the
/// grouping cannot change the value.
template <typename Scalar>
Scalar parallel_sum(std::size_t items, int threads,
                    const std::function<std::function<Scalar(std::size_t)>()>& make_term) {
    if (threads <= 1 || items < 2) {
        auto term = make_term();
        Scalar total(0);
        for (std::size_t i = 0; i < items; ++i) total += term(i);
        return total;
    }
    std::vector<std::function<Scalar(std::size_t)>> terms;
    terms.reserve(std::size_t(threads));
    for (int w = 0; w < threads; ++w) terms.push_back(make_term());
    std::vector<Scalar> partial(std::size_t(threads), Scalar(0));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    const std::size_t chunk = (items + std::size_t(threads) - 1) / std::size_t(threads);
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t lo = std::size_t(w) * chunk;
                const std::size_t hi = std::min(items, lo + chunk);
                Scalar acc(0);
                for (std::size_t i = lo; i < hi; ++i) acc += terms[std::size_t(w)](i);
                partial[std::size_t(w)] = std::move(acc);
            } catch (...) {
                errors[std::size_t(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    Scalar total(0);
    for (auto& p : partial) total += p;
    return total;
}

/// Shapes with at most `rows` rows, weight <= cap and (optionally) largest
/// part <= max_part, in a fixed deterministic order.
std::vector<Partition> shapes_up_to(long rows, long cap, long max_part) {
    if (rows <= 0) return {Partition()};
    long cols = cap;
    if (max_part >= 0 && max_part < cols) cols = max_part;
    std::vector<Partition> out;
    for (const Partition& p : enumerate_in_box(rows, cols))
        if (p.weight() <= cap) out.push_back(p);
    return out;
}

/// Strictly decreasing lists of length k with entries in [0, vmax] and sum
/// <= smax, in decreasing lexicographic order.
void strict_lists_rec(long k, long vmax, long smax, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    const long tail_min = (k - 1) * (k - 2) / 2;
    for (long v = std::min(vmax, smax - tail_min); v >= k - 1; --v) {
        cur.push_back(v);
        strict_lists_rec(k - 1, v - 1, smax - v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> strict_lists(long k, long vmax, long smax) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    cur.reserve(std::size_t(k));
    strict_lists_rec(k, vmax, smax, cur, out);
    return out;
}

struct FrobPair {
    StrictPartition alpha;
    StrictPartition beta;
};

/// Pairs of equal-length strictly decreasing lists (zeros significant) with
/// sum(alpha) + sum(beta) + k <= max_weight; exactly the Frobenius
/// coordinates of the shapes of weight <= max_weight.
std::vector<FrobPair> frobenius_pairs(const TruncationSpec& tr) {
    std::vector<FrobPair> out;
    const long cap = tr.max_weight;
    const long vmax = tr.frob_cap >= 0 ? std::min(tr.frob_cap, cap) : cap;
    for (long k = 1; k * k <= cap; ++k) {
        const long tail_min = k * (k - 1) / 2;
        for (const auto& av : strict_lists(k, vmax, cap - k - tail_min)) {
            const long asum = std::accumulate(av.begin(), av.end(), 0L);
            for (const auto& bv : strict_lists(k, vmax, cap - k - asum))
                out.push_back({StrictPartition(av), StrictPartition(bv)});
        }
    }
    return out;
}

/// Dense univariate polynomials in the grading variable z, index = degree.
using ZPoly = std::vector<Rational>;

void zadd(ZPoly& a, const ZPoly& b, bool negate) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (negate)
            a[i] -= b[i];
        else
            a[i] += b[i];
    }
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, long zcap) {
    ZPoly out(std::size_t(zcap) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && long(i) <= zcap; ++i) {
        if (a[i].is_zero()) continue;
        const std::size_t jmax = std::min(b.size(), std::size_t(zcap) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

bool zis_zero(const ZPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_zero(); });
}

/// Pfaffian of an antisymmetric polynomial matrix by first-row expansion,
/// truncated at z-degree zcap throughout.
ZPoly zpfaffian(const std::vector<std::vector<ZPoly>>& m, const std::vector<int>& idx,
                long zcap) {
    if (idx.empty()) return ZPoly{Rational(1)};
    ZPoly acc(std::size_t(zcap) + 1, Rational(0));
    std::vector<int> rest(idx.size() - 2);
    for (std::size_t p = 1; p < idx.size(); ++p) {
        const ZPoly& e = m[std::size_t(idx[0])][std::size_t(idx[p])];
        if (zis_zero(e)) continue;
        rest.clear();
        for (std::size_t r = 1; r < idx.size(); ++r)
            if (r != p) rest.push_back(idx[r]);
        const ZPoly sub = zpfaffian(m, rest, zcap);
        zadd(acc, zmul(e, sub, zcap), p % 2 == 0);
    }
    return acc;
}

/// Truncated expansion of prod (1 - c z^step)^-1 into an existing product.
void zmul_geometric(ZPoly& p, const Rational& c, long step, long zcap) {
    ZPoly g(std::size_t(zcap) + 1, Rational(0));
    Rational pw(1);
    for (long d = 0; d * step <= zcap; ++d) {
        g[std::size_t(d * step)] = pw;
        pw *= c;
        if (step == 0) break;
    }
    p = zmul(p, g, zcap);
}

/// Shifted parts pair to a common sum (checked at the minimal even padding);
/// the beta = 2 summation class.
bool is_self_complementary_any(const Partition& lam) {
    if (lam.empty()) return true;
    const long len = long(lam.length());
    const long padded = len + (len % 2);
    const std::vector<long> h = shifted_parts(lam, padded);
    const long target = h.front() + h.back();
    for (std::size_t i = 0; i + i < h.size(); ++i)
        if (h[i] + h[h.size() - 1 - i] != target) return false;
    return true;
}

/// Exact square root of a nonnegative rational; std::domain_error otherwise.
Rational rational_sqrt(const Rational& q) {
    if (q.sign() < 0)
        throw std::domain_error("rational_sqrt: negative argument");
    mpz_class num = q.num(), den = q.den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw std::domain_error("rational_sqrt: not a perfect square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn) / Rational(rd);
}

long to_long(const Rational& r, const char* what) {
    if (!r.is_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    const mpz_class z = r.num();
    if (!z.fits_slong_p())
        throw std::invalid_argument(std::string(what) + " is out of range");
    return z.get_si();
}

}  // namespace

SeriesValue s1(const TimeVector& t, long N, const CoefficientFamily& fam,
               const TruncationSpec& tr) {
    check_caps(tr);
    if (N < 0) throw std::invalid_argument("s1: N must be >= 0");
    const std::vector<Partition> shapes = shapes_up_to(N, tr.max_weight, tr.max_part);
    auto make_term = [&]() -> std::function<Rational(std::size_t)> {
        auto table = std::make_shared<HomogeneousTable>(t);
        auto famw = std::make_shared<CoefficientFamily>(fam.fork());
        return [&shapes, N, table, famw](std::size_t i) {
            const Partition& lam = shapes[i];
            const std::vector<long> h = shifted_parts(lam, N);
            Rational c = bordered_pfaffian(*famw, h);
            for (long v : h) {
                if (c.is_zero()) return c;
                c *= famw->weight(v);
            }
            if (c.is_zero()) return c;
            return c * table->schur(lam);
        };
    };
    SeriesValue out;
    out.value = parallel_sum<Rational>(shapes.size(), worker_count(tr, shapes.size()), make_term);
    out.terms_included = long(shapes.size());
    out.truncation = tr;
    out.truncation.n_rows = N;
    return out;
}

SeriesValue s1_pfaffian_miwa(const std::vector<Rational>& x, const CoefficientFamily& fam,
                             const TruncationSpec& tr) {
    check_caps(tr);
    const long N = long(x.size());
    SeriesValue out;
    out.truncation = tr;
    out.truncation.n_rows = N;
    if (N == 0) {
        out.value = Rational(1);
        out.terms_included = 1;
        return out;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            throw std::invalid_argument("s1_pfaffian_miwa: x entries must be nonzero");
        for (std::size_t j = 0; j < i; ++j)
            if (x[i] == x[j])
                throw std::invalid_argument("s1_pfaffian_miwa: x entries must be distinct");
    }
    const long base = N * (N - 1) / 2;
    const long zcap = tr.max_weight + base;
    CoefficientFamily famw = fam.fork();

    std::vector<std::vector<Rational>> pw(x.size(), std::vector<Rational>(std::size_t(zcap) + 1));
    for (std::size_t i = 0; i < x.size(); ++i) {
        pw[i][0] = Rational(1);
        for (long p = 1; p <= zcap; ++p) pw[i][std::size_t(p)] = pw[i][std::size_t(p - 1)] * x[i];
    }
    std::vector<Rational> w(std::size_t(zcap) + 1);
    for (long p = 0; p <= zcap; ++p) w[std::size_t(p)] = famw.weight(p);

    const bool odd = N % 2 == 1;
    const int rows = int(N) + (odd ? 1 : 0);
    std::vector<std::vector<ZPoly>> kern(
        std::size_t(rows), std::vector<ZPoly>(std::size_t(rows), ZPoly(std::size_t(zcap) + 1, Rational(0))));
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            ZPoly& e = kern[std::size_t(i)][std::size_t(j)];
            for (long p = 1; p <= zcap; ++p) {
                if (w[std::size_t(p)].is_zero()) continue;
                for (long q = 0; q < p && p + q <= zcap; ++q) {
                    if (w[std::size_t(q)].is_zero()) continue;
                    const Rational a = famw.entry(p, q);
                    if (a.is_zero()) continue;
                    const Rational cross = pw[std::size_t(i)][std::size_t(p)] * pw[std::size_t(j)][std::size_t(q)] -
                                           pw[std::size_t(j)][std::size_t(p)] * pw[std::size_t(i)][std::size_t(q)];
                    if (cross.is_zero()) continue;
                    e[std::size_t(p + q)] += a * w[std::size_t(p)] * w[std::size_t(q)] * cross;
                }
            }
            for (long d = 0; d <= zcap; ++d)
                kern[std::size_t(j)][std::size_t(i)][std::size_t(d)] = -e[std::size_t(d)];
        }
    }
    if (odd) {
        for (int i = 0; i < N; ++i) {
            ZPoly& e = kern[std::size_t(i)][std::size_t(N)];
            for (long k = 0; k <= zcap; ++k) {
                if (w[std::size_t(k)].is_zero()) continue;
                const Rational a = famw.border(k);
                if (a.is_zero()) continue;
                e[std::size_t(k)] = a * w[std::size_t(k)] * pw[std::size_t(i)][std::size_t(k)];
            }
            for (long d = 0; d <= zcap; ++d)
                kern[std::size_t(N)][std::size_t(i)][std::size_t(d)] = -e[std::size_t(d)];
        }
    }

    std::vector<int> idx(static_cast<std::size_t>(rows));
    std::iota(idx.begin(), idx.end(), 0);
    const ZPoly pf = zpfaffian(kern, idx, zcap);

    Rational vand(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) vand *= x[i] - x[j];
    Rational total(0);
    for (long d = 0; d <= tr.max_weight; ++d) total += pf[std::size_t(base + d)];
    out.value = total / vand;
    out.terms_included = tr.max_weight + 1;
    return out;
}

SeriesValue s2(const TimeVector& t, const CoefficientFamily& famA,
               const CoefficientFamily& famB, const TruncationSpec& tr) {
    check_caps(tr);
    const std::vector<FrobPair> pairs = frobenius_pairs(tr);
    auto make_term = [&]() -> std::function<Rational(std::size_t)> {
        auto table = std::make_shared<HomogeneousTable>(t);
        auto fa = std::make_shared<CoefficientFamily>(famA.fork());
        auto fb = std::make_shared<CoefficientFamily>(famB.fork());
        return [&pairs, table, fa, fb](std::size_t i) {
            const FrobPair& pr = pairs[i];
            Rational c = bordered_pfaffian(*fa, pr.alpha.parts());
            if (c.is_zero()) return c;
            c *= bordered_pfaffian(*fb, pr.beta.parts());
            if (c.is_zero()) return c;
            for (long v : pr.alpha.parts()) c *= fa->weight(v);
            for (long v : pr.beta.parts()) c *= fb->weight(-v - 1);
            if (c.is_zero()) return c;
            return c * table->schur(from_frobenius({pr.alpha, pr.beta}));
        };
    };
    SeriesValue out;
    out.value = Rational(1) +
                parallel_sum<Rational>(pairs.size(), worker_count(tr, pairs.size()), make_term);
    out.terms_included = 1 + long(pairs.size());
    out.truncation = tr;
    return out;
}

SeriesValue sbkp_tau(const TimeVector& tprime, const CoefficientFamily& fam,
                     const TruncationSpec& tr) {
    check_caps(tr);
    std::vector<Partition> shapes;
    for (long T = 0; T <= tr.max_weight; ++T)
        for (const Partition& p : enumerate_by_weight(T, ClassTag::strict()))
            if (tr.max_part < 0 || p.part(1) <= tr.max_part) shapes.push_back(p);
    auto make_term = [&]() -> std::function<Rational(std::size_t)> {
        auto qt = std::make_shared<QTable>(tprime);
        auto famw = std::make_shared<CoefficientFamily>(fam.fork());
        return [&shapes, qt, famw](std::size_t i) {
            const StrictPartition alpha = StrictPartition::from_partition(shapes[i]);
            Rational c = bordered_pfaffian(*famw, alpha.parts());
            for (long v : alpha.parts()) {
                if (c.is_zero()) return c;
                c *= famw->weight(v);
            }
            if (c.is_zero()) return c;
            return c * qt->bigQ(alpha);
        };
    };
    SeriesValue out;
    out.value = parallel_sum<Rational>(shapes.size(), worker_count(tr, shapes.size()), make_term);
    out.terms_included = long(shapes.size());
    out.truncation = tr;
    return out;
}

SeriesValue mixed_tau(const TimeVector& t, const TimeVector& tprime, const WeightFn& weights,
                      long N, const TruncationSpec& tr) {
    check_caps(tr);
    if (N < 0) throw std::invalid_argument("mixed_tau: N must be >= 0");
    if (!weights) throw std::invalid_argument("mixed_tau: weight profile required");
    const std::vector<Partition> shapes = shapes_up_to(N, tr.max_weight, tr.max_part);
    auto make_term = [&]() -> std::function<Root2Scalar(std::size_t)> {
        auto st = std::make_shared<HomogeneousTable>(t);
        auto qt = std::make_shared<QTable>(tprime);
        return [&shapes, &weights, N, st, qt](std::size_t i) -> Root2Scalar {
            const Partition& lam = shapes[i];
            Rational c = st->schur(lam);
            if (c.is_zero()) return Root2Scalar(c);
            for (long r = 1; r <= N; ++r) c *= weights(lam.part(std::size_t(r)) - r);
            if (c.is_zero()) return Root2Scalar(c);
            c *= qt->bigQ(StrictPartition(shifted_parts(lam, N)));
            Root2Scalar v = Root2Scalar::pow2_half(-long(lam.length()));
            v *= Root2Scalar(c);
            return v;
        };
    };
    SeriesValue out;
    out.value = parallel_sum<Root2Scalar>(shapes.size(), worker_count(tr, shapes.size()), make_term);
    out.terms_included = long(shapes.size());
    out.truncation = tr;
    out.truncation.n_rows = N;
    return out;
}

SeriesValue lbkp_tau(long l, const TimeVector& t, long N, const CoefficientFamily& fam,
                     const TruncationSpec& tr) {
    check_caps(tr);
    if (N < 0) throw std::invalid_argument("lbkp_tau: N must be >= 0");
    CoefficientFamily fam0 = fam.fork();
    Rational cl(1);
    if (l > 0) {
        for (long j = 0; j < l; ++j) cl *= fam0.weight(j);
    } else if (l < 0) {
        Rational d(1);
        for (long j = l; j < 0; ++j) d *= fam0.weight(j);
        if (d.is_zero())
            throw PoleError("lbkp_tau: zero weight in the charge prefactor");
        cl = Rational(1) / d;
    }
    const std::vector<Partition> shapes = shapes_up_to(N, tr.max_weight, tr.max_part);
    auto make_term = [&]() -> std::function<Rational(std::size_t)> {
        auto table = std::make_shared<HomogeneousTable>(t);
        auto famw = std::make_shared<CoefficientFamily>(fam.fork());
        return [&shapes, N, l, table, famw](std::size_t i) {
            const Partition& lam = shapes[i];
            const std::vector<long> h = shifted_parts(lam, N);
            Rational c = bordered_pfaffian(*famw, h, l);
            for (long v : h) {
                if (c.is_zero()) return c;
                c *= famw->weight(v + l);
            }
            if (c.is_zero()) return c;
            return c * table->schur(lam);
        };
    };
    SeriesValue out;
    out.value = cl * parallel_sum<Rational>(shapes.size(), worker_count(tr, shapes.size()),
                                            make_term);
    out.terms_included = long(shapes.size());
    out.truncation = tr;
    out.truncation.n_rows = N;
    return out;
}

SeriesValue coupled_bkp_tau(const TimeVector& tprime, const TimeVector& tdblprime,
                            const CouplingFn& d, const TruncationSpec& tr) {
    check_caps(tr);
    if (!d) throw std::invalid_argument("coupled_bkp_tau: coupling required");
    const std::vector<FrobPair> pairs = frobenius_pairs(tr);
    auto make_term = [&]() -> std::function<Rational(std::size_t)> {
        auto qa = std::make_shared<QTable>(tprime);
        auto qb = std::make_shared<QTable>(tdblprime);
        return [&pairs, &d, qa, qb](std::size_t i) {
            const FrobPair& pr = pairs[i];
            const std::vector<long>& av = pr.alpha.parts();
            const std::vector<long>& bv = pr.beta.parts();
            const std::size_t k = av.size();
            Matrix<Rational> m(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) m(r, c) = d(av[r], bv[c]);
            const Rational det = det_fraction_free(std::move(m));
            if (det.is_zero()) return det;
            return qa->bigQ(pr.alpha) * det * qb->bigQ(pr.beta);
        };
    };
    SeriesValue out;
    out.value = Rational(1) +
                parallel_sum<Rational>(pairs.size(), worker_count(tr, pairs.size()), make_term);
    out.terms_included = 1 + long(pairs.size());
    out.truncation = tr;
    return out;
}

IdentityPair closed_identity(const std::string& name, const TimeVector& t, long cap) {
    if (cap < 0) throw std::invalid_argument("closed_identity: cap must be >= 0");
    HomogeneousTable table(t);

    const bool all_exp = name == "ALL_EXP";
    const bool all_signed = name == "ALL_SIGNED_EXP";
    const bool fat_exp = name == "FAT_EXP";
    const bool even_exp = name == "EVEN_ROWS_EXP";
    if (all_exp || all_signed || fat_exp || even_exp) {
        const ClassTag cls = fat_exp   ? ClassTag::fat()
                             : even_exp ? ClassTag::even_rows()
                                        : ClassTag::all();
        Rational lhs(0);
        for (long T = 0; T <= cap; ++T) {
            Rational level(0);
            for (const Partition& lam : enumerate_by_weight(T, cls)) level += table.schur(lam);
            if (all_signed && T % 2 == 1)
                lhs -= level;
            else
                lhs += level;
        }
        SparsePoly e;
        for (long m = 1; 2 * m <= cap; ++m) {
            SparsePoly sq = SparsePoly::var(m) * SparsePoly::var(m);
            sq *= Rational(m, 2);
            e += sq;
        }
        for (long k = 1; k <= cap; ++k) {
            if (all_exp && k % 2 == 1) e += SparsePoly::var(k);
            if (all_signed && k % 2 == 1) e -= SparsePoly::var(k);
            if (fat_exp && k % 2 == 0) e -= SparsePoly::var(k);
            if (even_exp && k % 2 == 0) e += SparsePoly::var(k);
        }
        const Rational rhs = exp_truncated(e, cap).evaluate(t.dense(cap));
        return {lhs, rhs};
    }

    const bool all_area = name == "ALL_AREA";
    const bool all_area_signed = name == "ALL_AREA_SIGNED";
    const bool fat_area = name == "FAT_AREA";
    const bool even_area = name == "EVEN_ROWS_AREA";
    if (all_area || all_area_signed || fat_area || even_area) {
        Rational lhs(0);
        if (fat_area) {
            for (const Partition& mu : enumerate_by_weight(cap, ClassTag::all()))
                lhs += table.schur(union_double(mu));
        } else if (even_area) {
            for (const Partition& lam : enumerate_by_weight(2 * cap, ClassTag::even_rows()))
                lhs += table.schur(lam);
        } else {
            for (const Partition& lam : enumerate_by_weight(cap, ClassTag::all()))
                lhs += table.schur(lam);
            if (all_area_signed && cap % 2 == 1) lhs = -lhs;
        }
        std::map<long, Rational> tw;
        for (long m = 1; m <= cap; ++m) {
            Rational v;
            if (all_area || all_area_signed) {
                if (m % 2 == 1)
                    v = all_area_signed ? -t.at(m) : t.at(m);
                else
                    v = Rational(m / 2, 2) * t.at(m / 2) * t.at(m / 2);
            } else {
                v = Rational(m, 2) * t.at(m) * t.at(m);
                if (fat_area)
                    v -= t.at(2 * m);
                else
                    v += t.at(2 * m);
            }
            if (!v.is_zero()) tw[m] = v;
        }
        const Rational rhs = schur(Partition({cap}), TimeVector::from_entries(tw));
        return {lhs, rhs};
    }

    throw std::invalid_argument("closed_identity: unknown name " + name);
}

IdentityPair closed_identity(const std::string& name, const std::vector<Rational>& x,
                             long cap) {
    if (cap < 0) throw std::invalid_argument("closed_identity: cap must be >= 0");
    const bool fat = name == "FAT_PRODUCT";
    if (!fat && name != "ALL_PRODUCT")
        throw std::invalid_argument("closed_identity: unknown name " + name);
    HomogeneousTable table(miwa_times(x, cap));
    Rational lhs(0);
    for (long T = 0; T <= cap; ++T) {
        if (fat) {
            if (T % 2 == 1) continue;
            for (const Partition& mu : enumerate_by_weight(T / 2, ClassTag::all()))
                lhs += table.schur(union_double(mu));
        } else {
            for (const Partition& lam : enumerate_by_weight(T, ClassTag::all()))
                lhs += table.schur(lam);
        }
    }
    ZPoly prod{Rational(1)};
    if (!fat)
        for (const Rational& xi : x) zmul_geometric(prod, xi, 1, cap);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) zmul_geometric(prod, x[i] * x[j], 2, cap);
    Rational rhs(0);
    for (const Rational& c : prod) rhs += c;
    return {lhs, rhs};
}

SeriesValue hypergeom(HypergeomKind kind, const std::vector<Rational>& a,
                      const std::vector<Rational>& b, long n, long N, const TimeVector& t,
                      const Rational& q, const TruncationSpec& tr, int beta) {
    check_caps(tr);
    if (N < 0) throw std::invalid_argument("hypergeom: N must be >= 0");
    const bool qkind = kind == HypergeomKind::QPHI || kind == HypergeomKind::QPSI1 ||
                       kind == HypergeomKind::QPSI4;
    const bool phi = kind == HypergeomKind::PHI || kind == HypergeomKind::QPHI;
    if (phi) {
        if (beta != 1 && beta != 2 && beta != 4)
            throw std::invalid_argument("hypergeom: beta must be 1, 2 or 4");
    } else if (beta != 1) {
        throw std::invalid_argument("hypergeom: beta applies to the PHI kinds only");
    }
    if (qkind && q.is_zero())
        throw std::invalid_argument("hypergeom: the q-kinds need a nonzero q");

    const bool doubled = kind == HypergeomKind::PSI4 || kind == HypergeomKind::QPSI4;
    const long shape_cap = doubled ? tr.max_weight / 2 : tr.max_weight;
    const bool even_rows_class = kind == HypergeomKind::PSI1 || kind == HypergeomKind::QPSI1;
    std::vector<Partition> shapes;
    for (long T = 0; T <= shape_cap; ++T) {
        const ClassTag cls = even_rows_class                ? ClassTag::even_rows()
                             : phi && beta == 4             ? ClassTag::fat()
                                                            : ClassTag::all();
        for (const Partition& lam : enumerate_by_weight(T, cls)) {
            if (long(lam.length()) > N) continue;
            if (tr.max_part >= 0 && lam.part(1) > tr.max_part) continue;
            if (phi && beta == 2 && !is_self_complementary_any(lam)) continue;
            shapes.push_back(lam);
        }
    }

    // Exponents q^(a_u + n); the plain kinds use the offsets directly.
    std::vector<Rational> qa, qb;
    if (qkind) {
        for (const Rational& au : a)
            qa.push_back(q.pow(to_long(au + Rational(n), "hypergeom: a_i + n")));
        for (const Rational& bv : b)
            qb.push_back(q.pow(to_long(bv + Rational(n), "hypergeom: b_i + n")));
    }
    Rational sqrt_q;
    if (kind == HypergeomKind::QPSI1) sqrt_q = rational_sqrt(q);

    // (x; q)_{lambda, beta} = prod_i (x * step^(i-1); q)_{lambda_i}.
    const auto q_gen = [&q](const Rational& x, const Rational& step, const Partition& lam) {
        Rational out(1);
        Rational f = x;
        for (std::size_t i = 1; i <= lam.length(); ++i) {
            out *= qpoch(f, q, lam.part(i));
            f *= step;
        }
        return out;
    };

    auto make_term = [&]() -> std::function<Rational(std::size_t)> {
        auto table = std::make_shared<HomogeneousTable>(t);
        return [&, table](std::size_t i) {
            const Partition& lam = shapes[i];
            Rational num(1), den(1);
            switch (kind) {
                case HypergeomKind::PHI:
                    for (const Rational& au : a) num *= poch(au + Rational(n), lam);
                    for (const Rational& bv : b) den *= poch(bv + Rational(n), lam);
                    break;
                case HypergeomKind::QPHI:
                    for (const Rational& xu : qa) num *= qpoch(xu, q, lam);
                    for (const Rational& xv : qb) den *= qpoch(xv, q, lam);
                    break;
                case HypergeomKind::PSI1:
                case HypergeomKind::PSI4:
                    for (const Rational& au : a)
                        num *= gen_poch(au + Rational(n), lam, doubled ? 4 : 1);
                    for (const Rational& bv : b)
                        den *= gen_poch(bv + Rational(n), lam, doubled ? 4 : 1);
                    break;
                case HypergeomKind::QPSI4:
                    for (const Rational& xu : qa) num *= q_gen(xu, q.pow(-2), lam);
                    for (const Rational& xv : qb) den *= q_gen(xv, q.pow(-2), lam);
                    break;
                case HypergeomKind::QPSI1:
                    for (const Rational& xu : qa) num *= q_gen(xu, sqrt_q.inv(), lam);
                    for (const Rational& xv : qb) den *= q_gen(xv, sqrt_q.inv(), lam);
                    break;
            }
            if (den.is_zero())
                throw PoleError("hypergeom: a denominator coefficient vanishes");
            if (num.is_zero()) return num;
            const Rational s = table->schur(doubled ? union_double(lam) : lam);
            return num / den * s;
        };
    };
    SeriesValue out;
    out.value = parallel_sum<Rational>(shapes.size(), worker_count(tr, shapes.size()), make_term);
    out.terms_included = long(shapes.size());
    out.truncation = tr;
    out.truncation.n_rows = N;
    return out;
}

SeriesValue hypergeom(HypergeomKind kind, const std::vector<Rational>& a,
                      const std::vector<Rational>& b, long n, long N, const TimeVector& t,
                      const TruncationSpec& tr, int beta) {
    const bool qkind = kind == HypergeomKind::QPHI || kind == HypergeomKind::QPSI1 ||
                       kind == HypergeomKind::QPSI4;
    if (qkind) throw std::invalid_argument("hypergeom: the q-kinds need q");
    return hypergeom(kind, a, b, n, N, t, Rational(0), tr, beta);
}

IdentityPair frobenius_resummation_check(const WeightFn& weights, long cap) {
    if (cap < 0) throw std::invalid_argument("frobenius_resummation_check: cap must be >= 0");
    if (!weights) throw std::invalid_argument("frobenius_resummation_check: weights required");

    Rational lhs(0);
    for (long T = 0; T <= cap; ++T) {
        for (const Partition& lam : enumerate_by_weight(T, ClassTag::all())) {
            const FrobeniusCoords fc = frobenius(lam);
            Rational c = eval_closed_form(lam, SpecialTimesKind::t_infty());
            for (long v : fc.alpha.parts()) c *= weights(v);
            for (long v : fc.beta.parts()) {
                const Rational wq = weights(-v - 1);
                if (wq.is_zero())
                    throw PoleError("frobenius_resummation_check: zero weight at a negative site");
                c /= wq;
            }
            lhs += c;
        }
    }

    Rational rhs(1);
    for (long k = 1; k * k <= cap; ++k) {
        const long tail_min = k * (k - 1) / 2;
        // Restoring q_n < q_m order in the Vandermonde-type factors costs
        // one sign per swapped pair; the printed form absorbs it silently
        // but exact equality with the hook-length route requires it.
        const Rational pair_sign = (k * (k - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
        for (const auto& pv : strict_lists(k, cap, cap - k - tail_min)) {
            const long psum = std::accumulate(pv.begin(), pv.end(), 0L);
            for (const auto& bv : strict_lists(k, cap, cap - k - psum)) {
                std::vector<long> qv(bv.size());
                for (std::size_t i = 0; i < bv.size(); ++i) qv[i] = -bv[i] - 1;
                Rational c(1);
                for (std::size_t m = 0; m < pv.size(); ++m) {
                    for (std::size_t nn = 0; nn < m; ++nn) {
                        c *= Rational(pv[nn] - pv[m]) * Rational(qv[nn] - qv[m]);
                        c /= Rational(pv[nn] - qv[m]) * Rational(pv[m] - qv[nn]);
                    }
                }
                for (std::size_t m = 0; m < pv.size(); ++m) {
                    const Rational wq = weights(qv[m]);
                    if (wq.is_zero())
                        throw PoleError(
                            "frobenius_resummation_check: zero weight at a negative site");
                    c *= weights(pv[m]);
                    c /= wq * Rational(pv[m] - qv[m]) * factorial(pv[m]) * factorial(bv[m]);
                }
                rhs += pair_sign * c;
            }
        }
    }
    return {lhs, rhs};
}

}  // namespace pftau
