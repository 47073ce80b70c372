#include "pfstringy/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "pfstringy/errors.hpp"
#include "pfstringy/qseries.hpp"

namespace pfs {

namespace {

LaurentPoly q_to_minus_1(long e) { return LaurentPoly::monomial(1, e) - LaurentPoly(1L); }

void require_even(long n) {
    if (n % 2 != 0) throw ParityError("this formula needs an even n, got " + std::to_string(n));
}

} // namespace

DiscrepancyKind parse_kind(const std::string &text) {
    if (text == "usual") return DiscrepancyKind::usual;
    if (text == "modified") return DiscrepancyKind::modified;
    throw InvariantError("discrepancy kind must be 'usual' or 'modified', got '" + text + "'");
}

std::string to_string(DiscrepancyKind kind) { return kind == DiscrepancyKind::usual ? "usual" : "modified"; }

void validate(const PfaffianSpec &spec) {
    if (spec.n < 4) throw RangeError("Pfaffian needs n >= 4");
    if (spec.k < 1 || 2 * spec.k > spec.n) throw RangeError("Pfaffian needs 1 <= k <= n/2");
}

long dim_pf(const PfaffianSpec &spec) {
    validate(spec);
    return 2 * spec.n * spec.k - 2 * spec.k * spec.k - spec.k - 1;
}

long canonical_coefficient(const PfaffianSpec &spec) {
    validate(spec);
    return -spec.n * spec.k;
}

mpq_class discrepancy(long j, long k, long n, DiscrepancyKind kind) {
    require_even(n);
    if (2 * j < n - 2 * k + 2 || 2 * j > n - 2)
        throw RangeError("divisor index j must satisfy (n-2k+2)/2 <= j <= (n-2)/2");
    if (kind == DiscrepancyKind::usual) return mpq_class(2 * j * j - j * (n - 2 * k) - 1);
    return mpq_class(2 * j * j - j * (n - 2 * k + 1) + (n - 2 * k - 2) / 2);
}

RatFunc stringy_pf_closed(const PfaffianSpec &spec, DiscrepancyKind kind) {
    validate(spec);
    require_even(spec.n);
    const long n = spec.n, k = spec.k;
    LaurentPoly num, den;
    if (kind == DiscrepancyKind::usual) {
        num = q_to_minus_1(n * k);
        den = q_to_minus_1(1);
        for (long j = 1; j <= k; ++j) {
            num *= q_to_minus_1(n + 1 - 2 * j);
            den *= q_to_minus_1(2 * j);
        }
    } else {
        num = q_to_minus_1((n - 1) * k);
        den = q_to_minus_1(1);
        for (long j = k + 1; j <= n / 2; ++j) {
            num *= q_to_minus_1(2 * j);
            den *= q_to_minus_1(2 * j - 2 * k);
        }
    }
    return RatFunc(num, den);
}

namespace {

// The recursion reaches Pf(2k', C^{n'}) with n' as small as 2.
RatFunc strata_impl(long n, long k, DiscrepancyKind kind) {
    static std::shared_mutex mutex;
    static std::map<std::tuple<long, long, int>, RatFunc> cache;
    auto key = std::make_tuple(n, k, static_cast<int>(kind));
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RatFunc total;
    for (long i = 1; i <= k; ++i) {
        RatFunc term = e_strata_pf(i, n);
        if (i < k) {
            // Normal slice: Pf(2(k-i), ker w) with the divisor weight of D_{(n-2i)/2}.
            mpq_class delta = discrepancy((n - 2 * i) / 2, k, n, kind);
            if (delta.get_den() != 1) throw InvariantError("non-integral discrepancy");
            long d = delta.get_num().get_si();
            term *= strata_impl(n - 2 * i, k - i, kind);
            term *= RatFunc(q_to_minus_1(1), q_to_minus_1(d + 1));
        }
        total += term;
    }
    std::unique_lock lock(mutex);
    cache.emplace(key, total);
    return total;
}

} // namespace

RatFunc stringy_pf_strata(const PfaffianSpec &spec, DiscrepancyKind kind) {
    validate(spec);
    require_even(spec.n);
    return strata_impl(spec.n, spec.k, kind);
}

PointOutcome check_key_lemma(long n, long k) {
    require_even(n);
    if (k < 1 || 2 * k > n - 2) throw RangeError("the key lemma needs 1 <= k <= (n-2)/2");
    RatFunc lhs;
    for (long i = 1; 2 * i <= n; ++i) {
        RatFunc term = e_nondeg_skew(i) * RatFunc(gauss_binomial(n, n - 2 * i, 1));
        for (long j = k - i + 1; 2 * j <= n - 2 * i; ++j)
            term *= RatFunc(q_to_minus_1(2 * j), q_to_minus_1(2 * j - 2 * k + 2 * i));
        lhs += term;
    }
    RatFunc rhs = RatFunc(q_to_minus_1((n - 1) * k), q_to_minus_1(1));
    for (long j = k + 1; j <= n / 2; ++j) rhs *= RatFunc(q_to_minus_1(2 * j), q_to_minus_1(2 * j - 2 * k));
    PointOutcome out;
    out.status = lhs == rhs ? PointStatus::pass : PointStatus::fail;
    if (out.status == PointStatus::fail) {
        out.lhs = lhs.to_string();
        out.rhs = rhs.to_string();
        out.check = "key lemma";
    }
    return out;
}

VerificationReport verify_key_lemma(long n, long k) {
    std::vector<GridAxis> axes{{"n", n, n}, {"k", k, k}};
    return run_points("key lemma", axes, {{n, k}}, [](const GridPoint &p) { return check_key_lemma(p[0], p[1]); });
}

VerificationReport verify_key_lemma_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    if (n_lo % 2 != 0) ++n_lo;
    std::vector<GridPoint> points;
    for (long n = n_lo; n <= n_hi; n += 2)
        for (long k = 1; 2 * k <= n - 2; ++k) points.push_back({n, k});
    std::vector<GridAxis> axes{{"n", n_lo, n_hi, 2}, {"k", 1, n_hi / 2 - 1}};
    return run_points(
        "key lemma", axes, points, [](const GridPoint &p) { return check_key_lemma(p[0], p[1]); }, threads, record_all);
}

VerificationReport verify_strata_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    if (n_lo % 2 != 0) ++n_lo;
    n_lo = std::max(n_lo, 4L);
    std::vector<GridPoint> points;
    for (long n = n_lo; n <= n_hi; n += 2)
        for (long k = 1; 2 * k <= n; ++k)
            for (long kind = 0; kind <= 1; ++kind) points.push_back({n, k, kind});
    std::vector<GridAxis> axes{{"n", n_lo, n_hi, 2}, {"k", 1, n_hi / 2}, {"kind", 0, 1}};
    auto check = [](const GridPoint &p) {
        PfaffianSpec spec{p[0], p[1]};
        DiscrepancyKind kind = p[2] == 0 ? DiscrepancyKind::usual : DiscrepancyKind::modified;
        RatFunc a = stringy_pf_strata(spec, kind), b = stringy_pf_closed(spec, kind);
        PointOutcome out;
        if (a == b) return out;
        out.status = PointStatus::fail;
        out.lhs = a.to_string();
        out.rhs = b.to_string();
        out.check = to_string(kind) + " strata sum vs closed form";
        return out;
    };
    VerificationReport r = run_points("strata recursion vs closed form", axes, points, check, threads, record_all);
    r.grid_extra["kind"] = {"usual", "modified"};
    return r;
}

} // namespace pfs
