#include "pfstringy/qseries.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "pfstringy/errors.hpp"

namespace pfs {

LaurentPoly q_pochhammer(const QSymbolSpec &spec, int sign) {
    if (spec.step < 1) throw InvariantError("q-Pochhammer step must be positive");
    if (spec.count < 0) throw InvariantError("q-Pochhammer length must be nonnegative");
    if (sign != 1 && sign != -1) throw InvariantError("q-Pochhammer sign must be +1 or -1");
    LaurentPoly acc(1L);
    for (long t = 0; t < spec.count; ++t) {
        long e = spec.start_exponent + spec.step * t;
        if (e == 0 && sign == 1) return {};
        acc = acc.mul_binomial(1, -sign, e);
    }
    return acc;
}

namespace {

LaurentPoly compute_gauss_binomial(long n, long k, long power) {
    k = std::min(k, n - k);
    LaurentPoly acc(1L);
    // prod (1 - q^{n-j}) / prod (1 - q^{j+1}); each partial quotient is again a
    // Gaussian binomial times leftover factors, so every division is exact.
    for (long j = 0; j < k; ++j) {
        acc = acc.mul_binomial(1, -1, n - j);
        acc = exact_quotient(acc, LaurentPoly(1L) - LaurentPoly::monomial(1, j + 1));
    }
    return acc.substitute_power(power);
}

} // namespace

LaurentPoly gauss_binomial(long n, long k, long power) {
    if (power < 1) throw RangeError("Gaussian binomial base power must be positive");
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return LaurentPoly(1L);
    static std::shared_mutex mutex;
    static std::map<std::tuple<long, long, long>, LaurentPoly> cache;
    auto key = std::make_tuple(n, std::min(k, n - k), power);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly value = compute_gauss_binomial(n, k, power);
    std::unique_lock lock(mutex);
    cache.emplace(key, value);
    return value;
}

RatFunc e_projective(long n) {
    if (n < 0) throw RangeError("projective space dimension must be nonnegative");
    return RatFunc(LaurentPoly::monomial(1, n + 1) - LaurentPoly(1L), LaurentPoly::monomial(1, 1) - LaurentPoly(1L));
}

RatFunc e_grassmannian(long k, long n) {
    if (k < 0 || k > n) throw RangeError("Grassmannian G(k, n) needs 0 <= k <= n");
    return RatFunc(gauss_binomial(n, k, 1));
}

RatFunc e_nondeg_skew(long i) {
    if (i < 1) throw RangeError("non-degenerate skew forms need i >= 1");
    static std::shared_mutex mutex;
    static std::map<long, RatFunc> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(i);
        if (it != cache.end()) return it->second;
    }
    // P(wedge^2 C^{2i}) minus the lower-rank strata.
    long n = 2 * i;
    RatFunc value = e_projective(n * (n - 1) / 2 - 1);
    for (long p = 1; p < i; ++p) value -= e_strata_pf(p, n);
    std::unique_lock lock(mutex);
    cache.emplace(i, value);
    return value;
}

RatFunc e_nondeg_skew_closed(long i) {
    if (i < 1) throw RangeError("non-degenerate skew forms need i >= 1");
    LaurentPoly num = LaurentPoly::monomial(1, i * (i - 1));
    for (long j = 1; j <= i; ++j) num = num.mul_binomial(-1, 1, 2 * j - 1);
    return RatFunc(num, LaurentPoly::monomial(1, 1) - LaurentPoly(1L));
}

RatFunc e_strata_pf(long i, long n) {
    if (i < 1 || 2 * i > n) throw RangeError("rank stratum needs 1 <= i <= n/2");
    return e_nondeg_skew(i) * RatFunc(gauss_binomial(n, n - 2 * i, 1));
}

} // namespace pfs
