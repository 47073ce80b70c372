#pragma once

#include "pfstringy/laurent_poly.hpp"
#include "pfstringy/ratfunc.hpp"

namespace pfs {

/// (a; q^m)_count with a = +-q^e, i.e. prod_{t<count} (1 - a q^{m t}).
struct QSymbolSpec {
    long start_exponent = 0;
    long step = 1;
    long count = 0;
};

LaurentPoly q_pochhammer(const QSymbolSpec &spec, int sign = 1);

/// Gaussian binomial [n choose k] in base q^power. Zero when k < 0 or k > n.
LaurentPoly gauss_binomial(long n, long k, long power = 1);

/// E(P^n) = 1 + q + ... + q^n.
RatFunc e_projective(long n);

/// E(G(k, n)) = [n choose k]_q; RangeError unless 0 <= k <= n.
RatFunc e_grassmannian(long k, long n);

/// E-polynomial of the non-degenerate skew forms on a 2i-dimensional space,
/// up to scaling, from the rank stratification of P(wedge^2). Memoized.
RatFunc e_nondeg_skew(long i);

/// Closed product formula for the same quantity, kept as a second route.
RatFunc e_nondeg_skew_closed(long i);

/// E-polynomial of the rank-exactly-2i stratum of P(wedge^2 C^n).
RatFunc e_strata_pf(long i, long n);

} // namespace pfs
