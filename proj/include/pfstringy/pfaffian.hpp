#pragma once

#include <string>

#include "pfstringy/ratfunc.hpp"
#include "pfstringy/report.hpp"

namespace pfs {

/// Pf(2k, V) with dim V = n: skew forms of rank <= 2k up to scaling.
struct PfaffianSpec {
    long n = 4;
    long k = 1;
};

enum class DiscrepancyKind { usual, modified };

DiscrepancyKind parse_kind(const std::string &text);
std::string to_string(DiscrepancyKind kind);

/// RangeError unless n >= 4 and 1 <= k <= n/2.
void validate(const PfaffianSpec &spec);

long dim_pf(const PfaffianSpec &spec);
/// K = -nk * xi on Pf(2k, V).
long canonical_coefficient(const PfaffianSpec &spec);

/// Discrepancy of the exceptional divisor D_j, for even n and
/// (n - 2k + 2)/2 <= j <= (n - 2)/2.
mpq_class discrepancy(long j, long k, long n, DiscrepancyKind kind);

/// Closed product formulas (even n).
RatFunc stringy_pf_closed(const PfaffianSpec &spec, DiscrepancyKind kind);

/// Sum over rank strata, each weighted by the stringy function of the
/// smaller Pfaffian on ker w and the divisor factor (q - 1)/(q^{delta+1} - 1).
/// Memoized per (n, k, kind).
RatFunc stringy_pf_strata(const PfaffianSpec &spec, DiscrepancyKind kind);

/// The strata-sum/closed-form identity behind the modified formula, for even
/// n and 1 <= k <= (n - 2)/2. Terms with i > k are kept and must vanish on
/// their own through a zero factor.
PointOutcome check_key_lemma(long n, long k);
VerificationReport verify_key_lemma(long n, long k);
VerificationReport verify_key_lemma_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);

/// stringy_pf_strata == stringy_pf_closed for even n in range, all k, both kinds.
VerificationReport verify_strata_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);

} // namespace pfs
