#pragma once

#include "pfstringy/ratfunc.hpp"
#include "pfstringy/report.hpp"

namespace pfs {

/// Hyperplane cut of Pf(2k, V), dim V = n even, by a form of rank 2i.
struct CutSpec {
    long n = 4;
    long k = 1;
    long i = 1;
};

/// ParityError for odd n; RangeError unless 1 <= k <= n/2 and 1 <= i <= n/2.
void validate(const CutSpec &spec);

/// Count of isotropic 2k-dimensional subspaces for a rank-2i form on C^n
/// (any n; 2k <= n, 1 <= i <= n/2). Always a polynomial.
RatFunc l_iso(long k, long i, long n);

RatFunc f_closed(const CutSpec &spec);

/// Triangular solve in k of the defining equations, unit diagonal.
RatFunc f_recursive(const CutSpec &spec);

/// f° from f through the inversion formula.
RatFunc f_circ(const CutSpec &spec);
/// f rebuilt from the f° values: sum_p f°_p [n/2-p choose k-p]_{q^2}.
RatFunc f_from_circ(const CutSpec &spec);

/// sum_{s=0}^{a} (-1)^s q^{s(s-1)} [a choose s]_{q^2}; equals 1 at a = 0 and 0 above.
RatFunc delta_sum(long a);

/// Coefficient of f_{j,i,n} in the k-th defining equation.
RatFunc cut_coefficient(long k, long j, long n);

/// The four sums A_{k,n}, B_{k,i,n}, C_{k,n}, D_{k,i,n} of the closed-form proof.
RatFunc sum_A(long k, long n);
RatFunc sum_B(long k, long i, long n);
RatFunc sum_C(long k, long n);
RatFunc sum_D(long k, long i, long n);

/// sum_s (-1)^s q^{s^2-s} [2b-2s choose 2a-2s]_q [b choose s]_{q^2} against
/// q^{2a^2-a} (q^{2b-4a+2}; q^2)_{2a} / (q; q)_{2a}.
PointOutcome check_combinatorial_identity(long a, long b);

PointOutcome check_f(const CutSpec &spec);         // recursive vs closed
PointOutcome check_inversion(const CutSpec &spec); // f -> f° -> f
PointOutcome check_abcd(const CutSpec &spec);      // A = C and B = D

VerificationReport inversion_check(const CutSpec &spec);
VerificationReport verify_abcd(long n, long k, long i);

/// Grids over even n in [n_lo, n_hi] and all valid (k, i).
VerificationReport verify_f_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);
VerificationReport verify_inversion_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);
VerificationReport verify_abcd_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);
VerificationReport verify_combinatorial_grid(long a_max, long b_max, unsigned threads = 1, bool record_all = false);
/// delta_sum(a) for 0 <= a <= a_max.
VerificationReport verify_delta_grid(long a_max, bool record_all = false);

/// f_closed having only nonnegative integer coefficients is an observation,
/// not a theorem: violations are listed, never thrown.
struct NonnegativityObservation {
    long tested = 0;
    std::vector<CutSpec> violations;
};
NonnegativityObservation observe_nonnegativity(long n_lo, long n_hi);

} // namespace pfs
