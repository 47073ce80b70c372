#pragma once

#include <optional>
#include <vector>

#include "pfstringy/factored.hpp"
#include "pfstringy/ratfunc.hpp"
#include "pfstringy/report.hpp"

namespace pfs {

/// The value coefficient * q^exponent.
struct PhiParam {
    mpq_class coefficient = 1;
    long exponent = 0;
};

PhiParam operator*(const PhiParam &a, const PhiParam &b);
PhiParam operator/(const PhiParam &a, const PhiParam &b);
inline PhiParam qpow(long e, mpq_class c = 1) { return PhiParam{std::move(c), e}; }

/// Terminating r_phi_s in base q^m, summed for t = 0..termination.
struct PhiSeriesSpec {
    std::vector<PhiParam> upper;
    std::vector<PhiParam> lower;
    long base_power = 1;
    PhiParam argument;
    long termination = 0;
};

/// Throws InvariantError unless some upper parameter is q^{-mN} and no lower
/// factor (b; q^m)_N vanishes identically.
void validate(const PhiSeriesSpec &spec);

/// True when some factor of (c q^e; q^m)_count is identically zero.
bool pochhammer_vanishes(const PhiParam &a, long step, long count);

/// Canonical value of the series (ratio recursion).
RatFunc eval_phi(const PhiSeriesSpec &spec);

/// Horner evaluation of 1 + R_0 (1 + R_1 (1 + ...)) from consecutive term ratios.
FactoredFrac eval_phi_ratio(const PhiSeriesSpec &spec);

/// Sum of the terms, each built as a quotient of q-Pochhammer products.
FactoredFrac eval_phi_terms(const PhiSeriesSpec &spec);

/// (c q^e; q^m)_count as a factored value (numerator only).
void mul_pochhammer(FactoredFrac &f, const PhiParam &a, long step, long count);
void div_pochhammer(FactoredFrac &f, const PhiParam &a, long step, long count);

/// Both sides of one of the four identities at a specialization.
struct IdentityInstance {
    bool defined = true;
    PhiSeriesSpec lhs;
    std::optional<PhiSeriesSpec> rhs_series;
    // rhs = prefactor (* rhs_series when present); prefactor is
    // monomial * prod numerator Pochhammers / prod denominator Pochhammers.
    PhiParam monomial;
    std::vector<PhiParam> prefactor_num; // each (x; q)_n
    std::vector<PhiParam> prefactor_den;
    long prefactor_length = 0;
};

/// Named free parameters are taken from `values` in the order
/// identity_parameters(id) lists them; `n` is the termination index.
IdentityInstance make_identity(int id, long n, const std::vector<PhiParam> &values);
std::vector<std::string> identity_parameters(int id);

/// Grid for verify_identity: n in [n_lo, n_hi], every free exponent in
/// [e_lo, e_hi], every free coefficient drawn from `coefficients`.
struct IdentityGrid {
    long n_lo = 0;
    long n_hi = 8;
    long e_lo = -4;
    long e_hi = 8;
    std::vector<mpq_class> coefficients{mpq_class(1)};
};

/// Checks the identity at one point through both evaluation paths.
PointOutcome check_identity_point(int id, long n, const std::vector<PhiParam> &values);

VerificationReport verify_identity(int id, const IdentityGrid &grid = {}, unsigned threads = 1,
                                   bool record_all = false);

/// Identity 4 at a = q^{-2i}, b = q^{-i}, d = q^{-n}, termination 2k, for the
/// (n, k, i) ranges given.
VerificationReport verify_identity4_specialization(long n_max, unsigned threads = 1, bool record_all = false);

std::string to_string(const PhiParam &p);

} // namespace pfs
