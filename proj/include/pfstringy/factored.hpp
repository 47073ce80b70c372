#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pfstringy/laurent_poly.hpp"
#include "pfstringy/ratfunc.hpp"

namespace pfs {

/// The binomial u + v q^e with e > 0, u > 0, v != 0 and gcd(u, v) = 1.
struct Binomial {
    std::int64_t u = 1;
    std::int64_t v = -1;
    std::int64_t e = 1;
    friend auto operator<=>(const Binomial &, const Binomial &) = default;
};

/// 1 - c q^x written as sign * q^shift * (u + v q^e) / s, or as a constant
/// when x = 0 (or c = 0).
struct FactorForm {
    bool constant = false;
    mpq_class value;
    std::int64_t shift = 0;
    Binomial binomial;
    long sign = 1;
    mpz_class s;
};
FactorForm factor_form(const mpq_class &c, std::int64_t x);

/// A rational function kept as num / (scale * prod binomials^mult).
///
/// Multiplying or dividing by a factor (1 - c q^x) is linear in the size of
/// the numerator, and two values are compared by lifting both to the
/// multiset maximum of their denominators, so no polynomial gcd or general
/// multiplication is ever needed. The denominator multiset is a valid common
/// denominator, not necessarily the least one.
class FactoredFrac {
public:
    FactoredFrac() : num_(1L), scale_(1) {}
    explicit FactoredFrac(const LaurentPoly &num) : num_(num), scale_(1) {}
    /// num / (scale * prod den); `den` must be sorted with positive multiplicities.
    static FactoredFrac from_parts(LaurentPoly num, mpz_class scale, std::vector<std::pair<Binomial, int>> den);

    const LaurentPoly &numerator() const { return num_; }
    const mpz_class &scale() const { return scale_; }
    const std::vector<std::pair<Binomial, int>> &denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// Multiplies by c * q^x.
    void mul_monomial(const mpq_class &c, std::int64_t x);
    /// Multiplies by (1 - c q^x).
    void mul_factor(const mpq_class &c, std::int64_t x);
    /// Divides by (1 - c q^x); throws ZeroDivisionError if it is identically 0.
    void div_factor(const mpq_class &c, std::int64_t x);

    FactoredFrac operator+(const FactoredFrac &o) const;
    /// Product with another factored value (general polynomial multiplication
    /// of numerators).
    FactoredFrac operator*(const FactoredFrac &o) const;

    /// Exact equality of the represented rational functions.
    friend bool equal_values(const FactoredFrac &a, const FactoredFrac &b);

    RatFunc to_ratfunc() const;

private:
    LaurentPoly num_;
    mpz_class scale_;
    std::vector<std::pair<Binomial, int>> den_; // sorted by binomial

    void add_denominator(const Binomial &b, int mult);
};

} // namespace pfs
