#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pfs {

/// Exact univariate Laurent polynomial in q with arbitrary-precision integer
/// coefficients.
///
/// Storage is dense between the lowest and highest nonzero exponent. While
/// every coefficient fits in 64 bits the coefficients live in a plain
/// `int64_t` vector; arithmetic that would overflow transparently promotes to
/// GMP integers, and results that fit are demoted again. The zero polynomial
/// has no coefficients at all. Values are immutable once built.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant);
    LaurentPoly(const mpz_class &constant);

    static LaurentPoly monomial(const mpz_class &coefficient, std::int64_t exponent);
    static LaurentPoly q() { return monomial(1, 1); }
    /// Builds from an explicit term map; zero coefficients are dropped.
    static LaurentPoly from_terms(const std::map<std::int64_t, mpz_class> &terms);
    /// Dense constructor: coefficients[t] is the coefficient of q^(low + t).
    static LaurentPoly from_dense(std::int64_t low, const std::vector<mpz_class> &coefficients);

    bool is_zero() const { return size() == 0; }
    bool is_one() const;
    bool is_constant() const { return is_zero() || (size() == 1 && low_ == 0); }
    bool is_monomial() const { return size() == 1; }
    /// Number of stored coefficients (high - low + 1), zero for the zero polynomial.
    std::size_t size() const { return big_ ? big_coeffs_.size() : small_coeffs_.size(); }

    /// Lowest / highest exponent with a nonzero coefficient. Undefined for zero.
    std::int64_t low_degree() const { return low_; }
    std::int64_t high_degree() const { return low_ + static_cast<std::int64_t>(size()) - 1; }

    mpz_class coefficient(std::int64_t exponent) const;
    mpz_class leading_coefficient() const;
    mpz_class trailing_coefficient() const;
    std::map<std::int64_t, mpz_class> terms() const;
    std::vector<mpz_class> dense() const;

    /// Multiplication by q^shift.
    LaurentPoly shifted(std::int64_t shift) const;
    /// q -> q^m for m >= 1.
    LaurentPoly substitute_power(std::int64_t m) const;
    /// Multiplication by the binomial (a + b q^e), linear time.
    LaurentPoly mul_binomial(const mpz_class &a, const mpz_class &b, std::int64_t e) const;
    LaurentPoly mul_scalar(const mpz_class &c) const;
    /// Exact division by an integer that divides every coefficient.
    LaurentPoly div_scalar_exact(const mpz_class &c) const;

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Largest bit length of any coefficient.
    std::size_t max_coefficient_bits() const;

    mpq_class eval(const mpq_class &x) const;
    mpz_class eval(const mpz_class &x) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly &operator+=(const LaurentPoly &o) { return *this = *this + o; }
    LaurentPoly &operator-=(const LaurentPoly &o) { return *this = *this - o; }
    LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

    LaurentPoly pow(unsigned exponent) const;

    /// Canonical rendering, highest exponent first: "q^5 - q^2", "3*q^-1 + 2".
    std::string to_string() const;

    /// True when the coefficients are held as GMP integers (for tests/benchmarks).
    bool uses_big_storage() const { return big_; }

private:
    friend struct PolyAccess;

    std::int64_t low_ = 0;
    bool big_ = false;
    std::vector<std::int64_t> small_coeffs_;
    std::vector<mpz_class> big_coeffs_;

    void trim();
    void demote_if_small();
    void promote();
};

enum class PolyOp { add, sub, mul };

/// The exact ring operation selected by `op`.
LaurentPoly poly_arith(const LaurentPoly &a, const LaurentPoly &b, PolyOp op);

/// Exact quotient of a by b; throws InvariantError if b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly &a, const LaurentPoly &b);

/// Quotient and remainder of a by b when b's leading coefficient divides
/// every leading coefficient met; returns false otherwise.
bool try_divide(const LaurentPoly &a, const LaurentPoly &b, LaurentPoly &quotient);

/// Polynomial gcd of two ordinary polynomials (nonnegative exponents),
/// primitive, with positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b);

/// Reference gcd through primitive pseudo-remainder sequences. Slower than
/// poly_gcd; kept as an independent route for cross-checking.
LaurentPoly poly_gcd_prs(const LaurentPoly &a, const LaurentPoly &b);

/// Multiplicity of the root q = 1 and the cofactor after removing (q - 1)^m.
std::pair<unsigned, LaurentPoly> strip_root_at_one(const LaurentPoly &p);

/// Parses the canonical rendering (and any sum of integer multiples of q^e).
LaurentPoly parse_laurent_poly(const std::string &text);

inline std::ostream &operator<<(std::ostream &os, const LaurentPoly &f) { return os << f.to_string(); }

} // namespace pfs
