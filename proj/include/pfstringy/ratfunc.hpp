#pragma once

#include <ostream>
#include <string>

#include "pfstringy/laurent_poly.hpp"

namespace pfs {

/// Exact rational function in q, always held in canonical form:
/// the denominator is an ordinary polynomial with nonzero constant term and
/// positive leading coefficient, powers of q live in the numerator, the two
/// share no polynomial factor and their contents are coprime. Equality is
/// therefore structural.
class RatFunc {
public:
    RatFunc() : den_(1L) {}
    RatFunc(long constant) : num_(constant), den_(1L) {}
    RatFunc(const mpz_class &constant) : num_(constant), den_(1L) {}
    RatFunc(const LaurentPoly &p) : num_(p), den_(1L) {}
    /// Normalizes num/den; throws ZeroDivisionError when den is zero.
    RatFunc(const LaurentPoly &num, const LaurentPoly &den);

    const LaurentPoly &numerator() const { return num_; }
    const LaurentPoly &denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a Laurent polynomial (denominator 1).
    bool is_laurent_polynomial() const { return den_.is_one(); }
    /// True when the value is an ordinary polynomial in q.
    bool is_polynomial() const { return is_laurent_polynomial() && (num_.is_zero() || num_.low_degree() >= 0); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }
    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    /// Integer power; negative exponents invert (ZeroDivisionError on zero).
    RatFunc pow(long exponent) const;

    /// Expanded rendering: "q^5 - q^2" or "(num) / (den)".
    std::string to_string() const;
    /// Rendering with every factor (q^a - 1) pulled out of numerator and
    /// denominator, e.g. "(q^10 - 1)*(q^6 - 1) / ((q - 1)*(q^2 - 1))".
    std::string to_factored_string() const;

private:
    struct Raw {};
    RatFunc(const LaurentPoly &num, const LaurentPoly &den, Raw) : num_(num), den_(den) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class RatOp { add, sub, mul, div };

RatFunc rat_normalize(const LaurentPoly &num, const LaurentPoly &den);
RatFunc rat_arith(const RatFunc &a, const RatFunc &b, RatOp op);

/// Exact value at a rational point; PoleError if the denominator vanishes.
mpq_class eval_at(const RatFunc &f, const mpq_class &x);

/// lim_{q->1} f by cancelling (q - 1) factors; PoleError if infinite.
mpq_class limit_at_one(const RatFunc &f);

/// q -> q^m. For m >= 1 the canonical form is preserved directly; negative m
/// is accepted and renormalized; m = 0 is a RangeError.
RatFunc substitute_power(const RatFunc &f, long m);

/// Equality by cross-multiplication (independent of canonical forms).
bool cross_equal(const RatFunc &a, const RatFunc &b);

/// Parses integer/q expressions with + - * / ^ and parentheses. Accepts both
/// renderings of RatFunc and LaurentPoly.
RatFunc parse_ratfunc(const std::string &text);

/// The cyclotomic polynomial Phi_d (d >= 1), cached process-wide.
LaurentPoly cyclotomic(long d);

inline std::ostream &operator<<(std::ostream &os, const RatFunc &f) { return os << f.to_string(); }

} // namespace pfs
