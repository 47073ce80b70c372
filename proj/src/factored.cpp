#include "pfstringy/factored.hpp"

#include <algorithm>

#include "pfstringy/errors.hpp"

namespace pfs {

namespace {

std::int64_t to_i64(const mpz_class &z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) throw RangeError("hypergeometric parameter coefficient too large");
    return z.get_si();
}

} // namespace

FactorForm factor_form(const mpq_class &c, std::int64_t x) {
    FactorForm sh;
    if (c == 0) {
        sh.constant = true;
        sh.value = 1;
        return sh;
    }
    if (x == 0) {
        sh.constant = true;
        sh.value = 1 - c;
        return sh;
    }
    mpz_class r = c.get_num(), s = c.get_den();
    mpz_class u0, v0;
    if (x > 0) {
        u0 = s;
        v0 = -r;
        sh.binomial.e = x;
    } else {
        u0 = -r;
        v0 = s;
        sh.binomial.e = -x;
        sh.shift = x;
    }
    if (u0 < 0) {
        sh.sign = -1;
        u0 = -u0;
        v0 = -v0;
    }
    sh.binomial.u = to_i64(u0);
    sh.binomial.v = to_i64(v0);
    sh.s = s;
    return sh;
}

namespace {

using Multiset = std::vector<std::pair<Binomial, int>>;

// Multiset maximum of a and b.
Multiset multiset_max(const Multiset &a, const Multiset &b) {
    Multiset out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

Multiset multiset_sum(const Multiset &a, const Multiset &b) {
    Multiset out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

// Multiplies p by every binomial of `target` beyond its multiplicity in `have`.
LaurentPoly lift(LaurentPoly p, const Multiset &have, const Multiset &target) {
    std::size_t i = 0;
    for (const auto &[b, m] : target) {
        while (i < have.size() && have[i].first < b) ++i;
        int already = (i < have.size() && have[i].first == b) ? have[i].second : 0;
        for (int t = already; t < m; ++t) p = p.mul_binomial(b.u, b.v, b.e);
    }
    return p;
}

mpz_class lcm(const mpz_class &a, const mpz_class &b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace

FactoredFrac FactoredFrac::from_parts(LaurentPoly num, mpz_class scale, std::vector<std::pair<Binomial, int>> den) {
    FactoredFrac f;
    f.num_ = std::move(num);
    f.scale_ = std::move(scale);
    f.den_ = std::move(den);
    return f;
}

void FactoredFrac::add_denominator(const Binomial &b, int mult) {
    auto it = std::lower_bound(den_.begin(), den_.end(), b,
                               [](const std::pair<Binomial, int> &x, const Binomial &y) { return x.first < y; });
    if (it != den_.end() && it->first == b)
        it->second += mult;
    else
        den_.insert(it, {b, mult});
}

void FactoredFrac::mul_monomial(const mpq_class &c, std::int64_t x) {
    if (c == 0) {
        num_ = LaurentPoly();
        return;
    }
    num_ = num_.mul_scalar(c.get_num()).shifted(x);
    scale_ *= c.get_den();
}

void FactoredFrac::mul_factor(const mpq_class &c, std::int64_t x) {
    FactorForm sh = factor_form(c, x);
    if (sh.constant) {
        mul_monomial(sh.value, 0);
        return;
    }
    num_ = num_.mul_binomial(sh.sign * sh.binomial.u, sh.sign * sh.binomial.v, sh.binomial.e).shifted(sh.shift);
    scale_ *= sh.s;
}

void FactoredFrac::div_factor(const mpq_class &c, std::int64_t x) {
    FactorForm sh = factor_form(c, x);
    if (sh.constant) {
        if (sh.value == 0) throw ZeroDivisionError("division by an identically vanishing factor");
        mpq_class inv = 1 / sh.value;
        mul_monomial(inv, 0);
        return;
    }
    num_ = num_.mul_scalar(sh.s * sh.sign).shifted(-sh.shift);
    add_denominator(sh.binomial, 1);
}

FactoredFrac FactoredFrac::operator+(const FactoredFrac &o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    FactoredFrac out;
    out.den_ = multiset_max(den_, o.den_);
    out.scale_ = lcm(scale_, o.scale_);
    LaurentPoly a = lift(num_.mul_scalar(out.scale_ / scale_), den_, out.den_);
    LaurentPoly b = lift(o.num_.mul_scalar(out.scale_ / o.scale_), o.den_, out.den_);
    out.num_ = a + b;
    return out;
}

FactoredFrac FactoredFrac::operator*(const FactoredFrac &o) const {
    FactoredFrac out;
    out.num_ = num_ * o.num_;
    out.scale_ = scale_ * o.scale_;
    out.den_ = multiset_sum(den_, o.den_);
    return out;
}

bool equal_values(const FactoredFrac &a, const FactoredFrac &b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Multiset target = multiset_max(a.den_, b.den_);
    mpz_class l = lcm(a.scale_, b.scale_);
    LaurentPoly x = lift(a.num_.mul_scalar(l / a.scale_), a.den_, target);
    LaurentPoly y = lift(b.num_.mul_scalar(l / b.scale_), b.den_, target);
    return x == y;
}

RatFunc FactoredFrac::to_ratfunc() const {
    LaurentPoly den(scale_);
    for (const auto &[b, m] : den_)
        for (int t = 0; t < m; ++t) den = den.mul_binomial(b.u, b.v, b.e);
    return RatFunc(num_, den);
}

} // namespace pfs
