#include "pfstringy/laurent_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pfstringy/errors.hpp"

namespace pfs {

using i64 = std::int64_t;
using i128 = __int128;

struct PolyAccess {
    static LaurentPoly make_small(i64 low, std::vector<i64> &&c) {
        LaurentPoly p;
        p.low_ = low;
        p.small_coeffs_ = std::move(c);
        p.trim();
        return p;
    }

    static LaurentPoly make_big(i64 low, std::vector<mpz_class> &&c) {
        LaurentPoly p;
        p.big_ = true;
        p.low_ = low;
        p.big_coeffs_ = std::move(c);
        p.trim();
        p.demote_if_small();
        return p;
    }

    static std::vector<mpz_class> big_copy(const LaurentPoly &p) {
        if (p.big_) return p.big_coeffs_;
        std::vector<mpz_class> out(p.small_coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<long>(p.small_coeffs_[i]);
        return out;
    }

    static const std::vector<i64> &small(const LaurentPoly &p) { return p.small_coeffs_; }
    static const std::vector<mpz_class> &big(const LaurentPoly &p) { return p.big_coeffs_; }
    static bool is_big(const LaurentPoly &p) { return p.big_; }
    static i64 low(const LaurentPoly &p) { return p.low_; }
};

namespace {

bool fits_i64(const mpz_class &z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

mpz_class from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

unsigned bit_length(i64 v) {
    std::uint64_t u = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    return u == 0 ? 0 : 64 - static_cast<unsigned>(__builtin_clzll(u));
}

} // namespace

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) small_coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(const mpz_class &constant) {
    if (constant == 0) return;
    if (fits_i64(constant)) {
        small_coeffs_.push_back(constant.get_si());
    } else {
        big_ = true;
        big_coeffs_.push_back(constant);
    }
}

LaurentPoly LaurentPoly::monomial(const mpz_class &coefficient, i64 exponent) {
    LaurentPoly p(coefficient);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<i64, mpz_class> &terms) {
    std::map<i64, mpz_class> nz;
    for (const auto &[e, c] : terms)
        if (c != 0) nz.emplace(e, c);
    if (nz.empty()) return {};
    i64 low = nz.begin()->first;
    i64 high = nz.rbegin()->first;
    std::vector<mpz_class> dense(static_cast<std::size_t>(high - low + 1));
    for (const auto &[e, c] : nz) dense[static_cast<std::size_t>(e - low)] = c;
    return PolyAccess::make_big(low, std::move(dense));
}

LaurentPoly LaurentPoly::from_dense(i64 low, const std::vector<mpz_class> &coefficients) {
    return PolyAccess::make_big(low, std::vector<mpz_class>(coefficients));
}

void LaurentPoly::trim() {
    if (big_) {
        std::size_t first = 0, last = big_coeffs_.size();
        while (first < last && big_coeffs_[first] == 0) ++first;
        while (last > first && big_coeffs_[last - 1] == 0) --last;
        if (first == last) {
            big_coeffs_.clear();
            low_ = 0;
            return;
        }
        if (first > 0 || last < big_coeffs_.size()) {
            big_coeffs_.erase(big_coeffs_.begin() + static_cast<std::ptrdiff_t>(last), big_coeffs_.end());
            big_coeffs_.erase(big_coeffs_.begin(), big_coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        }
        low_ += static_cast<i64>(first);
    } else {
        std::size_t first = 0, last = small_coeffs_.size();
        while (first < last && small_coeffs_[first] == 0) ++first;
        while (last > first && small_coeffs_[last - 1] == 0) --last;
        if (first == last) {
            small_coeffs_.clear();
            low_ = 0;
            return;
        }
        if (first > 0 || last < small_coeffs_.size()) {
            small_coeffs_.erase(small_coeffs_.begin() + static_cast<std::ptrdiff_t>(last), small_coeffs_.end());
            small_coeffs_.erase(small_coeffs_.begin(), small_coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        }
        low_ += static_cast<i64>(first);
    }
}

void LaurentPoly::demote_if_small() {
    if (!big_) return;
    for (const auto &c : big_coeffs_)
        if (!fits_i64(c)) return;
    small_coeffs_.resize(big_coeffs_.size());
    for (std::size_t i = 0; i < big_coeffs_.size(); ++i) small_coeffs_[i] = big_coeffs_[i].get_si();
    big_coeffs_.clear();
    big_ = false;
}

void LaurentPoly::promote() {
    if (big_) return;
    big_coeffs_ = PolyAccess::big_copy(*this);
    small_coeffs_.clear();
    big_ = true;
}

bool LaurentPoly::is_one() const {
    return size() == 1 && low_ == 0 && (big_ ? big_coeffs_[0] == 1 : small_coeffs_[0] == 1);
}

mpz_class LaurentPoly::coefficient(i64 exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
    auto idx = static_cast<std::size_t>(exponent - low_);
    return big_ ? big_coeffs_[idx] : mpz_class(static_cast<long>(small_coeffs_[idx]));
}

mpz_class LaurentPoly::leading_coefficient() const { return is_zero() ? mpz_class(0) : coefficient(high_degree()); }

mpz_class LaurentPoly::trailing_coefficient() const { return is_zero() ? mpz_class(0) : coefficient(low_); }

std::map<i64, mpz_class> LaurentPoly::terms() const {
    std::map<i64, mpz_class> out;
    for (std::size_t i = 0; i < size(); ++i) {
        mpz_class c = big_ ? big_coeffs_[i] : mpz_class(static_cast<long>(small_coeffs_[i]));
        if (c != 0) out.emplace(low_ + static_cast<i64>(i), c);
    }
    return out;
}

std::vector<mpz_class> LaurentPoly::dense() const { return PolyAccess::big_copy(*this); }

LaurentPoly LaurentPoly::shifted(i64 shift) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += shift;
    return p;
}

LaurentPoly LaurentPoly::substitute_power(i64 m) const {
    if (m < 1) throw RangeError("substitute_power on a Laurent polynomial needs m >= 1");
    if (m == 1 || is_zero()) return *this;
    std::size_t n = size();
    std::size_t out_len = (n - 1) * static_cast<std::size_t>(m) + 1;
    if (big_) {
        std::vector<mpz_class> out(out_len);
        for (std::size_t i = 0; i < n; ++i) out[i * static_cast<std::size_t>(m)] = big_coeffs_[i];
        return PolyAccess::make_big(low_ * m, std::move(out));
    }
    std::vector<i64> out(out_len, 0);
    for (std::size_t i = 0; i < n; ++i) out[i * static_cast<std::size_t>(m)] = small_coeffs_[i];
    return PolyAccess::make_small(low_ * m, std::move(out));
}

LaurentPoly LaurentPoly::mul_binomial(const mpz_class &a, const mpz_class &b, i64 e) const {
    if (is_zero()) return {};
    if (b == 0) return mul_scalar(a);
    if (a == 0) return mul_scalar(b).shifted(e);
    // result = a*p + b*q^e*p, laid out on the union of both ranges.
    i64 lo_a = low_, lo_b = low_ + e;
    i64 lo = std::min(lo_a, lo_b);
    std::size_t n = size();
    std::size_t len = n + static_cast<std::size_t>(std::llabs(e));
    std::size_t off_a = static_cast<std::size_t>(lo_a - lo);
    std::size_t off_b = static_cast<std::size_t>(lo_b - lo);
    if (!big_ && fits_i64(a) && fits_i64(b)) {
        i64 sa = a.get_si(), sb = b.get_si();
        std::vector<i64> out(len, 0);
        bool overflow = false;
        for (std::size_t i = 0; i < n && !overflow; ++i) {
            i64 t;
            overflow |= __builtin_mul_overflow(small_coeffs_[i], sa, &t);
            overflow |= __builtin_add_overflow(out[i + off_a], t, &out[i + off_a]);
            overflow |= __builtin_mul_overflow(small_coeffs_[i], sb, &t);
            overflow |= __builtin_add_overflow(out[i + off_b], t, &out[i + off_b]);
        }
        if (!overflow) return PolyAccess::make_small(lo, std::move(out));
    }
    std::vector<mpz_class> src = PolyAccess::big_copy(*this);
    std::vector<mpz_class> out(len);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_addmul(out[i + off_a].get_mpz_t(), src[i].get_mpz_t(), a.get_mpz_t());
        mpz_addmul(out[i + off_b].get_mpz_t(), src[i].get_mpz_t(), b.get_mpz_t());
    }
    return PolyAccess::make_big(lo, std::move(out));
}

LaurentPoly LaurentPoly::mul_scalar(const mpz_class &c) const {
    if (c == 0 || is_zero()) return {};
    if (c == 1) return *this;
    if (!big_ && fits_i64(c)) {
        i64 s = c.get_si();
        std::vector<i64> out(small_coeffs_.size());
        bool overflow = false;
        for (std::size_t i = 0; i < out.size() && !overflow; ++i)
            overflow |= __builtin_mul_overflow(small_coeffs_[i], s, &out[i]);
        if (!overflow) return PolyAccess::make_small(low_, std::move(out));
    }
    std::vector<mpz_class> out = PolyAccess::big_copy(*this);
    for (auto &x : out) x *= c;
    return PolyAccess::make_big(low_, std::move(out));
}

LaurentPoly LaurentPoly::div_scalar_exact(const mpz_class &c) const {
    if (c == 0) throw ZeroDivisionError("division of a polynomial by the integer 0");
    if (c == 1 || is_zero()) return *this;
    if (!big_ && fits_i64(c)) {
        i64 s = c.get_si();
        std::vector<i64> out(small_coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (small_coeffs_[i] % s != 0) throw InvariantError("inexact scalar division");
            // s == -1 with INT64_MIN is the only overflow; route it through GMP.
            if (s == -1 && small_coeffs_[i] == INT64_MIN) goto big_path;
            out[i] = small_coeffs_[i] / s;
        }
        return PolyAccess::make_small(low_, std::move(out));
    }
big_path:
    std::vector<mpz_class> out = PolyAccess::big_copy(*this);
    for (auto &x : out) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw InvariantError("inexact scalar division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return PolyAccess::make_big(low_, std::move(out));
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    if (big_) {
        for (const auto &c : big_coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }
    std::uint64_t acc = 0;
    bool overflowed = false;
    for (i64 c : small_coeffs_) {
        if (c == INT64_MIN) {
            overflowed = true;
            break;
        }
        std::uint64_t u = static_cast<std::uint64_t>(c < 0 ? -c : c);
        while (u != 0) {
            std::uint64_t t = acc % u;
            acc = u;
            u = t;
        }
        if (acc == 1) break;
    }
    if (!overflowed) return mpz_class(static_cast<unsigned long>(acc));
    for (i64 c : small_coeffs_) {
        mpz_class z = static_cast<long>(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    return g;
}

std::size_t LaurentPoly::max_coefficient_bits() const {
    std::size_t bits = 0;
    if (big_) {
        for (const auto &c : big_coeffs_)
            if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    } else {
        for (i64 c : small_coeffs_) bits = std::max<std::size_t>(bits, bit_length(c));
    }
    return bits;
}

mpq_class LaurentPoly::eval(const mpq_class &x) const {
    if (is_zero()) return 0;
    if (x == 0) {
        if (low_ < 0) throw PoleError("Laurent polynomial with negative powers evaluated at 0");
        return low_ == 0 ? mpq_class(coefficient(0)) : mpq_class(0);
    }
    // Horner on the dense range, then scale by x^low.
    mpq_class acc = 0;
    for (std::size_t i = size(); i-- > 0;) {
        acc *= x;
        acc += big_ ? mpq_class(big_coeffs_[i]) : mpq_class(static_cast<long>(small_coeffs_[i]));
    }
    mpq_class scale = 1;
    mpz_class num, den;
    i64 e = low_ < 0 ? -low_ : low_;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    scale = low_ < 0 ? mpq_class(den, num) : mpq_class(num, den);
    scale.canonicalize();
    return acc * scale;
}

mpz_class LaurentPoly::eval(const mpz_class &x) const {
    mpq_class v = eval(mpq_class(x));
    if (v.get_den() != 1) throw InvariantError("integer evaluation of a Laurent polynomial is not integral");
    return v.get_num();
}

LaurentPoly LaurentPoly::operator-() const { return mul_scalar(-1); }

namespace {

LaurentPoly add_sub(const LaurentPoly &a, const LaurentPoly &b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    i64 lo = std::min(a.low_degree(), b.low_degree());
    i64 hi = std::max(a.high_degree(), b.high_degree());
    auto len = static_cast<std::size_t>(hi - lo + 1);
    auto oa = static_cast<std::size_t>(a.low_degree() - lo);
    auto ob = static_cast<std::size_t>(b.low_degree() - lo);
    if (!PolyAccess::is_big(a) && !PolyAccess::is_big(b)) {
        const auto &ca = PolyAccess::small(a);
        const auto &cb = PolyAccess::small(b);
        std::vector<i64> out(len, 0);
        std::copy(ca.begin(), ca.end(), out.begin() + static_cast<std::ptrdiff_t>(oa));
        bool overflow = false;
        for (std::size_t i = 0; i < cb.size() && !overflow; ++i) {
            overflow |= subtract ? __builtin_sub_overflow(out[i + ob], cb[i], &out[i + ob])
                                 : __builtin_add_overflow(out[i + ob], cb[i], &out[i + ob]);
        }
        if (!overflow) return PolyAccess::make_small(lo, std::move(out));
    }
    std::vector<mpz_class> out(len);
    std::vector<mpz_class> ca = PolyAccess::big_copy(a);
    std::vector<mpz_class> cb = PolyAccess::big_copy(b);
    for (std::size_t i = 0; i < ca.size(); ++i) out[i + oa] = ca[i];
    for (std::size_t i = 0; i < cb.size(); ++i) {
        if (subtract)
            out[i + ob] -= cb[i];
        else
            out[i + ob] += cb[i];
    }
    return PolyAccess::make_big(lo, std::move(out));
}

} // namespace

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) { return add_sub(a, b, false); }

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return add_sub(a, b, true); }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial() && a.is_one()) return b;
    if (b.is_monomial() && b.is_one()) return a;
    std::size_t na = a.size(), nb = b.size();
    std::size_t len = na + nb - 1;
    i64 lo = a.low_degree() + b.low_degree();
    if (!PolyAccess::is_big(a) && !PolyAccess::is_big(b)) {
        std::size_t bits = a.max_coefficient_bits() + b.max_coefficient_bits();
        std::size_t terms = std::min(na, nb);
        std::size_t log_terms = 64 - static_cast<std::size_t>(__builtin_clzll(terms));
        if (bits + log_terms < 126) {
            const auto &ca = PolyAccess::small(a);
            const auto &cb = PolyAccess::small(b);
            std::vector<i128> acc(len, 0);
            for (std::size_t i = 0; i < na; ++i) {
                i128 x = ca[i];
                if (x == 0) continue;
                for (std::size_t j = 0; j < nb; ++j) acc[i + j] += x * cb[j];
            }
            bool small = true;
            for (i128 v : acc)
                if (v > INT64_MAX || v < INT64_MIN) {
                    small = false;
                    break;
                }
            if (small) {
                std::vector<i64> out(len);
                for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<i64>(acc[i]);
                return PolyAccess::make_small(lo, std::move(out));
            }
            std::vector<mpz_class> out(len);
            for (std::size_t i = 0; i < len; ++i) out[i] = from_i128(acc[i]);
            return PolyAccess::make_big(lo, std::move(out));
        }
    }
    std::vector<mpz_class> ca = PolyAccess::big_copy(a);
    std::vector<mpz_class> cb = PolyAccess::big_copy(b);
    std::vector<mpz_class> out(len);
    for (std::size_t i = 0; i < na; ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) mpz_addmul(out[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
    return PolyAccess::make_big(lo, std::move(out));
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.size() != b.size()) return false;
    if (a.is_zero()) return true;
    if (a.low_degree() != b.low_degree()) return false;
    // Storage is canonical: anything that fits in 64 bits is held small.
    if (PolyAccess::is_big(a) != PolyAccess::is_big(b)) return false;
    if (PolyAccess::is_big(a)) return PolyAccess::big(a) == PolyAccess::big(b);
    return PolyAccess::small(a) == PolyAccess::small(b);
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = size(); idx-- > 0;) {
        mpz_class c = big_ ? big_coeffs_[idx] : mpz_class(static_cast<long>(small_coeffs_[idx]));
        if (c == 0) continue;
        i64 e = low_ + static_cast<i64>(idx);
        bool negative = c < 0;
        mpz_class mag = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << "q";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

LaurentPoly poly_arith(const LaurentPoly &a, const LaurentPoly &b, PolyOp op) {
    switch (op) {
    case PolyOp::add:
        return a + b;
    case PolyOp::sub:
        return a - b;
    case PolyOp::mul:
        return a * b;
    }
    throw InvariantError("unknown polynomial operation");
}

// ---- division and gcd -------------------------------------------------------

namespace {

// Ordinary polynomials as dense mpz vectors, index = exponent.
using Dense = std::vector<mpz_class>;

void trim_dense(Dense &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense_poly(const LaurentPoly &p) {
    // Caller guarantees low_degree >= 0.
    Dense out(static_cast<std::size_t>(p.is_zero() ? 0 : p.high_degree() + 1));
    auto coeffs = p.dense();
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i + static_cast<std::size_t>(p.low_degree())] = coeffs[i];
    return out;
}

LaurentPoly from_dense_poly(Dense &&p) { return PolyAccess::make_big(0, std::move(p)); }

// Exact division of ordinary polynomials with nonzero constant terms or
// general ones; fails if any step is inexact over the integers.
bool divide_dense(const Dense &a, const Dense &b, Dense &quot) {
    if (b.empty()) throw ZeroDivisionError("polynomial division by zero");
    if (a.empty()) {
        quot.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    Dense r = a;
    std::size_t db = b.size() - 1;
    quot.assign(a.size() - db, 0);
    const mpz_class &lb = b.back();
    mpz_class c;
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
        mpz_class &top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        quot[k] = c;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < db; ++j)
        if (r[j] != 0) return false;
    trim_dense(quot);
    return true;
}

// Small-coefficient variant of the same long division; returns false on
// inexact steps or overflow (callers then retry in GMP).
bool divide_small(const std::vector<i64> &a, const std::vector<i64> &b, std::vector<i64> &quot, bool &overflow) {
    overflow = false;
    if (a.size() < b.size()) return false;
    std::vector<i64> r = a;
    std::size_t db = b.size() - 1;
    quot.assign(a.size() - db, 0);
    i64 lb = b.back();
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
        i64 top = r[k + db];
        if (top == 0) continue;
        if (top % lb != 0) return false;
        if (lb == -1 && top == INT64_MIN) {
            overflow = true;
            return false;
        }
        i64 c = top / lb;
        quot[k] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            i64 t;
            if (__builtin_mul_overflow(c, b[j], &t) || __builtin_sub_overflow(r[k + j], t, &r[k + j])) {
                overflow = true;
                return false;
            }
        }
    }
    for (std::size_t j = 0; j < db; ++j)
        if (r[j] != 0) return false;
    return true;
}

mpz_class dense_content(const Dense &p) {
    mpz_class g = 0;
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Dense &p) {
    trim_dense(p);
    if (p.empty()) return;
    mpz_class g = dense_content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto &c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b).
Dense pseudo_remainder(Dense a, const Dense &b) {
    std::size_t db = b.size() - 1;
    const mpz_class &lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class top = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto &c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
        trim_dense(a);
    }
    return a;
}

// Strip the factor q^low so the polynomial has a nonzero constant term.
LaurentPoly strip_monomial(const LaurentPoly &p) { return p.is_zero() ? p : p.shifted(-p.low_degree()); }

Dense gcd_prs_dense(Dense a, Dense b) {
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

mpz_class max_norm(const Dense &p) {
    mpz_class m = 0;
    for (const auto &c : p) {
        mpz_class a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

// Symmetric xi-adic digits of gamma, as polynomial coefficients.
Dense xi_adic(mpz_class gamma, const mpz_class &xi) {
    Dense out;
    mpz_class half = xi / 2;
    while (gamma != 0) {
        mpz_class d;
        mpz_fdiv_r(d.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
        if (d > half) d -= xi;
        out.push_back(d);
        gamma -= d;
        mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    }
    return out;
}

mpz_class eval_dense(const Dense &p, const mpz_class &x) {
    mpz_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

} // namespace

bool try_divide(const LaurentPoly &a, const LaurentPoly &b, LaurentPoly &quotient) {
    if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
    if (a.is_zero()) {
        quotient = LaurentPoly();
        return true;
    }
    if (b.is_monomial()) {
        mpz_class c = b.leading_coefficient();
        if (a.content() % c != 0) return false;
        quotient = a.div_scalar_exact(c).shifted(-b.low_degree());
        return true;
    }
    LaurentPoly sa = strip_monomial(a), sb = strip_monomial(b);
    i64 shift = a.low_degree() - b.low_degree();
    if (!PolyAccess::is_big(sa) && !PolyAccess::is_big(sb)) {
        std::vector<i64> q;
        bool overflow = false;
        if (divide_small(PolyAccess::small(sa), PolyAccess::small(sb), q, overflow)) {
            quotient = PolyAccess::make_small(shift, std::move(q));
            return true;
        }
        if (!overflow) return false;
    }
    Dense q;
    if (!divide_dense(to_dense_poly(sa), to_dense_poly(sb), q)) return false;
    quotient = from_dense_poly(std::move(q)).shifted(shift);
    return true;
}

LaurentPoly exact_quotient(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly q;
    if (!try_divide(a, b, q)) throw InvariantError("polynomial division is not exact");
    return q;
}

LaurentPoly poly_gcd_prs(const LaurentPoly &a, const LaurentPoly &b) {
    if ((!a.is_zero() && a.low_degree() < 0) || (!b.is_zero() && b.low_degree() < 0))
        throw InvariantError("poly_gcd expects ordinary polynomials");
    Dense g = gcd_prs_dense(to_dense_poly(a), to_dense_poly(b));
    return from_dense_poly(std::move(g));
}

LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b) {
    if ((!a.is_zero() && a.low_degree() < 0) || (!b.is_zero() && b.low_degree() < 0))
        throw InvariantError("poly_gcd expects ordinary polynomials");
    auto normalize = [](const LaurentPoly &p) {
        mpz_class c = p.content();
        if (p.leading_coefficient() < 0) c = -c;
        return p.div_scalar_exact(c);
    };
    if (a.is_zero()) return b.is_zero() ? b : normalize(b);
    if (b.is_zero()) return normalize(a);

    // Common power of q first; the rest have nonzero constant terms.
    i64 qpow = std::min(a.low_degree(), b.low_degree());
    LaurentPoly sa = strip_monomial(a), sb = strip_monomial(b);
    LaurentPoly pa = normalize(sa), pb = normalize(sb);
    if (pa.is_constant() || pb.is_constant()) return LaurentPoly::monomial(1, qpow);
    if (pa == pb) return pa.shifted(qpow);
    LaurentPoly tmp;
    if (pa.high_degree() <= pb.high_degree() && try_divide(pb, pa, tmp)) return pa.shifted(qpow);
    if (pb.high_degree() <= pa.high_degree() && try_divide(pa, pb, tmp)) return pb.shifted(qpow);

    // Heuristic gcd: evaluate at a large integer, take the integer gcd and
    // read the polynomial back from its balanced digits. Any candidate is
    // verified by exact division, so a wrong guess only costs time.
    Dense da = to_dense_poly(pa), db = to_dense_poly(pb);
    mpz_class xi = 2 * std::min(max_norm(da), max_norm(db)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        mpz_class alpha = eval_dense(da, xi), beta = eval_dense(db, xi);
        mpz_class gamma;
        mpz_gcd(gamma.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
        Dense g = xi_adic(gamma, xi);
        make_primitive(g);
        if (!g.empty()) {
            LaurentPoly cand = from_dense_poly(Dense(g));
            LaurentPoly qa, qb;
            if (try_divide(pa, cand, qa) && try_divide(pb, cand, qb)) return cand.shifted(qpow);
        }
        xi = xi * 73794 / 27011;
    }
    Dense g = gcd_prs_dense(std::move(da), std::move(db));
    return from_dense_poly(std::move(g)).shifted(qpow);
}

std::pair<unsigned, LaurentPoly> strip_root_at_one(const LaurentPoly &p) {
    if (p.is_zero()) throw InvariantError("the zero polynomial has no finite root multiplicity");
    unsigned mult = 0;
    LaurentPoly cur = p;
    const LaurentPoly q_minus_1 = LaurentPoly::monomial(1, 1) - LaurentPoly(1L);
    while (true) {
        // p(1) is the coefficient sum.
        mpz_class sum = 0;
        for (const auto &c : cur.dense()) sum += c;
        if (sum != 0) break;
        cur = exact_quotient(cur, q_minus_1);
        ++mult;
    }
    return {mult, cur};
}

} // namespace pfs
