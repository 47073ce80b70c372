#include "pfstringy/ratfunc.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "pfstringy/errors.hpp"

namespace pfs {

RatFunc::RatFunc(const LaurentPoly &num, const LaurentPoly &den) {
    if (den.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    LaurentPoly n = num.shifted(-den.low_degree());
    LaurentPoly d = den.shifted(-den.low_degree());
    if (!d.is_constant()) {
        LaurentPoly stripped = n.shifted(-n.low_degree());
        LaurentPoly g = poly_gcd(stripped, d);
        if (!g.is_constant()) {
            n = exact_quotient(n, g);
            d = exact_quotient(d, g);
        }
    }
    mpz_class c;
    mpz_class cn = n.content(), cd = d.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (d.leading_coefficient() < 0) c = -c;
    num_ = n.div_scalar_exact(c);
    den_ = d.div_scalar_exact(c);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc operator+(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Raw{});
    // A polynomial plus a reduced fraction stays reduced.
    if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::Raw{});
    if (b.den_.is_one()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Raw{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }

RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, RatFunc::Raw{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc &a, const RatFunc &b) {
    if (b.is_zero()) throw ZeroDivisionError("division by the zero rational function");
    return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw ZeroDivisionError("negative power of the zero rational function");
        return RatFunc(den_, num_).pow(-exponent);
    }
    // Powers of a reduced fraction are reduced.
    auto e = static_cast<unsigned>(exponent);
    LaurentPoly n = num_.pow(e), d = den_.pow(e);
    return RatFunc(n, d, Raw{});
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc rat_normalize(const LaurentPoly &num, const LaurentPoly &den) { return RatFunc(num, den); }

RatFunc rat_arith(const RatFunc &a, const RatFunc &b, RatOp op) {
    switch (op) {
    case RatOp::add:
        return a + b;
    case RatOp::sub:
        return a - b;
    case RatOp::mul:
        return a * b;
    case RatOp::div:
        return a / b;
    }
    throw InvariantError("unknown rational operation");
}

mpq_class eval_at(const RatFunc &f, const mpq_class &x) {
    mpq_class d = f.denominator().eval(x);
    if (d == 0) throw PoleError("rational function has a pole at " + x.get_str());
    mpq_class n;
    try {
        n = f.numerator().eval(x);
    } catch (const PoleError &) {
        throw PoleError("rational function has a pole at " + x.get_str());
    }
    mpq_class r = n / d;
    r.canonicalize();
    return r;
}

mpq_class limit_at_one(const RatFunc &f) {
    if (f.is_zero()) return 0;
    auto [mn, n] = strip_root_at_one(f.numerator());
    auto [md, d] = strip_root_at_one(f.denominator());
    if (md > mn) throw PoleError("rational function has a pole at q = 1");
    if (mn > md) return 0;
    mpq_class r = n.eval(mpq_class(1)) / d.eval(mpq_class(1));
    r.canonicalize();
    return r;
}

RatFunc substitute_power(const RatFunc &f, long m) {
    if (m == 0) throw RangeError("substitute_power needs a nonzero exponent");
    if (m > 0) {
        // q -> q^m keeps coprimality, contents and the sign convention.
        return RatFunc(f.numerator().substitute_power(m), f.denominator().substitute_power(m));
    }
    // q -> q^-|m|: substitute, then clear the negative powers.
    LaurentPoly n = f.numerator().substitute_power(-m);
    LaurentPoly d = f.denominator().substitute_power(-m);
    std::map<std::int64_t, mpz_class> nt, dt;
    for (const auto &[e, c] : n.terms()) nt[-e] = c;
    for (const auto &[e, c] : d.terms()) dt[-e] = c;
    return RatFunc(LaurentPoly::from_terms(nt), LaurentPoly::from_terms(dt));
}

bool cross_equal(const RatFunc &a, const RatFunc &b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

// ---- cyclotomic factors and factored rendering ----------------------------

LaurentPoly cyclotomic(long d) {
    if (d < 1) throw RangeError("cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<long, LaurentPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly p = LaurentPoly::monomial(1, d) - LaurentPoly(1L);
    for (long e = 1; e < d; ++e)
        if (d % e == 0) p = exact_quotient(p, cyclotomic(e));
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(d, p);
    return p;
}

namespace {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Reduces p modulo q^d - 1 (p ordinary).
LaurentPoly fold(const LaurentPoly &p, long d) {
    std::map<std::int64_t, mpz_class> acc;
    for (const auto &[e, c] : p.terms()) acc[e % d] += c;
    return LaurentPoly::from_terms(acc);
}

// Splits p (ordinary, nonzero constant term) into its cyclotomic
// multiplicities and the cyclotomic-free cofactor.
std::map<long, long> cyclotomic_multiplicities(LaurentPoly &p) {
    std::map<long, long> mult;
    long deg = static_cast<long>(p.high_degree());
    for (long d = 1; deg > 0 && d <= 6 * deg + 6; ++d) {
        if (euler_phi(d) > deg) continue;
        const LaurentPoly phi = cyclotomic(d);
        LaurentPoly q;
        if (!try_divide(fold(p, d), phi, q)) continue;
        while (p.high_degree() >= phi.high_degree() && try_divide(p, phi, q)) {
            p = q;
            ++mult[d];
        }
        deg = static_cast<long>(p.high_degree());
    }
    return mult;
}

std::string render_factor(const LaurentPoly &p, long power) {
    std::string s = "(" + p.to_string() + ")";
    if (power != 1) s += "^" + std::to_string(power);
    return s;
}

std::string join(const std::vector<std::string> &parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

} // namespace

std::string RatFunc::to_factored_string() const {
    if (is_zero()) return "0";
    // Monomial prefactor and cyclotomic-free residuals of both sides.
    mpz_class c = num_.content();
    if (num_.leading_coefficient() < 0) c = -c;
    std::int64_t s = num_.low_degree();
    LaurentPoly rn = num_.div_scalar_exact(c).shifted(-s);
    LaurentPoly rd = den_.div_scalar_exact(den_.content());
    mpz_class cd = den_.content();
    std::map<long, long> mn = cyclotomic_multiplicities(rn);
    std::map<long, long> md = cyclotomic_multiplicities(rd);
    std::map<long, long> m = mn;
    for (const auto &[d, k] : md) m[d] -= k;

    // Exponents e_a with prod (q^a - 1)^{e_a} = prod Phi_d^{m_d}.
    std::map<long, long> e;
    long top = m.empty() ? 0 : m.rbegin()->first;
    for (long a = 1; a <= top; ++a) {
        long v = 0;
        for (long b = a; b <= top; b += a) {
            auto it = m.find(b);
            if (it != m.end()) v += moebius(b / a) * it->second;
        }
        if (v != 0) e[a] = v;
    }

    std::vector<std::string> numer, denom;
    LaurentPoly mono = LaurentPoly::monomial(c, s);
    if (!mono.is_one()) {
        numer.push_back(mono.to_string());
    }
    for (const auto &[a, k] : e)
        if (k > 0) numer.push_back(render_factor(LaurentPoly::monomial(1, a) - LaurentPoly(1L), k));
    if (!rn.is_one()) numer.push_back(render_factor(rn, 1));
    if (cd != 1) denom.push_back(cd.get_str());
    for (const auto &[a, k] : e)
        if (k < 0) denom.push_back(render_factor(LaurentPoly::monomial(1, a) - LaurentPoly(1L), -k));
    if (!rd.is_one()) denom.push_back(render_factor(rd, 1));

    // A lone residual needs no parentheses.
    if (denom.empty() && numer.size() == 1 && !rn.is_one() && e.empty() && mono.is_one()) return rn.to_string();
    std::string out = numer.empty() ? "1" : join(numer);
    if (denom.size() == 1)
        out += " / " + denom[0];
    else if (!denom.empty())
        out += " / (" + join(denom) + ")";
    return out;
}

// ---- parsing ----------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string &text) : s_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    const std::string &s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    long signed_exponent() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        mpz_class v = integer();
        if (!mpz_fits_slong_p(v.get_mpz_t())) fail("exponent too large");
        return neg ? -v.get_si() : v.get_si();
    }

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        while (true) {
            if (accept('*'))
                v *= unary();
            else if (accept('/'))
                v /= unary();
            else
                return v;
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (accept('^')) return base.pow(signed_exponent());
        return base;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return RatFunc(LaurentPoly::q());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(integer());
        fail("unexpected character");
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string &text) { return Parser(text).parse(); }

LaurentPoly parse_laurent_poly(const std::string &text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_laurent_polynomial()) throw ParseError("\"" + text + "\" is not a Laurent polynomial");
    return f.numerator();
}

} // namespace pfs
