#include "pfstringy/qhypergeom.hpp"

#include "pfstringy/errors.hpp"

namespace pfs {

PhiParam operator*(const PhiParam &a, const PhiParam &b) {
    return PhiParam{a.coefficient * b.coefficient, a.exponent + b.exponent};
}

PhiParam operator/(const PhiParam &a, const PhiParam &b) {
    if (b.coefficient == 0) throw ZeroDivisionError("division by a zero parameter");
    return PhiParam{a.coefficient / b.coefficient, a.exponent - b.exponent};
}

std::string to_string(const PhiParam &p) {
    std::string mono = p.exponent == 0 ? "1" : (p.exponent == 1 ? "q" : "q^" + std::to_string(p.exponent));
    if (p.coefficient == 1) return mono;
    if (p.coefficient == -1) return "-" + mono;
    std::string c = p.coefficient.get_str();
    return p.exponent == 0 ? c : c + "*" + mono;
}

bool pochhammer_vanishes(const PhiParam &a, long step, long count) {
    if (a.coefficient != 1) return false;
    // 1 - q^{e + step t} = 0 exactly when e + step t = 0.
    if (a.exponent > 0 || -a.exponent % step != 0) return false;
    return -a.exponent / step < count;
}

void validate(const PhiSeriesSpec &spec) {
    if (spec.base_power < 1) throw InvariantError("series base power must be positive");
    if (spec.termination < 0) throw InvariantError("termination index must be nonnegative");
    for (const auto &p : spec.upper)
        if (p.coefficient == 0) throw InvariantError("upper parameter with zero coefficient");
    for (const auto &p : spec.lower)
        if (p.coefficient == 0) throw InvariantError("lower parameter with zero coefficient");
    if (spec.argument.coefficient == 0) throw InvariantError("series argument is zero");
    bool witness = false;
    for (const auto &p : spec.upper)
        if (p.coefficient == 1 && p.exponent == -spec.base_power * spec.termination) witness = true;
    if (!witness) throw InvariantError("no upper parameter equals q^{-mN}; the series does not terminate at N");
    for (const auto &p : spec.lower)
        if (pochhammer_vanishes(p, spec.base_power, spec.termination))
            throw InvariantError("lower parameter " + to_string(p) + " gives a vanishing denominator before termination");
}

void mul_pochhammer(FactoredFrac &f, const PhiParam &a, long step, long count) {
    for (long t = 0; t < count && !f.is_zero(); ++t) f.mul_factor(a.coefficient, a.exponent + step * t);
}

void div_pochhammer(FactoredFrac &f, const PhiParam &a, long step, long count) {
    for (long t = 0; t < count; ++t) f.div_factor(a.coefficient, a.exponent + step * t);
}

namespace {

// Power of the (-1)^t q^{m t(t-1)/2} correction: 1 + s - r.
long correction_power(const PhiSeriesSpec &spec) {
    return 1 + static_cast<long>(spec.lower.size()) - static_cast<long>(spec.upper.size());
}

mpq_class pow_q(const mpq_class &c, long e) {
    mpq_class out = 1;
    mpq_class base = e < 0 ? mpq_class(1 / c) : c;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return out;
}

// Horner state for S = U / Dp where Dp = scale * prod(W) in expanded form.
struct Horner {
    LaurentPoly u{1L};
    LaurentPoly dp{1L};
    mpz_class scale = 1;
    std::vector<std::pair<Binomial, int>> w;

    void mul_scalar_frac(const mpq_class &c, std::int64_t x) {
        u = u.mul_scalar(c.get_num()).shifted(x);
        dp = dp.mul_scalar(c.get_den());
        scale *= c.get_den();
    }

    // Multiplies S by (1 - c q^x).
    void mul_factor(const mpq_class &c, std::int64_t x) {
        FactorForm f = factor_form(c, x);
        if (f.constant) {
            mul_scalar_frac(f.value, 0);
            return;
        }
        u = u.mul_binomial(f.sign * f.binomial.u, f.sign * f.binomial.v, f.binomial.e).shifted(f.shift);
        dp = dp.mul_scalar(f.s);
        scale *= f.s;
    }

    // Divides S by (1 - c q^x).
    void div_factor(const mpq_class &c, std::int64_t x) {
        FactorForm f = factor_form(c, x);
        if (f.constant) {
            if (f.value == 0) throw ZeroDivisionError("division by an identically vanishing factor");
            mul_scalar_frac(1 / f.value, 0);
            return;
        }
        const Binomial &b = f.binomial;
        u = u.mul_scalar(f.s * f.sign).shifted(-f.shift);
        dp = dp.mul_binomial(b.u, b.v, b.e);
        auto it = w.begin();
        while (it != w.end() && it->first < b) ++it;
        if (it != w.end() && it->first == b)
            ++it->second;
        else
            w.insert(it, {b, 1});
    }
};

} // namespace

FactoredFrac eval_phi_ratio(const PhiSeriesSpec &spec) {
    validate(spec);
    const long m = spec.base_power;
    const long p = correction_power(spec);
    Horner h;
    // S_N = 1; S_t = 1 + R_t S_{t+1} with R_t = c_{t+1} / c_t.
    for (long t = spec.termination - 1; t >= 0; --t) {
        for (const auto &a : spec.upper) h.mul_factor(a.coefficient, a.exponent + m * t);
        if (h.u.is_zero()) {
            h = Horner{};
            continue;
        }
        h.div_factor(1, m * (t + 1));
        for (const auto &b : spec.lower) h.div_factor(b.coefficient, b.exponent + m * t);
        h.mul_scalar_frac(spec.argument.coefficient, spec.argument.exponent);
        // (-q^{m t})^p
        h.mul_scalar_frac(p % 2 == 0 ? 1 : -1, m * t * p);
        h.u = h.u + h.dp;
    }
    return FactoredFrac::from_parts(h.u, h.scale, h.w);
}

FactoredFrac eval_phi_terms(const PhiSeriesSpec &spec) {
    validate(spec);
    const long m = spec.base_power;
    const long p = correction_power(spec);
    FactoredFrac sum(LaurentPoly{});
    for (long t = 0; t <= spec.termination; ++t) {
        FactoredFrac term;
        for (const auto &a : spec.upper) mul_pochhammer(term, a, m, t);
        if (term.is_zero()) continue;
        div_pochhammer(term, PhiParam{1, m}, m, t);
        for (const auto &b : spec.lower) div_pochhammer(term, b, m, t);
        term.mul_monomial(pow_q(spec.argument.coefficient, t), spec.argument.exponent * t);
        // ((-1)^t q^{m t(t-1)/2})^p
        term.mul_monomial((t * p) % 2 == 0 ? 1 : -1, m * (t * (t - 1) / 2) * p);
        sum = sum + term;
    }
    return sum;
}

RatFunc eval_phi(const PhiSeriesSpec &spec) { return eval_phi_ratio(spec).to_ratfunc(); }

std::vector<std::string> identity_parameters(int id) {
    switch (id) {
    case 1:
    case 2:
        return {"b", "c"};
    case 3:
        return {"b", "c", "d", "e"};
    case 4:
        return {"a", "b", "d"};
    }
    throw RangeError("identity id must be 1, 2, 3 or 4");
}

IdentityInstance make_identity(int id, long n, const std::vector<PhiParam> &v) {
    if (v.size() != identity_parameters(id).size()) throw InvariantError("wrong number of identity parameters");
    if (n < 0) throw RangeError("termination index must be nonnegative");
    IdentityInstance inst;
    const PhiParam q = qpow(1);
    inst.prefactor_length = n;
    switch (id) {
    case 1: {
        const PhiParam &b = v[0], &c = v[1];
        inst.lhs = {{qpow(-n), b}, {c}, 1, c * qpow(n) / b, n};
        inst.prefactor_num = {c / b};
        inst.prefactor_den = {c};
        break;
    }
    case 2: {
        const PhiParam &b = v[0], &c = v[1];
        inst.lhs = {{qpow(-n), b}, {c}, 1, q, n};
        inst.prefactor_num = {c / b};
        inst.prefactor_den = {c};
        inst.monomial = PhiParam{pow_q(b.coefficient, n), b.exponent * n};
        break;
    }
    case 3: {
        const PhiParam &b = v[0], &c = v[1], &d = v[2], &e = v[3];
        inst.lhs = {{qpow(-n), b, c}, {d, e}, 1, d * e * qpow(n) / (b * c), n};
        inst.prefactor_num = {e / c};
        inst.prefactor_den = {e};
        inst.rhs_series = PhiSeriesSpec{{qpow(-n), c, d / b}, {d, c * qpow(1 - n) / e}, 1, q, n};
        break;
    }
    case 4: {
        const PhiParam &a = v[0], &b = v[1], &d = v[2];
        // Base q^2: the series stops at floor(n/2) through q^{-n} or q^{1-n}.
        inst.lhs = {{qpow(-n), qpow(1 - n), a, a * q}, {q * b * b, d, d * q}, 2, qpow(2), n / 2};
        inst.prefactor_num = {d / a};
        inst.prefactor_den = {d};
        inst.monomial = PhiParam{pow_q(a.coefficient, n), a.exponent * n};
        PhiParam minus_b{-b.coefficient, b.exponent};
        inst.rhs_series =
            PhiSeriesSpec{{qpow(-n), a, b, minus_b}, {b * b, a * qpow(1 - n) / d}, 1, qpow(1, -1) / d, n};
        break;
    }
    default:
        throw RangeError("identity id must be 1, 2, 3 or 4");
    }
    auto lower_ok = [](const PhiSeriesSpec &s) {
        for (const auto &b : s.lower)
            if (pochhammer_vanishes(b, s.base_power, s.termination)) return false;
        return true;
    };
    inst.defined = lower_ok(inst.lhs) && (!inst.rhs_series || lower_ok(*inst.rhs_series));
    for (const auto &x : inst.prefactor_den)
        if (pochhammer_vanishes(x, 1, inst.prefactor_length)) inst.defined = false;
    return inst;
}

PointOutcome check_identity_point(int id, long n, const std::vector<PhiParam> &values) {
    PointOutcome out;
    IdentityInstance inst = make_identity(id, n, values);
    if (!inst.defined) {
        out.status = PointStatus::skip;
        return out;
    }
    auto fail = [&](const std::string &what, const FactoredFrac &l, const FactoredFrac &r) {
        out.status = PointStatus::fail;
        out.check = what;
        out.lhs = l.to_ratfunc().to_string();
        out.rhs = r.to_ratfunc().to_string();
        return out;
    };
    try {
        FactoredFrac lhs = eval_phi_ratio(inst.lhs);
        FactoredFrac lhs_terms = eval_phi_terms(inst.lhs);
        if (!equal_values(lhs, lhs_terms)) return fail("left side: ratio recursion vs term sum", lhs, lhs_terms);
        FactoredFrac rhs;
        if (inst.rhs_series) {
            rhs = eval_phi_ratio(*inst.rhs_series);
            FactoredFrac rhs_terms = eval_phi_terms(*inst.rhs_series);
            if (!equal_values(rhs, rhs_terms)) return fail("right side: ratio recursion vs term sum", rhs, rhs_terms);
        }
        rhs.mul_monomial(inst.monomial.coefficient, inst.monomial.exponent);
        for (const auto &x : inst.prefactor_num) mul_pochhammer(rhs, x, 1, inst.prefactor_length);
        for (const auto &x : inst.prefactor_den) div_pochhammer(rhs, x, 1, inst.prefactor_length);
        if (!equal_values(lhs, rhs)) return fail("identity", lhs, rhs);
    } catch (const Error &e) {
        out.status = PointStatus::fail;
        out.check = std::string("exception: ") + e.what();
        return out;
    }
    out.status = PointStatus::pass;
    return out;
}

VerificationReport verify_identity(int id, const IdentityGrid &grid, unsigned threads, bool record_all) {
    const std::vector<std::string> names = identity_parameters(id);
    if (grid.coefficients.empty()) throw InvariantError("identity grid needs at least one coefficient");
    for (const auto &c : grid.coefficients)
        if (c == 0) throw InvariantError("identity grid coefficients must be nonzero");
    const bool with_coefficients = grid.coefficients.size() > 1;
    std::vector<GridAxis> axes{{"n", grid.n_lo, grid.n_hi}};
    for (const auto &name : names) {
        axes.push_back({name, grid.e_lo, grid.e_hi});
        if (with_coefficients) axes.push_back({name + "_coef", 0, static_cast<long>(grid.coefficients.size()) - 1});
    }
    auto check = [&](const GridPoint &pt) {
        std::vector<PhiParam> values;
        std::size_t k = 1;
        for (std::size_t i = 0; i < names.size(); ++i) {
            PhiParam p{1, pt[k++]};
            if (with_coefficients) p.coefficient = grid.coefficients[static_cast<std::size_t>(pt[k++])];
            values.push_back(p);
        }
        return check_identity_point(id, pt[0], values);
    };
    VerificationReport report = run_grid("identity " + std::to_string(id), axes, check, threads, record_all);
    if (with_coefficients) {
        nlohmann::json coefs = nlohmann::json::array();
        for (const auto &c : grid.coefficients) coefs.push_back(c.get_str());
        report.grid_extra["coefficients"] = coefs;
    }
    return report;
}

VerificationReport verify_identity4_specialization(long n_max, unsigned threads, bool record_all) {
    std::vector<GridAxis> axes{{"n", 2, n_max}, {"k", 1, n_max / 2}, {"i", 1, n_max / 2}};
    auto check = [](const GridPoint &pt) {
        long n = pt[0], k = pt[1], i = pt[2];
        return check_identity_point(4, 2 * k, {qpow(-2 * i), qpow(-i), qpow(-n)});
    };
    return run_grid("identity 4 at (a, b, d) = (q^-2i, q^-i, q^-n), termination 2k", axes, check, threads, record_all);
}

} // namespace pfs
