#include "pfstringy/linear_sections.hpp"

#include "pfstringy/errors.hpp"
#include "pfstringy/qseries.hpp"

namespace pfs {

namespace {

LaurentPoly qm(long e) { return LaurentPoly::monomial(1, e); }
LaurentPoly q_to_minus_1(long e) { return qm(e) - LaurentPoly(1L); }
RatFunc gb(long n, long k, long power = 1) { return RatFunc(gauss_binomial(n, k, power)); }

// (q^e - 1)/(q - 1) for any integer e.
RatFunc geometric(long e) { return RatFunc(q_to_minus_1(e), q_to_minus_1(1)); }

PointOutcome compare(const RatFunc &lhs, const RatFunc &rhs, const std::string &what) {
    PointOutcome out;
    if (lhs == rhs) return out;
    out.status = PointStatus::fail;
    out.lhs = lhs.to_string();
    out.rhs = rhs.to_string();
    out.check = what;
    return out;
}

std::vector<GridPoint> cut_points(long n_lo, long n_hi) {
    if (n_lo % 2 != 0) ++n_lo;
    n_lo = std::max(n_lo, 2L);
    std::vector<GridPoint> points;
    for (long n = n_lo; n <= n_hi; n += 2)
        for (long k = 1; 2 * k <= n; ++k)
            for (long i = 1; 2 * i <= n; ++i) points.push_back({n, k, i});
    return points;
}

std::vector<GridAxis> cut_axes(long n_lo, long n_hi) {
    if (n_lo % 2 != 0) ++n_lo;
    n_lo = std::max(n_lo, 2L);
    return {{"n", n_lo, n_hi, 2}, {"k", 1, n_hi / 2}, {"i", 1, n_hi / 2}};
}

CutSpec cut_of(const GridPoint &p) { return CutSpec{p[0], p[1], p[2]}; }

} // namespace

void validate(const CutSpec &spec) {
    if (spec.n % 2 != 0) throw ParityError("hyperplane cuts need an even n, got " + std::to_string(spec.n));
    if (spec.n < 2) throw RangeError("hyperplane cuts need n >= 2");
    if (spec.k < 1 || 2 * spec.k > spec.n) throw RangeError("hyperplane cuts need 1 <= k <= n/2");
    if (spec.i < 1 || 2 * spec.i > spec.n) throw RangeError("hyperplane cuts need 1 <= i <= n/2");
}

RatFunc l_iso(long k, long i, long n) {
    if (k < 0 || 2 * k > n) throw RangeError("isotropic subspace count needs 0 <= 2k <= n");
    if (i < 1 || 2 * i > n) throw RangeError("isotropic subspace count needs 1 <= i <= n/2");
    RatFunc total;
    for (long r = 0; r <= 2 * k; ++r) {
        LaurentPoly g = gauss_binomial(n - 2 * i, r, 1);
        // prod_{j=i+r+1-2k}^{i} (1 - q^{2j}); a j = 0 factor kills the term.
        long lo = i + r + 1 - 2 * k;
        if (g.is_zero() || lo <= 0) continue;
        LaurentPoly num = g.shifted((2 * k - r) * (n - 2 * i - r));
        for (long j = lo; j <= i; ++j) num = num.mul_binomial(1, -1, 2 * j);
        total += RatFunc(num, q_pochhammer({1, 1, 2 * k - r}));
    }
    return total;
}

RatFunc f_closed(const CutSpec &spec) {
    validate(spec);
    const long n = spec.n, k = spec.k, i = spec.i;
    long m = (n - 1) * k - 1;
    return geometric(m) * gb(n / 2, k, 2) + RatFunc(qm(m) * gauss_binomial((n - 2 * i) / 2, k, 2));
}

RatFunc cut_coefficient(long k, long j, long n) {
    long d = k - j;
    if (d < 0) throw RangeError("cut coefficient needs j <= k");
    LaurentPoly num = q_pochhammer({n + 2 - 4 * k + 2 * j, 2, 2 * d}).shifted(2 * d * d - d);
    return RatFunc(num, q_pochhammer({1, 1, 2 * d}));
}

RatFunc f_recursive(const CutSpec &spec) {
    validate(spec);
    const long n = spec.n, i = spec.i;
    std::vector<RatFunc> f(spec.k + 1);
    for (long k = 1; k <= spec.k; ++k) {
        long m = 2 * k * k - k - 1;
        RatFunc rhs = geometric(m) * gb(n, 2 * k) + RatFunc(qm(m)) * l_iso(k, i, n);
        for (long j = 1; j < k; ++j) rhs -= f[j] * cut_coefficient(k, j, n);
        if (!(cut_coefficient(k, k, n) == RatFunc(1L))) throw InvariantError("diagonal coefficient is not 1");
        f[k] = rhs;
    }
    return f[spec.k];
}

RatFunc f_circ(const CutSpec &spec) {
    validate(spec);
    const long n = spec.n, k = spec.k;
    RatFunc total;
    for (long j = 1; j <= k; ++j) {
        long d = k - j;
        LaurentPoly w = gauss_binomial(n / 2 - j, d, 2).shifted(d * (d - 1));
        if (d % 2 != 0) w = -w;
        total += f_closed({n, j, spec.i}) * RatFunc(w);
    }
    return total;
}

RatFunc f_from_circ(const CutSpec &spec) {
    validate(spec);
    RatFunc total;
    for (long p = 1; p <= spec.k; ++p)
        total += f_circ({spec.n, p, spec.i}) * gb(spec.n / 2 - p, spec.k - p, 2);
    return total;
}

RatFunc delta_sum(long a) {
    if (a < 0) throw RangeError("delta sum needs a >= 0");
    LaurentPoly total;
    for (long s = 0; s <= a; ++s) {
        LaurentPoly t = gauss_binomial(a, s, 2).shifted(s * (s - 1));
        total = s % 2 == 0 ? total + t : total - t;
    }
    return RatFunc(total);
}

RatFunc sum_A(long k, long n) {
    RatFunc total;
    for (long j = 0; j <= k; ++j)
        total += geometric((n - 1) * j - 1) * gb(n / 2, j, 2) * cut_coefficient(k, j, n);
    return total;
}

RatFunc sum_B(long k, long i, long n) {
    RatFunc total;
    for (long j = 0; j <= k; ++j)
        total += RatFunc(gauss_binomial((n - 2 * i) / 2, j, 2).shifted((n - 1) * j - 1)) * cut_coefficient(k, j, n);
    return total;
}

RatFunc sum_C(long k, long n) { return geometric(2 * k * k - k - 1) * gb(n, 2 * k); }

RatFunc sum_D(long k, long i, long n) { return RatFunc(qm(2 * k * k - k - 1)) * l_iso(k, i, n); }

PointOutcome check_combinatorial_identity(long a, long b) {
    if (a < 0 || b < 0) throw RangeError("combinatorial identity needs a, b >= 0");
    LaurentPoly lhs;
    for (long s = 0; s <= a; ++s) {
        LaurentPoly t = (gauss_binomial(2 * b - 2 * s, 2 * a - 2 * s, 1) * gauss_binomial(b, s, 2)).shifted(s * s - s);
        lhs = s % 2 == 0 ? lhs + t : lhs - t;
    }
    RatFunc rhs(q_pochhammer({2 * b - 4 * a + 2, 2, 2 * a}).shifted(2 * a * a - a), q_pochhammer({1, 1, 2 * a}));
    return compare(RatFunc(lhs), rhs, "combinatorial identity");
}

PointOutcome check_f(const CutSpec &spec) {
    return compare(f_recursive(spec), f_closed(spec), "f recursive vs closed");
}

PointOutcome check_inversion(const CutSpec &spec) {
    return compare(f_from_circ(spec), f_closed(spec), "f -> f_circ -> f roundtrip");
}

PointOutcome check_abcd(const CutSpec &spec) {
    validate(spec);
    PointOutcome ac = compare(sum_A(spec.k, spec.n), sum_C(spec.k, spec.n), "A = C");
    if (ac.status == PointStatus::fail) return ac;
    return compare(sum_B(spec.k, spec.i, spec.n), sum_D(spec.k, spec.i, spec.n), "B = D");
}

VerificationReport inversion_check(const CutSpec &spec) {
    validate(spec);
    return run_points("inversion roundtrip", cut_axes(spec.n, spec.n), {{spec.n, spec.k, spec.i}},
                      [](const GridPoint &p) { return check_inversion(cut_of(p)); });
}

VerificationReport verify_abcd(long n, long k, long i) {
    validate(CutSpec{n, k, i});
    return run_points("A = C, B = D", cut_axes(n, n), {{n, k, i}},
                      [](const GridPoint &p) { return check_abcd(cut_of(p)); });
}

VerificationReport verify_f_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    return run_points(
        "f recursive vs closed", cut_axes(n_lo, n_hi), cut_points(n_lo, n_hi),
        [](const GridPoint &p) { return check_f(cut_of(p)); }, threads, record_all);
}

VerificationReport verify_inversion_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    return run_points(
        "inversion roundtrip", cut_axes(n_lo, n_hi), cut_points(n_lo, n_hi),
        [](const GridPoint &p) { return check_inversion(cut_of(p)); }, threads, record_all);
}

VerificationReport verify_abcd_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    return run_points(
        "A = C, B = D", cut_axes(n_lo, n_hi), cut_points(n_lo, n_hi),
        [](const GridPoint &p) { return check_abcd(cut_of(p)); }, threads, record_all);
}

VerificationReport verify_combinatorial_grid(long a_max, long b_max, unsigned threads, bool record_all) {
    std::vector<GridAxis> axes{{"a", 0, a_max}, {"b", 0, b_max}};
    return run_grid(
        "combinatorial identity", axes, [](const GridPoint &p) { return check_combinatorial_identity(p[0], p[1]); },
        threads, record_all);
}

VerificationReport verify_delta_grid(long a_max, bool record_all) {
    std::vector<GridAxis> axes{{"a", 0, a_max}};
    return run_grid("delta identity", axes, [](const GridPoint &p) {
        return compare(delta_sum(p[0]), RatFunc(p[0] == 0 ? 1L : 0L), "delta identity");
    }, 1, record_all);
}

NonnegativityObservation observe_nonnegativity(long n_lo, long n_hi) {
    NonnegativityObservation obs;
    for (const GridPoint &p : cut_points(n_lo, n_hi)) {
        CutSpec spec = cut_of(p);
        RatFunc f = f_closed(spec);
        ++obs.tested;
        bool ok = f.is_polynomial();
        if (ok)
            for (const auto &[e, c] : f.numerator().terms())
                if (c < 0) ok = false;
        if (!ok) obs.violations.push_back(spec);
    }
    return obs;
}

} // namespace pfs
