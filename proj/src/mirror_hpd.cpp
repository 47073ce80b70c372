#include "pfstringy/mirror_hpd.hpp"

#include <algorithm>

#include "pfstringy/errors.hpp"
#include "pfstringy/pfaffian.hpp"
#include "pfstringy/qseries.hpp"

namespace pfs {

namespace {

LaurentPoly qm(long e) { return LaurentPoly::monomial(1, e); }
LaurentPoly q_to_minus_1(long e) { return qm(e) - LaurentPoly(1L); }

long half(long n) { return n / 2; }
long top(long n) { return n * (n - 1) / 2; }

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Canonical-class coefficient c: c < 0 Fano, c = 0 CY, c > 0 general type.
VarietyType type_from(long c) {
    if (c < 0) return VarietyType::fano;
    if (c == 0) return VarietyType::calabi_yau;
    return VarietyType::general_type;
}

PointOutcome fail(const std::string &check, std::string lhs, std::string rhs) {
    PointOutcome out;
    out.status = PointStatus::fail;
    out.check = check;
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    return out;
}

std::vector<GridPoint> section_points(long n_lo, long n_hi) {
    std::vector<GridPoint> points;
    for (long n = std::max(n_lo, 4L); n <= n_hi; n += 2)
        for (long k = 1; k < half(n); ++k)
            for (long l = 0; l <= top(n); ++l) points.push_back({n, k, l});
    return points;
}

std::vector<GridAxis> section_axes(long n_lo, long n_hi) {
    n_lo = std::max(n_lo, 4L);
    return {{"n", n_lo, n_hi, 2}, {"k", 1, half(n_hi) - 1}, {"l", 0, top(n_hi)}};
}

SectionSpec section_of(const GridPoint &p) { return SectionSpec{p[0], p[1], p[2]}; }

} // namespace

void validate(const SectionSpec &spec) {
    if (spec.n < 4) throw RangeError("linear sections need n >= 4");
    if (spec.k < 1 || spec.k >= half(spec.n)) throw RangeError("linear sections need 1 <= k < floor(n/2)");
    if (spec.l < 0 || spec.l > top(spec.n)) throw RangeError("linear sections need 0 <= l <= n(n-1)/2");
}

SectionSpec dual_spec(const SectionSpec &spec) {
    validate(spec);
    return SectionSpec{spec.n, half(spec.n) - spec.k, top(spec.n) - spec.l};
}

long relation_exponent(const SectionSpec &spec) {
    validate(spec);
    return is_even(spec) ? (spec.n - 1) * spec.k : spec.n * spec.k;
}

RatFunc relation_rhs(const SectionSpec &spec) {
    long c = relation_exponent(spec);
    RatFunc geometric(qm(spec.l) - qm(c), q_to_minus_1(1));
    return geometric * RatFunc(gauss_binomial(half(spec.n), spec.k, 2));
}

bool relation_check(const RatFunc &ex, const RatFunc &ey, const SectionSpec &spec) {
    long c = relation_exponent(spec);
    return RatFunc(qm(c)) * ey - RatFunc(qm(spec.l)) * ex == relation_rhs(spec);
}

RatFunc rewritten_rhs(const SectionSpec &spec) {
    validate(spec);
    if (!is_even(spec)) throw ParityError("the rewritten relation is stated for even n");
    const long n = spec.n, k = spec.k, m = half(n);
    RatFunc first = RatFunc(qm(n * k - m) - qm(spec.l), q_to_minus_1(1)) * RatFunc(gauss_binomial(m, k, 2));
    LaurentPoly den = q_to_minus_1(1) * (qm(m - k) + LaurentPoly(1L));
    RatFunc second = RatFunc(q_to_minus_1(n).shifted(n * k - m), den) * RatFunc(gauss_binomial(m - 1, k, 2));
    return first + second;
}

PointOutcome check_rewritten(const SectionSpec &spec) {
    RatFunc lhs = rewritten_rhs(spec);
    RatFunc rhs = -relation_rhs(spec);
    if (lhs == rhs) return {};
    return fail("rewritten relation vs -relation_rhs", lhs.to_string(), rhs.to_string());
}

VerificationReport rewritten_identity_check(const SectionSpec &spec) {
    validate(spec);
    return run_points("rewritten relation", section_axes(spec.n, spec.n), {{spec.n, spec.k, spec.l}},
                      [](const GridPoint &p) { return check_rewritten(section_of(p)); });
}

mpz_class euler_gap_displayed(const SectionSpec &spec) {
    validate(spec);
    const long n = spec.n, k = spec.k, m = half(n);
    if (is_even(spec)) return (n * k - spec.l) * binom(m, k) - m * binom(m - 1, m - k);
    return (n * k - spec.l) * binom(m, k);
}

mpq_class euler_gap_limit(const SectionSpec &spec) { return limit_at_one(-relation_rhs(spec)); }

mpz_class euler_gap(const SectionSpec &spec) {
    mpz_class displayed = euler_gap_displayed(spec);
    mpq_class limit = euler_gap_limit(spec);
    if (limit != mpq_class(displayed))
        throw InvariantError("Euler characteristic gap " + displayed.get_str() + " disagrees with the q -> 1 limit " +
                             limit.get_str());
    return displayed;
}

PointOutcome check_euler_gap(const SectionSpec &spec) {
    mpz_class displayed = euler_gap_displayed(spec);
    mpq_class limit = euler_gap_limit(spec);
    if (limit == mpq_class(displayed)) return {};
    return fail("displayed Euler gap vs limit at q = 1", displayed.get_str(), limit.get_str());
}

std::string to_string(VarietyType t) {
    switch (t) {
    case VarietyType::fano:
        return "Fano";
    case VarietyType::calabi_yau:
        return "CY";
    case VarietyType::general_type:
        return "general type";
    }
    return "";
}

Classification classify_types(const SectionSpec &spec) {
    validate(spec);
    const long n = spec.n, k = spec.k, l = spec.l;
    Classification c;
    c.x = type_from(l - n * k);
    c.y = type_from(is_even(spec) ? n * k - half(n) - l : n * k - l);
    return c;
}

nlohmann::json to_json(const Classification &c) { return {{"X", to_string(c.x)}, {"Y", to_string(c.y)}}; }

Dimensions section_dimensions(const SectionSpec &spec) {
    validate(spec);
    const long n = spec.n;
    long ambient = top(n) - 1;
    long dim_x_pf = dim_pf({n, spec.k});
    long dim_y_pf = dim_pf({n, half(n) - spec.k});
    return Dimensions{dim_x_pf - spec.l, (spec.l - 1) - (ambient - dim_y_pf)};
}

Side parse_side(const std::string &text) {
    if (text == "X" || text == "x") return Side::X;
    if (text == "Y" || text == "y") return Side::Y;
    throw InvariantError("side must be X or Y, got '" + text + "'");
}

std::string to_string(Side side) { return side == Side::X ? "X" : "Y"; }

long SodPrediction::block_count() const {
    long total = 0;
    for (const auto &g : blocks) total += g.count;
    return total;
}

long SodPrediction::total_size() const {
    long total = 0;
    for (const auto &g : blocks) total += g.count * g.size;
    return total;
}

nlohmann::json to_json(const SodPrediction &p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto &g : p.blocks)
        blocks.push_back({{"count", g.count},
                          {"size", g.size},
                          {"first_index", g.first_index},
                          {"last_index", g.last_index},
                          {"first_twist", g.first_twist},
                          {"last_twist", g.last_twist}});
    return {{"side", to_string(p.side)}, {"blocks", blocks}, {"residual", p.residual}};
}

std::vector<Rectangle> ambient_rectangles(long n, long k, Side side) {
    validate(SectionSpec{n, k, 0});
    const long m = half(n), nk = n * k, big = top(n);
    auto size = [](const mpz_class &z) { return z.get_si(); };
    if (n % 2 != 0) {
        long s = size(binom(m, k));
        if (side == Side::X) return {{0, nk - 1, s}};
        return {{0, big - nk - 1, s}};
    }
    if (side == Side::X) return {{0, nk - m - 1, size(binom(m, k))}, {nk - m, nk - 1, size(binom(m - 1, k))}};
    return {{0, big - nk - 1, size(binom(m, m - k))}, {big - nk, big - nk + m - 1, size(binom(m - 1, m - k))}};
}

SodPrediction sod_predict(const SectionSpec &spec, Side side) {
    validate(spec);
    SodPrediction out;
    out.side = side;
    const long cut = side == Side::X ? spec.l : top(spec.n) - spec.l;
    auto twist = [&](long j) { return side == Side::X ? j - spec.l + 1 : -(j - cut + 1); };
    std::vector<BlockGroup> groups;
    for (const Rectangle &r : ambient_rectangles(spec.n, spec.k, side)) {
        long lo = std::max(r.first_index, cut);
        if (lo > r.last_index) continue;
        BlockGroup g;
        g.count = r.last_index - lo + 1;
        g.size = r.size;
        g.first_index = lo;
        g.last_index = r.last_index;
        groups.push_back(g);
    }
    // X lists blocks by increasing index, Y by decreasing index.
    if (side == Side::Y) {
        std::reverse(groups.begin(), groups.end());
        for (auto &g : groups) std::swap(g.first_index, g.last_index);
    }
    for (auto &g : groups) {
        g.first_twist = twist(g.first_index);
        g.last_twist = twist(g.last_index);
    }
    out.blocks = std::move(groups);
    return out;
}

std::string case_label(const SectionSpec &spec) {
    validate(spec);
    const long nk = spec.n * spec.k, l = spec.l;
    if (is_even(spec)) {
        long m = half(spec.n);
        if (l < nk - m) return "l < nk - n/2";
        if (l == nk - m) return "l = nk - n/2";
        if (l < nk) return "nk - n/2 < l < nk";
    }
    if (l < nk) return "l < nk";
    if (l == nk) return "l = nk";
    return "l > nk";
}

namespace {

// Ambient Euler contribution of each case of the analysis, counted directly.
mpz_class case_count(const SectionSpec &spec) {
    const long n = spec.n, k = spec.k, l = spec.l, nk = n * k, m = half(n);
    if (!is_even(spec)) return (nk - l) * binom(m, k);
    if (l < nk - m) return (nk - m - l) * binom(m, k) + m * binom(m - 1, k);
    if (l == nk - m) return m * binom(m - 1, k);
    if (l < nk) return (nk - l) * binom(m - 1, k) - (l - nk + m) * binom(m - 1, m - k);
    // Sides switched: the blocks sit on Y.
    return -((l - nk) * binom(m, m - k) + m * binom(m - 1, m - k));
}

} // namespace

PointOutcome check_case(const SectionSpec &spec) {
    SodPrediction x = sod_predict(spec, Side::X);
    SodPrediction y = sod_predict(spec, Side::Y);
    const long n = spec.n, nk = n * spec.k;
    // Lefschetz lengths of the two ambient decompositions.
    long len_x = 0, len_y = 0;
    for (const Rectangle &r : ambient_rectangles(n, spec.k, Side::X)) len_x += r.last_index - r.first_index + 1;
    for (const Rectangle &r : ambient_rectangles(n, spec.k, Side::Y)) len_y += r.last_index - r.first_index + 1;
    long want_y = is_even(spec) ? n * n / 2 - nk : top(n) - nk;
    if (len_x != nk || len_y != want_y)
        return fail("ambient Lefschetz length", std::to_string(len_x) + "," + std::to_string(len_y),
                    std::to_string(nk) + "," + std::to_string(want_y));
    mpz_class blocks = x.total_size() - y.total_size();
    mpz_class gap = euler_gap_displayed(spec);
    if (blocks != gap) return fail("blocks X - blocks Y vs Euler gap (" + case_label(spec) + ")", blocks.get_str(), gap.get_str());
    mpz_class counted = case_count(spec);
    if (counted != gap)
        return fail("case count vs Euler gap (" + case_label(spec) + ")", counted.get_str(), gap.get_str());
    return {};
}

VerificationReport case_consistency(const SectionSpec &spec) {
    validate(spec);
    return run_points("case consistency", section_axes(spec.n, spec.n), {{spec.n, spec.k, spec.l}},
                      [](const GridPoint &p) { return check_case(section_of(p)); });
}

PointOutcome check_block_identity(long n, long k, long l) {
    const long m = half(n);
    mpz_class lhs = (n * k - m - l) * binom(m, k) + m * binom(m - 1, k);
    mpz_class rhs = (n * k - l) * binom(m, k) - m * binom(m - 1, m - k);
    if (lhs == rhs) return {};
    return fail("block identity", lhs.get_str(), rhs.get_str());
}

VerificationReport verify_rewritten_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    if (n_lo % 2 != 0) ++n_lo;
    return run_points(
        "rewritten relation", section_axes(n_lo, n_hi), section_points(n_lo, n_hi),
        [](const GridPoint &p) { return check_rewritten(section_of(p)); }, threads, record_all);
}

VerificationReport verify_euler_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    return run_points(
        "Euler gap two ways", section_axes(n_lo, n_hi), section_points(n_lo, n_hi),
        [](const GridPoint &p) { return check_euler_gap(section_of(p)); }, threads, record_all);
}

VerificationReport verify_case_grid(long n_lo, long n_hi, unsigned threads, bool record_all) {
    return run_points(
        "case consistency", section_axes(n_lo, n_hi), section_points(n_lo, n_hi),
        [](const GridPoint &p) { return check_case(section_of(p)); }, threads, record_all);
}

VerificationReport verify_block_identity_grid(long n_max, bool record_all) {
    std::vector<GridPoint> points;
    for (long n = 4; n <= n_max; n += 2)
        for (long k = 1; 2 * k <= n; ++k)
            for (long l = 0; l <= top(n); ++l) points.push_back({n, k, l});
    std::vector<GridAxis> axes{{"n", 4, n_max, 2}, {"k", 1, n_max / 2}, {"l", 0, top(n_max)}};
    return run_points("block identity", axes, points,
                      [](const GridPoint &p) { return check_block_identity(p[0], p[1], p[2]); }, 1, record_all);
}

VerificationReport verify_vanishing_grid(long n_lo, long n_hi, bool record_all) {
    auto check = [](const GridPoint &p) {
        SectionSpec spec = section_of(p);
        bool zero = relation_rhs(spec).is_zero();
        bool expected = spec.l == relation_exponent(spec);
        if (zero == expected) return PointOutcome{};
        return fail("relation_rhs vanishes iff l = " + std::string(is_even(spec) ? "(n-1)k" : "nk"),
                    zero ? "zero" : "nonzero", expected ? "zero" : "nonzero");
    };
    return run_points("relation vanishing", section_axes(n_lo, n_hi), section_points(n_lo, n_hi), check, 1, record_all);
}

FigureCheck figure_check() {
    FigureCheck fc;
    fc.ex = parse_ratfunc("1 + 22*q + q^2");
    fc.ey = parse_ratfunc("1 + q + 23*q^2 + q^3 + q^4");
    fc.passed = relation_check(fc.ex, fc.ey, fc.spec);
    fc.perturbed_passed = relation_check(fc.ex, fc.ey + RatFunc(1L), fc.spec);
    fc.dual_passed = relation_check(fc.ey, fc.ex, dual_spec(fc.spec));
    long c = relation_exponent(fc.spec);
    RatFunc scaled = relation_rhs(fc.spec) * RatFunc(LaurentPoly(1L), qm(c));
    RatFunc shift(qm(fc.spec.l - c));
    fc.display = fc.ey.to_string() + " = " + shift.to_string() + "*(" + fc.ex.to_string() + ") + " + scaled.to_string();
    return fc;
}

} // namespace pfs
