#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfstringy/errors.hpp"
#include "pfstringy/linear_sections.hpp"
#include "pfstringy/qseries.hpp"

using namespace pfs;

namespace {

mpq_class at(const RatFunc &f, long x) { return eval_at(f, mpq_class(x)); }
RatFunc R(const std::string &s) { return parse_ratfunc(s); }

} // namespace

TEST(CutSpec, Validation) {
    EXPECT_NO_THROW(validate(CutSpec{6, 3, 3}));
    EXPECT_THROW(validate(CutSpec{7, 1, 1}), ParityError);
    EXPECT_THROW(validate(CutSpec{6, 0, 1}), RangeError);
    EXPECT_THROW(validate(CutSpec{6, 4, 1}), RangeError);
    EXPECT_THROW(validate(CutSpec{6, 1, 0}), RangeError);
    EXPECT_THROW(validate(CutSpec{6, 1, 4}), RangeError);
    EXPECT_THROW(f_closed(CutSpec{5, 1, 1}), ParityError);
}

TEST(Isotropic, MatchesFiniteFieldCounts) {
    for (int p : {2, 3})
        for (int n = 2; n <= 6; ++n)
            for (int i = 1; 2 * i <= n; ++i)
                for (int k = 0; 2 * k <= n; ++k) {
                    RatFunc l = l_iso(k, i, n);
                    ASSERT_TRUE(l.is_polynomial()) << k << " " << i << " " << n;
                    EXPECT_EQ(at(l, p), oracle::isotropic_count(k, i, n, p))
                        << "k=" << k << " i=" << i << " n=" << n << " p=" << p;
                }
}

TEST(Isotropic, SpecialValues) {
    // Every subspace is isotropic for k = 0; a rank-2 form on C^2 has no isotropic plane.
    EXPECT_EQ(l_iso(0, 1, 4), RatFunc(1L));
    EXPECT_TRUE(l_iso(1, 1, 2).is_zero());
    // A symplectic form on C^4 has isotropic planes forming a 3-dimensional quadric.
    EXPECT_EQ(l_iso(1, 2, 4), R("1 + q + q^2 + q^3"));
    EXPECT_THROW(l_iso(1, 0, 4), RangeError);
    EXPECT_THROW(l_iso(3, 1, 4), RangeError);
}

TEST(CutF, ClosedExamples) {
    EXPECT_EQ(at(f_closed({6, 1, 1}), 2), 395);
    EXPECT_EQ(f_closed({6, 1, 3}), R("(q^4 - 1)*(q^6 - 1)/((q - 1)*(q^2 - 1))"));
    // With i = n/2 the second summand disappears.
    for (long n = 4; n <= 12; n += 2)
        for (long k = 1; k <= n / 2; ++k) {
            long m = (n - 1) * k - 1;
            RatFunc expect = R("(q^" + std::to_string(m) + " - 1)/(q - 1)") * RatFunc(gauss_binomial(n / 2, k, 2));
            EXPECT_EQ(f_closed({n, k, n / 2}), expect);
        }
}

TEST(CutF, RecursiveMatchesClosed) {
    for (long n = 2; n <= 12; n += 2)
        for (long k = 1; k <= n / 2; ++k)
            for (long i = 1; i <= n / 2; ++i) EXPECT_EQ(f_recursive({n, k, i}), f_closed({n, k, i}));
}

TEST(CutF, CoefficientDiagonalAndShape) {
    for (long n = 2; n <= 10; n += 2)
        for (long k = 1; k <= n / 2; ++k) {
            EXPECT_EQ(cut_coefficient(k, k, n), RatFunc(1L));
            for (long j = 1; j < k; ++j) EXPECT_TRUE(cut_coefficient(k, j, n).is_polynomial());
        }
    EXPECT_THROW(cut_coefficient(1, 2, 6), RangeError);
}

TEST(CutF, InversionRoundTrip) {
    for (long n = 2; n <= 10; n += 2)
        for (long k = 1; k <= n / 2; ++k)
            for (long i = 1; i <= n / 2; ++i) {
                EXPECT_EQ(f_from_circ({n, k, i}), f_closed({n, k, i}));
                EXPECT_TRUE(inversion_check({n, k, i}).passed());
            }
    EXPECT_EQ(f_circ({6, 1, 2}), f_closed({6, 1, 2}));
}

TEST(CutF, DeltaSums) {
    EXPECT_EQ(delta_sum(0), RatFunc(1L));
    for (long a = 1; a <= 8; ++a) EXPECT_TRUE(delta_sum(a).is_zero()) << a;
    EXPECT_THROW(delta_sum(-1), RangeError);
    VerificationReport r = verify_delta_grid(8);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.tested, 9);
}

TEST(CutF, FourSums) {
    for (long n = 2; n <= 10; n += 2)
        for (long k = 1; k <= n / 2; ++k) {
            EXPECT_EQ(sum_A(k, n), sum_C(k, n));
            for (long i = 1; i <= n / 2; ++i) EXPECT_EQ(sum_B(k, i, n), sum_D(k, i, n));
        }
    EXPECT_TRUE(verify_abcd(8, 2, 3).passed());
}

TEST(CutF, CombinatorialIdentity) {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 6; ++b) EXPECT_EQ(check_combinatorial_identity(a, b).status, PointStatus::pass);
    EXPECT_TRUE(verify_combinatorial_grid(3, 5, 2).passed());
}

TEST(CutF, GridsAndRecording) {
    VerificationReport f = verify_f_grid(2, 8);
    EXPECT_TRUE(f.passed());
    EXPECT_EQ(f.tested, 1 + 4 + 9 + 16);
    VerificationReport rec = verify_inversion_grid(2, 6, 1, true);
    EXPECT_EQ(rec.points.size(), static_cast<std::size_t>(rec.tested + rec.skipped));
    EXPECT_EQ(to_json(verify_abcd_grid(2, 8, 1)), to_json(verify_abcd_grid(2, 8, 3)));
}

TEST(CutF, NonnegativityIsOnlyObserved) {
    NonnegativityObservation obs = observe_nonnegativity(2, 14);
    EXPECT_GT(obs.tested, 0);
    EXPECT_TRUE(obs.violations.empty());
}
