#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "pfstringy/errors.hpp"
#include "pfstringy/qseries.hpp"

using namespace pfs;

namespace {

LaurentPoly P(const std::string &s) { return parse_laurent_poly(s); }

long binom(long n, long k) {
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

mpq_class at(const RatFunc &f, long x) { return eval_at(f, mpq_class(x)); }

} // namespace

TEST(QPochhammer, SmallProducts) {
    EXPECT_EQ(q_pochhammer({1, 1, 2}), P("1 - q - q^2 + q^3"));
    EXPECT_EQ(q_pochhammer({5, 3, 0}), LaurentPoly(1L));
    EXPECT_TRUE(q_pochhammer({0, 2, 3}).is_zero());
    EXPECT_TRUE(q_pochhammer({-4, 2, 3}).is_zero()); // factor at t = 2
    EXPECT_EQ(q_pochhammer({0, 1, 2}, -1), P("2 + 2*q"));
    EXPECT_EQ(q_pochhammer({-1, 1, 1}), P("1 - q^-1"));
    EXPECT_THROW(q_pochhammer({1, 0, 2}), InvariantError);
    EXPECT_THROW(q_pochhammer({1, 1, -1}), InvariantError);
}

TEST(GaussBinomial, ExamplesAndConventions) {
    EXPECT_EQ(gauss_binomial(4, 2, 1), P("1 + q + 2*q^2 + q^3 + q^4"));
    EXPECT_EQ(gauss_binomial(7, 0, 3), LaurentPoly(1L));
    EXPECT_EQ(gauss_binomial(0, 0, 1), LaurentPoly(1L));
    EXPECT_TRUE(gauss_binomial(2, 3, 1).is_zero());
    EXPECT_TRUE(gauss_binomial(5, -1, 1).is_zero());
    EXPECT_EQ(gauss_binomial(3, 1, 2), P("1 + q^2 + q^4"));
    EXPECT_EQ(gauss_binomial(3, 1, 2), gauss_binomial(3, 1, 1).substitute_power(2));
    EXPECT_EQ(gauss_binomial(6, 2, 1).eval(mpz_class(2)), 651);
}

TEST(GaussBinomial, SymmetryAndPascal) {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            for (long m = 1; m <= 3; ++m) EXPECT_EQ(gauss_binomial(n, k, m), gauss_binomial(n, n - k, m));
            if (n > 0 && k > 0 && k < n) {
                // [n,k] = [n-1,k-1] + q^k [n-1,k]
                EXPECT_EQ(gauss_binomial(n, k, 1),
                          gauss_binomial(n - 1, k - 1, 1) + gauss_binomial(n - 1, k, 1).shifted(k));
            }
            EXPECT_EQ(gauss_binomial(n, k, 1).eval(mpz_class(1)), binom(n, k));
        }
}

TEST(GaussBinomial, SchubertCellOracle) {
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<long> cells = oracle::schubert_cells(k, n);
            LaurentPoly g = gauss_binomial(n, k, 1);
            for (std::size_t d = 0; d < cells.size(); ++d) EXPECT_EQ(g.coefficient(static_cast<long>(d)), cells[d]);
            EXPECT_EQ(g.high_degree(), k * (n - k));
        }
}

TEST(GaussBinomial, SubspaceCountOracle) {
    for (int p : {2, 3})
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k)
                EXPECT_EQ(gauss_binomial(n, k, 1).eval(mpz_class(p)), oracle::subspace_count(k, n, p))
                    << "n=" << n << " k=" << k << " p=" << p;
}

TEST(EPolynomials, ProjectiveAndGrassmannian) {
    EXPECT_EQ(e_projective(0), RatFunc(1L));
    EXPECT_EQ(e_projective(5), RatFunc(P("1 + q + q^2 + q^3 + q^4 + q^5")));
    EXPECT_EQ(at(e_projective(14), 2), 32767);
    EXPECT_TRUE(e_projective(7).is_polynomial());
    EXPECT_THROW(e_projective(-1), RangeError);
    EXPECT_EQ(e_grassmannian(2, 4), RatFunc(P("1 + q + 2*q^2 + q^3 + q^4")));
    EXPECT_EQ(at(e_grassmannian(2, 6), 2), mpq_class(651));
    EXPECT_EQ(e_grassmannian(0, 9), RatFunc(1L));
    EXPECT_THROW(e_grassmannian(3, 2), RangeError);
    EXPECT_THROW(e_grassmannian(-1, 2), RangeError);
}

TEST(EPolynomials, NondegenerateSkewForms) {
    EXPECT_EQ(e_nondeg_skew(1), RatFunc(1L));
    EXPECT_EQ(e_nondeg_skew(2), RatFunc(P("q^5 - q^2")));
    EXPECT_EQ(at(e_nondeg_skew(2), 2), 28);
    EXPECT_THROW(e_nondeg_skew(0), RangeError);
    for (long i = 1; i <= 7; ++i) {
        EXPECT_EQ(e_nondeg_skew(i), e_nondeg_skew_closed(i)) << "i=" << i;
        EXPECT_TRUE(e_nondeg_skew(i).is_polynomial());
    }
}

TEST(EPolynomials, StrataAreExhaustive) {
    for (long n = 4; n <= 14; ++n) {
        RatFunc total;
        for (long i = 1; 2 * i <= n; ++i) {
            RatFunc s = e_strata_pf(i, n);
            EXPECT_TRUE(s.is_polynomial());
            total += s;
        }
        EXPECT_EQ(total, e_projective(n * (n - 1) / 2 - 1)) << "n=" << n;
    }
    for (long n = 2; n <= 9; ++n) EXPECT_EQ(e_strata_pf(1, n), e_grassmannian(2, n));
    EXPECT_EQ(at(e_strata_pf(2, 6), 2), 18228);
    EXPECT_THROW(e_strata_pf(0, 6), RangeError);
    EXPECT_THROW(e_strata_pf(4, 7), RangeError);
}

TEST(EPolynomials, FiniteFieldSkewCounts) {
    for (int p : {2, 3})
        for (int n = 2; n <= (p == 2 ? 6 : 5); ++n) {
            std::vector<long> counts = oracle::skew_rank_counts(n, p);
            for (long i = 1; 2 * i <= n; ++i)
                EXPECT_EQ(at(e_strata_pf(i, n), p) * (p - 1), counts[i]) << "n=" << n << " i=" << i << " p=" << p;
        }
}

TEST(EPolynomials, ConcurrentMemoizedReaders) {
    std::vector<std::thread> pool;
    std::vector<RatFunc> got(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { got[t] = e_nondeg_skew(6 + t % 3) * RatFunc(gauss_binomial(16, 5 + t % 2, 1)); });
    for (auto &th : pool) th.join();
    for (int t = 0; t < 8; ++t)
        EXPECT_EQ(got[t], e_nondeg_skew_closed(6 + t % 3) * RatFunc(gauss_binomial(16, 5 + t % 2, 1)));
}
