#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pfstringy/ratfunc.hpp"
#include "pfstringy/report.hpp"

namespace pfs {

/// X_W = Pf(2k, V^dual) cut by P(W^perp), Y_W = Pf(2 floor(n/2) - 2k, V) cut
/// by P(W), with dim V = n and dim W = l.
struct SectionSpec {
    long n = 6;
    long k = 1;
    long l = 0;
};

/// RangeError unless n >= 4, 1 <= k < floor(n/2) and 0 <= l <= n(n-1)/2.
void validate(const SectionSpec &spec);
inline bool is_even(const SectionSpec &spec) { return spec.n % 2 == 0; }

/// The section with (k, l) replaced by (floor(n/2) - k, n(n-1)/2 - l); its X
/// and Y are the original Y and X.
SectionSpec dual_spec(const SectionSpec &spec);

/// (n-1)k for even n, nk for odd n: the power of q multiplying E(Y).
long relation_exponent(const SectionSpec &spec);

/// (q^l - q^c)/(q - 1) [floor(n/2) choose k]_{q^2} with c = relation_exponent.
RatFunc relation_rhs(const SectionSpec &spec);

/// q^c EY - q^l EX == relation_rhs(spec).
bool relation_check(const RatFunc &ex, const RatFunc &ey, const SectionSpec &spec);

/// Even n: (q^{nk-n/2} - q^l)/(q-1) [n/2 choose k]_{q^2}
///   + q^{nk-n/2} (q^n - 1)/((q-1)(q^{n/2-k}+1)) [n/2-1 choose k]_{q^2}.
RatFunc rewritten_rhs(const SectionSpec &spec);
PointOutcome check_rewritten(const SectionSpec &spec);
VerificationReport rewritten_identity_check(const SectionSpec &spec);

/// chi(X_W) - chi(Y_W) as displayed: (nk - l) C(n/2, k) - (n/2) C(n/2-1, n/2-k)
/// for even n and (nk - l) C((n-1)/2, k) for odd n. Throws InvariantError
/// when it disagrees with the q -> 1 limit of -relation_rhs.
mpz_class euler_gap(const SectionSpec &spec);
mpz_class euler_gap_displayed(const SectionSpec &spec);
mpq_class euler_gap_limit(const SectionSpec &spec);
PointOutcome check_euler_gap(const SectionSpec &spec);

enum class VarietyType { fano, calabi_yau, general_type };
std::string to_string(VarietyType t);

struct Classification {
    VarietyType x;
    VarietyType y;
};

/// By the signs of the canonical-class coefficients l - nk (X) and
/// nk - n/2 - l (Y, even n) or nk - l (Y, odd n).
Classification classify_types(const SectionSpec &spec);
nlohmann::json to_json(const Classification &c);

/// Transverse-intersection dimensions: dim X_W = dim Pf(2k) - l and
/// dim Y_W = (l - 1) - codim Pf(2 floor(n/2) - 2k).
struct Dimensions {
    long x;
    long y;
};
Dimensions section_dimensions(const SectionSpec &spec);

enum class Side { X, Y };
Side parse_side(const std::string &text);
std::string to_string(Side side);

/// Consecutive blocks of equal size, in decomposition order. Block A_j sits at
/// twist j - l + 1 on the X side; block B_j at twist -(j - (n(n-1)/2 - l) + 1)
/// on the Y side.
struct BlockGroup {
    long count = 0;
    long size = 0;
    long first_index = 0;
    long last_index = 0;
    long first_twist = 0;
    long last_twist = 0;
};

struct SodPrediction {
    Side side = Side::X;
    std::vector<BlockGroup> blocks;
    std::string residual = "C_W";

    long block_count() const;
    /// Sum of count * size: the ambient part of the Euler characteristic.
    long total_size() const;
};

nlohmann::json to_json(const SodPrediction &p);

/// Lefschetz blocks of the ambient Pfaffian on one side, as (first index,
/// last index, size) rectangles: two for even n, one for odd n.
struct Rectangle {
    long first_index;
    long last_index;
    long size;
};
std::vector<Rectangle> ambient_rectangles(long n, long k, Side side);

/// Ambient blocks surviving on the section.
SodPrediction sod_predict(const SectionSpec &spec, Side side);

/// Table row label for the even case analysis, e.g. "l < nk - n/2".
std::string case_label(const SectionSpec &spec);

/// Blocks on X minus blocks on Y against euler_gap, plus the closed count of
/// the matching case of the analysis.
PointOutcome check_case(const SectionSpec &spec);
VerificationReport case_consistency(const SectionSpec &spec);

/// (nk - n/2 - l) C(n/2, k) + (n/2) C(n/2-1, k)
///   == (nk - l) C(n/2, k) - (n/2) C(n/2-1, n/2-k) as integers.
PointOutcome check_block_identity(long n, long k, long l);

/// Grids over n in [n_lo, n_hi] (stepping by 2 from n_lo), 1 <= k < floor(n/2),
/// 0 <= l <= n(n-1)/2.
VerificationReport verify_rewritten_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);
VerificationReport verify_euler_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);
VerificationReport verify_case_grid(long n_lo, long n_hi, unsigned threads = 1, bool record_all = false);
/// Even n in [4, n_max], 1 <= k <= n/2, 0 <= l <= n(n-1)/2.
VerificationReport verify_block_identity_grid(long n_max, bool record_all = false);

/// relation_rhs vanishes exactly at l = relation_exponent, over the grid.
VerificationReport verify_vanishing_grid(long n_lo, long n_hi, bool record_all = false);

/// The K3 / Pfaffian cubic fourfold instance (n, k, l) = (6, 1, 6).
struct FigureCheck {
    SectionSpec spec{6, 1, 6};
    RatFunc ex;
    RatFunc ey;
    bool passed = false;
    bool perturbed_passed = false; // EY + 1 in place of EY
    bool dual_passed = false;      // sides swapped through dual_spec
    std::string display;           // EY = q^{l-c} EX + rhs / q^c
};
FigureCheck figure_check();

} // namespace pfs
