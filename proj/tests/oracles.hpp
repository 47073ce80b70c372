#pragma once

// Brute-force counts over small prime fields, independent of the q-series code.

#include <vector>

namespace oracle {

/// counts[i] = number of skew-symmetric n x n matrices over F_p of rank 2i.
std::vector<long> skew_rank_counts(int n, int p);

/// Number of 2k-dimensional subspaces of F_p^n on which the rank-2i form
/// sum_{t<i} x_{2t} ^ x_{2t+1} vanishes identically.
long isotropic_count(int k, int i, int n, int p);

/// Number of k-dimensional subspaces of F_p^n, by enumerating reduced row
/// echelon forms.
long subspace_count(int k, int n, int p);

/// Coefficients (by degree) of the Schubert-cell generating function of
/// G(k, n): the number of pivot patterns with d free entries.
std::vector<long> schubert_cells(int k, int n);

} // namespace oracle
