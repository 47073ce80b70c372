#include "oracles.hpp"

#include <functional>

namespace oracle {

namespace {

int mod(long x, int p) { return static_cast<int>(((x % p) + p) % p); }

int inverse(int a, int p) {
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    return 0;
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        int inv = inverse(m[rank][c], p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            int f = m[r][c] * inv % p;
            for (int j = c; j < cols; ++j) m[r][j] = mod(m[r][j] - f * m[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

// Calls visit(rows) for every reduced row echelon d x n matrix over F_p.
void for_each_rref(int d, int n, int p, const std::function<void(const std::vector<std::vector<int>> &)> &visit) {
    std::vector<int> pivots(d);
    std::function<void(int, int)> choose = [&](int r, int start) {
        if (r == d) {
            std::vector<std::pair<int, int>> free;
            for (int row = 0; row < d; ++row)
                for (int c = pivots[row] + 1; c < n; ++c) {
                    bool is_pivot = false;
                    for (int pc : pivots) is_pivot = is_pivot || pc == c;
                    if (!is_pivot) free.emplace_back(row, c);
                }
            std::vector<std::vector<int>> m(d, std::vector<int>(n, 0));
            for (int row = 0; row < d; ++row) m[row][pivots[row]] = 1;
            std::function<void(std::size_t)> fill = [&](std::size_t idx) {
                if (idx == free.size()) {
                    visit(m);
                    return;
                }
                for (int v = 0; v < p; ++v) {
                    m[free[idx].first][free[idx].second] = v;
                    fill(idx + 1);
                }
            };
            fill(0);
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[r] = c;
            choose(r + 1, c + 1);
        }
    };
    choose(0, 0);
}

} // namespace

std::vector<long> skew_rank_counts(int n, int p) {
    std::vector<long> counts(n / 2 + 1, 0);
    std::vector<std::pair<int, int>> entries;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) entries.emplace_back(a, b);
    std::vector<int> digits(entries.size(), 0);
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    while (true) {
        for (std::size_t t = 0; t < entries.size(); ++t) {
            auto [a, b] = entries[t];
            m[a][b] = digits[t];
            m[b][a] = mod(-digits[t], p);
        }
        counts[rank_mod_p(m, p) / 2] += 1;
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
        if (t == digits.size()) break;
    }
    return counts;
}

long isotropic_count(int k, int i, int n, int p) {
    long count = 0;
    auto form = [&](const std::vector<int> &u, const std::vector<int> &v) {
        long s = 0;
        for (int t = 0; t < i; ++t) s += u[2 * t] * v[2 * t + 1] - u[2 * t + 1] * v[2 * t];
        return mod(s, p);
    };
    for_each_rref(2 * k, n, p, [&](const std::vector<std::vector<int>> &m) {
        for (int a = 0; a < 2 * k; ++a)
            for (int b = a + 1; b < 2 * k; ++b)
                if (form(m[a], m[b]) != 0) return;
        ++count;
    });
    return count;
}

long subspace_count(int k, int n, int p) {
    long count = 0;
    for_each_rref(k, n, p, [&](const std::vector<std::vector<int>> &) { ++count; });
    return count;
}

std::vector<long> schubert_cells(int k, int n) {
    std::vector<long> coeffs(static_cast<std::size_t>(k * (n - k) + 1), 0);
    std::vector<int> pivots(k);
    std::function<void(int, int)> choose = [&](int r, int start) {
        if (r == k) {
            int free = 0;
            for (int row = 0; row < k; ++row) free += (n - 1 - pivots[row]) - (k - 1 - row);
            coeffs[free] += 1;
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[r] = c;
            choose(r + 1, c + 1);
        }
    };
    choose(0, 0);
    return coeffs;
}

} // namespace oracle
