#include "emc/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace emc {

bool is_square(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

bool is_symmetric(const IntMatrix& m) {
    if (!is_square(m)) return false;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

Int det_bareiss(const IntMatrix& m) {
    if (!is_square(m)) throw std::invalid_argument("det: matrix not square");
    const size_t n = m.size();
    if (n == 0) return 1;

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];

    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Generic elimination rank. Pivot = entry of minimal nonzero magnitude in
// the active submatrix; other rows in the pivot column are reduced by the
// integer quotient until the column is clear. With T = i64 every update is
// overflow-checked; on failure the caller retries with cpp_int.
template <typename T>
bool rank_elim(std::vector<std::vector<T>> a, int& rank_out) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // find minimal |entry| != 0 in column c at rows >= r
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (best == rows) {
                best = i;
            } else {
                T x = a[i][c] < 0 ? T(-a[i][c]) : a[i][c];
                T y = a[best][c] < 0 ? T(-a[best][c]) : a[best][c];
                if (x < y) best = i;
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        // clear the column below; re-pick the smallest pivot after each pass
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                T q = a[i][c] / a[r][c];
                if (q != 0) {
                    for (size_t j = c; j < cols; ++j) {
                        if (a[r][j] == 0) continue;
                        if constexpr (std::is_same_v<T, i64>) {
                            i64 prod, res;
                            if (__builtin_mul_overflow(q, a[r][j], &prod)) return false;
                            if (__builtin_sub_overflow(a[i][j], prod, &res)) return false;
                            a[i][j] = res;
                        } else {
                            a[i][j] -= q * a[r][j];
                        }
                    }
                }
                if (a[i][c] != 0) {
                    // remainder smaller than the pivot: promote it
                    std::swap(a[r], a[i]);
                    again = true;
                }
            }
        }
        ++r;
    }
    rank_out = static_cast<int>(r);
    return true;
}

}  // namespace

int rank_integer(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != (m.empty() ? 0 : m[0].size()))
            throw std::invalid_argument("rank: ragged matrix");
    int r = 0;
    std::vector<std::vector<i64>> fast(m.begin(), m.end());
    if (rank_elim<i64>(std::move(fast), r)) return r;
    std::vector<std::vector<Int>> wide(m.size());
    for (size_t i = 0; i < m.size(); ++i) wide[i].assign(m[i].begin(), m[i].end());
    if (!rank_elim<Int>(std::move(wide), r))
        throw std::logic_error("rank: arbitrary-precision elimination failed");
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!is_square(m)) throw std::invalid_argument("inverse: matrix not square");
    const size_t n = m.size();
    Int det = det_bareiss(m);
    if (det != 1 && det != -1)
        throw std::invalid_argument("inverse: matrix is not unimodular");

    // Gauss-Jordan over exact rationals on [m | I]; the result is integral
    // because |det| = 1.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("inverse: unexpected singularity");
        std::swap(a[k], a[piv]);
        Rat d = a[k][k];
        for (size_t j = 0; j < 2 * n; ++j) a[k][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    IntMatrix inv(n, std::vector<i64>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Rat& v = a[i][n + j];
            if (boost::multiprecision::denominator(v) != 1)
                throw std::logic_error("inverse: non-integral entry");
            inv[i][j] = static_cast<i64>(boost::multiprecision::numerator(v));
        }
    }
    return inv;
}

int mobius(i64 n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int primes = 0;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

}  // namespace emc
