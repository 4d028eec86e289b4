#include "emc/forms.hpp"

#include <stdexcept>
#include <utility>

namespace emc::forms {

IntSymForm::IntSymForm(IntMatrix g) : n(static_cast<int>(g.size())), gram(std::move(g)) {
    if (!is_square(gram)) throw std::invalid_argument("IntSymForm: Gram matrix not square");
    if (!is_symmetric(gram)) throw std::invalid_argument("IntSymForm: Gram matrix not symmetric");
}

IntSymForm IntSymForm::identity(int n) {
    IntMatrix g(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    return IntSymForm(std::move(g));
}

IntSymForm IntSymForm::hyperbolic() { return IntSymForm({{0, 1}, {1, 0}}); }

i64 evaluate(const IntSymForm& form, std::span<const i64> y, std::span<const i64> yp) {
    if (static_cast<int>(y.size()) != form.n || static_cast<int>(yp.size()) != form.n)
        throw std::invalid_argument("evaluate: vector length does not match form dimension");
    __int128 acc = 0;
    for (int i = 0; i < form.n; ++i) {
        __int128 row = 0;
        for (int j = 0; j < form.n; ++j)
            row += static_cast<__int128>(form.gram[i][j]) * yp[j];
        acc += static_cast<__int128>(y[i]) * row;
    }
    if (acc > INT64_MAX || acc < INT64_MIN)
        throw std::overflow_error("evaluate: result exceeds 64-bit range");
    return static_cast<i64>(acc);
}

Int determinant(const IntSymForm& form) { return det_bareiss(form.gram); }

bool is_unimodular(const IntSymForm& form) {
    Int d = determinant(form);
    return d == 1 || d == -1;
}

namespace {

// One congruence-diagonalization step on the trailing block starting at k.
// Returns the sign of the pivot produced, or 0 if the block is zero.
int diagonalize_step(std::vector<std::vector<Rat>>& a, size_t k) {
    const size_t n = a.size();
    size_t piv = n;
    for (size_t i = k; i < n; ++i)
        if (a[i][i] != 0) { piv = i; break; }
    if (piv == n) {
        // all diagonal entries vanish; find an off-diagonal entry and fold
        // it onto the diagonal with the congruence row_i += row_j (and the
        // matching column move), which yields a_ii = 2*a_ij != 0
        size_t oi = n, oj = n;
        for (size_t i = k; i < n && oi == n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (a[i][j] != 0) { oi = i; oj = j; break; }
        if (oi == n) return 0;  // zero block
        for (size_t t = k; t < n; ++t) a[oi][t] += a[oj][t];
        for (size_t t = k; t < n; ++t) a[t][oi] += a[t][oj];
        piv = oi;
    }
    if (piv != k) {
        std::swap(a[piv], a[k]);
        for (size_t t = 0; t < n; ++t) std::swap(a[t][piv], a[t][k]);
    }
    const Rat d = a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        Rat f = a[i][k] / d;
        for (size_t t = k; t < n; ++t) a[i][t] -= f * a[k][t];
        for (size_t t = k; t < n; ++t) a[t][i] -= f * a[t][k];
    }
    return d > 0 ? 1 : -1;
}

}  // namespace

int signature(const IntSymForm& form) {
    if (determinant(form) == 0)
        throw std::domain_error("signature: form is degenerate (det = 0)");
    const size_t n = static_cast<size_t>(form.n);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = form.gram[i][j];

    int sig = 0;
    for (size_t k = 0; k < n; ++k) {
        int s = diagonalize_step(a, k);
        if (s == 0) throw std::logic_error("signature: zero block in nondegenerate form");
        sig += s;
    }
    return sig;
}

}  // namespace emc::forms
