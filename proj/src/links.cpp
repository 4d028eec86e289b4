#include "emc/links.hpp"

#include <stdexcept>
#include <string>

namespace emc::links {

i64 p1_of_framing(const Framing& f) { return 4 * f.k1 + 2 * f.k2; }

i64 self_intersection(const Framing& f) { return f.k2; }

void FramedLinkS7::validate() const {
    if (n < 0) throw std::invalid_argument("framed link: negative component count");
    if (static_cast<int>(lambda.size()) != n || !is_symmetric(lambda))
        throw std::invalid_argument("framed link: lambda must be symmetric n x n");
    for (int i = 0; i < n; ++i)
        if (lambda[i][i] != 0)
            throw std::invalid_argument("framed link: lambda diagonal must be zero");
    if (static_cast<int>(framings.size()) != n)
        throw std::invalid_argument("framed link: one framing per component required");
}

void LinkTuple::validate() const {
    if (b < 0 || b4 < 0) throw std::invalid_argument("link tuple: negative rank");
    auto shape = [](const IntMatrix& m, int rows, int cols) {
        if (static_cast<int>(m.size()) != rows) return false;
        for (const auto& r : m)
            if (static_cast<int>(r.size()) != cols) return false;
        return true;
    };
    if (!shape(l_diag, b4, b)) throw std::invalid_argument("link tuple: l_diag must be b4 x b");
    if (!shape(l_off, b4, b * (b - 1) / 2))
        throw std::invalid_argument("link tuple: l_off must be b4 x (b choose 2)");
    if (!shape(lambda, b4, b4) || !is_symmetric(lambda))
        throw std::invalid_argument("link tuple: lambda must be symmetric b4 x b4");
    for (int k = 0; k < b4; ++k)
        if (lambda[k][k] != 0)
            throw std::invalid_argument("link tuple: lambda diagonal must be zero");
}

FramedLinkS7 framed_link_from_invariants(const forms::IntSymForm& gamma,
                                         const std::vector<i64>& p) {
    if (static_cast<int>(p.size()) != gamma.n)
        throw std::invalid_argument("framed link: p length differs from gamma dimension");
    if (!forms::is_unimodular(gamma))
        throw std::invalid_argument("framed link: gamma is not unimodular");
    FramedLinkS7 link;
    link.n = gamma.n;
    link.lambda.assign(gamma.n, std::vector<i64>(gamma.n, 0));
    for (int i = 0; i < gamma.n; ++i)
        for (int j = 0; j < gamma.n; ++j)
            if (i != j) link.lambda[i][j] = gamma.gram[i][j];
    link.framings.reserve(gamma.n);
    for (int i = 0; i < gamma.n; ++i) {
        i64 k2 = gamma.gram[i][i];
        i64 num = p[i] - 2 * k2;
        if (num % 4 != 0)
            throw std::invalid_argument(
                "framed link: p_" + std::to_string(i + 1) + " = " + std::to_string(p[i]) +
                " violates p = 2 gamma_ii (mod 4) at e_" + std::to_string(i + 1));
        link.framings.push_back({num / 4, k2});
    }
    return link;
}

std::pair<forms::IntSymForm, std::vector<i64>> invariants_from_framed_link(
    const FramedLinkS7& link) {
    link.validate();
    IntMatrix gram = link.lambda;
    std::vector<i64> p(link.n);
    for (int i = 0; i < link.n; ++i) {
        gram[i][i] = link.framings[i].k2;
        p[i] = p1_of_framing(link.framings[i]);
    }
    return {forms::IntSymForm(std::move(gram)), std::move(p)};
}

std::vector<std::vector<std::vector<i64>>> cup_form_from_link_tuple(
    const LinkTuple& t, const forms::IntSymForm& gamma) {
    t.validate();
    if (gamma.n != t.b4)
        throw std::invalid_argument("cup form: gamma dimension differs from component count");
    if (!forms::is_unimodular(gamma))
        throw std::invalid_argument("cup form: gamma is not unimodular (dual basis not integral)");
    IntMatrix ginv = inverse_unimodular(gamma.gram);

    // delta(x_i x_j) = Ginv . (l_ij^k)_k ; the k-th dual basis vector is
    // the k-th column of Ginv.
    auto dualize = [&](const std::vector<i64>& l) {
        std::vector<i64> out(t.b4, 0);
        for (int m = 0; m < t.b4; ++m)
            for (int k = 0; k < t.b4; ++k) out[m] += ginv[m][k] * l[k];
        return out;
    };

    std::vector<std::vector<std::vector<i64>>> delta(
        t.b, std::vector<std::vector<i64>>(t.b, std::vector<i64>(t.b4, 0)));
    for (int i = 0; i < t.b; ++i) {
        std::vector<i64> li(t.b4);
        for (int k = 0; k < t.b4; ++k) li[k] = t.l_diag[k][i];
        delta[i][i] = dualize(li);
    }
    int col = 0;
    for (int i = 0; i < t.b; ++i) {
        for (int j = i + 1; j < t.b; ++j, ++col) {
            std::vector<i64> lij(t.b4);
            for (int k = 0; k < t.b4; ++k) lij[k] = t.l_off[k][col];
            delta[i][j] = dualize(lij);
            delta[j][i] = delta[i][j];
        }
    }
    return delta;
}

LinkTuple link_tuple_from_invariants(const invariants::SystemOfInvariants& s) {
    s.validate();
    LinkTuple t;
    t.b = s.b;
    t.b4 = s.b4;
    t.l_diag.assign(s.b4, std::vector<i64>(s.b, 0));
    t.l_off.assign(s.b4, std::vector<i64>(s.b * (s.b - 1) / 2, 0));
    t.lambda.assign(s.b4, std::vector<i64>(s.b4, 0));

    std::vector<std::vector<i64>> unit(s.b4, std::vector<i64>(s.b4, 0));
    for (int k = 0; k < s.b4; ++k) unit[k][k] = 1;

    for (int k = 0; k < s.b4; ++k) {
        for (int i = 0; i < s.b; ++i)
            t.l_diag[k][i] = forms::evaluate(s.gamma, s.delta[i][i], unit[k]);
        int col = 0;
        for (int i = 0; i < s.b; ++i)
            for (int j = i + 1; j < s.b; ++j, ++col)
                t.l_off[k][col] = forms::evaluate(s.gamma, s.delta[i][j], unit[k]);
        for (int j = 0; j < s.b4; ++j)
            if (j != k) t.lambda[k][j] = s.gamma.gram[k][j];
    }
    return t;
}

}  // namespace emc::links
