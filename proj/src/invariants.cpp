#include "emc/invariants.hpp"

#include <stdexcept>

#include "emc/freelie.hpp"

namespace emc::invariants {

namespace {

i64 mod_pos(i64 v, i64 m) {
    i64 r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

void SystemOfInvariants::validate() const {
    if (b < 0 || b4 < 0) throw std::invalid_argument("system: b and b4 must be nonnegative");
    if (gamma.n != b4) throw std::invalid_argument("system: gamma dimension differs from b4");
    if (static_cast<int>(p.size()) != b4)
        throw std::invalid_argument("system: p length differs from b4");
    if (static_cast<int>(delta.size()) != b)
        throw std::invalid_argument("system: delta must have b rows");
    for (const auto& row : delta) {
        if (static_cast<int>(row.size()) != b)
            throw std::invalid_argument("system: delta must be b x b");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != b4)
                throw std::invalid_argument("system: delta entries must have length b4");
    }
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (delta[i][j] != delta[j][i])
                throw std::invalid_argument("system: delta is not symmetric");
    if (!forms::is_unimodular(gamma))
        throw std::invalid_argument("system: gamma is not unimodular");
}

std::vector<i64> SystemOfInvariants::delta_eval(std::span<const i64> v,
                                                std::span<const i64> w) const {
    if (static_cast<int>(v.size()) != b || static_cast<int>(w.size()) != b)
        throw std::invalid_argument("delta_eval: vector length differs from b");
    std::vector<i64> out(b4, 0);
    for (int i = 0; i < b; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < b; ++j) {
            if (w[j] == 0) continue;
            for (int k = 0; k < b4; ++k) out[k] += v[i] * w[j] * delta[i][j][k];
        }
    }
    return out;
}

Relation1Result check_relation1(const SystemOfInvariants& s) {
    s.validate();
    Relation1Result res;
    auto pairing = [&](int i, int j, int k, int l) {
        return forms::evaluate(s.gamma, s.delta[i][j], s.delta[k][l]);
    };
    for (int i = 0; i < s.b; ++i)
        for (int j = i; j < s.b; ++j)
            for (int k = j; k < s.b; ++k)
                for (int l = k; l < s.b; ++l) {
                    // the three pairings of {i,j,k,l}; delta and gamma
                    // symmetry cover the remaining permutations
                    i64 a = pairing(i, j, k, l);
                    i64 bb = pairing(i, k, j, l);
                    i64 c = pairing(i, l, j, k);
                    if (a != bb || a != c) {
                        res.pass = false;
                        res.quadruple = {i + 1, j + 1, k + 1, l + 1};
                        res.value_a = a;
                        res.value_b = (a != bb) ? bb : c;
                        return res;
                    }
                }
    return res;
}

Relation2Result check_relation2(const SystemOfInvariants& s) {
    s.validate();
    Relation2Result res;
    for (int i = 0; i < s.b4; ++i) {
        std::vector<i64> e(s.b4, 0);
        e[i] = 1;
        i64 lhs = forms::evaluate(s.gamma, s.p, e);
        i64 rhs = 2 * s.gamma.gram[i][i];
        if (mod_pos(lhs - rhs, 4) != 0) {
            res.pass = false;
            res.index = i + 1;
            res.lhs_mod4 = mod_pos(lhs, 4);
            res.rhs_mod4 = mod_pos(rhs, 4);
            return res;
        }
    }
    return res;
}

Relation3Result check_relation3(const SystemOfInvariants& s, std::optional<std::vector<i64>> W) {
    s.validate();
    std::vector<i64> lift = W.value_or(std::vector<i64>(s.b, 0));
    if (static_cast<int>(lift.size()) != s.b)
        throw std::invalid_argument("relation3: lift length differs from b");
    std::vector<i64> W2 = s.delta_eval(lift, lift);
    i64 p2 = forms::evaluate(s.gamma, s.p, s.p);
    i64 pW2 = forms::evaluate(s.gamma, s.p, W2);
    i64 W4 = forms::evaluate(s.gamma, W2, W2);
    int sig = forms::signature(s.gamma);
    Relation3Result res;
    res.residue = mod_pos(3 * p2 - 14 * pW2 + 7 * W4 - 12 * static_cast<i64>(sig), 2688);
    res.pass = res.residue == 0;
    return res;
}

RealizabilityReport realizability(const SystemOfInvariants& s) {
    s.validate();
    RealizabilityReport rep;
    rep.relation1 = check_relation1(s);
    rep.relation2 = check_relation2(s);
    rep.relation3 = check_relation3(s);
    rep.signature = forms::signature(s.gamma);
    bool pl = rep.relation1.pass && rep.relation2.pass;
    rep.pl_realizable = pl ? Verdict::pass : Verdict::fail;
    rep.smooth_realizable = (pl && rep.relation3.pass) ? Verdict::pass : Verdict::fail;
    if (s.b == 0) {
        rep.scope_note = "exact characterization (b = 0)";
    } else {
        rep.scope_note =
            "necessary conditions; exact image characterization stated for b = 0 "
            "and for the fiber structure over delta = 0";
    }
    return rep;
}

IndeterminacyReport indeterminacy(const SystemOfInvariants& s) {
    s.validate();
    IndeterminacyReport rep;
    bool delta_zero = true;
    for (const auto& row : s.delta)
        for (const auto& v : row)
            for (i64 c : v)
                if (c != 0) delta_zero = false;

    if (s.b == 0) {
        rep.fiber_case = FiberCase::b_zero;
        rep.pl_fiber = "single class";
        rep.smooth_fiber = "at most two classes, differing by connected sum with the exotic 8-sphere";
        rep.finite = true;
        rep.rank = 0;
        return rep;
    }

    rep.rank = freelie::rank_FL(s.b);
    std::string fl = "FL_" + std::to_string(s.b);
    std::string rank_str = std::to_string(rep.rank);
    std::string b_str = std::to_string(s.b);
    if (delta_zero) {
        rep.fiber_case = FiberCase::delta_zero;
        rep.pl_fiber = "torsor under " + fl + " = L_" + b_str + " + Z2^" + b_str +
                       " (free rank " + rank_str + ")";
        rep.smooth_fiber = "torsor under " + fl + " + theta(X0), theta(X0) in {trivial, Z2}" +
                           " (unresolved dichotomy)";
        rep.finite = (s.b == 1);
    } else {
        rep.fiber_case = FiberCase::general;
        rep.pl_fiber = fl + " (free rank " + rank_str + ") acts on the fiber; " + fl +
                       " injects at the marked point";
        rep.smooth_fiber = fl + " + theta^8 acts; theta(X0) dichotomy unresolved";
        rep.finite = (s.b <= 1);
    }
    return rep;
}

}  // namespace emc::invariants
