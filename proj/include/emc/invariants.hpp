#ifndef EMC_INVARIANTS_HPP
#define EMC_INVARIANTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "emc/forms.hpp"
#include "emc/numeric.hpp"

namespace emc::invariants {

/// Triple (delta, gamma, p) of type (b, b4): cup form on squares of the
/// rank-b lattice with values in the rank-b4 lattice, unimodular symmetric
/// form on the latter, and first Pontrjagin vector in the y-basis.
struct SystemOfInvariants {
    int b = 0;
    int b4 = 0;
    /// delta[i][j] is the coordinate vector (length b4) of the cup square
    /// x_i x_j; symmetric in (i, j), no factor-of-2 convention on the
    /// diagonal.
    std::vector<std::vector<std::vector<i64>>> delta;
    forms::IntSymForm gamma;
    std::vector<i64> p;

    /// Throws std::invalid_argument naming the first violated structural
    /// invariant (shape, delta symmetry, gamma symmetry/unimodularity).
    void validate() const;

    /// delta(v (x) w) as a length-b4 coordinate vector.
    std::vector<i64> delta_eval(std::span<const i64> v, std::span<const i64> w) const;
};

struct Relation1Result {
    bool pass = true;
    /// First violating quadruple (1-based, i <= j <= k <= l) with the two
    /// differing pairing values.
    std::array<int, 4> quadruple{};
    i64 value_a = 0;
    i64 value_b = 0;
};

struct Relation2Result {
    bool pass = true;
    int index = 0;  // first failing basis vector, 1-based
    i64 lhs_mod4 = 0;
    i64 rhs_mod4 = 0;
};

struct Relation3Result {
    bool pass = true;
    i64 residue = 0;  // residue mod 2688
};

enum class Verdict { pass, fail };

struct RealizabilityReport {
    Relation1Result relation1;
    Relation2Result relation2;
    Relation3Result relation3;
    int signature = 0;
    Verdict pl_realizable = Verdict::fail;
    Verdict smooth_realizable = Verdict::fail;
    std::string scope_note;
};

enum class FiberCase { b_zero, delta_zero, general };

struct IndeterminacyReport {
    FiberCase fiber_case = FiberCase::b_zero;
    std::string pl_fiber;
    std::string smooth_fiber;
    bool finite = true;
    long long rank = 0;  // free rank of the link group (0 when b = 0)
};

/// Associativity of the cup data: gamma(delta(x_i x_j), delta(x_k x_l)) is
/// invariant under all pairings of each quadruple i <= j <= k <= l.
Relation1Result check_relation1(const SystemOfInvariants& s);

/// gamma(p, e_i) = 2 gamma(e_i, e_i) (mod 4) on every basis vector; by
/// additivity mod 4 this is equivalent to the statement for all y.
Relation2Result check_relation2(const SystemOfInvariants& s);

/// 3 p^2 - 14 p W^2 + 7 W^4 = 12 Sign(gamma) (mod 2688), with W^2 taken
/// through delta. W defaults to 0 (spin case).
Relation3Result check_relation3(const SystemOfInvariants& s,
                                std::optional<std::vector<i64>> W = std::nullopt);

RealizabilityReport realizability(const SystemOfInvariants& s);

IndeterminacyReport indeterminacy(const SystemOfInvariants& s);

}  // namespace emc::invariants

#endif
