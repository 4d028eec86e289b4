#ifndef EMC_LINKS_HPP
#define EMC_LINKS_HPP

#include <utility>
#include <vector>

#include "emc/forms.hpp"
#include "emc/invariants.hpp"
#include "emc/numeric.hpp"

namespace emc::links {

/// Framing of a 3-sphere in a 7-manifold: coordinates (k1, k2) in
/// pi_3(SO(4)) = Z alpha_3 + Z beta_3.
struct Framing {
    i64 k1 = 0;
    i64 k2 = 0;

    friend bool operator==(const Framing&, const Framing&) = default;
};

/// First Pontrjagin number of the rank-4 bundle over S^4 with clutching
/// class k1 alpha_3 + k2 beta_3, in the sign convention fixed by vanishing
/// on the stable kernel (-1, 2): returns 4 k1 + 2 k2.
i64 p1_of_framing(const Framing& f);

/// Self-intersection of the capped 4-sphere; equals k2.
i64 self_intersection(const Framing& f);

/// Framed link of 3-spheres in S^7: pairwise linking numbers (symmetric,
/// zero diagonal; self-intersections live in the framings) plus one
/// framing per component.
struct FramedLinkS7 {
    int n = 0;
    IntMatrix lambda;
    std::vector<Framing> framings;

    void validate() const;

    friend bool operator==(const FramedLinkS7&, const FramedLinkS7&) = default;
};

/// Attaching data of a link of b4 3-spheres in the b-fold connected sum of
/// S^2 x S^5: per component k the tuple (l_i^k; l_ij^k, i < j; lambda_kj).
struct LinkTuple {
    int b = 0;
    int b4 = 0;
    IntMatrix l_diag;  // b4 x b
    IntMatrix l_off;   // b4 x (b choose 2), column order (1,2),(1,3),...,(b-1,b)
    IntMatrix lambda;  // b4 x b4 symmetric, zero diagonal

    void validate() const;

    friend bool operator==(const LinkTuple&, const LinkTuple&) = default;
};

/// The framed link attaching the 4-handles of the 3-connected model:
/// lambda_ij = gamma(e_i, e_j), k2 = gamma(e_i, e_i), k1 = (p_i - 2
/// gamma_ii)/4. Throws std::invalid_argument if gamma is not unimodular or
/// some p_i violates the diagonal congruence p_i = 2 gamma_ii (mod 4).
FramedLinkS7 framed_link_from_invariants(const forms::IntSymForm& gamma,
                                         const std::vector<i64>& p);

/// Exact inverse of framed_link_from_invariants.
std::pair<forms::IntSymForm, std::vector<i64>> invariants_from_framed_link(
    const FramedLinkS7& link);

/// Cup form recovered from attaching data: delta(x_i x_j) = sum_k l_ij^k
/// y_k^* rewritten in the y-basis through the inverse Gram matrix.
std::vector<std::vector<std::vector<i64>>> cup_form_from_link_tuple(
    const LinkTuple& t, const forms::IntSymForm& gamma);

/// l_i^k = gamma(delta(x_i x_i), e_k), l_ij^k = gamma(delta(x_i x_j), e_k),
/// lambda_kj = gamma(e_k, e_j).
LinkTuple link_tuple_from_invariants(const invariants::SystemOfInvariants& s);

}  // namespace emc::links

#endif
