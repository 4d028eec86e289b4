#ifndef EMC_FREELIE_HPP
#define EMC_FREELIE_HPP

#include <map>
#include <string>
#include <vector>

#include "emc/numeric.hpp"

namespace emc::freelie {

/// Basis element of the free Lie algebra on b generators: the index-th
/// Lyndon word of the given degree (lexicographic order, 1-based index)
/// with its standard right factorization as bracketing.
struct HallBasisElement {
    int degree = 0;
    int index = 0;
    std::vector<int> word;  // letters 1..b

    friend bool operator==(const HallBasisElement&, const HallBasisElement&) = default;
};

/// Number of Lyndon words of length l over b letters (Witt formula).
long long witt_dimension(int b, int l);

/// The degree-l basis elements in lexicographic order; deterministic.
std::vector<HallBasisElement> hall_basis(int b, int l);

/// Render as nested commutator, e.g. "[e1,[e1,e2]]".
std::string bracket_string(const HallBasisElement& e);

/// Element of the free graded Lie algebra over Z on b generators, stored
/// per degree as a coefficient vector in the Lyndon basis. Absent degrees
/// are zero; stored vectors have length exactly witt_dimension(b, l).
struct LieElement {
    int b = 0;
    std::map<int, std::vector<i64>> components;

    static LieElement zero(int b);
    static LieElement generator(int b, int i);                  // i in 1..b
    static LieElement basis(int b, int degree, int index);      // index 1-based

    bool is_zero() const;
    /// Drops all-zero degree vectors (canonical representation).
    void normalize();

    friend bool operator==(const LieElement&, const LieElement&) = default;
};

LieElement add(const LieElement& a, const LieElement& c);
LieElement scale(i64 s, const LieElement& a);

/// Lie bracket expanded in the Lyndon basis; bilinear, antisymmetric,
/// Jacobi. Normalization rewrites non-standard pairs recursively through
/// antisymmetry and the Jacobi identity on standard factorizations.
LieElement bracket(const LieElement& a, const LieElement& c);

/// Substitute e_i -> sum_j g[i][j] e_j and re-expand. g must be b x b with
/// det = +-1; throws std::invalid_argument otherwise.
LieElement gl_action(const IntMatrix& g, const LieElement& x);

/// gcd of the degree-l coefficients (0 for a zero or absent component);
/// constant on GL_b(Z)-orbits.
i64 orbit_invariant(const LieElement& x, int l);

/// Matrix of the free part of the Whitehead-product map in degree m-1:
/// column (j, k) [j = 1..b outer, k = 1..d_{m-1} inner] holds the
/// expansion of [e_k^{m-1}, e_j] over hall_basis(b, m). m must be 5 or 6.
IntMatrix whitehead_matrix(int b, int m);

/// Free ranks of the two ends of the link-group extension and their sum.
/// Only free parts are computed; torsion is out of scope.
long long rank_ker_w5(int b);
long long rank_coker_w6(int b);
long long rank_L(int b);
long long rank_FL(int b);

}  // namespace emc::freelie

#endif
