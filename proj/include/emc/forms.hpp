#ifndef EMC_FORMS_HPP
#define EMC_FORMS_HPP

#include <span>
#include <vector>

#include "emc/numeric.hpp"

namespace emc::forms {

/// Integral symmetric bilinear form given by its Gram matrix. n = 0 is the
/// zero form on the trivial lattice.
struct IntSymForm {
    int n = 0;
    IntMatrix gram;

    IntSymForm() = default;

    /// Validates squareness and symmetry; throws std::invalid_argument.
    explicit IntSymForm(IntMatrix g);

    static IntSymForm identity(int n);
    static IntSymForm hyperbolic();  // [[0,1],[1,0]]
};

/// y^T . gram . y' in exact integer arithmetic.
i64 evaluate(const IntSymForm& form, std::span<const i64> y, std::span<const i64> yp);

/// |det gram| = 1; n = 0 counts as unimodular (empty product).
bool is_unimodular(const IntSymForm& form);

Int determinant(const IntSymForm& form);

/// Positive minus negative inertia index, computed by symmetric congruence
/// diagonalization over exact rationals. Throws std::domain_error if the
/// form is degenerate.
int signature(const IntSymForm& form);

}  // namespace emc::forms

#endif
