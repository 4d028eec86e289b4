#ifndef EMC_HOMOTOPY_HPP
#define EMC_HOMOTOPY_HPP

#include <vector>

namespace emc::freelie {

/// One group pi_m(S^n): free rank plus the orders of its cyclic torsion
/// factors.
struct PiEntry {
    int free_rank = 0;
    std::vector<int> torsion;
};

/// Lookup pi_m(S^n) for 2 <= n <= m <= 7. Throws std::out_of_range outside
/// that window.
const PiEntry& sphere_pi(int m, int n);

}  // namespace emc::freelie

#endif
