#include "emc/homotopy.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace emc::freelie {

// Hard-coded table of pi_m(S^n) in the range 2 <= n <= m <= 7, taken from
// the standard compilations (Toda, "Composition Methods in Homotopy Groups
// of Spheres"). Entries below the suspension range follow the Hopf
// isomorphisms pi_m(S^2) = pi_m(S^3) for m >= 3 and
// pi_7(S^4) = pi_6(S^3) + pi_7(S^7).
const PiEntry& sphere_pi(int m, int n) {
    static const std::map<std::pair<int, int>, PiEntry> table = {
        {{2, 2}, {1, {}}},
        {{3, 2}, {1, {}}},   {{3, 3}, {1, {}}},
        {{4, 2}, {0, {2}}},  {{4, 3}, {0, {2}}},  {{4, 4}, {1, {}}},
        {{5, 2}, {0, {2}}},  {{5, 3}, {0, {2}}},  {{5, 4}, {0, {2}}},
        {{5, 5}, {1, {}}},
        {{6, 2}, {0, {12}}}, {{6, 3}, {0, {12}}}, {{6, 4}, {0, {2}}},
        {{6, 5}, {0, {2}}},  {{6, 6}, {1, {}}},
        {{7, 2}, {0, {2}}},  {{7, 3}, {0, {2}}},  {{7, 4}, {1, {12}}},
        {{7, 5}, {0, {2}}},  {{7, 6}, {0, {2}}},  {{7, 7}, {1, {}}},
    };
    auto it = table.find({m, n});
    if (it == table.end())
        throw std::out_of_range("sphere_pi: outside the tabulated range 2 <= n <= m <= 7");
    return it->second;
}

}  // namespace emc::freelie
