#ifndef EMC_NUMERIC_HPP
#define EMC_NUMERIC_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace emc {

using i64 = std::int64_t;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense row-major integer matrix. Rows may be empty (0 columns).
using IntMatrix = std::vector<std::vector<i64>>;

bool is_square(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination. det of the
/// empty 0x0 matrix is 1.
Int det_bareiss(const IntMatrix& m);

/// Rank of an integer matrix, exact. Elimination with min-|pivot|
/// selection and Euclidean row reduction; runs in machine integers with
/// overflow checks and falls back to arbitrary precision if they trip.
int rank_integer(const IntMatrix& m);

/// Inverse of a matrix with det = +-1. Throws std::invalid_argument
/// otherwise. The inverse of a unimodular integer matrix is integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Moebius function; n >= 1.
int mobius(i64 n);

}  // namespace emc

#endif
