#ifndef TPS_EXACT_LINALG_HPP
#define TPS_EXACT_LINALG_HPP

#include "tps/multi_exponent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace tps {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Elementary divisors d_1 | d_2 | ... (nonnegative, min(rows,cols) of them)
/// of an integer matrix.
std::vector<Integer> smith_normal_form(const IntMatrix& m);

/// True iff the columns (equivalently rows) span a direct summand of the
/// ambient lattice of rank min(rows, cols): all elementary divisors are 1.
bool is_unimodular_basis(const std::vector<Integer>& divisors);

Integer determinant(const IntMatrix& m);

/// Exact solution of A x = b for A with full column rank.
/// Returns nullopt when the system is inconsistent. Throws
/// structural_violation when the columns are linearly dependent, since every
/// caller has already certified full rank.
std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a,
                                                            const std::vector<std::int64_t>& b);

/// Narrow a rational vector to nonnegative int64 entries; nullopt if any
/// entry is non-integral or negative.
std::optional<std::vector<std::int64_t>> as_nonnegative_integers(const std::vector<Rational>& x);

} // namespace tps

#endif
