#ifndef QHS_LINALG_HPP
#define QHS_LINALG_HPP

#include <vector>

#include "qhs/pi_scalar.hpp"

namespace qhs {

/// Exact rank of a matrix over Q via Gaussian elimination on mpq entries.
int rank_rational(std::vector<std::vector<Rat>> m);

/// Exact rank over the rational function field Q(q), computed fraction-free
/// (Bareiss) on Laurent-polynomial entries.
int rank_laurent(std::vector<std::vector<Laurent>> m);

/// Rank of a RationalScalar matrix at a pi-specialization: clears
/// denominators row by row and runs the fraction-free elimination.
int rank_rational_scalar(const std::vector<std::vector<RationalScalar>>& m, int pi_sign);

}  // namespace qhs

#endif
