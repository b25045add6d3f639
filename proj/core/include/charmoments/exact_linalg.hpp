#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "charmoments/bigint.hpp"

namespace charmoments {

// Dense square or rectangular matrices with exact integer entries,
// row-major.  All rows must have equal length.
using Matrix = std::vector<std::vector<BigInt>>;

// Rank over the rationals, by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const Matrix& m);

// Determinant of a square matrix, exact.
BigInt determinant(const Matrix& m);

// Determinants of the leading principal k x k submatrices, k = 1..n.
std::vector<BigInt> leading_principal_minors(const Matrix& m);

// Outcome of an exact positive-semidefiniteness test of a symmetric
// rational matrix.  When the matrix is not PSD, witness_index is a row
// index at which a negative direction appeared; rank is the number of
// pivots completed.
struct PsdReport {
    bool psd = false;
    std::size_t rank = 0;
    std::optional<std::size_t> witness_index;
};

// Exact PSD test by symmetric rational elimination: a positive diagonal
// pivot eliminates its row and column; a negative diagonal entry refutes;
// if the whole diagonal of the remaining block is zero, the matrix is PSD
// iff that block is zero.
PsdReport is_positive_semidefinite(const std::vector<std::vector<BigRat>>& m);

} // namespace charmoments
