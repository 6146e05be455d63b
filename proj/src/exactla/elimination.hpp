#pragma once

// Elimination kernels behind rank() and reduced_row_echelon().

#include <cstddef>
#include <cstdint>
#include <vector>

#include "incmat/matrix.hpp"

namespace incmat::detail {

/// Row-major codes after elimination; the first `pivots.size()` rows are
/// the nonzero echelon rows.
struct CodeEchelon {
    std::vector<std::uint32_t> codes;
    std::vector<std::size_t> pivots;
};

/// Gaussian elimination on finite-field codes. `reduce` clears entries
/// above pivots as well, and pivot rows are normalised to 1.
CodeEchelon eliminate_codes(const Field& field, std::vector<std::uint32_t> codes, std::size_t rows,
                            std::size_t cols, bool reduce);

/// Rank over GF(2) with rows packed 64 columns per word.
std::size_t rank_gf2_packed(const ExactMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination on the integer
/// matrix obtained by clearing each row's denominators.
std::size_t rank_fraction_free(const ExactMatrix& m);

/// Reduced echelon rows over Q: fraction-free forward pass, then a
/// rational back-substitution on the rank x cols echelon block.
struct RationalEchelon {
    std::vector<Rational> rows;  // pivots.size() x cols
    std::vector<std::size_t> pivots;
};
RationalEchelon rational_echelon(const ExactMatrix& m);

/// Textbook elimination using Ffe operations only.
std::size_t rank_generic(const ExactMatrix& m);

} // namespace incmat::detail
