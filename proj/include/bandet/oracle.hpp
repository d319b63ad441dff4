#pragma once

// Brute-force determinants and permanents. These are the ground truth the
// closed forms are checked against, so none of them knows anything about
// band structure.

#include <cstddef>

#include "bandet/matrix.hpp"
#include "bandet/ring.hpp"

namespace bandet {

/// Largest orders the exponential oracles accept. Exceeding one is a
/// SizeLimitError, never a silent truncation.
struct Limits {
    std::size_t laplace = 12;
    std::size_t ryser_integer = 20;
    std::size_t ryser_polynomial = 14;
    std::size_t expansion = 9;
    std::size_t enumeration = 10;

    /// Defaults, overridden by BANDET_MAX_LAPLACE, BANDET_MAX_RYSER,
    /// BANDET_MAX_RYSER_POLY, BANDET_MAX_EXPANSION and BANDET_MAX_ENUMERATION
    /// when set to a positive integer.
    static Limits from_env();

    std::size_t ryser_for(RingElement::Kind kind) const noexcept {
        return kind == RingElement::Kind::integer ? ryser_integer : ryser_polynomial;
    }
};

/// Cofactor expansion along successive rows, memoized on the set of
/// surviving columns: O(2^n n) ring operations, any ring.
RingElement det_laplace(const DenseMatrix& m, std::size_t max_order = Limits{}.laplace);

/// Fraction-free (Bareiss) elimination with row pivoting. Integer matrices
/// only; every division is checked and a remainder raises
/// InexactDivisionError.
Integer det_bareiss(const DenseMatrix& m);

/// Ryser's inclusion-exclusion formula walked in Gray-code order so each
/// step updates the row sums by one column.
RingElement permanent_ryser(const DenseMatrix& m, std::size_t max_order);
RingElement permanent_ryser(const DenseMatrix& m);

/// Sum over all n! permutations of the entry products.
RingElement permanent_expansion(const DenseMatrix& m, std::size_t max_order = Limits{}.expansion);

}  // namespace bandet
