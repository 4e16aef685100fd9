#pragma once

#include <cstddef>

#include "sympair/matrix.hpp"
#include "sympair/poly.hpp"
#include "sympair/rational.hpp"

namespace sympair {

/// Determinant by Bareiss fraction-free elimination. Rows are first
/// scaled to integers; the scale factors are divided out at the end.
Rational det(const RMatrix& a);

/// Rank over Q by fraction-free row echelon.
std::size_t rank(const RMatrix& a);

/// det(tI - a) by Faddeev-LeVerrier. Monic of degree a.rows().
RPoly charpoly(const RMatrix& a);

/// Pfaffian of an even-size skew-symmetric matrix, normalized so that
/// pfaffian([[0, I], [-I, 0]]) == 1. Uses the skew analogue of Bareiss
/// elimination: after step s every remaining entry is the Pfaffian of a
/// (2s+2)-principal submatrix, so the division by the previous pivot is exact.
Rational pfaffian(const RMatrix& a);

/// Gauss-Jordan inverse over Q. Throws SingularMatrixError.
RMatrix inverse(const RMatrix& a);

/// [[0, I_n], [-I_n, 0]]
RMatrix standard_symplectic(std::size_t n);

}  // namespace sympair
