#pragma once

#include "core/matrix.hpp"
#include "core/polynomial.hpp"
#include "core/rational.hpp"

#include <vector>

namespace jetinv {

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;
using RationalVector = std::vector<Rational>;

// Row echelon form obtained by fraction-free elimination on the
// denominator-cleared rows.  Rows are integral; pivots lists the pivot
// column of each nonzero row.
struct EchelonForm {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

EchelonForm bareiss_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space, each vector scaled to primitive integers.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Same kernel for tall matrices, computed through the Gram matrix m^T m,
// whose kernel over the rationals coincides with that of m.
std::vector<RationalVector> kernel_basis_tall(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

// Laplace expansion with memoization over column subsets; valid over any
// commutative ring and used for polynomial entries.
Polynomial determinant(const PolyMatrix& m);

// Inverse of a nonsingular matrix; throws InvalidInput when singular.
RationalMatrix inverse(const RationalMatrix& m);

// Whether the row spaces of a and b coincide.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix stack_rows(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

}  // namespace jetinv
