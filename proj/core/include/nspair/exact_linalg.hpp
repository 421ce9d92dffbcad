#pragma once

#include <cstddef>
#include <vector>

#include "nspair/int_matrix.hpp"
#include "nspair/numeric.hpp"

namespace nspair {

// Invariant factors d_1 | d_2 | ... of an integer matrix, padded with zeros
// to length min(rows, cols). `rank` counts the nonzero factors. Under the
// convention that columns are the images of the domain generators, the
// cokernel of the map is  (+)_i Z/d_i  (+)  Z^(rows - rank).
struct SmithNormalForm {
  std::vector<Int> invariant_factors;
  std::size_t rank = 0;

  bool operator==(const SmithNormalForm&) const = default;
};

// Eigenvalue sign counts of a symmetric matrix, with multiplicity.
struct ExactSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long long index() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }

  bool operator==(const ExactSignature&) const = default;
};

// Fraction-free (Bareiss) determinant. The 0x0 determinant is 1.
// Throws DimensionError on non-square input.
Int determinant(const IntMatrix& m);

// Exact determinant of a rational matrix (clears denominators, then Bareiss).
Rat determinant(const RatMatrix& m);

// Pfaffian of a skew-symmetric integer matrix via fraction-free elimination
// on row/column pairs. Throws StructureError if the matrix is not
// skew-symmetric with zero diagonal or has odd size.
Int pfaffian(const IntMatrix& m);

// Smith normal form over Z. Pivoting picks the entry of smallest nonzero
// absolute value, breaking ties leftmost-uppermost, so the elimination is
// deterministic.
SmithNormalForm smith_normal_form(const IntMatrix& m);

// Exact characteristic polynomial det(xI - m), returned as coefficients
// c[0] + c[1] x + ... + c[n] x^n (c[n] = 1). Faddeev-LeVerrier; all
// divisions are exact.
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

// Eigenvalue signs of a symmetric rational matrix, computed exactly by
// Descartes' rule of signs on the characteristic polynomial (exact for
// symmetric matrices because every root is real). Throws StructureError on
// non-symmetric input.
ExactSignature exact_signature(const RatMatrix& m);
ExactSignature exact_signature(const IntMatrix& m);

}  // namespace nspair
