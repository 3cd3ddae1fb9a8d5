#pragma once

#include <vector>

#include "avgamma/matrix.hpp"

namespace avgamma {

enum class LieFamily { sl, sp, so };

// Matrix Lie algebra over a prime field F_ell: sl_m (trace zero), sp_{2m}
// (JX symmetric), so_m (antisymmetric, odd characteristic only).
struct LieAlgebraSpec {
  LieFamily family;
  int m;
  Ring field;

  LieAlgebraSpec(LieFamily family_, int m_, long long ell);
  int matrix_size() const { return family == LieFamily::sp ? 2 * m : m; }
  long long dimension() const;
};

const char* lie_family_name(LieFamily family);

bool in_algebra(const Matrix& x, const LieAlgebraSpec& spec);

// Deterministic ordered basis of the algebra.
std::vector<Matrix> algebra_basis(const LieAlgebraSpec& spec);

// Dimension of the span of {X in the algebra : X^2 = 0}, by exhaustive
// enumeration.  Equals dimension() exactly when every element is a sum of
// square-zero matrices.  Guard: ell^dimension <= 10^7.
long long cn_span_dimension(const LieAlgebraSpec& spec);

// Writes X as a sum of square-zero members of the algebra (sl and sp
// families).  For sl_2 this is the literal three-term identity, zero terms
// included; larger algebras split off single-entry and 2x2 pieces and drop
// vanishing terms.  X = 0 yields the empty sequence.
std::vector<Matrix> square_zero_decompose(const Matrix& x, const LieAlgebraSpec& spec);

}  // namespace avgamma
