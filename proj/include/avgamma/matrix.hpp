#pragma once

#include <initializer_list>
#include <vector>

#include "avgamma/ring.hpp"

namespace avgamma {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  Matrix(Ring ring, std::initializer_list<std::initializer_list<long long>> data);

  static Matrix identity(Ring ring, int n);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Elt at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Elt> row(int i) const;
  void set_row(int i, const std::vector<Elt>& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(Elt c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string str() const;

 private:
  Ring ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elt> a_;
};

// Exact determinant: cofactor expansion for dim <= 4, fraction-free
// elimination on integer lifts above (reduced back into the ring at the end).
Elt det(const Matrix& m);

// Inverse over Z/ell^n or F_q via unit-pivot Gauss-Jordan; throws
// NonInvertible when the determinant is not a unit.
Matrix mat_inverse(const Matrix& m);

struct HowellResult {
  Matrix h;  // canonical form, same column count as the input
  Matrix u;  // invertible, u * m_padded == h
};

// Canonical row-span form over Z/ell^n.  Pivots are powers of ell, each pivot
// column owns exactly one row, rows are ordered by pivot column, entries above
// a pivot are reduced modulo that pivot, and the span is closed in the Howell
// sense (every span element with leading zeros is reachable from the rows with
// later pivots).  The form is unique for a given row span, so equality of
// spans is equality of forms.
//
// If the canonical basis needs more rows than the input has (possible only
// when rows < cols), the returned matrices grow: h is the form of the input
// padded with zero rows, and u (square, of h's row count) satisfies
// u * padded(m) == h.  Otherwise h has exactly the input's shape.
HowellResult howell_form(const Matrix& m);

struct SmithResult {
  // Diagonal valuations v_1 <= v_2 <= ... (entries ell^{v_i}), one per
  // diagonal position with v_i < n; positions whose diagonal vanished mod
  // ell^n are dropped.
  std::vector<int> valuations;
  // Rows of Q^{-1} matching the kept diagonal positions: the row span of the
  // input equals the direct sum of the cyclic groups generated by
  // ell^{v_i} * basis_row_i, and each basis_row_i is a primitive vector.
  Matrix basis_rows;
};

// Diagonalisation over Z/ell^n by invertible row and column operations.
SmithResult smith_form(const Matrix& m);

// Row-span membership against a Howell form (h must come from howell_form).
bool in_row_span(const Matrix& h, const std::vector<Elt>& x);

}  // namespace avgamma
