#include <doctest.h>

#include "avgamma/lie.hpp"

using namespace avgamma;

TEST_CASE("algebra specs and membership") {
  LieAlgebraSpec sl2(LieFamily::sl, 2, 5);
  CHECK(sl2.matrix_size() == 2);
  CHECK(sl2.dimension() == 3);
  LieAlgebraSpec sp2(LieFamily::sp, 2, 3);
  CHECK(sp2.matrix_size() == 4);
  CHECK(sp2.dimension() == 10);
  LieAlgebraSpec so3(LieFamily::so, 3, 5);
  CHECK(so3.matrix_size() == 3);
  CHECK(so3.dimension() == 3);

  CHECK_THROWS_AS(LieAlgebraSpec(LieFamily::sl, 1, 5), DimensionMismatch);
  CHECK_THROWS_AS(LieAlgebraSpec(LieFamily::sp, 0, 5), DimensionMismatch);
  CHECK_THROWS_AS(LieAlgebraSpec(LieFamily::so, 3, 2), UnsupportedSize);

  Ring F5 = Ring::zmod(5, 1);
  CHECK(in_algebra(Matrix(F5, {{1, 2}, {3, 4}}), sl2));
  CHECK(!in_algebra(Matrix(F5, {{1, 2}, {3, 1}}), sl2));
  CHECK(in_algebra(Matrix(F5, {{0, 1, 0}, {4, 0, 0}, {0, 0, 0}}), so3));
  CHECK(!in_algebra(Matrix(F5, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), so3));

  Ring F3 = Ring::zmod(3, 1);
  // sp_2: [[A, B], [C, -A^T]] with B, C symmetric.
  Matrix good(F3, {{1, 2, 0, 1}, {0, 1, 1, 2}, {2, 0, 2, 0}, {0, 2, 1, 2}});
  CHECK(in_algebra(good, sp2));
  Matrix bad = good;
  bad.at(0, 3) = 2;  // breaks the symmetry of B
  CHECK(!in_algebra(bad, sp2));
}

TEST_CASE("algebra basis spans the algebra") {
  for (const LieAlgebraSpec& spec :
       {LieAlgebraSpec(LieFamily::sl, 2, 5), LieAlgebraSpec(LieFamily::sl, 3, 3),
        LieAlgebraSpec(LieFamily::sp, 1, 5), LieAlgebraSpec(LieFamily::sp, 2, 3),
        LieAlgebraSpec(LieFamily::so, 3, 5), LieAlgebraSpec(LieFamily::so, 4, 3)}) {
    std::vector<Matrix> basis = algebra_basis(spec);
    CHECK(basis.size() == static_cast<size_t>(spec.dimension()));
    for (const Matrix& b : basis) {
      CHECK(in_algebra(b, spec));
      CHECK(!b.is_zero());
    }
  }
}

TEST_CASE("square-zero span dimensions") {
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 2, 3)) == 3);
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 2, 5)) == 3);
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 3, 5)) == 8);
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 1, 5)) == 3);
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 2, 3)) == 10);
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::so, 3, 3)) == 0);
  CHECK(cn_span_dimension(LieAlgebraSpec(LieFamily::so, 3, 5)) == 0);
  CHECK_THROWS_AS(cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 2, 7)), TooLarge);
  CHECK_THROWS_AS(cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 4, 3)), TooLarge);
}

TEST_CASE("square-zero decomposition of a traceless 2x2 matrix") {
  Ring F5 = Ring::zmod(5, 1);
  LieAlgebraSpec sl2(LieFamily::sl, 2, 5);
  Matrix x(F5, {{1, 1}, {0, 4}});
  std::vector<Matrix> terms = square_zero_decompose(x, sl2);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0] == Matrix(F5, {{1, 1}, {4, 4}}));
  CHECK(terms[1] == Matrix(F5, {{0, 0}, {0, 0}}));
  CHECK(terms[2] == Matrix(F5, {{0, 0}, {1, 0}}));

  Matrix sum(F5, 2, 2);
  for (const Matrix& t : terms) {
    sum = sum + t;
    CHECK((t * t).is_zero());
    CHECK(in_algebra(t, sl2));
  }
  CHECK(sum == x);

  CHECK(square_zero_decompose(Matrix(F5, 2, 2), sl2).empty());
  CHECK_THROWS_AS(square_zero_decompose(Matrix(F5, {{1, 0}, {0, 1}}), sl2), NotInAlgebra);
  CHECK_THROWS_AS(square_zero_decompose(Matrix(F5, {{0, 1, 0}, {4, 0, 0}, {0, 0, 0}}),
                                        LieAlgebraSpec(LieFamily::so, 3, 5)),
                  UnsupportedSize);
}

TEST_CASE("square-zero decomposition in higher rank") {
  Ring F5 = Ring::zmod(5, 1);
  LieAlgebraSpec sl3(LieFamily::sl, 3, 5);
  Matrix x(F5, {{2, 1, 0}, {4, 1, 3}, {0, 2, 2}});
  for (const Matrix& t : square_zero_decompose(x, sl3)) {
    CHECK((t * t).is_zero());
    CHECK(in_algebra(t, sl3));
    CHECK(!t.is_zero());
  }
  Matrix sum(F5, 3, 3);
  for (const Matrix& t : square_zero_decompose(x, sl3)) sum = sum + t;
  CHECK(sum == x);

  Ring F3 = Ring::zmod(3, 1);
  LieAlgebraSpec sp2(LieFamily::sp, 2, 3);
  Matrix y(F3, {{1, 2, 0, 1}, {0, 1, 1, 2}, {2, 0, 2, 0}, {0, 2, 1, 2}});
  REQUIRE(in_algebra(y, sp2));
  Matrix ysum(F3, 4, 4);
  for (const Matrix& t : square_zero_decompose(y, sp2)) {
    CHECK((t * t).is_zero());
    CHECK(in_algebra(t, sp2));
    ysum = ysum + t;
  }
  CHECK(ysum == y);
}
