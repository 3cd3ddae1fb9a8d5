#include <doctest.h>

#include <algorithm>

#include "avgamma/groups.hpp"

using namespace avgamma;

TEST_CASE("similitude multiplier") {
  Ring F5 = Ring::zmod(5, 1);
  Matrix d(F5, {{2, 0}, {0, 1}});
  CHECK(multiplier(d, 1) == 2);
  CHECK(multiplier(Matrix::identity(F5, 2), 1) == 1);
  Matrix t(F5, {{1, 1}, {0, 1}});
  CHECK(multiplier(t, 1) == 1);

  // g = 2: unequal diagonal blocks break the similitude pattern.
  Matrix bad(F5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}});
  CHECK_THROWS_AS(multiplier(bad, 2), NotSimilitude);
  Matrix good(F5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}});
  CHECK(multiplier(good, 2) == 3);

  CHECK_THROWS_AS(multiplier(Matrix::identity(F5, 3), 1), DimensionMismatch);
}

TEST_CASE("group membership") {
  Ring F5 = Ring::zmod(5, 1);
  Matrix d(F5, {{2, 0}, {0, 1}});
  CHECK(!is_in_group(d, GroupSpec(GroupFamily::Sp, 1, F5)));
  CHECK(is_in_group(d, GroupSpec(GroupFamily::GSp, 1, F5)));
  CHECK(!is_in_group(d, GroupSpec(GroupFamily::SL, 2, F5)));

  Matrix t(F5, {{1, 1}, {0, 1}});
  CHECK(is_in_group(t, GroupSpec(GroupFamily::Sp, 1, F5)));
  CHECK(is_in_group(t, GroupSpec(GroupFamily::SL, 2, F5)));

  CHECK_THROWS_AS(is_in_group(Matrix::identity(F5, 4), GroupSpec(GroupFamily::Sp, 1, F5)),
                  DimensionMismatch);
  CHECK_THROWS_AS(is_in_group(Matrix::identity(Ring::zmod(3, 1), 2),
                              GroupSpec(GroupFamily::Sp, 1, F5)),
                  DimensionMismatch);

  // Non-unit multiplier: not a similitude over Z/9.
  Ring R9 = Ring::zmod(3, 2);
  Matrix nu(R9, {{1, 0}, {0, 3}});
  CHECK(!is_in_group(nu, GroupSpec(GroupFamily::GSp, 1, R9)));
}

TEST_CASE("classical group orders") {
  CHECK(sp_order(1, 2) == 6);
  CHECK(sp_order(1, 3) == 24);
  CHECK(sp_order(1, 4) == 60);
  CHECK(sp_order(1, 5) == 120);
  CHECK(sp_order(1, 7) == 336);
  CHECK(sp_order(1, 9) == 720);
  CHECK(sp_order(2, 2) == 720);
  CHECK(sp_order(2, 3) == 51840);
  CHECK(sp_order(3, 2) == 1451520);
  CHECK_THROWS_AS(sp_order(4, 3), UnsupportedSize);
  CHECK_THROWS_AS(sp_order(0, 3), UnsupportedSize);
  CHECK_THROWS_AS(sp_order(1, 6), UnsupportedSize);
  CHECK_THROWS_AS(sp_order(1, 11), UnsupportedSize);

  CHECK(sl_order(2, 2) == 6);
  CHECK(sl_order(2, 3) == 24);
  CHECK(sl_order(2, 4) == 60);
  CHECK(sl_order(2, 5) == 120);
  CHECK(sl_order(3, 2) == 168);
  CHECK(sl_order(3, 3) == 5616);
  CHECK(sl_order(4, 2) == 20160);
  CHECK_THROWS_AS(sl_order(1, 3), UnsupportedSize);
  CHECK_THROWS_AS(sl_order(5, 3), UnsupportedSize);
  CHECK_THROWS_AS(sl_order(2, 11), UnsupportedSize);

  CHECK(group_order(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 1))) == 24);
  CHECK(group_order(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 2))) == 648);
  CHECK(group_order(GroupSpec(GroupFamily::GSp, 1, Ring::zmod(3, 1))) == 48);
  CHECK(group_order(GroupSpec(GroupFamily::GSp, 1, Ring::zmod(3, 2))) == 3888);
  CHECK(group_order(GroupSpec(GroupFamily::SL, 2, Ring::zmod(2, 2))) == 48);
  CHECK(group_order(GroupSpec(GroupFamily::SL, 2, Ring::zmod(2, 3))) == 384);
  CHECK(group_order(GroupSpec(GroupFamily::Sp, 1, Ring::gf(2, 2))) == 60);
  CHECK(group_order(GroupSpec(GroupFamily::SL, 2, Ring::gf(3, 2))) == 720);
}

TEST_CASE("group enumeration is lexicographic and complete") {
  std::vector<Matrix> sp2f2 = enumerate_group(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(2, 1)));
  REQUIRE(sp2f2.size() == 6);
  CHECK(sp2f2.front() == Matrix(Ring::zmod(2, 1), {{0, 1}, {1, 0}}));
  CHECK(sp2f2.back() == Matrix(Ring::zmod(2, 1), {{1, 1}, {1, 0}}));

  auto code_tuple = [](const Matrix& m) {
    std::vector<Elt> v;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  };
  for (size_t i = 1; i < sp2f2.size(); ++i)
    CHECK(code_tuple(sp2f2[i - 1]) < code_tuple(sp2f2[i]));

  CHECK(enumerate_group(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 1))).size() == 24);
  CHECK(enumerate_group(GroupSpec(GroupFamily::SL, 2, Ring::zmod(2, 2))).size() == 48);
  CHECK(enumerate_group(GroupSpec(GroupFamily::Sp, 2, Ring::zmod(2, 1))).size() == 720);
  CHECK(enumerate_group(GroupSpec(GroupFamily::GSp, 1, Ring::zmod(3, 1))).size() == 48);

  // Every reported element really is a member.
  for (const Matrix& m : enumerate_group(GroupSpec(GroupFamily::GSp, 1, Ring::zmod(3, 1))))
    CHECK(is_in_group(m, GroupSpec(GroupFamily::GSp, 1, Ring::zmod(3, 1))));

  CHECK_THROWS_AS(enumerate_group(GroupSpec(GroupFamily::Sp, 2, Ring::zmod(3, 2))), TooLarge);
}

TEST_CASE("stabilizer codimension and membership") {
  CHECK(prs_codim(PrsSpec(1, 0, 1)) == 2);
  CHECK(prs_codim(PrsSpec(1, 0, 2)) == 4);
  CHECK(prs_codim(PrsSpec(1, 1, 1)) == 3);
  CHECK(prs_codim(PrsSpec(2, 2, 2)) == 10);
  CHECK(prs_codim(PrsSpec(2, 1, 3)) == 15);
  CHECK(prs_codim(PrsSpec(0, 0, 4)) == 0);

  CHECK_THROWS_AS(PrsSpec(0, 1, 1), InvariantViolation);
  CHECK_THROWS_AS(PrsSpec(2, 0, 1), InvariantViolation);
  CHECK_THROWS_AS(PrsSpec(1, 0, 0), InvariantViolation);

  Ring F3 = Ring::zmod(3, 1);
  Matrix upper(F3, {{1, 1}, {0, 1}});
  CHECK(prs_membership(upper, PrsSpec(1, 0, 1)));
  CHECK(!prs_membership(upper, PrsSpec(1, 1, 1)));
  CHECK(prs_membership(Matrix::identity(F3, 2), PrsSpec(1, 1, 1)));
  Matrix lower(F3, {{1, 0}, {1, 1}});
  CHECK(!prs_membership(lower, PrsSpec(1, 0, 1)));
  CHECK(prs_membership(lower, PrsSpec(0, 0, 1)));
}

TEST_CASE("congruence chain index") {
  // Stabilizing one primitive vector exactly, mod 3: index 24/3 = 8.
  CongruenceChain single(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 1)),
                         {{PrsSpec(1, 0, 1), 1}});
  IndexResult res1 = congruence_index(single);
  CHECK(res1.index == 8);
  CHECK(res1.predicted_exponent == 2);

  CongruenceChain two(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 2)),
                      {{PrsSpec(1, 1, 1), 1}, {PrsSpec(1, 0, 1), 2}});
  IndexResult res2 = congruence_index(two);
  CHECK(res2.index == 216);
  CHECK(res2.predicted_exponent == 5);

  CongruenceChain trivial(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(5, 1)),
                          {{PrsSpec(0, 0, 1), 1}});
  IndexResult res3 = congruence_index(trivial);
  CHECK(res3.index == 1);
  CHECK(res3.predicted_exponent == 0);

  // Constructor validation.
  CHECK_THROWS_AS(CongruenceChain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 2)), {}),
                  InvariantViolation);
  CHECK_THROWS_AS(CongruenceChain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 2)),
                                  {{PrsSpec(1, 0, 1), 2}, {PrsSpec(1, 0, 1), 1}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CongruenceChain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 2)),
                                  {{PrsSpec(1, 0, 1), 1}, {PrsSpec(1, 1, 1), 2}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CongruenceChain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 1)),
                                  {{PrsSpec(1, 0, 1), 2}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CongruenceChain(GroupSpec(GroupFamily::GSp, 1, Ring::zmod(3, 1)),
                                  {{PrsSpec(1, 0, 1), 1}}),
                  InvariantViolation);
  CHECK_THROWS_AS(CongruenceChain(GroupSpec(GroupFamily::Sp, 1, Ring::gf(3, 1)),
                                  {{PrsSpec(1, 0, 1), 1}}),
                  InvariantViolation);
}

TEST_CASE("similitude factorization") {
  Ring F5 = Ring::zmod(5, 1);
  D0Factorization f = d0_factorize(Matrix(F5, {{2, 0}, {0, 1}}), 1);
  CHECK(f.alpha == 2);
  CHECK(f.s == Matrix(F5, {{2, 0}, {0, 3}}));

  Ring R9 = Ring::zmod(3, 2);
  D0Factorization f2 = d0_factorize(Matrix(R9, {{1, 0}, {0, 2}}), 1);
  CHECK(f2.alpha == 2);
  CHECK(f2.s == Matrix::identity(R9, 2));

  CHECK_THROWS_AS(d0_factorize(Matrix(R9, {{1, 0}, {0, 3}}), 1), NonUnitMultiplier);
  Matrix bad(F5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}});
  CHECK_THROWS_AS(d0_factorize(bad, 2), NotSimilitude);
}

TEST_CASE("canonical in-group lifting") {
  // SL: the entrywise lift is repaired in the last row; the result reduces
  // back to the input and has determinant one.
  Ring F5 = Ring::zmod(5, 1);
  Ring R25 = Ring::zmod(5, 2);
  Matrix m(F5, {{2, 0}, {0, 3}});
  Matrix lifted = canonical_group_lift(m, GroupSpec(GroupFamily::SL, 2, R25));
  CHECK(is_in_group(lifted, GroupSpec(GroupFamily::SL, 2, R25)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(lifted.at(i, j) % 5 == m.at(i, j));

  Ring F7 = Ring::zmod(7, 1);
  Ring R49 = Ring::zmod(7, 2);
  Matrix s(F7, {{2, 3}, {3, 5}});  // det 10 - 9 = 1
  REQUIRE(is_in_group(s, GroupSpec(GroupFamily::Sp, 1, F7)));
  Matrix slift = canonical_group_lift(s, GroupSpec(GroupFamily::Sp, 1, R49));
  CHECK(is_in_group(slift, GroupSpec(GroupFamily::Sp, 1, R49)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(slift.at(i, j) % 7 == s.at(i, j));

  CHECK_THROWS_AS(canonical_group_lift(Matrix::identity(Ring::zmod(2, 1), 2),
                                       GroupSpec(GroupFamily::Sp, 1, Ring::zmod(2, 2))),
                  UnsupportedSize);
}

TEST_CASE("lift_check guards") {
  CHECK_THROWS_AS(lift_check(GroupSpec(GroupFamily::GSp, 1, Ring::zmod(5, 2)), {}),
                  UnsupportedSize);
  CHECK_THROWS_AS(lift_check(GroupSpec(GroupFamily::SL, 2, Ring::zmod(5, 4)), {}), TooLarge);
  // Generators must live in the mod-ell reduction of the target group.
  Ring F5 = Ring::zmod(5, 1);
  CHECK_THROWS_AS(lift_check(GroupSpec(GroupFamily::SL, 2, Ring::zmod(5, 2)),
                             {Matrix(F5, {{2, 0}, {0, 1}})}),
                  InvariantViolation);
}
