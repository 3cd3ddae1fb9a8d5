#include <doctest.h>

#include <set>

#include "avgamma/symplectic.hpp"

using namespace avgamma;

TEST_CASE("pairing follows the standard alternating form") {
  SymplecticSpace S(2, Ring::zmod(5, 1));
  auto e = [&](int i) {
    Vec v(4, 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  CHECK(S.pairing(e(0), e(2)) == 1);
  CHECK(S.pairing(e(2), e(0)) == 4);
  CHECK(S.pairing(e(1), e(3)) == 1);
  CHECK(S.pairing(e(0), e(1)) == 0);
  CHECK(S.pairing(e(0), e(3)) == 0);
  CHECK(S.pairing(e(0), e(0)) == 0);

  Matrix j = S.j_matrix();
  CHECK(j.at(0, 2) == 1);
  CHECK(j.at(2, 0) == 4);
  CHECK(j.at(0, 1) == 0);

  CHECK(S.is_primitive({1, 0, 5, 0}));
  CHECK(S.is_primitive({0, 0, 0, 2}));
  SymplecticSpace S9(1, Ring::zmod(3, 2));
  CHECK(!S9.is_primitive({3, 6}));
}

TEST_CASE("torsion subgroup canonical data") {
  SymplecticSpace S(1, Ring::zmod(3, 2));
  TorsionSubgroup H(S, {{1, 0}, {0, 3}});
  CHECK(H.cardinality() == 27);
  CHECK(H.contains({4, 3}));
  CHECK(H.contains({0, 6}));
  CHECK(!H.contains({0, 1}));

  // Same subgroup from shuffled, redundant generators.
  TorsionSubgroup H2(S, {{0, 3}, {1, 3}, {2, 6}});
  CHECK(H == H2);
  CHECK(H.canonical_basis() == H2.canonical_basis());

  CHECK(H.snf().orders == std::vector<int>({2, 1}));
  CHECK(group_structure(H) == GroupStructure{{2, 1}});

  // Element listing agrees with membership.
  std::vector<Vec> listing = H.elements();
  CHECK(listing.size() == 27);
  std::set<Vec> elems(listing.begin(), listing.end());
  CHECK(elems.size() == 27);
  for (Elt a = 0; a < 9; ++a)
    for (Elt b = 0; b < 9; ++b) CHECK(H.contains({a, b}) == (elems.count({a, b}) > 0));
}

TEST_CASE("pairing invariants at matched levels") {
  SymplecticSpace S(1, Ring::zmod(3, 2));

  TorsionSubgroup full(S, {{1, 0}, {0, 1}});
  CHECK(m1_invariant(full) == 2);
  CHECK(m_invariant(full) == 2);
  CHECK(!is_totally_isotropic(full));

  TorsionSubgroup line(S, {{1, 0}});
  CHECK(m1_invariant(line) == 0);
  CHECK(m_invariant(line) == 0);
  CHECK(is_totally_isotropic(line));

  // Scaled full frame: naive pairings vanish mod 9, but at the level of the
  // common order ell the pairing is a unit, so the invariants see it.
  TorsionSubgroup scaled(S, {{3, 0}, {0, 3}});
  CHECK(m1_invariant(scaled) == 1);
  CHECK(m_invariant(scaled) == 1);
  CHECK(!is_totally_isotropic(scaled));

  TorsionSubgroup mixed(S, {{1, 0}, {0, 3}});
  CHECK(m1_invariant(mixed) == 1);
  CHECK(m_invariant(mixed) == 1);
  CHECK(scaled_isotropy_check(mixed));

  // Pairing of valuation strictly between zero and the common order
  // separates the two invariants; this needs rank two, where a saturated
  // plane can have all its primitive pairings at valuation one.
  SymplecticSpace S2(2, Ring::zmod(3, 2));
  TorsionSubgroup skew(S2, {{1, 0, 0, 0}, {0, 1, 3, 0}});
  CHECK(m1_invariant(skew) == 1);
  CHECK(m_invariant(skew) == 0);
  CHECK(!is_totally_isotropic(skew));
  CHECK(scaled_isotropy_check(skew));

  TorsionSubgroup plane(S2, {{1, 0, 0, 0}, {0, 3, 0, 0}});
  CHECK(is_totally_isotropic(plane));
  CHECK(m1_invariant(plane) == 0);
}

TEST_CASE("symplectic basis completion") {
  SymplecticSpace S(2, Ring::zmod(5, 1));
  Vec e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, f1{0, 0, 1, 0};

  std::vector<Vec> basis = complete_symplectic_basis(S, {e1, e2});
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == e1);
  CHECK(basis[1] == e2);
  Matrix j = S.j_matrix();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      CHECK(S.pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(k)]) ==
            j.at(i, k));

  CHECK_THROWS_AS(complete_symplectic_basis(S, {e1, f1}), NotIsotropic);
  SymplecticSpace S9(1, Ring::zmod(3, 2));
  CHECK_THROWS_AS(complete_symplectic_basis(S9, {Vec{3, 0}}), NotPrimitive);
  // Dependent reductions mod ell are rejected too.
  CHECK_THROWS_AS(complete_symplectic_basis(S, {e1, Vec{1, 0, 0, 0}}), NotPrimitive);
}

TEST_CASE("isotropic hull of scaled frames") {
  SymplecticSpace S(1, Ring::zmod(3, 2));

  TorsionSubgroup line(S, {{3, 0}});
  HullResult hull = isotropic_hull(line);
  CHECK(hull.closure == line);
  REQUIRE(hull.lift_basis.size() == 1);
  CHECK(TorsionSubgroup(S, hull.lift_basis) == line);

  TorsionSubgroup prim(S, {{1, 3}});
  HullResult hull2 = isotropic_hull(prim);
  CHECK(hull2.closure == prim);

  // A totally isotropic subgroup whose natural frame is not orthogonal: the
  // hull must still express it by pairwise-orthogonal scaled vectors.
  SymplecticSpace S2(2, Ring::zmod(3, 2));
  TorsionSubgroup H(S2, {{1, 0, 0, 3}, {0, 3, 0, 0}});
  REQUIRE(is_totally_isotropic(H));
  HullResult hull3 = isotropic_hull(H);
  CHECK(is_totally_isotropic(hull3.closure));
  for (const Vec& g : H.generators()) CHECK(hull3.closure.contains(g));
  CHECK(hull3.closure.snf().orders.front() == H.snf().orders.front());
  TorsionSubgroup rebuilt(S2, hull3.lift_basis);
  CHECK(rebuilt == hull3.closure);
}
