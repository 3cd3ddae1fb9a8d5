#pragma once

#include <optional>
#include <vector>

#include "avgamma/matrix.hpp"
#include "avgamma/rational.hpp"

namespace avgamma {

using Vec = std::vector<Elt>;

// The module (Z/ell^n)^{2h} carrying the standard alternating form
// J = [[0, I_h], [-I_h, 0]]; vectors pair as x^T J y.
struct SymplecticSpace {
  int h = 0;
  Ring ring;  // Z/ell^n

  SymplecticSpace(int h_, Ring ring_);

  int dim() const { return 2 * h; }
  Matrix j_matrix() const;
  Elt pairing(const Vec& x, const Vec& y) const;
  bool is_primitive(const Vec& x) const;  // some coordinate is a unit
};

// Cyclic decomposition data for a finite subgroup: orders ell^{m_1} >= ... and
// primitive rows q_i such that H is the direct sum of the cyclic groups
// generated by ell^{v_i} q_i with v_i = n - m_i.
struct SnfData {
  std::vector<int> orders;      // m_i, weakly decreasing
  std::vector<int> valuations;  // v_i = n - m_i, weakly increasing
  Matrix primitive_rows;        // one row per invariant factor
};

struct GroupStructure {
  std::vector<int> orders;  // ell-exponents, weakly decreasing
  bool operator==(const GroupStructure&) const = default;
};

class TorsionSubgroup {
 public:
  TorsionSubgroup(SymplecticSpace space, std::vector<Vec> generators);

  const SymplecticSpace& space() const { return space_; }
  const std::vector<Vec>& generators() const { return gens_; }

  // Canonical 2h x 2h Howell basis (zero rows at the bottom); equal subgroups
  // of the same space have identical canonical bases.
  const Matrix& canonical_basis() const;
  const SnfData& snf() const;

  bool contains(const Vec& x) const;
  bool operator==(const TorsionSubgroup& o) const;
  BigInt cardinality() const;

  // Full element listing for small groups (guarded); used by oracle tests.
  std::vector<Vec> elements(long long cap = 200000) const;

 private:
  SymplecticSpace space_;
  std::vector<Vec> gens_;
  mutable std::optional<Matrix> basis_;
  mutable std::optional<SnfData> snf_;
};

GroupStructure group_structure(const TorsionSubgroup& H);

// Largest k such that two elements of H of equal order pair, at the level of
// that common order, to a value of order ell^k.  Zero exactly when H is
// totally isotropic.
int m1_invariant(const TorsionSubgroup& H);

// Largest k such that two elements of order ell^k pair, at level k, to a value
// of full order ell^k.  Always <= m1_invariant.
int m_invariant(const TorsionSubgroup& H);

bool is_totally_isotropic(const TorsionSubgroup& H);

// Checks that ell^{m1(H)} * H is totally isotropic (a theorem; exposed as a
// property-test hook).
bool scaled_isotropy_check(const TorsionSubgroup& H);

// Extends pairwise-orthogonal primitive vectors with independent reductions
// mod ell to a full basis (b_1..b_2h) with Gram matrix exactly J and
// b_i = input_i for i <= r.  Throws NotPrimitive / NotIsotropic.
std::vector<Vec> complete_symplectic_basis(const SymplecticSpace& S,
                                           const std::vector<Vec>& isotropic_family);

struct HullResult {
  TorsionSubgroup closure;      // totally isotropic, contains H, same exponent
  std::vector<Vec> lift_basis;  // scaled primitive vectors ell^{v_i} u_i whose
                                // span is the closure; the underlying u_i are
                                // pairwise orthogonal and independent mod ell
};

// Smallest-exponent totally isotropic enlargement of a totally isotropic H,
// together with a basis exhibiting it as a scaled free module.
HullResult isotropic_hull(const TorsionSubgroup& H);

}  // namespace avgamma
