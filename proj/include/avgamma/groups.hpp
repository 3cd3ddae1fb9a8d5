#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "avgamma/matrix.hpp"
#include "avgamma/rational.hpp"

namespace avgamma {

enum class GroupFamily { Sp, GSp, SL };

// Matrix group over a finite coefficient ring.  For Sp/GSp the matrices are
// 2g x 2g and preserve the standard symplectic form up to a multiplier; for
// SL they are g x g with determinant one.
struct GroupSpec {
  GroupFamily family;
  int g;
  Ring ring;

  GroupSpec(GroupFamily family_, int g_, const Ring& ring_);
  int matrix_size() const { return family == GroupFamily::SL ? g : 2 * g; }
};

const char* family_name(GroupFamily family);

// Similitude factor c with M^T J M = c J.  The candidate is read off from a
// single entry and then the full identity is checked; throws NotSimilitude
// when the identity fails.  The returned multiplier need not be a unit.
Elt multiplier(const Matrix& m, int g);

bool is_in_group(const Matrix& m, const GroupSpec& spec);

// |Sp_{2g}(F_q)| = q^{g^2} prod_{i=1}^{g} (q^{2i} - 1); guarded to g <= 3,
// q <= 9 which is the range cross-checked against explicit enumeration.
BigInt sp_order(int g, long long q);

// |SL_m(F_q)| = q^{m(m-1)/2} prod_{i=2}^{m} (q^i - 1).
BigInt sl_order(int m, long long q);

// Cardinality of the group described by `spec` (formula, no enumeration).
BigInt group_order(const GroupSpec& spec);

// Parabolic-type congruence condition P_{r,s}: elements fixing the first r
// basis vectors of the isotropic block and the first s of the dual block.
struct PrsSpec {
  int r;
  int s;
  int g;
  PrsSpec(int r_, int s_, int g_);
};

// Codimension of P_{r,s} in Sp_{2g}: 2sg + 2rg - rs - r(r-1)/2 - s(s-1)/2.
long long prs_codim(const PrsSpec& p);

bool prs_membership(const Matrix& m, const PrsSpec& p);

// Visits every element in lexicographic order of the row-major entry tuple.
void for_each_element(const GroupSpec& spec,
                      const std::function<void(const Matrix&)>& fn);

// Materialized enumeration; throws TooLarge when the order exceeds 10^7.
std::vector<Matrix> enumerate_group(const GroupSpec& spec);

struct ChainConstraint {
  PrsSpec subgroup;
  int level;  // congruence modulus exponent
};

// Nested congruence conditions: ascending levels m_1 < ... < m_t with
// weakly shrinking subgroups (r and s weakly decreasing).  The ambient group
// is Sp_{2g} over Z/ell^{m_t}.
struct CongruenceChain {
  GroupSpec ambient;
  std::vector<ChainConstraint> constraints;
  CongruenceChain(GroupSpec ambient_, std::vector<ChainConstraint> constraints_);
};

struct IndexResult {
  BigInt index;             // [ambient : subgroup], exact
  long long predicted_exponent;  // sum of codim_i * (m_i - m_{i-1})
};

// Counts the subgroup by filtering the full ambient enumeration.
IndexResult congruence_index(const CongruenceChain& chain);

struct D0Factorization {
  Elt alpha;  // unit multiplier
  Matrix s;   // symplectic part, m = diag(I, alpha * I) * s
};

// Splits a similitude into a diagonal multiplier block and a symplectic
// matrix.  Throws NonUnitMultiplier when the multiplier is not invertible.
D0Factorization d0_factorize(const Matrix& m, int g);

struct LiftResult {
  bool generates_full;
  bool lemma_applies;
  BigInt closure_size;
  BigInt full_order;
};

// Lifts mod-ell generators entrywise, repairs them into the group over
// Z/ell^n (det scaling for SL, a quadratic correction step for Sp), then
// closes under multiplication breadth-first.  generates_full reports whether
// the closure is the whole group; lemma_applies reports whether the
// hypotheses of the lifting criterion hold (ell >= 5 and the generators
// already fill the group mod ell).
LiftResult lift_check(const GroupSpec& spec, const std::vector<Matrix>& generators);

// Canonical in-group lift of a single mod-ell group element to Z/ell^n.
Matrix canonical_group_lift(const Matrix& m, const GroupSpec& target);

}  // namespace avgamma
