#pragma once

#include <utility>
#include <vector>

#include "avgamma/rational.hpp"
#include "avgamma/ring.hpp"

namespace avgamma {

enum class AlbertType { I, II };

// One isotypic factor of the variety: endomorphism data (type, totally real
// center degree e, relative dimension h) and the multiplicity it appears with.
struct IsotypicFactor {
  AlbertType type;
  long long e;
  long long h;
  long long multiplicity;

  IsotypicFactor(AlbertType type_, long long e_, long long h_, long long multiplicity_);
  long long d() const { return type == AlbertType::I ? 1 : 2; }
  long long dim_contribution() const { return multiplicity * d() * h * e; }
};

struct VarietyData {
  std::vector<IsotypicFactor> factors;
  explicit VarietyData(std::vector<IsotypicFactor> factors_);
};

// (ramification index, residue degree) of one place over ell.
using PlacePair = std::pair<long long, long long>;

// Per factor, the places of its center over the working prime; the products
// e(lambda) f(lambda) must sum to that factor's e.
struct SplittingProfile {
  std::vector<std::vector<PlacePair>> by_factor;
};

void validate_profile(const VarietyData& data, const SplittingProfile& profile);

// Every splitting shape of a degree-e center: all multisets of pairs
// (e(lambda) >= 1, f(lambda) >= 1) with sum of products e, in a fixed order.
std::vector<std::vector<PlacePair>> all_profiles(long long e);

// A choice of (r, s) with 0 <= s <= r <= h_i for every place-factor pair,
// shaped like the profile.
struct PsiAssignment {
  std::vector<std::vector<std::pair<long long, long long>>> rs;
};

struct GammaReport {
  BigRational gamma;
  std::vector<int> achieving_subset;  // 1-based factor indices, sorted
  std::vector<std::pair<std::vector<int>, BigRational>> table;  // by (size, lex)
  long long mt_dim;  // of the achieving subset
};

BigRational gamma_simple(AlbertType type, long long e, long long h);

// 1 + sum over the subset of e_i (2 h_i^2 + h_i); subset holds 1-based
// factor indices.
long long mt_dimension(const VarietyData& data, const std::vector<int>& subset);

// Exact maximization of 2 sum n_i d_i h_i e_i / mt_dimension over nonempty
// subsets of factors.  Ties prefer smaller subsets, then lexicographic.
GammaReport gamma_product(const VarietyData& data);

BigRational psi_value(const VarietyData& data, const SplittingProfile& profile,
                      const PsiAssignment& assign);

// Exhaustive maximum of psi_value over the whole (r, s) box; on ties the
// report keeps the assignment latest in odometer order, so a maximum attained
// everywhere reports r = s = h.
std::pair<BigRational, PsiAssignment> psi_bruteforce(const VarietyData& data,
                                                     const SplittingProfile& profile);

// One step of a stabilizer filtration: at congruence level `level`, the
// subgroup is pinned to P_{r,s}.
struct FilteredLevel {
  int level;
  int r;
  int s;
};

// Per place-factor pair, an ascending filtration chain: levels strictly
// increasing, (r, s) weakly decreasing, r + s strictly decreasing and >= 1.
// An empty chain means the pair contributes nothing.
struct FilteredSubgroupData {
  std::vector<std::vector<std::vector<FilteredLevel>>> chains;
};

// (card_exp, degree_exp): ell-exponents of the torsion-subgroup cardinality
// and of the predicted division-field degree for the filtration.
std::pair<BigInt, BigInt> filtered_exponents(const VarietyData& data,
                                             const SplittingProfile& profile,
                                             const FilteredSubgroupData& fs);

// Both sides of the ratio-maximization reduction: lhs maximizes
// (sum a.m)/(sum b.m) over per-row weakly decreasing integer vectors in
// [0, B] with every leading entry nonzero; rhs maximizes over per-row
// nonempty prefix sums.  The two agree.
std::pair<BigRational, BigRational> sup_equals_max_check(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b, int bound);

// The exceptional set: g with 2g = (2a)^k or 2g = binomial(2k, k) for some
// odd k >= 3.
bool sigma_contains(long long g);
std::vector<long long> sigma_members(long long max);

// Which of the three sufficient conditions the factor satisfies:
// 1 iff h odd or h = 2; 2 iff e = 1 and h avoids the exceptional set;
// 3 iff the caller-supplied toric-place flag is set.
std::vector<int> mt_hypothesis_check(const IsotypicFactor& factor, bool has_toric_place);

// c1^{omega(n)} * n^{2h} with omega counting distinct prime factors.
BigRational torsion_degree_lower_bound(long long n, long long h, const BigRational& c1);

// dim A = sum n_i d_i h_i e_i.
BigInt masser_bound(const VarietyData& data);

}  // namespace avgamma
