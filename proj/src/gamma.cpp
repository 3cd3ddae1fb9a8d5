#include "avgamma/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "avgamma/groups.hpp"

namespace avgamma {

namespace {

constexpr long long kBoxCap = 10000000;    // psi brute-force guard
constexpr long long kSigmaCap = 100000000; // sigma enumeration guard

long long checked_codim(long long r, long long s, long long h) {
  return prs_codim(PrsSpec(static_cast<int>(r), static_cast<int>(s), static_cast<int>(h)));
}

// All (r, s) with 0 <= s <= r <= h, ascending lexicographically.
std::vector<std::pair<long long, long long>> rs_box(long long h) {
  std::vector<std::pair<long long, long long>> box;
  for (long long r = 0; r <= h; ++r)
    for (long long s = 0; s <= r; ++s) box.emplace_back(r, s);
  return box;
}

void collect_profiles(long long remaining, PlacePair min_pair,
                      std::vector<PlacePair>& cur,
                      std::vector<std::vector<PlacePair>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (long long a = min_pair.first; a <= remaining; ++a) {
    long long bstart = a == min_pair.first ? min_pair.second : 1;
    for (long long b = bstart; a * b <= remaining; ++b) {
      cur.emplace_back(a, b);
      collect_profiles(remaining - a * b, {a, b}, cur, out);
      cur.pop_back();
    }
  }
}

// Weakly decreasing vectors in [0, bound]^len with a nonzero lead.
void collect_ordered(int len, long long bound, std::vector<long long>& cur,
                     std::vector<std::vector<long long>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  long long hi = cur.empty() ? bound : cur.back();
  for (long long v = 0; v <= hi; ++v) {
    cur.push_back(v);
    collect_ordered(len, bound, cur, out);
    cur.pop_back();
  }
}

long long integer_root(long long value, int k) {
  long long r = static_cast<long long>(std::llround(std::pow(static_cast<double>(value), 1.0 / k)));
  for (long long c = std::max<long long>(r - 2, 0); c <= r + 2; ++c) {
    long long p = 1;
    bool over = false;
    for (int i = 0; i < k && !over; ++i) {
      if (c != 0 && p > value / c + 1) over = true;
      p *= c;
    }
    if (!over && p == value) return c;
  }
  return -1;
}

}  // namespace

IsotypicFactor::IsotypicFactor(AlbertType type_, long long e_, long long h_,
                               long long multiplicity_)
    : type(type_), e(e_), h(h_), multiplicity(multiplicity_) {
  if (e < 1 || h < 1 || multiplicity < 1)
    throw InvariantViolation("factor parameters must be positive");
}

VarietyData::VarietyData(std::vector<IsotypicFactor> factors_)
    : factors(std::move(factors_)) {
  if (factors.empty()) throw InvariantViolation("a variety needs at least one factor");
}

void validate_profile(const VarietyData& data, const SplittingProfile& profile) {
  if (profile.by_factor.size() != data.factors.size())
    throw InvariantViolation("profile factor count does not match the variety");
  for (size_t i = 0; i < data.factors.size(); ++i) {
    long long total = 0;
    if (profile.by_factor[i].empty())
      throw InvariantViolation("each factor needs at least one place");
    for (const PlacePair& p : profile.by_factor[i]) {
      if (p.first < 1 || p.second < 1)
        throw InvariantViolation("place parameters must be positive");
      total += p.first * p.second;
    }
    if (total != data.factors[i].e)
      throw InvariantViolation("place degrees must sum to the center degree");
  }
}

std::vector<std::vector<PlacePair>> all_profiles(long long e) {
  if (e < 1) throw InvariantViolation("center degree must be positive");
  std::vector<std::vector<PlacePair>> out;
  std::vector<PlacePair> cur;
  collect_profiles(e, {1, 1}, cur, out);
  return out;
}

BigRational gamma_simple(AlbertType type, long long e, long long h) {
  if (e < 1 || h < 1) throw InvariantViolation("parameters must be positive");
  long long d = type == AlbertType::I ? 1 : 2;
  return make_rational(BigInt(2 * d * h * e), BigInt(1 + 2 * e * h * h + h * e));
}

long long mt_dimension(const VarietyData& data, const std::vector<int>& subset) {
  if (subset.empty()) throw EmptySubset("the subset of factors is empty");
  std::vector<int> seen;
  long long dim = 1;
  for (int idx : subset) {
    if (idx < 1 || idx > static_cast<int>(data.factors.size()))
      throw InvariantViolation("factor index out of range");
    if (std::find(seen.begin(), seen.end(), idx) != seen.end())
      throw InvariantViolation("duplicate factor index");
    seen.push_back(idx);
    const IsotypicFactor& f = data.factors[static_cast<size_t>(idx) - 1];
    dim += f.e * (2 * f.h * f.h + f.h);
  }
  return dim;
}

GammaReport gamma_product(const VarietyData& data) {
  size_t k = data.factors.size();
  if (k > 20) throw TooManyFactors("subset maximization is capped at 20 factors");

  GammaReport report;
  bool have_best = false;
  std::vector<int> best_subset;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> subset;
    long long num = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        subset.push_back(static_cast<int>(i) + 1);
        num += 2 * data.factors[i].dim_contribution();
      }
    BigRational value = make_rational(BigInt(num), BigInt(mt_dimension(data, subset)));
    report.table.emplace_back(subset, value);
    bool better = false;
    if (!have_best || value > report.gamma) {
      better = true;
    } else if (value == report.gamma) {
      if (subset.size() < best_subset.size() ||
          (subset.size() == best_subset.size() &&
           std::lexicographical_compare(subset.begin(), subset.end(),
                                        best_subset.begin(), best_subset.end())))
        better = true;
    }
    if (better) {
      have_best = true;
      report.gamma = value;
      best_subset = subset;
    }
  }
  std::sort(report.table.begin(), report.table.end(),
            [](const auto& x, const auto& y) {
              if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
              return x.first < y.first;
            });
  report.achieving_subset = best_subset;
  report.mt_dim = mt_dimension(data, best_subset);
  return report;
}

BigRational psi_value(const VarietyData& data, const SplittingProfile& profile,
                      const PsiAssignment& assign) {
  validate_profile(data, profile);
  if (assign.rs.size() != profile.by_factor.size())
    throw BoundViolation("assignment factor count does not match the profile");

  BigInt num = 0, den = 0;
  bool delta = false;
  for (size_t i = 0; i < profile.by_factor.size(); ++i) {
    const IsotypicFactor& f = data.factors[i];
    if (assign.rs[i].size() != profile.by_factor[i].size())
      throw BoundViolation("assignment place count does not match the profile");
    for (size_t j = 0; j < profile.by_factor[i].size(); ++j) {
      auto [r, s] = assign.rs[i][j];
      if (s < 0 || s > r || r > f.h)
        throw BoundViolation("assignment outside 0 <= s <= r <= h");
      long long ef = profile.by_factor[i][j].first * profile.by_factor[i][j].second;
      num += BigInt(f.multiplicity * f.d() * ef * (r + s));
      den += BigInt(ef * checked_codim(r, s, f.h));
      if (s > 0) delta = true;
    }
  }
  if (num == 0) return BigRational(0);
  if (delta) den += 1;
  return make_rational(num, den);
}

std::pair<BigRational, PsiAssignment> psi_bruteforce(const VarietyData& data,
                                                     const SplittingProfile& profile) {
  validate_profile(data, profile);

  // One odometer digit per place, running over that factor's (r, s) box.
  std::vector<std::vector<std::pair<long long, long long>>> boxes;
  std::vector<std::pair<size_t, size_t>> place_at;  // (factor, place) per digit
  long long combos = 1;
  for (size_t i = 0; i < profile.by_factor.size(); ++i) {
    auto box = rs_box(data.factors[i].h);
    for (size_t j = 0; j < profile.by_factor[i].size(); ++j) {
      if (combos > kBoxCap / static_cast<long long>(box.size()))
        throw TooLarge("assignment box exceeds the enumeration cap");
      combos *= static_cast<long long>(box.size());
      boxes.push_back(box);
      place_at.emplace_back(i, j);
    }
  }

  PsiAssignment assign;
  assign.rs.resize(profile.by_factor.size());
  for (size_t i = 0; i < profile.by_factor.size(); ++i)
    assign.rs[i].assign(profile.by_factor[i].size(), {0, 0});

  BigRational best(0);
  PsiAssignment best_assign = assign;
  std::vector<size_t> digits(boxes.size(), 0);
  for (long long step = 0; step < combos; ++step) {
    if (step > 0) {
      size_t pos = digits.size() - 1;
      while (true) {
        if (++digits[pos] < boxes[pos].size()) break;
        digits[pos] = 0;
        --pos;
      }
    }
    for (size_t t = 0; t < digits.size(); ++t)
      assign.rs[place_at[t].first][place_at[t].second] = boxes[t][digits[t]];
    BigRational value = psi_value(data, profile, assign);
    if (value >= best) {  // latest tie wins: the full box ends at r = s = h
      best = value;
      best_assign = assign;
    }
  }
  return {best, best_assign};
}

std::pair<BigInt, BigInt> filtered_exponents(const VarietyData& data,
                                             const SplittingProfile& profile,
                                             const FilteredSubgroupData& fs) {
  validate_profile(data, profile);
  if (fs.chains.size() != profile.by_factor.size())
    throw InvalidFiltration("chain factor count does not match the profile");

  BigInt card = 0, degree = 0;
  long long delta_level = 0;  // best level owning the dual-coordinate term
  for (size_t i = 0; i < profile.by_factor.size(); ++i) {
    const IsotypicFactor& f = data.factors[i];
    if (fs.chains[i].size() != profile.by_factor[i].size())
      throw InvalidFiltration("chain place count does not match the profile");
    for (size_t j = 0; j < profile.by_factor[i].size(); ++j) {
      const std::vector<FilteredLevel>& chain = fs.chains[i][j];
      if (static_cast<long long>(chain.size()) > 2 * f.h)
        throw InvalidFiltration("chain longer than the module rank");
      for (size_t p = 0; p < chain.size(); ++p) {
        const FilteredLevel& c = chain[p];
        if (c.level < 1 || c.s < 0 || c.s > c.r || c.r > f.h)
          throw InvalidFiltration("chain step outside the stabilizer box");
        if (c.r + c.s < 1)
          throw InvalidFiltration("chain steps need r + s >= 1");
        if (p > 0) {
          const FilteredLevel& prev = chain[p - 1];
          if (c.level <= prev.level)
            throw InvalidFiltration("chain levels must strictly increase");
          if (c.r > prev.r || c.s > prev.s)
            throw InvalidFiltration("r and s must weakly decrease along the chain");
          if (c.r + c.s >= prev.r + prev.s)
            throw InvalidFiltration("r + s must strictly decrease along the chain");
        }
      }

      long long ef = profile.by_factor[i][j].first * profile.by_factor[i][j].second;
      long long card_sum = 0, degree_sum = 0, prev_level = 0;
      for (size_t p = 0; p < chain.size(); ++p) {
        long long next_rs = p + 1 < chain.size()
                                ? chain[p + 1].r + chain[p + 1].s
                                : 0;
        long long mult = chain[p].r + chain[p].s - next_rs;
        card_sum += static_cast<long long>(chain[p].level) * mult;
        degree_sum += checked_codim(chain[p].r, chain[p].s, f.h) *
                      (chain[p].level - prev_level);
        prev_level = chain[p].level;
        if (chain[p].s >= 1) delta_level = std::max(delta_level, static_cast<long long>(chain[p].level));
      }
      card += BigInt(f.multiplicity * f.d() * ef * card_sum);
      degree += BigInt(ef * degree_sum);
    }
  }
  degree += delta_level;
  return {card, degree};
}

std::pair<BigRational, BigRational> sup_equals_max_check(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b, int bound) {
  if (a.empty() || a.size() != b.size())
    throw ShapeMismatch("coefficient tables must be nonempty and match");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty() || a[i].size() != b[i].size())
      throw ShapeMismatch("row shapes must be nonempty and match");
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] < 1 || b[i][j] < 1)
        throw ShapeMismatch("coefficients must be strictly positive");
  }
  if (bound < 1 || bound > 6) throw ShapeMismatch("bound must be between 1 and 6");

  // Right side: nonempty prefixes of a single row (the 0/1 indicators the
  // mediant decomposition reduces every assignment to).
  BigRational rhs(0);
  for (size_t i = 0; i < a.size(); ++i) {
    long long num = 0, den = 0;
    for (size_t j = 0; j < a[i].size(); ++j) {
      num += a[i][j];
      den += b[i][j];
      BigRational v = make_rational(BigInt(num), BigInt(den));
      if (v > rhs) rhs = v;
    }
  }

  // Left side: all per-row ordered vectors (rows may vanish); only the
  // all-zero assignment is excluded.
  std::vector<std::vector<std::vector<long long>>> rows;
  for (const auto& row : a) {
    std::vector<std::vector<long long>> vecs;
    std::vector<long long> cur;
    collect_ordered(static_cast<int>(row.size()), bound, cur, vecs);
    rows.push_back(std::move(vecs));
  }
  BigRational lhs(0);
  std::vector<size_t> pick(a.size(), 0);
  while (true) {
    long long num = 0, den = 0;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a[i].size(); ++j) {
        num += a[i][j] * rows[i][pick[i]][j];
        den += b[i][j] * rows[i][pick[i]][j];
      }
    if (den > 0) {
      BigRational v = make_rational(BigInt(num), BigInt(den));
      if (v > lhs) lhs = v;
    }
    size_t pos = 0;
    while (pos < a.size() && ++pick[pos] >= rows[pos].size()) pick[pos++] = 0;
    if (pos == a.size()) break;
  }
  return {lhs, rhs};
}

bool sigma_contains(long long g) {
  if (g < 1) throw InvariantViolation("dimension must be positive");
  long long target = 2 * g;
  for (int k = 3; (1LL << k) <= target; k += 2) {
    long long root = integer_root(target, k);
    if (root >= 2 && root % 2 == 0) return true;
  }
  for (int k = 3;; k += 2) {
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) c = c * (k + i) / i;  // binomial(2k, k)
    if (c > target) break;
    if (c == target) return true;
  }
  return false;
}

std::vector<long long> sigma_members(long long max) {
  if (max < 1) throw InvariantViolation("bound must be positive");
  if (max > kSigmaCap) throw TooLarge("exceptional-set enumeration is capped at 10^8");
  std::set<long long> found;
  long long target = 2 * max;
  for (int k = 3; (1LL << k) <= target; k += 2)
    for (long long a = 1;; ++a) {
      long long base = 2 * a, v = 1;
      bool over = false;
      for (int i = 0; i < k && !over; ++i) {
        if (v > target / base) over = true;
        v *= base;
      }
      if (over || v > target) break;
      found.insert(v / 2);
    }
  for (int k = 3;; k += 2) {
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) c = c * (k + i) / i;  // binomial(2k, k)
    if (c > target) break;
    found.insert(static_cast<long long>(c) / 2);
  }
  return {found.begin(), found.end()};
}

std::vector<int> mt_hypothesis_check(const IsotypicFactor& factor, bool has_toric_place) {
  std::vector<int> satisfied;
  if (factor.h % 2 == 1 || factor.h == 2) satisfied.push_back(1);
  if (factor.e == 1 && !sigma_contains(factor.h)) satisfied.push_back(2);
  if (has_toric_place) satisfied.push_back(3);
  return satisfied;
}

BigRational torsion_degree_lower_bound(long long n, long long h, const BigRational& c1) {
  if (n < 1 || h < 1) throw InvariantViolation("parameters must be positive");
  if (c1 <= 0) throw InvariantViolation("the constant must be positive");
  int omega = 0;
  long long rest = n;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      ++omega;
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) ++omega;

  BigRational result(1);
  for (int i = 0; i < omega; ++i) result *= c1;
  BigRational base(n);
  for (long long i = 0; i < 2 * h; ++i) result *= base;
  return result;
}

BigInt masser_bound(const VarietyData& data) {
  BigInt dim = 0;
  for (const IsotypicFactor& f : data.factors) dim += BigInt(f.dim_contribution());
  return dim;
}

}  // namespace avgamma
