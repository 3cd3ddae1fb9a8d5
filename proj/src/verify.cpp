#include "avgamma/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "avgamma/gamma.hpp"
#include "avgamma/groups.hpp"
#include "avgamma/lie.hpp"
#include "avgamma/symplectic.hpp"

namespace avgamma {

namespace {

// Deterministic cross-platform randomness: the mt19937_64 stream is fixed by
// the standard, and we reduce with plain modulo.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : eng_(seed) {}
  long long below(long long n) { return static_cast<long long>(eng_() % static_cast<std::uint64_t>(n)); }
  long long in(long long lo, long long hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

class Checker {
 public:
  explicit Checker(SuiteResult& out) : out_(out) {}
  void property(const std::string& name) { out_.properties.push_back({name, 0, 0}); }
  void count(bool ok) {
    ++out_.properties.back().trials;
    if (!ok) ++out_.properties.back().failures;
  }
  // A whole block that should not throw; exceptions count as one failure.
  void block(const std::string& name, const std::function<void()>& body) {
    property(name);
    try {
      body();
    } catch (const Error&) {
      count(false);
    }
  }

 private:
  SuiteResult& out_;
};

Vec random_vec(const Ring& R, int dim, Rand& rand) {
  Vec v(static_cast<size_t>(dim));
  for (Elt& x : v) x = rand.below(R.card());
  return v;
}

Vec random_vec(const SymplecticSpace& S, Rand& rand) { return random_vec(S.ring, S.dim(), rand); }

Vec apply_matrix(const Matrix& m, const Vec& v) {
  const Ring& R = m.ring();
  Vec out(static_cast<size_t>(m.rows()), R.zero());
  for (int i = 0; i < m.rows(); ++i) {
    Elt acc = R.zero();
    for (int j = 0; j < m.cols(); ++j) acc = R.add(acc, R.mul(m.at(i, j), v[static_cast<size_t>(j)]));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

// Symplectic transvection x -> x + c phi(x, v) v; works over any coefficient
// ring, so the group-law suites can run over fields too.
Matrix transvection(const Ring& R, int g, const Vec& v, Elt c) {
  int n = 2 * g;
  Matrix t = Matrix::identity(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt jv = j < g ? v[static_cast<size_t>(g + j)] : R.neg(v[static_cast<size_t>(j - g)]);
      t.at(i, j) = R.add(t.at(i, j), R.mul(c, R.mul(v[static_cast<size_t>(i)], jv)));
    }
  return t;
}

Matrix random_symplectic(const Ring& R, int g, Rand& rand, int steps = 4) {
  Matrix m = Matrix::identity(R, 2 * g);
  for (int k = 0; k < steps; ++k)
    m = m * transvection(R, g, random_vec(R, 2 * g, rand), rand.below(R.card()));
  return m;
}

Matrix random_symplectic(const SymplecticSpace& S, Rand& rand, int steps = 4) {
  return random_symplectic(S.ring, S.h, rand, steps);
}

Elt random_unit(const Ring& R, Rand& rand) {
  while (true) {
    Elt c = rand.below(R.card());
    if (R.is_unit(c)) return c;
  }
}

Matrix random_similitude(const Ring& R, int g, Rand& rand) {
  Matrix m = random_symplectic(R, g, rand);
  Elt alpha = random_unit(R, rand);
  for (int i = g; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) m.at(i, j) = R.mul(alpha, m.at(i, j));
  return m;
}

// Image of r standard frame vectors under a random symplectic map: primitive,
// independent mod ell, pairwise isotropic.
std::vector<Vec> random_isotropic_frame(const SymplecticSpace& S, Rand& rand, int r) {
  Matrix m = random_symplectic(S, rand);
  std::vector<Vec> out;
  for (int k = 0; k < r; ++k) {
    Vec v(static_cast<size_t>(S.dim()), S.ring.zero());
    for (int i = 0; i < S.dim(); ++i) v[static_cast<size_t>(i)] = m.at(i, k);
    out.push_back(std::move(v));
  }
  return out;
}

TorsionSubgroup random_totally_isotropic(const SymplecticSpace& S, Rand& rand) {
  int r = static_cast<int>(rand.in(1, S.h));
  std::vector<Vec> frame = random_isotropic_frame(S, rand, r);
  const Ring& R = S.ring;
  std::vector<Vec> gens;
  for (Vec& v : frame) {
    Elt scale = R.ell_pow(static_cast<int>(rand.in(0, R.exponent() - 1)));
    for (Elt& x : v) x = R.mul(scale, x);
    gens.push_back(v);
  }
  if (gens.size() >= 2 && rand.below(2) == 0) {
    Vec sum(static_cast<size_t>(S.dim()), R.zero());
    for (size_t i = 0; i < sum.size(); ++i) sum[i] = R.add(gens[0][i], gens[1][i]);
    gens.push_back(std::move(sum));
  }
  return TorsionSubgroup(S, gens);
}

// Element-level oracle for the pairing invariants: scan all element pairs,
// divide out each element's coefficient valuation exactly, and compare the
// remaining pairing valuation to the pair's common order.
std::pair<int, int> invariants_by_elements(const TorsionSubgroup& H) {
  const SymplecticSpace& S = H.space();
  const Ring& R = S.ring;
  int n = R.exponent();
  std::vector<Vec> elems = H.elements(5000);
  int m1 = 0, m = 0;
  auto order_of = [&](const Vec& v) {
    int minval = n;
    for (Elt x : v) minval = std::min(minval, R.valuation(x));
    return n - minval;
  };
  auto exact_divide = [&](const Vec& v, int k) {
    Vec out(v.size());
    Elt p = R.ell_pow(k);
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / p;  // exact by choice of k
    return out;
  };
  for (const Vec& x : elems)
    for (const Vec& y : elems) {
      int ox = order_of(x), oy = order_of(y);
      int k = std::min(ox, oy);
      if (k == 0) continue;
      Vec xs = exact_divide(x, n - ox);
      Vec ys = exact_divide(y, n - oy);
      int val = R.valuation(S.pairing(xs, ys));
      m1 = std::max(m1, k - std::min(val, k));
      if (val == 0) m = std::max(m, k);
    }
  return {m1, m};
}

SymplecticSpace random_space(Rand& rand, const std::vector<long long>& ells, int max_n,
                             int max_h) {
  long long ell = ells[static_cast<size_t>(rand.below(static_cast<long long>(ells.size())))];
  int n = static_cast<int>(rand.in(1, max_n));
  int h = static_cast<int>(rand.in(1, max_h));
  return SymplecticSpace(h, Ring::zmod(ell, n));
}

// ---------------------------------------------------------------- suites --

SuiteResult suite_pairing(std::uint64_t seed) {
  SuiteResult result{"pairing", {}};
  Checker check(result);
  Rand rand(seed);

  check.property("alternating_exhaustive");
  for (const SymplecticSpace& S :
       {SymplecticSpace(1, Ring::zmod(3, 2)), SymplecticSpace(2, Ring::zmod(2, 2))}) {
    long long total = 1;
    for (int i = 0; i < S.dim(); ++i) total *= S.ring.card();
    std::vector<Vec> all;
    for (long long code = 0; code < total; ++code) {
      Vec v(static_cast<size_t>(S.dim()));
      long long c = code;
      for (int i = 0; i < S.dim(); ++i) {
        v[static_cast<size_t>(i)] = c % S.ring.card();
        c /= S.ring.card();
      }
      all.push_back(std::move(v));
    }
    for (const Vec& x : all) {
      bool ok = S.pairing(x, x) == S.ring.zero();
      for (const Vec& y : all)
        ok = ok && S.pairing(x, y) == S.ring.neg(S.pairing(y, x));
      check.count(ok);
    }
  }

  check.property("bilinear_random");
  {
    SymplecticSpace S(2, Ring::zmod(5, 2));
    const Ring& R = S.ring;
    for (int t = 0; t < 300; ++t) {
      Vec x = random_vec(S, rand), y = random_vec(S, rand), z = random_vec(S, rand);
      Elt c = rand.below(R.card());
      Vec xy(x.size());
      for (size_t i = 0; i < x.size(); ++i) xy[i] = R.add(x[i], R.mul(c, y[i]));
      bool ok = S.pairing(xy, z) == R.add(S.pairing(x, z), R.mul(c, S.pairing(y, z)));
      check.count(ok);
    }
  }

  check.property("nondegenerate_exhaustive");
  for (const SymplecticSpace& S :
       {SymplecticSpace(1, Ring::zmod(3, 2)), SymplecticSpace(1, Ring::zmod(2, 3))}) {
    const Ring& R = S.ring;
    long long total = R.card() * R.card();
    for (long long code = 1; code < total; ++code) {
      Vec x{code % R.card(), code / R.card()};
      int want = std::min(R.valuation(x[0]), R.valuation(x[1]));
      int got = R.exponent();
      for (long long yc = 0; yc < total; ++yc) {
        Vec y{yc % R.card(), yc / R.card()};
        got = std::min(got, R.valuation(S.pairing(x, y)));
      }
      check.count(got == want);
    }
  }

  check.property("gram_is_j");
  for (const SymplecticSpace& S :
       {SymplecticSpace(2, Ring::zmod(3, 1)), SymplecticSpace(3, Ring::zmod(5, 2))}) {
    Matrix j = S.j_matrix();
    bool ok = true;
    for (int i = 0; i < S.dim(); ++i)
      for (int k = 0; k < S.dim(); ++k) {
        Vec ei(static_cast<size_t>(S.dim()), 0), ek(static_cast<size_t>(S.dim()), 0);
        ei[static_cast<size_t>(i)] = 1;
        ek[static_cast<size_t>(k)] = 1;
        ok = ok && S.pairing(ei, ek) == j.at(i, k);
      }
    check.count(ok);
  }
  return result;
}

SuiteResult suite_isotropy(std::uint64_t seed) {
  SuiteResult result{"isotropy", {}};
  Checker check(result);
  Rand rand(seed + 1);

  check.property("m1_full_space");
  for (long long ell : {2, 3, 5})
    for (int n = 1; n <= 3; ++n)
      for (int h = 1; h <= 2; ++h) {
        SymplecticSpace S(h, Ring::zmod(ell, n));
        std::vector<Vec> gens;
        for (int i = 0; i < S.dim(); ++i) {
          Vec e(static_cast<size_t>(S.dim()), 0);
          e[static_cast<size_t>(i)] = 1;
          gens.push_back(e);
        }
        TorsionSubgroup full(S, gens);
        check.count(m1_invariant(full) == n && m_invariant(full) == n);
      }

  check.property("scaled_isotropy_random");
  for (int t = 0; t < 1000; ++t) {
    SymplecticSpace S = random_space(rand, {2, 3, 5}, 3, 2);
    std::vector<Vec> gens;
    long long count = rand.in(1, 2 * S.h);
    for (long long i = 0; i < count; ++i) gens.push_back(random_vec(S, rand));
    check.count(scaled_isotropy_check(TorsionSubgroup(S, gens)));
  }

  check.property("m_le_m1_le_n");
  for (int t = 0; t < 300; ++t) {
    SymplecticSpace S = random_space(rand, {2, 3, 5}, 3, 2);
    std::vector<Vec> gens;
    long long count = rand.in(1, 2 * S.h);
    for (long long i = 0; i < count; ++i) gens.push_back(random_vec(S, rand));
    TorsionSubgroup H(S, gens);
    int m1 = m1_invariant(H), m = m_invariant(H);
    check.count(m <= m1 && m1 <= S.ring.exponent());
  }

  check.property("m1_monotone_under_containment");
  for (int t = 0; t < 200; ++t) {
    SymplecticSpace S = random_space(rand, {3, 5}, 3, 2);
    std::vector<Vec> gens;
    long long count = rand.in(1, S.h + 1);
    for (long long i = 0; i < count; ++i) gens.push_back(random_vec(S, rand));
    TorsionSubgroup small(S, gens);
    gens.push_back(random_vec(S, rand));
    TorsionSubgroup large(S, gens);
    check.count(m1_invariant(small) <= m1_invariant(large));
  }

  check.property("invariants_match_element_oracle");
  for (int t = 0; t < 150; ++t) {
    SymplecticSpace S = random_space(rand, {2, 3, 5}, 2, 1);
    std::vector<Vec> gens;
    long long count = rand.in(1, 2);
    for (long long i = 0; i < count; ++i) gens.push_back(random_vec(S, rand));
    TorsionSubgroup H(S, gens);
    auto [m1, m] = invariants_by_elements(H);
    check.count(m1 == m1_invariant(H) && m == m_invariant(H));
  }

  check.property("completion_gram_is_j");
  {
    const std::vector<SymplecticSpace> spaces = {SymplecticSpace(2, Ring::zmod(3, 2)),
                                                 SymplecticSpace(3, Ring::zmod(5, 2)),
                                                 SymplecticSpace(3, Ring::zmod(3, 3))};
    for (int t = 0; t < 500; ++t) {
      const SymplecticSpace& S = spaces[static_cast<size_t>(rand.below(3))];
      int r = static_cast<int>(rand.in(0, S.h));
      std::vector<Vec> frame = random_isotropic_frame(S, rand, r);
      std::vector<Vec> basis = complete_symplectic_basis(S, frame);
      bool ok = static_cast<int>(basis.size()) == S.dim();
      for (int i = 0; i < r && ok; ++i) ok = basis[static_cast<size_t>(i)] == frame[static_cast<size_t>(i)];
      Matrix j = S.j_matrix();
      for (int i = 0; i < S.dim() && ok; ++i)
        for (int k = 0; k < S.dim() && ok; ++k)
          ok = S.pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(k)]) == j.at(i, k);
      check.count(ok);
    }
  }

  check.property("hull_postconditions");
  {
    const std::vector<SymplecticSpace> spaces = {SymplecticSpace(2, Ring::zmod(3, 2)),
                                                 SymplecticSpace(3, Ring::zmod(5, 2)),
                                                 SymplecticSpace(3, Ring::zmod(3, 3))};
    for (int t = 0; t < 500; ++t) {
      const SymplecticSpace& S = spaces[static_cast<size_t>(rand.below(3))];
      TorsionSubgroup H = random_totally_isotropic(S, rand);
      HullResult hull = isotropic_hull(H);
      bool ok = is_totally_isotropic(hull.closure);
      for (const Vec& g : H.generators()) ok = ok && hull.closure.contains(g);
      auto exponent_of = [](const TorsionSubgroup& G) {
        const auto& orders = G.snf().orders;
        return orders.empty() ? 0 : orders.front();
      };
      ok = ok && exponent_of(hull.closure) == exponent_of(H);
      check.count(ok);
    }
  }
  return result;
}

SuiteResult suite_groups(std::uint64_t seed) {
  SuiteResult result{"groups", {}};
  Checker check(result);
  Rand rand(seed + 2);

  check.property("multiplier_multiplicative");
  {
    const std::vector<Ring> rings = {Ring::zmod(5, 2), Ring::zmod(3, 2), Ring::gf(5, 1),
                                     Ring::zmod(2, 2)};
    for (int t = 0; t < 200; ++t) {
      int g = static_cast<int>(rand.in(1, 2));
      const Ring& R = rings[static_cast<size_t>(rand.below(4))];
      Matrix a = random_similitude(R, g, rand), b = random_similitude(R, g, rand);
      check.count(multiplier(a * b, g) == R.mul(multiplier(a, g), multiplier(b, g)));
    }
  }

  check.property("order_matches_enumeration");
  {
    const std::vector<std::pair<int, long long>> cases = {{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3}};
    for (auto [g, q] : cases) {
      long long count = 0;
      for_each_element(GroupSpec(GroupFamily::Sp, g, Ring::zmod(q, 1)),
                       [&](const Matrix&) { ++count; });
      check.count(BigInt(count) == sp_order(g, q));
    }
  }

  check.property("enumeration_examples");
  {
    check.count(enumerate_group(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(2, 1))).size() == 6);
    check.count(enumerate_group(GroupSpec(GroupFamily::SL, 2, Ring::zmod(2, 2))).size() == 48);
    check.count(enumerate_group(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 1))).size() == 24);
  }

  check.property("codim_closed_forms_agree");
  for (int g = 1; g <= 8; ++g)
    for (int r = 0; r <= g; ++r)
      for (int s = 0; s <= r; ++s) {
        long long lhs = prs_codim(PrsSpec(r, s, g));
        long long rhs = (r + s) * (4LL * g + 1 - (r + s)) / 2;
        check.count(lhs == rhs);
      }

  check.property("stabilizer_is_subgroup");
  for (int g : {1, 2}) {
    GroupSpec spec(GroupFamily::Sp, g, Ring::zmod(3, 1));
    std::vector<Matrix> all = enumerate_group(spec);
    for (int r = 1; r <= g; ++r)
      for (int s = 0; s <= r; ++s) {
        PrsSpec p(r, s, g);
        std::vector<Matrix> members;
        for (const Matrix& m : all)
          if (prs_membership(m, p)) members.push_back(m);
        bool ok = !members.empty();
        for (const Matrix& m : members)
          ok = ok && prs_membership(mat_inverse(m), p);
        for (const Matrix& a : members)
          for (const Matrix& b : members)
            ok = ok && prs_membership(a * b, p);
        check.count(ok);
      }
  }

  check.property("single_constraint_index_is_hensel_regular");
  for (long long ell : {3, 5})
    for (int r = 1; r <= 1; ++r)
      for (int s = 0; s <= r; ++s) {
        std::vector<BigInt> index_at_level;
        for (int m = 1; m <= 3; ++m) {
          CongruenceChain chain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(ell, m)),
                                {{PrsSpec(r, s, 1), m}});
          index_at_level.push_back(congruence_index(chain).index);
        }
        BigInt step = 1;
        for (long long i = 0; i < prs_codim(PrsSpec(r, s, 1)); ++i) step *= ell;
        check.count(index_at_level[1] == index_at_level[0] * step &&
                    index_at_level[2] == index_at_level[1] * step);
      }

  check.property("chain_ratio_bounded_and_shift_invariant");
  {
    auto ratio_of = [](long long ell, const std::vector<std::pair<PrsSpec, int>>& steps) {
      std::vector<ChainConstraint> cons;
      for (const auto& [p, lvl] : steps) cons.push_back({p, lvl});
      CongruenceChain chain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(ell, cons.back().level)),
                            cons);
      IndexResult res = congruence_index(chain);
      BigInt denom = 1;
      for (long long i = 0; i < res.predicted_exponent; ++i) denom *= ell;
      return make_rational(res.index, denom);
    };
    BigRational base = ratio_of(3, {{PrsSpec(1, 1, 1), 1}, {PrsSpec(1, 0, 1), 2}});
    BigRational shifted = ratio_of(3, {{PrsSpec(1, 1, 1), 2}, {PrsSpec(1, 0, 1), 3}});
    check.count(base == shifted);
    check.count(base == make_rational(BigInt(8), BigInt(9)));
    BigRational lo = make_rational(BigInt(1), sp_order(1, 3));
    BigRational hi = make_rational(sp_order(1, 3), BigInt(1));
    check.count(base >= lo && base <= hi);
    for (long long ell : {3, 5})
      for (int m = 1; m <= 2; ++m) {
        BigRational v = ratio_of(ell, {{PrsSpec(1, 1, 1), m}});
        BigRational l = make_rational(BigInt(1), sp_order(1, ell));
        BigRational h = make_rational(sp_order(1, ell), BigInt(1));
        check.count(v >= l && v <= h);
      }
  }

  check.property("d0_roundtrip");
  {
    const std::vector<Ring> rings = {Ring::zmod(3, 2), Ring::zmod(5, 2), Ring::gf(7, 1)};
    for (int t = 0; t < 200; ++t) {
      int g = static_cast<int>(rand.in(1, 2));
      const Ring& R = rings[static_cast<size_t>(rand.below(3))];
      Matrix m = random_similitude(R, g, rand);
      D0Factorization f = d0_factorize(m, g);
      Matrix rebuilt = f.s;
      for (int i = g; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) rebuilt.at(i, j) = R.mul(f.alpha, rebuilt.at(i, j));
      check.count(rebuilt == m && is_in_group(f.s, GroupSpec(GroupFamily::Sp, g, R)) &&
                  f.alpha == multiplier(m, g));
    }
  }
  return result;
}

SuiteResult suite_lifting(std::uint64_t seed) {
  SuiteResult result{"lifting", {}};
  Checker check(result);
  Rand rand(seed + 3);

  std::vector<std::pair<LiftResult, std::string>> outcomes;

  check.block("sl2_mod25_full_generators", [&] {
    GroupSpec target(GroupFamily::SL, 2, Ring::zmod(5, 2));
    std::vector<Matrix> gens = enumerate_group(GroupSpec(GroupFamily::SL, 2, Ring::zmod(5, 1)));
    LiftResult res = lift_check(target, gens);
    outcomes.push_back({res, "sl2_full"});
    check.count(res.generates_full && res.lemma_applies && res.closure_size == 15000 &&
                res.full_order == 15000);
  });

  check.block("sl2_mod25_borel_generators", [&] {
    GroupSpec target(GroupFamily::SL, 2, Ring::zmod(5, 2));
    std::vector<Matrix> gens;
    for (const Matrix& m : enumerate_group(GroupSpec(GroupFamily::SL, 2, Ring::zmod(5, 1))))
      if (m.at(1, 0) == 0) gens.push_back(m);
    LiftResult res = lift_check(target, gens);
    outcomes.push_back({res, "sl2_borel"});
    check.count(!res.generates_full && !res.lemma_applies);
  });

  check.block("sp2_mod49_full_generators", [&] {
    GroupSpec target(GroupFamily::Sp, 1, Ring::zmod(7, 2));
    std::vector<Matrix> gens = enumerate_group(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(7, 1)));
    LiftResult res = lift_check(target, gens);
    outcomes.push_back({res, "sp2_full"});
    check.count(res.generates_full && res.lemma_applies && res.closure_size == 115248);
  });

  check.block("sp2_mod25_cyclic_generators", [&] {
    GroupSpec target(GroupFamily::Sp, 1, Ring::zmod(5, 2));
    GroupSpec mod(GroupFamily::Sp, 1, Ring::zmod(5, 1));
    std::vector<Matrix> all = enumerate_group(mod);
    std::vector<Matrix> gens = {all[static_cast<size_t>(rand.below(static_cast<long long>(all.size())))]};
    LiftResult res = lift_check(target, gens);
    outcomes.push_back({res, "sp2_cyclic"});
    check.count(res.closure_size <= res.full_order);
  });

  check.property("lemma_implies_full");
  for (const auto& [res, name] : outcomes) check.count(!res.lemma_applies || res.generates_full);
  return result;
}

SuiteResult suite_cn(std::uint64_t seed) {
  SuiteResult result{"cn", {}};
  Checker check(result);
  Rand rand(seed + 4);

  check.property("span_dimensions");
  {
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 2, 5)) == 3);
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 3, 5)) == 8);
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 1, 5)) == 3);
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 2, 3)) == 10);
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 2, 5)) == 10);
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::so, 3, 3)) == 0);
    check.count(cn_span_dimension(LieAlgebraSpec(LieFamily::so, 3, 5)) == 0);
  }

  check.property("decomposition_postconditions");
  {
    const std::vector<LieAlgebraSpec> specs = {
        LieAlgebraSpec(LieFamily::sl, 2, 5), LieAlgebraSpec(LieFamily::sl, 3, 5),
        LieAlgebraSpec(LieFamily::sp, 2, 5), LieAlgebraSpec(LieFamily::sp, 1, 3)};
    for (const LieAlgebraSpec& spec : specs)
      for (int t = 0; t < 200; ++t) {
        const Ring& R = spec.field;
        int n = spec.matrix_size();
        Matrix x(R, n, n);
        if (spec.family == LieFamily::sl) {
          Elt diag = R.zero();
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              if (i != j || i + 1 < n) {
                x.at(i, j) = rand.below(R.card());
                if (i == j) diag = R.add(diag, x.at(i, j));
              }
          x.at(n - 1, n - 1) = R.neg(diag);
        } else {
          int m = spec.m;
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              x.at(i, j) = rand.below(R.card());
              x.at(m + j, m + i) = R.neg(x.at(i, j));
            }
          for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
              Elt b = rand.below(R.card()), c = rand.below(R.card());
              x.at(i, m + j) = b;
              x.at(j, m + i) = b;
              x.at(m + i, j) = c;
              x.at(m + j, i) = c;
            }
        }
        std::vector<Matrix> terms = square_zero_decompose(x, spec);
        Matrix sum(R, n, n);
        bool ok = in_algebra(x, spec);
        for (const Matrix& term : terms) {
          sum = sum + term;
          ok = ok && in_algebra(term, spec) && (term * term).is_zero();
        }
        ok = ok && sum == x && (x.is_zero() ? terms.empty() : true);
        check.count(ok);
      }
  }
  return result;
}

SuiteResult suite_gamma(std::uint64_t seed) {
  SuiteResult result{"gamma", {}};
  Checker check(result);
  Rand rand(seed + 5);

  check.property("closed_form_equals_bruteforce");
  for (AlbertType type : {AlbertType::I, AlbertType::II})
    for (long long e = 1; e <= 3; ++e)
      for (long long h = 1; h <= 3; ++h) {
        BigRational expected = gamma_simple(type, e, h);
        VarietyData data({IsotypicFactor(type, e, h, 1)});
        for (const auto& places : all_profiles(e)) {
          SplittingProfile profile{{places}};
          auto [value, argmax] = psi_bruteforce(data, profile);
          bool ok = value == expected;
          for (const auto& rs : argmax.rs[0]) ok = ok && rs.first == h && rs.second == h;
          check.count(ok);
        }
      }

  check.property("simple_gamma_bounds");
  for (long long e = 1; e <= 50; ++e)
    for (long long h = 1; h <= 50; ++h) {
      bool ok = gamma_simple(AlbertType::I, e, h) < make_rational(BigInt(2), BigInt(3)) &&
                gamma_simple(AlbertType::II, e, h) < make_rational(BigInt(4), BigInt(3));
      check.count(ok);
    }

  check.property("product_table_identity");
  {
    std::vector<IsotypicFactor> pool;
    for (AlbertType type : {AlbertType::I, AlbertType::II})
      for (long long e = 1; e <= 2; ++e)
        for (long long h = 1; h <= 2; ++h)
          for (long long n = 1; n <= 2; ++n) pool.emplace_back(type, e, h, n);
    std::vector<std::vector<size_t>> shapes;
    for (size_t i = 0; i < pool.size(); ++i) {
      shapes.push_back({i});
      for (size_t j = 0; j < pool.size(); ++j) {
        shapes.push_back({i, j});
        for (size_t k = 0; k < pool.size(); ++k) shapes.push_back({i, j, k});
      }
    }
    for (const auto& shape : shapes) {
      std::vector<IsotypicFactor> factors;
      for (size_t idx : shape) factors.push_back(pool[idx]);
      VarietyData data(std::move(factors));
      GammaReport report = gamma_product(data);
      BigRational best(0);
      bool ok = true;
      for (const auto& [subset, value] : report.table) {
        long long num = 0;
        for (int i : subset) num += 2 * data.factors[static_cast<size_t>(i - 1)].dim_contribution();
        ok = ok && value == make_rational(BigInt(num), BigInt(mt_dimension(data, subset)));
        if (value > best) best = value;
      }
      ok = ok && report.gamma == best &&
           static_cast<size_t>(1u << data.factors.size()) == report.table.size() + 1;
      check.count(ok);
    }
  }

  check.property("psi_dominated_by_gamma");
  for (int t = 0; t < 10000; ++t) {
    long long nf = rand.in(1, 3);
    std::vector<IsotypicFactor> factors;
    for (long long i = 0; i < nf; ++i)
      factors.emplace_back(rand.below(2) == 0 ? AlbertType::I : AlbertType::II,
                           rand.in(1, 3), rand.in(1, 3), rand.in(1, 2));
    VarietyData data(std::move(factors));
    SplittingProfile profile;
    PsiAssignment assign;
    for (const IsotypicFactor& f : data.factors) {
      auto options = all_profiles(f.e);
      profile.by_factor.push_back(options[static_cast<size_t>(rand.below(static_cast<long long>(options.size())))]);
      std::vector<std::pair<long long, long long>> rs;
      for (size_t j = 0; j < profile.by_factor.back().size(); ++j) {
        long long r = rand.in(0, f.h);
        rs.emplace_back(r, rand.in(0, r));
      }
      assign.rs.push_back(std::move(rs));
    }
    check.count(psi_value(data, profile, assign) <= gamma_product(data).gamma);
  }

  check.property("filtered_ratio_dominated_by_gamma");
  for (int t = 0; t < 10000; ++t) {
    long long nf = rand.in(1, 2);
    std::vector<IsotypicFactor> factors;
    for (long long i = 0; i < nf; ++i)
      factors.emplace_back(rand.below(2) == 0 ? AlbertType::I : AlbertType::II,
                           rand.in(1, 2), rand.in(1, 3), rand.in(1, 2));
    VarietyData data(std::move(factors));
    SplittingProfile profile;
    FilteredSubgroupData fs;
    for (const IsotypicFactor& f : data.factors) {
      auto options = all_profiles(f.e);
      profile.by_factor.push_back(options[static_cast<size_t>(rand.below(static_cast<long long>(options.size())))]);
      std::vector<std::vector<FilteredLevel>> chains;
      for (size_t j = 0; j < profile.by_factor.back().size(); ++j) {
        std::vector<FilteredLevel> chain;
        long long r = rand.in(0, f.h);
        long long s = r == 0 ? 0 : rand.in(0, r);
        int level = static_cast<int>(rand.in(1, 3));
        while (r + s >= 1) {
          chain.push_back({level, static_cast<int>(r), static_cast<int>(s)});
          long long drop = rand.in(1, r + s);
          for (long long d = 0; d < drop; ++d) {
            if (s > 0 && (r == s || rand.below(2) == 0))
              --s;
            else
              --r;
          }
          level += static_cast<int>(rand.in(1, 2));
        }
        chains.push_back(std::move(chain));
      }
      fs.chains.push_back(std::move(chains));
    }
    auto [card, degree] = filtered_exponents(data, profile, fs);
    if (card == 0) {
      check.count(true);
    } else {
      check.count(make_rational(card, degree) <= gamma_product(data).gamma);
    }
  }

  check.property("filtered_degree_matches_index_oracle");
  for (int t = 0; t < 25; ++t) {
    // Single type-I factor, inert prime, so the chain maps directly onto a
    // matrix congruence chain.
    long long h = rand.in(1, 1);
    VarietyData data({IsotypicFactor(AlbertType::I, 1, h, 1)});
    SplittingProfile profile{{{{1, 1}}}};
    int top = static_cast<int>(rand.in(1, 2));
    std::vector<FilteredLevel> chain;
    std::vector<ChainConstraint> cons;
    if (top == 1) {
      chain = {{1, 1, rand.below(2) == 0 ? 1 : 0}};
    } else {
      chain = {{1, 1, 1}, {2, 1, 0}};
    }
    for (const FilteredLevel& c : chain) cons.push_back({PrsSpec(c.r, c.s, static_cast<int>(h)), c.level});
    FilteredSubgroupData fs{{{chain}}};
    auto [card, degree] = filtered_exponents(data, profile, fs);
    long long delta = 0;
    for (const FilteredLevel& c : chain)
      if (c.s >= 1) delta = std::max(delta, static_cast<long long>(c.level));
    CongruenceChain cc(GroupSpec(GroupFamily::Sp, static_cast<int>(h),
                                 Ring::zmod(3, cons.back().level)),
                       cons);
    IndexResult res = congruence_index(cc);
    bool ok = degree - delta == res.predicted_exponent;

    // Cardinality side: the matching torsion subgroup.
    SymplecticSpace S(static_cast<int>(h), Ring::zmod(3, chain.back().level));
    std::vector<Vec> gens;
    for (int j = 1; j <= static_cast<int>(h); ++j) {
      int deepest = 0;
      for (const FilteredLevel& c : chain)
        if (c.r >= j) deepest = std::max(deepest, c.level);
      if (deepest > 0) {
        Vec e(static_cast<size_t>(S.dim()), 0);
        e[static_cast<size_t>(j - 1)] = S.ring.ell_pow(S.ring.exponent() - deepest);
        gens.push_back(std::move(e));
      }
      deepest = 0;
      for (const FilteredLevel& c : chain)
        if (c.s >= j) deepest = std::max(deepest, c.level);
      if (deepest > 0) {
        Vec e(static_cast<size_t>(S.dim()), 0);
        e[static_cast<size_t>(h + j - 1)] = S.ring.ell_pow(S.ring.exponent() - deepest);
        gens.push_back(std::move(e));
      }
    }
    BigInt want = 1;
    for (BigInt i = 0; i < card; ++i) want *= 3;
    ok = ok && TorsionSubgroup(S, gens).cardinality() == want;
    check.count(ok);
  }

  check.property("sup_equals_max_random");
  for (int t = 0; t < 1000; ++t) {
    size_t rows = static_cast<size_t>(rand.in(1, 2));
    std::vector<std::vector<long long>> a, b;
    for (size_t i = 0; i < rows; ++i) {
      size_t len = static_cast<size_t>(rand.in(1, 3));
      std::vector<long long> ra, rb;
      for (size_t j = 0; j < len; ++j) {
        ra.push_back(rand.in(1, 5));
        rb.push_back(rand.in(1, 5));
      }
      a.push_back(std::move(ra));
      b.push_back(std::move(rb));
    }
    auto [lhs, rhs] = sup_equals_max_check(a, b, static_cast<int>(rand.in(1, 4)));
    check.count(lhs == rhs);
  }

  check.property("sigma_members_match_membership_test");
  {
    std::vector<long long> members = sigma_members(2000);
    bool sorted = std::is_sorted(members.begin(), members.end());
    check.count(sorted);
    for (long long g = 1; g <= 2000; ++g) {
      bool listed = std::binary_search(members.begin(), members.end(), g);
      check.count(listed == sigma_contains(g));
    }
    check.count(sigma_members(15) == std::vector<long long>({4, 10}));
    check.count(sigma_members(130) == std::vector<long long>({4, 10, 16, 32, 64, 108, 126}));
  }

  check.property("hypothesis_examples");
  {
    check.count(mt_hypothesis_check(IsotypicFactor(AlbertType::I, 5, 3, 1), false) ==
                std::vector<int>({1}));
    check.count(mt_hypothesis_check(IsotypicFactor(AlbertType::I, 1, 4, 1), false) ==
                std::vector<int>({}));
    check.count(mt_hypothesis_check(IsotypicFactor(AlbertType::I, 1, 6, 1), true) ==
                std::vector<int>({2, 3}));
  }

  check.property("degree_bound_examples_and_laws");
  {
    check.count(torsion_degree_lower_bound(12, 1, BigRational(1)) == BigRational(144));
    check.count(torsion_degree_lower_bound(12, 2, make_rational(BigInt(1), BigInt(2))) ==
                BigRational(5184));
    check.count(torsion_degree_lower_bound(1, 3, make_rational(BigInt(1), BigInt(7))) ==
                BigRational(1));
    bool monotone = true;
    for (long long n = 1; n < 300; ++n)
      monotone = monotone && torsion_degree_lower_bound(n, 2, BigRational(1)) <=
                                 torsion_degree_lower_bound(n + 1, 2, BigRational(1));
    check.count(monotone);
    BigRational c1 = make_rational(BigInt(1), BigInt(2));
    bool multiplicative = true;
    for (long long m = 1; m <= 50; ++m)
      for (long long n = 1; n <= 50; ++n) {
        if (std::gcd(m, n) != 1) continue;
        multiplicative = multiplicative &&
                         torsion_degree_lower_bound(m * n, 1, c1) ==
                             torsion_degree_lower_bound(m, 1, c1) *
                                 torsion_degree_lower_bound(n, 1, c1);
      }
    check.count(multiplicative);
  }

  check.property("masser_examples");
  {
    check.count(masser_bound(VarietyData({IsotypicFactor(AlbertType::I, 1, 1, 1)})) == 1);
    check.count(masser_bound(VarietyData({IsotypicFactor(AlbertType::II, 2, 3, 1)})) == 12);
    check.count(masser_bound(VarietyData({IsotypicFactor(AlbertType::I, 1, 1, 2),
                                          IsotypicFactor(AlbertType::II, 1, 1, 1)})) == 4);
  }
  return result;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"pairing", "isotropy", "groups",
                                                 "lifting", "cn", "gamma"};
  return names;
}

std::vector<SuiteResult> run_verify(const std::string& name, std::uint64_t seed) {
  static const std::map<std::string, SuiteResult (*)(std::uint64_t)> table = {
      {"pairing", suite_pairing}, {"isotropy", suite_isotropy}, {"groups", suite_groups},
      {"lifting", suite_lifting}, {"cn", suite_cn},             {"gamma", suite_gamma}};
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const std::string& suite : verify_suite_names())
      out.push_back(table.at(suite)(seed));
    return out;
  }
  auto it = table.find(name);
  if (it == table.end()) throw UnknownSuite("no verification suite named \"" + name + "\"");
  return {it->second(seed)};
}

}  // namespace avgamma
