// Acceptance gate: twelve criteria, one per invocation (--criterion N), each
// printing a single PASS/FAIL line.  Exit status 0 iff the criterion holds.
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "avgamma/gamma.hpp"
#include "avgamma/groups.hpp"
#include "avgamma/lie.hpp"
#include "avgamma/symplectic.hpp"

using namespace avgamma;

namespace {

class Rand {
 public:
  explicit Rand(std::uint64_t seed) : eng_(seed) {}
  long long below(long long n) { return static_cast<long long>(eng_() % static_cast<std::uint64_t>(n)); }
  long long in(long long lo, long long hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

Vec random_vec(const SymplecticSpace& S, Rand& rand) {
  Vec v(static_cast<size_t>(S.dim()));
  for (Elt& x : v) x = rand.below(S.ring.card());
  return v;
}

Matrix transvection(const SymplecticSpace& S, const Vec& v, Elt c) {
  const Ring& R = S.ring;
  int n = S.dim();
  Matrix t = Matrix::identity(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt jv = j < S.h ? v[static_cast<size_t>(S.h + j)] : R.neg(v[static_cast<size_t>(j - S.h)]);
      t.at(i, j) = R.add(t.at(i, j), R.mul(c, R.mul(v[static_cast<size_t>(i)], jv)));
    }
  return t;
}

Matrix random_symplectic(const SymplecticSpace& S, Rand& rand) {
  Matrix m = Matrix::identity(S.ring, S.dim());
  for (int k = 0; k < 4; ++k)
    m = m * transvection(S, random_vec(S, rand), rand.below(S.ring.card()));
  return m;
}

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

// --------------------------------------------------------------- criteria --

// Closed form vs exhaustive maximization across every splitting profile.
bool criterion_1() {
  for (AlbertType type : {AlbertType::I, AlbertType::II})
    for (long long e = 1; e <= 3; ++e)
      for (long long h = 1; h <= 3; ++h) {
        long long d = type == AlbertType::I ? 1 : 2;
        BigRational formula =
            make_rational(BigInt(2 * d * h * e), BigInt(1 + 2 * e * h * h + h * e));
        if (gamma_simple(type, e, h) != formula) return false;
        VarietyData data({IsotypicFactor(type, e, h, 1)});
        for (const auto& places : all_profiles(e)) {
          auto [value, argmax] = psi_bruteforce(data, SplittingProfile{{places}});
          if (value != formula) return false;
          (void)argmax;
        }
      }
  return true;
}

// Product formula vs direct subset evaluation on every small configuration.
bool criterion_2() {
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

    size_t count = data.factors.size();
    BigRational best(0);
    size_t rows = 0;
    for (unsigned mask = 1; mask < (1u << count); ++mask, ++rows) {
      std::vector<int> subset;
      long long dim_twice = 0;
      for (size_t i = 0; i < count; ++i)
        if (mask & (1u << i)) {
          subset.push_back(static_cast<int>(i + 1));
          dim_twice += 2 * data.factors[i].dim_contribution();
        }
      BigRational value = make_rational(BigInt(dim_twice), BigInt(mt_dimension(data, subset)));
      if (value > best) best = value;

      bool found = false;
      for (const auto& [row_subset, row_value] : report.table)
        if (row_subset == subset) {
          found = true;
          if (row_value != value) return false;
        }
      if (!found) return false;
    }
    if (report.gamma != best) return false;
    if (report.table.size() != rows) return false;
  }
  return true;
}

bool criterion_3() {
  for (long long e = 1; e <= 50; ++e)
    for (long long h = 1; h <= 50; ++h) {
      if (!(gamma_simple(AlbertType::I, e, h) < make_rational(BigInt(2), BigInt(3))))
        return false;
      if (!(gamma_simple(AlbertType::II, e, h) < make_rational(BigInt(4), BigInt(3))))
        return false;
    }
  return true;
}

bool criterion_4() {
  for (int g = 1; g <= 8; ++g) {
    for (int r = 0; r <= g; ++r)
      for (int s = 0; s <= r; ++s) {
        long long direct = 2LL * s * g + 2LL * r * g - 1LL * r * s - 1LL * r * (r - 1) / 2 -
                           1LL * s * (s - 1) / 2;
        long long packed = (r + s) * (4LL * g + 1 - (r + s)) / 2;
        if (prs_codim(PrsSpec(r, s, g)) != direct || direct != packed) return false;
      }
    if (prs_codim(PrsSpec(1, 0, g)) != 2 * g) return false;
    if (prs_codim(PrsSpec(g, g, g)) != 2LL * g * g + g) return false;
  }
  return true;
}

bool criterion_5() {
  for (long long ell : {3LL, 5LL})
    for (int s = 0; s <= 1; ++s) {
      std::array<BigInt, 3> index;
      for (int m = 1; m <= 3; ++m) {
        CongruenceChain chain(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(ell, m)),
                              {{PrsSpec(1, s, 1), m}});
        index[static_cast<size_t>(m - 1)] = congruence_index(chain).index;
      }
      BigInt step = 1;
      for (long long i = 0; i < prs_codim(PrsSpec(1, s, 1)); ++i) step *= ell;
      if (index[1] != index[0] * step || index[2] != index[1] * step) return false;
    }

  CongruenceChain worked(GroupSpec(GroupFamily::Sp, 1, Ring::zmod(3, 2)),
                         {{PrsSpec(1, 1, 1), 1}, {PrsSpec(1, 0, 1), 2}});
  IndexResult res = congruence_index(worked);
  if (res.index != 216 || res.predicted_exponent != 5) return false;
  BigInt predicted = 1;
  for (int i = 0; i < res.predicted_exponent; ++i) predicted *= 3;
  if (predicted != 243) return false;
  return make_rational(res.index, predicted) == make_rational(BigInt(8), BigInt(9));
}

bool criterion_6() {
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
        if (m1_invariant(TorsionSubgroup(S, gens)) != n) return false;
      }

  Rand rand(20260815);
  for (int t = 0; t < 1000; ++t) {
    long long ell = std::array<long long, 3>{2, 3, 5}[static_cast<size_t>(rand.below(3))];
    SymplecticSpace S(static_cast<int>(rand.in(1, 2)),
                      Ring::zmod(ell, static_cast<int>(rand.in(1, 3))));
    std::vector<Vec> gens;
    long long count = rand.in(1, 2 * S.h);
    for (long long i = 0; i < count; ++i) gens.push_back(random_vec(S, rand));
    if (!scaled_isotropy_check(TorsionSubgroup(S, gens))) return false;
  }
  return true;
}

bool criterion_7() {
  Rand rand(424242);
  const std::vector<SymplecticSpace> spaces = {SymplecticSpace(2, Ring::zmod(3, 2)),
                                               SymplecticSpace(3, Ring::zmod(5, 2)),
                                               SymplecticSpace(3, Ring::zmod(3, 3))};
  for (int t = 0; t < 500; ++t) {
    const SymplecticSpace& S = spaces[static_cast<size_t>(rand.below(3))];
    int r = static_cast<int>(rand.in(0, S.h));
    std::vector<Vec> frame = random_isotropic_frame(S, rand, r);
    std::vector<Vec> basis = complete_symplectic_basis(S, frame);
    if (static_cast<int>(basis.size()) != S.dim()) return false;
    for (int i = 0; i < r; ++i)
      if (basis[static_cast<size_t>(i)] != frame[static_cast<size_t>(i)]) return false;
    Matrix j = S.j_matrix();
    for (int i = 0; i < S.dim(); ++i)
      for (int k = 0; k < S.dim(); ++k)
        if (S.pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(k)]) !=
            j.at(i, k))
          return false;
  }

  for (int t = 0; t < 500; ++t) {
    const SymplecticSpace& S = spaces[static_cast<size_t>(rand.below(3))];
    TorsionSubgroup H = random_totally_isotropic(S, rand);
    HullResult hull = isotropic_hull(H);
    if (!is_totally_isotropic(hull.closure)) return false;
    for (const Vec& g : H.generators())
      if (!hull.closure.contains(g)) return false;
    auto exponent_of = [](const TorsionSubgroup& G) {
      const auto& orders = G.snf().orders;
      return orders.empty() ? 0 : orders.front();
    };
    if (exponent_of(hull.closure) != exponent_of(H)) return false;
  }
  return true;
}

bool criterion_8() {
  GroupSpec mod5(GroupFamily::SL, 2, Ring::zmod(5, 1));
  GroupSpec target(GroupFamily::SL, 2, Ring::zmod(5, 2));

  LiftResult full = lift_check(target, enumerate_group(mod5));
  if (!(full.generates_full && full.closure_size == 15000 && full.full_order == 15000))
    return false;

  std::vector<Matrix> borel;
  for (const Matrix& m : enumerate_group(mod5))
    if (m.at(1, 0) == 0) borel.push_back(m);
  LiftResult partial = lift_check(target, borel);
  return !partial.generates_full;
}

bool criterion_9() {
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 2, 5)) != 3) return false;
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::sl, 3, 5)) != 8) return false;
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 1, 5)) != 3) return false;
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 2, 5)) != 10) return false;
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::sp, 2, 3)) != 10) return false;
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::so, 3, 3)) != 0) return false;
  if (cn_span_dimension(LieAlgebraSpec(LieFamily::so, 3, 5)) != 0) return false;

  Rand rand(99);
  const std::vector<LieAlgebraSpec> specs = {
      LieAlgebraSpec(LieFamily::sl, 2, 5), LieAlgebraSpec(LieFamily::sl, 3, 5),
      LieAlgebraSpec(LieFamily::sp, 1, 5), LieAlgebraSpec(LieFamily::sp, 2, 3)};
  for (const LieAlgebraSpec& spec : specs)
    for (int t = 0; t < 100; ++t) {
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
      Matrix sum(R, n, n);
      for (const Matrix& term : square_zero_decompose(x, spec)) {
        if (!(term * term).is_zero()) return false;
        if (!in_algebra(term, spec)) return false;
        sum = sum + term;
      }
      if (sum != x) return false;
    }
  return true;
}

bool criterion_10() {
  const std::vector<long long> frozen = {4,   10,  16,  32,   64,   108,  126,
                                         256, 500, 864, 1024, 1372, 1716};
  std::vector<long long> members = sigma_members(2000);
  if (members != frozen) {
    std::cerr << "criterion 10: computed members up to 2000:";
    for (long long g : members) std::cerr << " " << g;
    std::cerr << "\n  (the reference list omits 512 = (2*2)^5 / 2, which the"
                 " defining equation includes)\n";
    return false;
  }
  return true;
}

bool criterion_11() {
  Rand rand(1311);
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
    if (lhs != rhs) return false;
  }
  return true;
}

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, got);
  return out;
}

bool criterion_12(const std::string& cli, const std::string& configs) {
  const std::vector<std::string> names = {"elliptic.json", "two_factors.json",
                                          "quaternion.json", "split_real.json"};
  for (const std::string& name : names) {
    std::string command = cli + " gamma " + configs + "/" + name;
    std::string first = capture(command);
    std::string second = capture(command);
    if (first.empty() || first != second) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  std::string cli, configs;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc)
      criterion = std::atoi(argv[++i]);
    else if (arg == "--cli" && i + 1 < argc)
      cli = argv[++i];
    else if (arg == "--configs" && i + 1 < argc)
      configs = argv[++i];
  }

  static const std::array<const char*, 12> descriptions = {
      "closed-form gamma equals brute-force psi maximization",
      "product gamma equals exhaustive subset evaluation",
      "gamma bounds: < 2/3 (type I), < 4/3 (type II) for e, h <= 50",
      "stabilizer codimension closed forms agree",
      "congruence index is Hensel-regular; worked chain gives 216 / 3^5",
      "m1 of the full module is n; scaled subgroups are isotropic (1000 trials)",
      "completion Gram is J (500 trials); hull postconditions (500 trials)",
      "canonical lifts of full mod-5 generators close to all 15000 elements",
      "square-zero span full for sl2/sl3/sp2/sp4, zero for so3",
      "exceptional set up to 2000 matches the reference list",
      "box supremum equals prefix maximum on 1000 random instances",
      "gamma reports are byte-identical across consecutive runs",
  };

  if (criterion < 1 || criterion > 12) {
    std::cerr << "usage: acceptance --criterion N [--cli PATH --configs DIR]\n";
    return 2;
  }

  bool ok = false;
  try {
    switch (criterion) {
      case 1: ok = criterion_1(); break;
      case 2: ok = criterion_2(); break;
      case 3: ok = criterion_3(); break;
      case 4: ok = criterion_4(); break;
      case 5: ok = criterion_5(); break;
      case 6: ok = criterion_6(); break;
      case 7: ok = criterion_7(); break;
      case 8: ok = criterion_8(); break;
      case 9: ok = criterion_9(); break;
      case 10: ok = criterion_10(); break;
      case 11: ok = criterion_11(); break;
      case 12: ok = criterion_12(cli, configs); break;
    }
  } catch (const Error& e) {
    std::cerr << "criterion " << criterion << " raised: " << e.what() << "\n";
    ok = false;
  }

  std::cout << "criterion " << criterion << (ok ? " PASS: " : " FAIL: ")
            << descriptions[static_cast<size_t>(criterion - 1)] << "\n";
  return ok ? 0 : 1;
}
