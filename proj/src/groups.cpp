#include "avgamma/groups.hpp"

#include <queue>
#include <string>
#include <unordered_set>

namespace avgamma {

namespace {

constexpr long long kEnumerationCap = 10000000;  // 10^7

Matrix j_form(const Ring& R, int g) {
  Matrix j(R, 2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j.at(i, g + i) = R.one();
    j.at(g + i, i) = R.neg(R.one());
  }
  return j;
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  long long p = q;  // smallest prime factor
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  while (q % p == 0) q /= p;
  return q == 1;
}

BigInt sp_order_formula(int g, long long q) {
  BigInt n = 1;
  BigInt bq = q;
  for (int i = 0; i < g * g; ++i) n *= bq;
  BigInt qpow = 1;
  for (int i = 1; i <= g; ++i) {
    qpow = qpow * bq * bq;
    n *= qpow - 1;
  }
  return n;
}

BigInt sl_order_formula(int m, long long q) {
  BigInt n = 1;
  BigInt bq = q;
  for (int i = 0; i < m * (m - 1) / 2; ++i) n *= bq;
  BigInt qpow = bq;
  for (int i = 2; i <= m; ++i) {
    qpow *= bq;
    n *= qpow - 1;
  }
  return n;
}

BigInt big_pow(long long base, long long exp) {
  BigInt r = 1;
  for (long long i = 0; i < exp; ++i) r *= base;
  return r;
}

// x^T J y for the standard form, rows of length 2g.
Elt pair_rows(const Ring& R, const std::vector<Elt>& x, const std::vector<Elt>& y, int g) {
  Elt acc = R.zero();
  for (int t = 0; t < g; ++t) {
    acc = R.add(acc, R.mul(x[t], y[g + t]));
    acc = R.sub(acc, R.mul(x[g + t], y[t]));
  }
  return acc;
}

// Row-major odometer step over codes [0, card); returns false on wrap-around.
bool advance(std::vector<Elt>& v, long long card) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (++v[i] < card) return true;
    v[i] = 0;
  }
  return false;
}

void for_each_symplectic(const GroupSpec& spec,
                         const std::function<void(const Matrix&)>& fn) {
  const Ring& R = spec.ring;
  const int g = spec.g;
  const int m = 2 * g;
  const long long card = R.card();
  const bool gsp = spec.family == GroupFamily::GSp;

  std::vector<std::vector<Elt>> rows(m, std::vector<Elt>(m, 0));
  Matrix buf(R, m, m);

  // Fills row k and recurses; mult is the similitude factor once known
  // (determined when row g pairs with row 0), or -1 before that.
  std::function<void(int, Elt)> fill = [&](int k, Elt mult) {
    if (k == m) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) buf.at(i, j) = rows[i][j];
      fn(buf);
      return;
    }
    std::vector<Elt>& row = rows[k];
    std::fill(row.begin(), row.end(), 0);
    do {
      Elt c = mult;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        Elt v = pair_rows(R, rows[i], row, g);
        if (k >= g && i == k - g) {
          if (c < 0) {
            // First hyperbolic pair fixes the multiplier candidate.
            c = v;
            ok = gsp ? R.is_unit(c) : c == R.one();
          } else {
            ok = (v == c);
          }
        } else {
          ok = (v == R.zero());
        }
      }
      if (ok) fill(k + 1, c);
    } while (advance(row, card));
  };
  fill(0, -1);
}

void for_each_sl(const GroupSpec& spec, const std::function<void(const Matrix&)>& fn) {
  const Ring& R = spec.ring;
  const int m = spec.g;
  const long long card = R.card();
  std::vector<Elt> entries(static_cast<size_t>(m) * m, 0);
  Matrix buf(R, m, m);
  do {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) buf.at(i, j) = entries[static_cast<size_t>(i) * m + j];
    if (det(buf) == R.one()) fn(buf);
  } while (advance(entries, card));
}

std::string encode(const Matrix& m) {
  std::string key;
  key.reserve(static_cast<size_t>(m.rows()) * m.cols() * 4);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      auto v = static_cast<std::uint32_t>(m.at(i, j));
      for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
  return key;
}

// Breadth-first subgroup closure of `gens` (all must lie in a common group).
long long bfs_closure_size(const Ring& R, int n, const std::vector<Matrix>& gens,
                           long long cap) {
  std::unordered_set<std::string> seen;
  std::queue<Matrix> work;
  Matrix id = Matrix::identity(R, n);
  seen.insert(encode(id));
  work.push(id);
  while (!work.empty()) {
    Matrix cur = work.front();
    work.pop();
    for (const Matrix& gmat : gens) {
      Matrix nxt = cur * gmat;
      if (seen.insert(encode(nxt)).second) {
        if (static_cast<long long>(seen.size()) > cap)
          throw TooLarge("multiplicative closure exceeded the enumeration cap");
        work.push(nxt);
      }
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace

GroupSpec::GroupSpec(GroupFamily family_, int g_, const Ring& ring_)
    : family(family_), g(g_), ring(ring_) {
  if (g < 1) throw DimensionMismatch("group rank must be at least 1");
}

const char* family_name(GroupFamily family) {
  switch (family) {
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::GSp: return "GSp";
    default: return "SL";
  }
}

Elt multiplier(const Matrix& m, int g) {
  if (g < 1 || m.rows() != 2 * g || m.cols() != 2 * g)
    throw DimensionMismatch("similitude multiplier needs a 2g x 2g matrix");
  const Ring& R = m.ring();
  Matrix jm(R, 2 * g, 2 * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < 2 * g; ++j) {
      jm.at(i, j) = m.at(g + i, j);
      jm.at(g + i, j) = R.neg(m.at(i, j));
    }
  Matrix t = m.transpose() * jm;  // t = M^T J M
  Elt c = t.at(0, g);
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) {
      Elt want = R.zero();
      if (j == i + g) want = c;
      if (i == j + g) want = R.neg(c);
      if (t.at(i, j) != want)
        throw NotSimilitude("matrix does not scale the symplectic form");
    }
  return c;
}

bool is_in_group(const Matrix& m, const GroupSpec& spec) {
  int n = spec.matrix_size();
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch("matrix size does not match the group");
  if (m.ring() != spec.ring)
    throw DimensionMismatch("matrix ring does not match the group");
  if (spec.family == GroupFamily::SL) return det(m) == spec.ring.one();
  Elt c;
  try {
    c = multiplier(m, spec.g);
  } catch (const NotSimilitude&) {
    return false;
  }
  if (spec.family == GroupFamily::Sp) return c == spec.ring.one();
  return spec.ring.is_unit(c);
}

BigInt sp_order(int g, long long q) {
  if (g < 1 || g > 3 || q < 2 || q > 9 || !is_prime_power(q))
    throw UnsupportedSize("symplectic order table covers g <= 3, prime powers q <= 9");
  return sp_order_formula(g, q);
}

BigInt sl_order(int m, long long q) {
  if (m < 2 || m > 4 || q < 2 || q > 9 || !is_prime_power(q))
    throw UnsupportedSize("special linear order table covers 2 <= m <= 4, prime powers q <= 9");
  return sl_order_formula(m, q);
}

BigInt group_order(const GroupSpec& spec) {
  const Ring& R = spec.ring;
  long long q = R.card();
  if (!R.is_zmod() || R.exponent() == 1) {
    switch (spec.family) {
      case GroupFamily::Sp: return sp_order_formula(spec.g, q);
      case GroupFamily::GSp: return sp_order_formula(spec.g, q) * (q - 1);
      default:
        return spec.g == 1 ? BigInt(1) : sl_order_formula(spec.g, q);
    }
  }
  long long ell = R.ell();
  long long n = R.exponent();
  long long dim;
  BigInt base;
  switch (spec.family) {
    case GroupFamily::Sp:
      dim = 2LL * spec.g * spec.g + spec.g;
      base = sp_order_formula(spec.g, ell);
      break;
    case GroupFamily::GSp:
      dim = 2LL * spec.g * spec.g + spec.g + 1;
      base = sp_order_formula(spec.g, ell) * (ell - 1);
      break;
    default:
      dim = 1LL * spec.g * spec.g - 1;
      base = spec.g == 1 ? BigInt(1) : sl_order_formula(spec.g, ell);
      break;
  }
  return base * big_pow(ell, dim * (n - 1));
}

PrsSpec::PrsSpec(int r_, int s_, int g_) : r(r_), s(s_), g(g_) {
  if (g < 1 || s < 0 || s > r || r > g)
    throw InvariantViolation("stabilizer parameters need 0 <= s <= r <= g");
}

long long prs_codim(const PrsSpec& p) {
  long long r = p.r, s = p.s, g = p.g;
  return 2 * s * g + 2 * r * g - r * s - r * (r - 1) / 2 - s * (s - 1) / 2;
}

bool prs_membership(const Matrix& m, const PrsSpec& p) {
  if (m.rows() != 2 * p.g || m.cols() != 2 * p.g)
    throw DimensionMismatch("matrix size does not match the stabilizer rank");
  const Ring& R = m.ring();
  auto fixes_column = [&](int j) {
    for (int i = 0; i < 2 * p.g; ++i) {
      Elt want = (i == j) ? R.one() : R.zero();
      if (m.at(i, j) != want) return false;
    }
    return true;
  };
  for (int j = 0; j < p.r; ++j)
    if (!fixes_column(j)) return false;
  for (int j = 0; j < p.s; ++j)
    if (!fixes_column(p.g + j)) return false;
  return true;
}

void for_each_element(const GroupSpec& spec,
                      const std::function<void(const Matrix&)>& fn) {
  if (spec.family == GroupFamily::SL)
    for_each_sl(spec, fn);
  else
    for_each_symplectic(spec, fn);
}

std::vector<Matrix> enumerate_group(const GroupSpec& spec) {
  if (group_order(spec) > kEnumerationCap)
    throw TooLarge("group order exceeds the enumeration cap");
  std::vector<Matrix> out;
  for_each_element(spec, [&](const Matrix& m) { out.push_back(m); });
  return out;
}

CongruenceChain::CongruenceChain(GroupSpec ambient_,
                                 std::vector<ChainConstraint> constraints_)
    : ambient(std::move(ambient_)), constraints(std::move(constraints_)) {
  if (ambient.family != GroupFamily::Sp)
    throw InvariantViolation("congruence chains live in a symplectic ambient group");
  if (!ambient.ring.is_zmod())
    throw InvariantViolation("congruence chains need Z/ell^n coefficients");
  if (constraints.empty())
    throw InvariantViolation("a congruence chain needs at least one constraint");
  int prev_level = 0;
  for (size_t i = 0; i < constraints.size(); ++i) {
    const ChainConstraint& c = constraints[i];
    if (c.subgroup.g != ambient.g)
      throw InvariantViolation("constraint rank does not match the ambient group");
    if (c.level <= prev_level)
      throw InvariantViolation("constraint levels must be strictly increasing");
    prev_level = c.level;
    if (i > 0 && (c.subgroup.r > constraints[i - 1].subgroup.r ||
                  c.subgroup.s > constraints[i - 1].subgroup.s))
      throw InvariantViolation("stabilizers must widen along the chain");
  }
  if (ambient.ring.exponent() != constraints.back().level)
    throw InvariantViolation("ambient modulus must equal the deepest constraint level");
}

IndexResult congruence_index(const CongruenceChain& chain) {
  if (group_order(chain.ambient) > kEnumerationCap)
    throw TooLarge("ambient group exceeds the enumeration cap");
  const Ring& R = chain.ambient.ring;
  const int g = chain.ambient.g;

  // Column j of M must be congruent to e_j at the constraint's level for
  // every vector the stabilizer pins down.
  auto satisfies = [&](const Matrix& m, const ChainConstraint& c) {
    auto column_fixed = [&](int j) {
      for (int i = 0; i < 2 * g; ++i) {
        Elt diff = R.sub(m.at(i, j), (i == j) ? R.one() : R.zero());
        if (R.valuation(diff) < c.level) return false;
      }
      return true;
    };
    for (int j = 0; j < c.subgroup.r; ++j)
      if (!column_fixed(j)) return false;
    for (int j = 0; j < c.subgroup.s; ++j)
      if (!column_fixed(g + j)) return false;
    return true;
  };

  long long total = 0, kept = 0;
  for_each_element(chain.ambient, [&](const Matrix& m) {
    ++total;
    for (const ChainConstraint& c : chain.constraints)
      if (!satisfies(m, c)) return;
    ++kept;
  });
  if (kept == 0 || total % kept != 0)
    throw InvariantViolation("constrained subset does not divide the ambient order");

  long long predicted = 0;
  int prev = 0;
  for (const ChainConstraint& c : chain.constraints) {
    predicted += prs_codim(c.subgroup) * (c.level - prev);
    prev = c.level;
  }
  return {BigInt(total / kept), predicted};
}

D0Factorization d0_factorize(const Matrix& m, int g) {
  Elt alpha = multiplier(m, g);
  const Ring& R = m.ring();
  if (!R.is_unit(alpha))
    throw NonUnitMultiplier("similitude multiplier is not invertible");
  Elt ainv = R.inv(alpha);
  Matrix s = m;
  for (int i = g; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) s.at(i, j) = R.mul(ainv, s.at(i, j));
  if (!is_in_group(s, GroupSpec(GroupFamily::Sp, g, R)))
    throw InvariantViolation("factor failed the symplectic check");
  return {alpha, s};
}

Matrix canonical_group_lift(const Matrix& m, const GroupSpec& target) {
  const Ring& R = target.ring;
  if (!R.is_zmod() || !m.ring().is_zmod() || m.ring().ell() != R.ell() ||
      m.ring().exponent() > R.exponent())
    throw DimensionMismatch("lift target must refine the matrix modulus");
  int n = target.matrix_size();
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch("matrix size does not match the group");

  Matrix lifted(R, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lifted.at(i, j) = m.at(i, j);  // same residue code

  if (target.family == GroupFamily::SL) {
    Elt d = det(lifted);
    if (!R.is_unit(d)) throw InvariantViolation("lifted determinant is not a unit");
    Elt fix = R.inv(d);
    for (int j = 0; j < n; ++j) lifted.at(n - 1, j) = R.mul(fix, lifted.at(n - 1, j));
    return lifted;
  }

  // Symplectic repair: quadratic correction steps drive M^T J M back to J.
  // Each step multiplies by I + J E / 2 and doubles the error valuation.
  if (R.ell() == 2)
    throw UnsupportedSize("symplectic lift repair needs an odd prime");
  int g = target.g;
  Matrix j = j_form(R, g);
  Elt half = R.inv(R.from_int(2));
  for (int iter = 0; iter <= R.exponent() + 1; ++iter) {
    Matrix err = lifted.transpose() * j * lifted - j;
    if (err.is_zero()) return lifted;
    int minval = R.exponent();
    for (int a = 0; a < 2 * g; ++a)
      for (int b = 0; b < 2 * g; ++b)
        if (err.at(a, b) != 0) minval = std::min(minval, R.valuation(err.at(a, b)));
    if (minval < 1)
      throw InvariantViolation("matrix is not symplectic modulo ell");
    Matrix corr = Matrix::identity(R, 2 * g) + (j * err).scaled(half);
    lifted = lifted * corr;
  }
  throw InvariantViolation("symplectic repair did not converge");
}

LiftResult lift_check(const GroupSpec& spec, const std::vector<Matrix>& generators) {
  if (spec.family == GroupFamily::GSp)
    throw UnsupportedSize("lift check covers the Sp and SL families");
  if (!spec.ring.is_zmod())
    throw UnsupportedSize("lift check needs Z/ell^n coefficients");

  BigInt full = group_order(spec);
  if (full > kEnumerationCap) throw TooLarge("group order exceeds the enumeration cap");
  long long cap = static_cast<long long>(full);

  long long ell = spec.ring.ell();
  GroupSpec mod_spec(spec.family, spec.g, Ring::zmod(ell, 1));
  for (const Matrix& gen : generators)
    if (!is_in_group(gen, mod_spec))
      throw InvariantViolation("generator is not in the mod-ell group");

  BigInt mod_order = group_order(mod_spec);
  long long mod_closure =
      bfs_closure_size(mod_spec.ring, mod_spec.matrix_size(), generators,
                       static_cast<long long>(mod_order));
  bool lemma = ell >= 5 && BigInt(mod_closure) == mod_order;

  std::vector<Matrix> lifts;
  lifts.reserve(generators.size());
  for (const Matrix& gen : generators) lifts.push_back(canonical_group_lift(gen, spec));
  long long closure = bfs_closure_size(spec.ring, spec.matrix_size(), lifts, cap);

  return {closure == cap, lemma, BigInt(closure), full};
}

}  // namespace avgamma
