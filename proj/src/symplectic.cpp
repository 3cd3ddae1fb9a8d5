#include "avgamma/symplectic.hpp"

#include <algorithm>
#include <utility>

namespace avgamma {

SymplecticSpace::SymplecticSpace(int h_, Ring ring_) : h(h_), ring(std::move(ring_)) {
  if (h < 0) throw DimensionMismatch("symplectic space needs h >= 0");
  if (!ring.is_zmod()) throw InvariantViolation("symplectic spaces live over Z/ell^n");
}

Matrix SymplecticSpace::j_matrix() const {
  Matrix j(ring, dim(), dim());
  for (int i = 0; i < h; ++i) {
    j.at(i, h + i) = ring.one();
    j.at(h + i, i) = ring.neg(ring.one());
  }
  return j;
}

Elt SymplecticSpace::pairing(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw DimensionMismatch("pairing expects vectors of length 2h");
  Elt acc = 0;
  for (int i = 0; i < h; ++i) {
    acc = ring.add(acc, ring.mul(x[i], y[h + i]));
    acc = ring.sub(acc, ring.mul(x[h + i], y[i]));
  }
  return acc;
}

bool SymplecticSpace::is_primitive(const Vec& x) const {
  return std::any_of(x.begin(), x.end(), [&](Elt v) { return ring.is_unit(v); });
}

TorsionSubgroup::TorsionSubgroup(SymplecticSpace space, std::vector<Vec> generators)
    : space_(std::move(space)), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (static_cast<int>(g.size()) != space_.dim())
      throw DimensionMismatch("subgroup generator of wrong length");
    for (Elt& e : g) e = space_.ring.from_int(e);
  }
}

const Matrix& TorsionSubgroup::canonical_basis() const {
  if (!basis_) {
    const int d = space_.dim();
    int rows = std::max<int>(static_cast<int>(gens_.size()), d);
    Matrix m(space_.ring, rows, d);
    for (size_t i = 0; i < gens_.size(); ++i) m.set_row(static_cast<int>(i), gens_[i]);
    Matrix h = howell_form(m).h;  // at most d nonzero rows, zero rows last
    Matrix out(space_.ring, d, d);
    for (int i = 0; i < d; ++i) out.set_row(i, h.row(i));
    basis_ = out;
  }
  return *basis_;
}

const SnfData& TorsionSubgroup::snf() const {
  if (!snf_) {
    const int n = space_.ring.exponent();
    SnfData data{{}, {}, Matrix(space_.ring, 0, space_.dim())};
    if (!gens_.empty()) {
      Matrix m(space_.ring, static_cast<int>(gens_.size()), space_.dim());
      for (size_t i = 0; i < gens_.size(); ++i) m.set_row(static_cast<int>(i), gens_[i]);
      SmithResult s = smith_form(m);
      data.valuations = s.valuations;
      for (int v : s.valuations) data.orders.push_back(n - v);
      data.primitive_rows = s.basis_rows;
    }
    snf_ = std::move(data);
  }
  return *snf_;
}

bool TorsionSubgroup::contains(const Vec& x) const {
  if (static_cast<int>(x.size()) != space_.dim())
    throw DimensionMismatch("membership test on vector of wrong length");
  Vec r = x;
  for (Elt& e : r) e = space_.ring.from_int(e);
  return in_row_span(canonical_basis(), r);
}

bool TorsionSubgroup::operator==(const TorsionSubgroup& o) const {
  return space_.h == o.space_.h && space_.ring == o.space_.ring &&
         canonical_basis() == o.canonical_basis();
}

BigInt TorsionSubgroup::cardinality() const {
  BigInt c = 1;
  for (int m : snf().orders)
    for (int t = 0; t < m; ++t) c *= space_.ring.ell();
  return c;
}

std::vector<Vec> TorsionSubgroup::elements(long long cap) const {
  const SnfData& s = snf();
  const Ring& R = space_.ring;
  const int d = space_.dim();
  long long total = 1;
  for (int m : s.orders)
    for (int t = 0; t < m; ++t) {
      total *= R.ell();
      if (total > cap)
        throw TooLarge("subgroup too large to enumerate (cap " + std::to_string(cap) + ")");
    }

  const int k = static_cast<int>(s.orders.size());
  std::vector<Vec> scaled(k);
  std::vector<long long> range(k);
  for (int i = 0; i < k; ++i) {
    Elt f = R.ell_pow(s.valuations[i]);
    scaled[i] = s.primitive_rows.row(i);
    for (Elt& e : scaled[i]) e = R.mul(e, f);
    range[i] = 1;
    for (int t = 0; t < s.orders[i]; ++t) range[i] *= R.ell();
  }

  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<long long> ctr(k, 0);
  for (;;) {
    Vec e(d, 0);
    for (int i = 0; i < k; ++i) {
      Elt c = R.from_int(ctr[i]);
      if (c == 0) continue;
      for (int j = 0; j < d; ++j) e[j] = R.add(e[j], R.mul(c, scaled[i][j]));
    }
    out.push_back(std::move(e));
    int pos = k - 1;
    while (pos >= 0 && ++ctr[pos] == range[pos]) ctr[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

GroupStructure group_structure(const TorsionSubgroup& H) { return {H.snf().orders}; }

namespace {

// Valuation of the pairing of two primitive invariant-factor generators; the
// level-matched pairing invariants only ever consume it truncated at the
// smaller of the two orders.
int pair_valuation(const TorsionSubgroup& H, int i, int j) {
  const SnfData& s = H.snf();
  return H.space().ring.valuation(
      H.space().pairing(s.primitive_rows.row(i), s.primitive_rows.row(j)));
}

}  // namespace

int m1_invariant(const TorsionSubgroup& H) {
  const SnfData& s = H.snf();
  int best = 0;
  for (size_t i = 0; i < s.orders.size(); ++i)
    for (size_t j = i + 1; j < s.orders.size(); ++j) {
      int cap = std::min(s.orders[i], s.orders[j]);
      best = std::max(best, cap - pair_valuation(H, static_cast<int>(i), static_cast<int>(j)));
    }
  return best;
}

int m_invariant(const TorsionSubgroup& H) {
  const SnfData& s = H.snf();
  int best = 0;
  for (size_t i = 0; i < s.orders.size(); ++i)
    for (size_t j = i + 1; j < s.orders.size(); ++j)
      if (pair_valuation(H, static_cast<int>(i), static_cast<int>(j)) == 0)
        best = std::max(best, std::min(s.orders[i], s.orders[j]));
  return best;
}

bool is_totally_isotropic(const TorsionSubgroup& H) { return m1_invariant(H) == 0; }

bool scaled_isotropy_check(const TorsionSubgroup& H) {
  const Ring& R = H.space().ring;
  Elt f = R.ell_pow(m1_invariant(H));
  std::vector<Vec> scaled = H.generators();
  for (Vec& g : scaled)
    for (Elt& e : g) e = R.mul(e, f);
  return is_totally_isotropic(TorsionSubgroup(H.space(), scaled));
}

namespace {

// Solves phi(w_t, y) = rhs_t for the given constraint vectors, assuming the
// w_t stay independent modulo ell (so unit pivots never run out).  Free
// coordinates are pinned to zero, making the answer deterministic.
Vec solve_pairing_system(const SymplecticSpace& S, const std::vector<Vec>& ws, const Vec& rhs_in) {
  const Ring& R = S.ring;
  const int d = S.dim(), h = S.h;
  const int k = static_cast<int>(ws.size());
  std::vector<Vec> rows(k);
  for (int t = 0; t < k; ++t) {
    rows[t].resize(d);
    for (int j = 0; j < h; ++j) {
      rows[t][j] = R.neg(ws[t][h + j]);  // row = w^T J
      rows[t][h + j] = ws[t][j];
    }
  }
  Vec rhs = rhs_in;
  std::vector<int> pivcol(k, -1);
  for (int t = 0; t < k; ++t) {
    int c = -1;
    for (int j = 0; j < d && c < 0; ++j) {
      if (!R.is_unit(rows[t][j])) continue;
      bool used = false;
      for (int s = 0; s < t; ++s) used = used || pivcol[s] == j;
      if (!used) c = j;
    }
    if (c < 0) throw InvariantViolation("symplectic completion: dual system lost unit pivots");
    Elt inv = R.inv(rows[t][c]);
    for (Elt& v : rows[t]) v = R.mul(v, inv);
    rhs[t] = R.mul(rhs[t], inv);
    for (int i = 0; i < k; ++i) {
      if (i == t) continue;
      Elt f = rows[i][c];
      if (f == 0) continue;
      for (int j = 0; j < d; ++j) rows[i][j] = R.sub(rows[i][j], R.mul(f, rows[t][j]));
      rhs[i] = R.sub(rhs[i], R.mul(f, rhs[t]));
    }
    pivcol[t] = c;
  }
  Vec y(d, 0);
  for (int t = 0; t < k; ++t) y[pivcol[t]] = rhs[t];
  for (int t = 0; t < k; ++t)
    if (S.pairing(ws[t], y) != rhs_in[t])
      throw InvariantViolation("symplectic completion: dual system verification failed");
  return y;
}

bool independent_mod_ell(const SymplecticSpace& S, const std::vector<Vec>& fam) {
  if (fam.empty()) return true;
  Ring f = Ring::zmod(S.ring.ell(), 1);
  std::vector<Vec> rows;
  for (const Vec& v : fam) {
    Vec r(v.size());
    for (size_t j = 0; j < v.size(); ++j) r[j] = f.from_int(v[j]);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (size_t c = 0; c < rows[0].size() && rank < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        p = static_cast<int>(i);
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    Elt inv = f.inv(rows[rank][c]);
    for (Elt& v : rows[rank]) v = f.mul(v, inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank) continue;
      Elt fac = rows[i][c];
      if (fac == 0) continue;
      for (size_t j = 0; j < rows[i].size(); ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(fac, rows[rank][j]));
    }
    ++rank;
  }
  return rank == static_cast<int>(rows.size());
}

}  // namespace

std::vector<Vec> complete_symplectic_basis(const SymplecticSpace& S,
                                           const std::vector<Vec>& isotropic_family) {
  const Ring& R = S.ring;
  const int h = S.h, d = S.dim();
  const int r = static_cast<int>(isotropic_family.size());

  for (const Vec& v : isotropic_family) {
    if (static_cast<int>(v.size()) != d)
      throw DimensionMismatch("symplectic completion: vector of wrong length");
    if (!S.is_primitive(v)) throw NotPrimitive("symplectic completion: non-primitive input vector");
  }
  if (!independent_mod_ell(S, isotropic_family))
    throw NotPrimitive("symplectic completion: inputs dependent modulo ell");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (S.pairing(isotropic_family[i], isotropic_family[j]) != 0)
        throw NotIsotropic("symplectic completion: inputs do not pair to zero");
  if (r > h) throw InvariantViolation("symplectic completion: too many independent isotropic vectors");

  std::vector<Vec> xs = isotropic_family, ys;
  for (int j = 0; j < h; ++j) {
    if (static_cast<int>(xs.size()) == j) {
      // Project standard basis vectors off the completed hyperbolic pairs and
      // take the first primitive survivor as the next x.
      bool found = false;
      for (int k = 0; k < d && !found; ++k) {
        Vec cand(d, 0);
        cand[k] = R.one();
        for (int m = 0; m < j; ++m) {
          Elt a = S.pairing(cand, ys[m]);  // coefficient along x_m
          Elt b = S.pairing(cand, xs[m]);  // coefficient along y_m (negated)
          for (int t = 0; t < d; ++t) {
            cand[t] = R.sub(cand[t], R.mul(a, xs[m][t]));
            cand[t] = R.add(cand[t], R.mul(b, ys[m][t]));
          }
        }
        if (S.is_primitive(cand)) {
          xs.push_back(std::move(cand));
          found = true;
        }
      }
      if (!found) throw InvariantViolation("symplectic completion: no primitive complement vector");
    }
    // Dual vector y_j: pairs to 1 with x_j, to 0 with every other known
    // constraint vector.
    std::vector<Vec> ws = xs;
    Vec rhs(xs.size(), 0);
    rhs[j] = R.one();
    for (int m = 0; m < j; ++m) {
      ws.push_back(ys[m]);
      rhs.push_back(0);
    }
    ys.push_back(solve_pairing_system(S, ws, rhs));
  }

  std::vector<Vec> out = xs;
  out.insert(out.end(), ys.begin(), ys.end());
  return out;
}

namespace {

// Recursive layer of the hull construction: returns (valuation, primitive
// vector) pairs whose scaled spans assemble the closure.  The head generator
// of smallest valuation is completed to a symplectic basis; total isotropy at
// matched levels forces the dual coordinate of every other generator to
// vanish, so the tail lives in the complementary symplectic space of rank h-1.
std::vector<std::pair<int, Vec>> hull_levels(const SymplecticSpace& S,
                                             const std::vector<Vec>& gens) {
  TorsionSubgroup H(S, gens);
  const SnfData& s = H.snf();
  if (s.orders.empty()) return {};
  const Ring& R = S.ring;
  const int h = S.h, d = S.dim();
  const int k = static_cast<int>(s.orders.size());

  Vec q1 = s.primitive_rows.row(0);
  int v1 = s.valuations[0];
  std::vector<Vec> basis = complete_symplectic_basis(S, {q1});
  Matrix b(R, d, d);
  for (int i = 0; i < d; ++i) b.set_row(i, basis[i]);
  Matrix binv = mat_inverse(b);

  std::vector<Vec> sub_gens;
  for (int j = 1; j < k; ++j) {
    Elt f = R.ell_pow(s.valuations[j]);
    Vec bj = s.primitive_rows.row(j);
    for (Elt& e : bj) e = R.mul(e, f);
    Vec c(d, 0);
    for (int t = 0; t < d; ++t)
      for (int i = 0; i < d; ++i) c[t] = R.add(c[t], R.mul(bj[i], binv.at(i, t)));
    if (c[h] != 0)
      throw InvariantViolation("isotropic hull: generator leaks into the dual coordinate");
    Vec w;
    w.reserve(static_cast<size_t>(d) - 2);
    for (int t = 1; t < h; ++t) w.push_back(c[t]);
    for (int t = h + 1; t < d; ++t) w.push_back(c[t]);
    sub_gens.push_back(std::move(w));
  }

  std::vector<std::pair<int, Vec>> out;
  out.emplace_back(v1, q1);
  for (auto& [v, u] : hull_levels(SymplecticSpace(h - 1, R), sub_gens)) {
    Vec big(d, 0);
    for (int t = 0; t < h - 1; ++t) {
      for (int i = 0; i < d; ++i) {
        big[i] = R.add(big[i], R.mul(u[t], basis[1 + t][i]));
        big[i] = R.add(big[i], R.mul(u[h - 1 + t], basis[h + 1 + t][i]));
      }
    }
    out.emplace_back(v, std::move(big));
  }
  return out;
}

}  // namespace

HullResult isotropic_hull(const TorsionSubgroup& H) {
  if (!is_totally_isotropic(H))
    throw NotIsotropic("isotropic hull requires a totally isotropic subgroup");
  const Ring& R = H.space().ring;
  std::vector<Vec> scaled;
  for (auto& [v, u] : hull_levels(H.space(), H.generators())) {
    Vec s = u;
    Elt f = R.ell_pow(v);
    for (Elt& e : s) e = R.mul(e, f);
    scaled.push_back(std::move(s));
  }
  TorsionSubgroup closure(H.space(), scaled);
  for (const Vec& g : H.generators())
    if (!closure.contains(g))
      throw InvariantViolation("isotropic hull: closure lost a generator");
  if (!is_totally_isotropic(closure))
    throw InvariantViolation("isotropic hull: closure is not isotropic");
  return {std::move(closure), std::move(scaled)};
}

}  // namespace avgamma
