#include "avgamma/lie.hpp"

namespace avgamma {

namespace {

constexpr long long kScanCap = 10000000;  // 10^7

bool square_is_zero(const Matrix& x) {
  const Ring& R = x.ring();
  int n = x.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt acc = R.zero();
      for (int k = 0; k < n; ++k) acc = R.add(acc, R.mul(x.at(i, k), x.at(k, j)));
      if (acc != R.zero()) return false;
    }
  return true;
}

// The 2x2 trace-zero identity: [[a,b],[c,-a]] is the sum of
// [[a,1],[-a^2,-a]], [[0,b-1],[0,0]] and [[0,0],[c+a^2,0]].
std::vector<Matrix> two_by_two_terms(const Ring& R, Elt a, Elt b, Elt c) {
  Elt asq = R.mul(a, a);
  std::vector<Matrix> terms;
  Matrix t1(R, 2, 2);
  t1.at(0, 0) = a;
  t1.at(0, 1) = R.one();
  t1.at(1, 0) = R.neg(asq);
  t1.at(1, 1) = R.neg(a);
  terms.push_back(t1);
  Matrix t2(R, 2, 2);
  t2.at(0, 1) = R.sub(b, R.one());
  terms.push_back(t2);
  Matrix t3(R, 2, 2);
  t3.at(1, 0) = R.add(c, asq);
  terms.push_back(t3);
  return terms;
}

// Trace-zero m x m matrices as sums of square-zero ones: single entries off
// the diagonal, and telescoped consecutive-pair blocks for the diagonal.
// Zero terms are dropped.
std::vector<Matrix> trace_zero_terms(const Matrix& x) {
  const Ring& R = x.ring();
  int m = x.rows();
  std::vector<Matrix> terms;
  if (m == 2) {
    for (Matrix& t : two_by_two_terms(R, x.at(0, 0), x.at(0, 1), x.at(1, 0)))
      if (!t.is_zero()) terms.push_back(std::move(t));
    return terms;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || x.at(i, j) == R.zero()) continue;
      Matrix t(R, m, m);
      t.at(i, j) = x.at(i, j);
      terms.push_back(std::move(t));
    }
  Elt prefix = R.zero();
  for (int i = 0; i + 1 < m; ++i) {
    prefix = R.add(prefix, x.at(i, i));  // diag(prefix, -prefix) at rows i, i+1
    if (prefix == R.zero()) continue;
    for (const Matrix& small : two_by_two_terms(R, prefix, R.zero(), R.zero())) {
      Matrix t(R, m, m);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) t.at(i + a, i + b) = small.at(a, b);
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(LieFamily family_, int m_, long long ell)
    : family(family_), m(m_), field(Ring::zmod(ell, 1)) {
  int min_rank = family == LieFamily::sp ? 1 : 2;
  if (m < min_rank) throw DimensionMismatch("algebra rank too small for the family");
  if (family == LieFamily::so && ell == 2)
    throw UnsupportedSize("antisymmetric family needs odd characteristic");
}

long long LieAlgebraSpec::dimension() const {
  long long mm = m;
  switch (family) {
    case LieFamily::sl: return mm * mm - 1;
    case LieFamily::sp: return 2 * mm * mm + mm;
    default: return mm * (mm - 1) / 2;
  }
}

const char* lie_family_name(LieFamily family) {
  switch (family) {
    case LieFamily::sl: return "sl";
    case LieFamily::sp: return "sp";
    default: return "so";
  }
}

bool in_algebra(const Matrix& x, const LieAlgebraSpec& spec) {
  int n = spec.matrix_size();
  if (x.rows() != n || x.cols() != n)
    throw DimensionMismatch("matrix size does not match the algebra");
  if (x.ring() != spec.field)
    throw DimensionMismatch("matrix ring does not match the algebra");
  const Ring& R = spec.field;
  switch (spec.family) {
    case LieFamily::sl: {
      Elt tr = R.zero();
      for (int i = 0; i < n; ++i) tr = R.add(tr, x.at(i, i));
      return tr == R.zero();
    }
    case LieFamily::sp: {
      // JX symmetric, J the standard form: rows swap with a sign.
      int g = spec.m;
      auto jx = [&](int i, int j) {
        return i < g ? x.at(g + i, j) : R.neg(x.at(i - g, j));
      };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (jx(i, j) != jx(j, i)) return false;
      return true;
    }
    default:
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          if (x.at(i, j) != R.neg(x.at(j, i))) return false;
      return true;
  }
}

std::vector<Matrix> algebra_basis(const LieAlgebraSpec& spec) {
  const Ring& R = spec.field;
  int m = spec.m;
  std::vector<Matrix> basis;
  switch (spec.family) {
    case LieFamily::sl: {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          Matrix b(R, m, m);
          b.at(i, j) = R.one();
          basis.push_back(std::move(b));
        }
      for (int i = 0; i + 1 < m; ++i) {
        Matrix b(R, m, m);
        b.at(i, i) = R.one();
        b.at(i + 1, i + 1) = R.neg(R.one());
        basis.push_back(std::move(b));
      }
      break;
    }
    case LieFamily::sp: {
      int n = 2 * m;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Matrix b(R, n, n);
          b.at(i, j) = R.one();
          b.at(m + j, m + i) = R.neg(R.one());
          basis.push_back(std::move(b));
        }
      for (int blk = 0; blk < 2; ++blk)
        for (int i = 0; i < m; ++i)
          for (int j = i; j < m; ++j) {
            Matrix b(R, n, n);
            int ro = blk == 0 ? 0 : m, co = blk == 0 ? m : 0;
            b.at(ro + i, co + j) = R.one();
            b.at(ro + j, co + i) = R.one();  // idempotent write when i == j
            basis.push_back(std::move(b));
          }
      break;
    }
    default:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          Matrix b(R, m, m);
          b.at(i, j) = R.one();
          b.at(j, i) = R.neg(R.one());
          basis.push_back(std::move(b));
        }
      break;
  }
  return basis;
}

long long cn_span_dimension(const LieAlgebraSpec& spec) {
  const Ring& R = spec.field;
  long long ell = R.ell();
  long long dim = spec.dimension();
  long long count = 1;
  for (long long i = 0; i < dim; ++i) {
    if (count > kScanCap / ell)
      throw TooLarge("algebra is too large for an exhaustive scan");
    count *= ell;
  }

  std::vector<Matrix> basis = algebra_basis(spec);
  int n = spec.matrix_size();
  size_t flat = static_cast<size_t>(n) * n;

  // Reduced spanning rows of the square-zero locus, with pivot positions.
  std::vector<std::vector<Elt>> span;
  std::vector<size_t> pivots;
  auto absorb = [&](const Matrix& x) {
    std::vector<Elt> v(flat);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(i) * n + j] = x.at(i, j);
    for (size_t k = 0; k < span.size(); ++k) {
      Elt c = v[pivots[k]];
      if (c == R.zero()) continue;
      for (size_t t = 0; t < flat; ++t) v[t] = R.sub(v[t], R.mul(c, span[k][t]));
    }
    size_t p = flat;
    for (size_t t = 0; t < flat; ++t)
      if (v[t] != R.zero()) {
        p = t;
        break;
      }
    if (p == flat) return;
    Elt scale = R.inv(v[p]);
    for (size_t t = 0; t < flat; ++t) v[t] = R.mul(scale, v[t]);
    span.push_back(std::move(v));
    pivots.push_back(p);
  };

  // Odometer over basis coefficients; every digit change adds one basis
  // matrix (a wrap from ell-1 to 0 is also a +1 mod ell).
  std::vector<long long> digits(dim, 0);
  Matrix x(R, n, n);
  for (long long step = 1; step < count; ++step) {
    long long pos = dim - 1;
    while (true) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          x.at(i, j) = R.add(x.at(i, j), basis[pos].at(i, j));
      if (++digits[pos] < ell) break;
      digits[pos] = 0;
      --pos;
    }
    if (square_is_zero(x)) {
      absorb(x);
      if (static_cast<long long>(span.size()) == dim) return dim;
    }
  }
  return static_cast<long long>(span.size());
}

std::vector<Matrix> square_zero_decompose(const Matrix& x, const LieAlgebraSpec& spec) {
  if (spec.family == LieFamily::so)
    throw UnsupportedSize("square-zero decomposition covers sl and sp");
  if (!in_algebra(x, spec)) throw NotInAlgebra("matrix is not in the algebra");
  const Ring& R = spec.field;
  if (x.is_zero()) return {};

  if (spec.family == LieFamily::sl) {
    if (spec.m == 2)  // literal identity, zero terms kept
      return two_by_two_terms(R, x.at(0, 0), x.at(0, 1), x.at(1, 0));
    return trace_zero_terms(x);
  }

  // sp_{2m}: blocks [[A,B],[C,-A^T]].  Peel the symmetric corners, a rank-one
  // trace piece, and recurse on the trace-zero remainder of A.
  int m = spec.m;
  int n = 2 * m;
  Elt t = R.zero();
  for (int i = 0; i < m; ++i) t = R.add(t, x.at(i, i));

  std::vector<Matrix> terms;
  Matrix upper(R, n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) upper.at(i, m + j) = x.at(i, m + j);
  upper.at(0, m) = R.sub(upper.at(0, m), t);
  if (!upper.is_zero()) terms.push_back(std::move(upper));

  Matrix lower(R, n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lower.at(m + i, j) = x.at(m + i, j);
  lower.at(m, 0) = R.add(lower.at(m, 0), t);
  if (!lower.is_zero()) terms.push_back(std::move(lower));

  if (t != R.zero()) {
    Matrix corner(R, n, n);
    corner.at(0, 0) = t;
    corner.at(0, m) = t;
    corner.at(m, 0) = R.neg(t);
    corner.at(m, m) = R.neg(t);
    terms.push_back(std::move(corner));
  }

  if (m > 1) {
    Matrix u(R, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) u.at(i, j) = x.at(i, j);
    u.at(0, 0) = R.sub(u.at(0, 0), t);
    if (!u.is_zero())
      for (const Matrix& small : trace_zero_terms(u)) {
        Matrix big(R, n, n);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            big.at(i, j) = small.at(i, j);
            big.at(m + j, m + i) = R.neg(small.at(i, j));
          }
        terms.push_back(std::move(big));
      }
  }
  return terms;
}

}  // namespace avgamma
