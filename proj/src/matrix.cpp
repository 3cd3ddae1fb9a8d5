#include "avgamma/matrix.hpp"

#include <algorithm>

#include "avgamma/rational.hpp"

namespace avgamma {

Matrix::Matrix(Ring ring, std::initializer_list<std::initializer_list<long long>> data)
    : ring_(ring), rows_(static_cast<int>(data.size())) {
  cols_ = rows_ ? static_cast<int>(data.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : data) {
    if (static_cast<int>(r.size()) != cols_)
      throw DimensionMismatch("matrix literal with ragged rows");
    for (long long v : r) a_.push_back(ring_.from_int(v));
  }
}

Matrix Matrix::identity(Ring ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

std::vector<Elt> Matrix::row(int i) const {
  return std::vector<Elt>(a_.begin() + static_cast<size_t>(i) * cols_,
                          a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

void Matrix::set_row(int i, const std::vector<Elt>& v) {
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<size_t>(i) * cols_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || ring_ != o.ring_)
    throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Elt v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(v, o.at(k, j)));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
    throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_.add(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
    throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_.sub(a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::scaled(Elt c) const {
  Matrix out(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_.mul(a_[i], c);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elt v) { return v == 0; });
}

std::string Matrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + ring_.str(at(i, j));
    s += "]";
  }
  return s + "]";
}

namespace {

Elt det_cofactor(const Matrix& m, std::vector<int> cols, int row) {
  const Ring& R = m.ring();
  if (cols.size() == 1) return m.at(row, cols[0]);
  Elt acc = 0;
  for (size_t k = 0; k < cols.size(); ++k) {
    Elt entry = m.at(row, cols[k]);
    if (entry != 0) {
      std::vector<int> rest;
      rest.reserve(cols.size() - 1);
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != k) rest.push_back(cols[t]);
      Elt sub = det_cofactor(m, std::move(rest), row + 1);
      Elt term = R.mul(entry, sub);
      acc = (k % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
    }
  }
  return acc;
}

// Fraction-free (Bareiss) determinant on integer lifts; exact over Z, reduced
// into the ring at the end.  Used for Zmod rings above the cofactor cutoff.
Elt det_bareiss_lift(const Matrix& m) {
  int n = m.rows();
  std::vector<BigInt> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  BigInt d = a[(n - 1) * n + (n - 1)] * sign;
  BigInt mod = m.ring().modulus();
  BigInt r = d % mod;
  if (r < 0) r += mod;
  return static_cast<Elt>(r);
}

// Plain elimination determinant for fields.
Elt det_field(Matrix a) {
  const Ring& R = a.ring();
  int n = a.rows();
  Elt d = R.one();
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      d = R.neg(d);
    }
    d = R.mul(d, a.at(k, k));
    Elt inv = R.inv(a.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      Elt f = R.mul(a.at(i, k), inv);
      if (f == 0) continue;
      for (int j = k; j < n; ++j) a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(k, j)));
    }
  }
  return d;
}

}  // namespace

Elt det(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.rows() == 0) return m.ring().one();
  if (m.rows() <= 4) {
    std::vector<int> cols(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols[j] = j;
    return det_cofactor(m, std::move(cols), 0);
  }
  return m.ring().is_zmod() ? det_bareiss_lift(m) : det_field(m);
}

Matrix mat_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const Ring& R = m.ring();
  int n = m.rows();
  Matrix a = m, inv = Matrix::identity(R, n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (R.is_unit(a.at(i, k))) {
        p = i;
        break;
      }
    if (p < 0) throw NonInvertible("matrix " + m.str() + " has no unit pivot in column " +
                                   std::to_string(k));
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Elt s = R.inv(a.at(k, k));
    for (int j = 0; j < n; ++j) {
      a.at(k, j) = R.mul(a.at(k, j), s);
      inv.at(k, j) = R.mul(inv.at(k, j), s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      Elt f = a.at(i, k);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(k, j)));
        inv.at(i, j) = R.sub(inv.at(i, j), R.mul(f, inv.at(k, j)));
      }
    }
  }
  return inv;
}

namespace {

// Shared row-operation bookkeeping for howell_form: every mutation of the
// working matrix is mirrored by the same invertible operation on u.
struct RowWorkspace {
  Ring R;
  std::vector<std::vector<Elt>> a;  // working rows
  std::vector<std::vector<Elt>> u;  // transform, square

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void scale_row(int i, Elt c) {  // c must be a unit
    for (Elt& v : a[i]) v = R.mul(v, c);
    for (Elt& v : u[i]) v = R.mul(v, c);
  }
  void axpy(int dst, int src, Elt c) {  // row dst += c * row src
    if (c == 0) return;
    for (size_t j = 0; j < a[dst].size(); ++j) a[dst][j] = R.add(a[dst][j], R.mul(c, a[src][j]));
    for (size_t j = 0; j < u[dst].size(); ++j) u[dst][j] = R.add(u[dst][j], R.mul(c, u[src][j]));
  }
  void append_zero_row() {
    size_t r = u.size();
    a.emplace_back(a.empty() ? 0 : a[0].size(), 0);
    for (auto& row : u) row.push_back(0);
    u.emplace_back(r + 1, 0);
    u.back()[r] = R.one();
  }
};

struct Pivot {
  int row, col, val;
};

// One full echelon sweep: pivots become exact powers of ell, entries below a
// pivot are cleared.  Returns the pivot list (ordered by column).
std::vector<Pivot> echelon_pass(RowWorkspace& w) {
  const Ring& R = w.R;
  int rows = static_cast<int>(w.a.size());
  int cols = rows ? static_cast<int>(w.a[0].size()) : 0;
  std::vector<Pivot> pivots;
  int pos = 0;
  for (int c = 0; c < cols && pos < rows; ++c) {
    int best = -1, best_val = 0;
    for (int i = pos; i < rows; ++i) {
      Elt e = w.a[i][c];
      if (e == 0) continue;
      int v = R.valuation(e);
      if (best < 0 || v < best_val) {
        best = i;
        best_val = v;
      }
    }
    if (best < 0) continue;
    w.swap_rows(pos, best);
    long long step = 1;
    for (int t = 0; t < best_val; ++t) step *= R.ell();
    w.scale_row(pos, R.inv(w.a[pos][c] / step));  // pivot -> ell^v exactly
    for (int i = pos + 1; i < rows; ++i) {
      Elt e = w.a[i][c];
      if (e != 0) w.axpy(i, pos, R.neg(e / step));
    }
    pivots.push_back({pos, c, best_val});
    ++pos;
  }
  return pivots;
}

}  // namespace

HowellResult howell_form(const Matrix& m) {
  if (!m.ring().is_zmod())
    throw InvariantViolation("howell_form is defined over Z/ell^n only");
  const Ring R = m.ring();
  const int n = R.exponent();

  RowWorkspace w{R, {}, {}};
  w.a.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) w.a.push_back(m.row(i));
  for (int i = 0; i < m.rows(); ++i) {
    w.u.emplace_back(m.rows(), 0);
    w.u[i][i] = R.one();
  }

  std::vector<Pivot> pivots = echelon_pass(w);

  // Howell closure: for each pivot ell^v with v > 0, the shadow
  // ell^{n-v} * row lies in the span but starts with a zero at the pivot
  // column; if it does not reduce to zero against the later pivots it carries
  // new information and is folded in, then the echelon is rebuilt.
  for (bool changed = true; changed;) {
    changed = false;
    for (const Pivot& p : pivots) {
      if (p.val == 0) continue;
      Elt k = R.ell_pow(n - p.val);
      std::vector<Elt> s(w.a[p.row].size());
      for (size_t j = 0; j < s.size(); ++j) s[j] = R.mul(k, w.a[p.row][j]);
      // reduce against pivots in later columns, tracking coefficients
      std::vector<std::pair<int, Elt>> used;  // (row, coefficient subtracted)
      for (const Pivot& q : pivots) {
        if (q.col <= p.col) continue;
        Elt t = s[q.col];
        if (t == 0) continue;
        if (R.valuation(t) < q.val) continue;  // not reducible here
        long long step = 1;
        for (int v = 0; v < q.val; ++v) step *= R.ell();
        Elt coef = t / step;
        for (size_t j = 0; j < s.size(); ++j)
          s[j] = R.sub(s[j], R.mul(coef, w.a[q.row][j]));
        used.emplace_back(q.row, coef);
      }
      if (std::all_of(s.begin(), s.end(), [](Elt v) { return v == 0; })) continue;

      // Materialise the remainder in a spare zero row (append one if the
      // basis genuinely needs to grow) and rebuild the echelon.
      int zero_row = -1;
      for (int i = static_cast<int>(w.a.size()) - 1; i >= 0; --i) {
        if (std::all_of(w.a[i].begin(), w.a[i].end(), [](Elt v) { return v == 0; })) {
          zero_row = i;
          break;
        }
      }
      if (zero_row < 0) {
        w.append_zero_row();
        zero_row = static_cast<int>(w.a.size()) - 1;
      }
      w.axpy(zero_row, p.row, k);
      for (auto& [row, coef] : used) w.axpy(zero_row, row, R.neg(coef));
      pivots = echelon_pass(w);
      changed = true;
      break;
    }
  }

  // Normalise entries above each pivot to lie in [0, ell^v).
  for (const Pivot& p : pivots) {
    long long step = 1;
    for (int v = 0; v < p.val; ++v) step *= R.ell();
    for (int i = 0; i < p.row; ++i) {
      Elt q = w.a[i][p.col] / step;
      if (q != 0) w.axpy(i, p.row, R.neg(q));
    }
  }

  int out_rows = static_cast<int>(w.a.size());
  HowellResult res{Matrix(R, out_rows, m.cols()), Matrix(R, out_rows, out_rows)};
  for (int i = 0; i < out_rows; ++i) {
    res.h.set_row(i, w.a[i]);
    res.u.set_row(i, w.u[i]);
  }
  return res;
}

SmithResult smith_form(const Matrix& m) {
  if (!m.ring().is_zmod())
    throw InvariantViolation("smith_form is defined over Z/ell^n only");
  const Ring R = m.ring();
  Matrix a = m;
  Matrix qinv = Matrix::identity(R, m.cols());
  int bound = std::min(m.rows(), m.cols());
  std::vector<int> vals;

  for (int r = 0; r < bound; ++r) {
    int bi = -1, bj = -1, bv = 0;
    for (int i = r; i < m.rows(); ++i)
      for (int j = r; j < m.cols(); ++j) {
        Elt e = a.at(i, j);
        if (e == 0) continue;
        int v = R.valuation(e);
        if (bi < 0 || v < bv) {
          bi = i;
          bj = j;
          bv = v;
        }
      }
    if (bi < 0) break;

    if (bi != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(a.at(r, j), a.at(bi, j));
    if (bj != r) {
      for (int i = 0; i < m.rows(); ++i) std::swap(a.at(i, r), a.at(i, bj));
      for (int j = 0; j < m.cols(); ++j) std::swap(qinv.at(r, j), qinv.at(bj, j));
    }

    long long step = 1;
    for (int t = 0; t < bv; ++t) step *= R.ell();
    Elt s = R.inv(a.at(r, r) / step);
    for (int j = 0; j < m.cols(); ++j) a.at(r, j) = R.mul(a.at(r, j), s);

    for (int i = r + 1; i < m.rows(); ++i) {
      Elt f = a.at(i, r) / step;
      if (f == 0) continue;
      for (int j = 0; j < m.cols(); ++j)
        a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(r, j)));
    }
    for (int j = r + 1; j < m.cols(); ++j) {
      Elt f = a.at(r, j) / step;
      if (f == 0) continue;
      // column op on a: col_j -= f * col_r, mirrored on qinv rows inversely
      for (int i = 0; i < m.rows(); ++i)
        a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(i, r)));
      for (int jj = 0; jj < m.cols(); ++jj)
        qinv.at(r, jj) = R.add(qinv.at(r, jj), R.mul(f, qinv.at(j, jj)));
    }
    vals.push_back(bv);
  }

  SmithResult res{vals, Matrix(R, static_cast<int>(vals.size()), m.cols())};
  for (size_t i = 0; i < vals.size(); ++i) res.basis_rows.set_row(static_cast<int>(i), qinv.row(static_cast<int>(i)));
  return res;
}

bool in_row_span(const Matrix& h, const std::vector<Elt>& x) {
  const Ring& R = h.ring();
  if (static_cast<int>(x.size()) != h.cols())
    throw DimensionMismatch("in_row_span: vector length mismatch");
  std::vector<Elt> r = x;
  for (int i = 0; i < h.rows(); ++i) {
    int c = -1;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        c = j;
        break;
      }
    if (c < 0) break;  // zero rows are at the bottom
    int v = R.valuation(h.at(i, c));
    Elt t = r[c];
    if (t == 0) continue;
    if (R.valuation(t) < v) return false;
    long long step = 1;
    for (int k = 0; k < v; ++k) step *= R.ell();
    Elt coef = t / step;
    for (int j = 0; j < h.cols(); ++j) r[j] = R.sub(r[j], R.mul(coef, h.at(i, j)));
  }
  return std::all_of(r.begin(), r.end(), [](Elt v) { return v == 0; });
}

}  // namespace avgamma
