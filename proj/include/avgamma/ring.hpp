#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "avgamma/errors.hpp"

namespace avgamma {

// Canonical element encoding, shared by both coefficient rings:
//   Z/ell^n : the residue in [0, ell^n)
//   F_{ell^f}: sum c_i * ell^i for the polynomial representative
//              c_{f-1} x^{f-1} + ... + c_0  (digits base ell)
using Elt = std::int64_t;

enum class RingKind { Zmod, GF };

namespace detail {

struct RingImpl {
  RingKind kind;
  long long ell = 0;
  int power = 0;  // n for Zmod, f for GF
  long long card = 0;

  // GF only: monic modulus x^f + c_{f-1} x^{f-1} + ... + c_0, stored (c_0..c_{f-1})
  std::vector<long long> modpoly;

  // Small-field fast path (GF with card <= 1024): full operation tables.
  std::vector<std::int32_t> mul_tab, add_tab, inv_tab, neg_tab;

  Elt gf_add_slow(Elt a, Elt b) const;
  Elt gf_mul_slow(Elt a, Elt b) const;
  Elt gf_neg_slow(Elt a) const;
};

}  // namespace detail

// Value-semantics handle over an immutable ring description.  Cheap to copy;
// two handles compare equal iff they describe the same ring.
class Ring {
 public:
  Ring() = default;

  // Z/ell^n, ell prime, 1 <= n <= 6.
  static Ring zmod(long long ell, int n);
  // F_{ell^f}, ell prime, 1 <= f <= 4, canonical smallest irreducible modulus.
  static Ring gf(long long ell, int f);

  RingKind kind() const { return impl_->kind; }
  bool is_zmod() const { return impl_->kind == RingKind::Zmod; }
  long long ell() const { return impl_->ell; }
  // n for Z/ell^n; 1 for a field (useful as "precision" default).
  int exponent() const { return impl_->kind == RingKind::Zmod ? impl_->power : 1; }
  int degree() const { return impl_->kind == RingKind::GF ? impl_->power : 1; }
  long long card() const { return impl_->card; }
  long long modulus() const { return impl_->card; }  // ell^n as an integer (Zmod)
  const std::vector<long long>& modulus_poly() const { return impl_->modpoly; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt from_int(long long v) const {
    if (impl_->kind == RingKind::Zmod) {
      long long r = v % impl_->card;
      return r < 0 ? r + impl_->card : r;
    }
    long long r = v % impl_->ell;  // prime subfield embedding
    return r < 0 ? r + impl_->ell : r;
  }

  Elt add(Elt a, Elt b) const {
    if (impl_->kind == RingKind::Zmod) {
      Elt s = a + b;
      return s >= impl_->card ? s - impl_->card : s;
    }
    if (!impl_->add_tab.empty()) return impl_->add_tab[a * impl_->card + b];
    return impl_->gf_add_slow(a, b);
  }

  Elt neg(Elt a) const {
    if (impl_->kind == RingKind::Zmod) return a == 0 ? 0 : impl_->card - a;
    if (!impl_->neg_tab.empty()) return impl_->neg_tab[a];
    return impl_->gf_neg_slow(a);
  }

  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const {
    if (impl_->kind == RingKind::Zmod) return (a * b) % impl_->card;
    if (!impl_->mul_tab.empty()) return impl_->mul_tab[a * impl_->card + b];
    return impl_->gf_mul_slow(a, b);
  }

  bool is_unit(Elt a) const {
    if (impl_->kind == RingKind::Zmod) return a % impl_->ell != 0;
    return a != 0;
  }

  Elt inv(Elt a) const;      // throws NonInvertible
  Elt pow(Elt a, long long k) const;

  // Zmod only: ell-adic valuation in [0, n], with valuation(0) = n.
  int valuation(Elt a) const {
    int v = 0;
    if (a == 0) return impl_->power;
    while (a % impl_->ell == 0) {
      a /= impl_->ell;
      ++v;
    }
    return v;
  }

  // Zmod only: the element ell^k (k <= n).
  Elt ell_pow(int k) const {
    Elt p = 1;
    for (int i = 0; i < k && p < impl_->card; ++i) p *= impl_->ell;
    return p % impl_->card;
  }

  std::string str(Elt a) const;
  std::string description() const;

  bool operator==(const Ring& o) const {
    return impl_->kind == o.impl_->kind && impl_->ell == o.impl_->ell &&
           impl_->power == o.impl_->power;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::RingImpl> impl_;
};

bool is_prime(long long p);

}  // namespace avgamma
