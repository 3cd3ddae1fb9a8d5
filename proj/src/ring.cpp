#include "avgamma/ring.hpp"

#include <algorithm>

namespace avgamma {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Dense little polynomial helpers over F_ell, coefficients ordered from the
// constant term up.  Only used at ring construction time.
using Poly = std::vector<long long>;

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b, long long ell) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
  return poly_trim(std::move(c));
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, long long ell) {
  a = poly_trim(std::move(a));
  while (a.size() >= b.size()) {
    long long lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      long long& c = a[shift + i];
      c = ((c - lead * b[i]) % ell + ell) % ell;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

long long poly_eval(const Poly& p, long long x, long long ell) {
  long long v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = (v * x + *it) % ell;
  return v;
}

bool has_root(const Poly& p, long long ell) {
  for (long long x = 0; x < ell; ++x)
    if (poly_eval(p, x, ell) == 0) return true;
  return false;
}

// Irreducibility over F_ell for degree <= 4: degree 1 always; degrees 2 and 3
// reduce to root-freeness; degree 4 additionally needs no irreducible
// quadratic factor.
bool is_irreducible(const Poly& p, long long ell) {
  size_t deg = p.size() - 1;
  if (deg == 1) return true;
  if (has_root(p, ell)) return false;
  if (deg <= 3) return true;
  for (long long c1 = 0; c1 < ell; ++c1)
    for (long long c0 = 0; c0 < ell; ++c0) {
      Poly q{c0, c1, 1};
      if (has_root(q, ell)) continue;  // reducible quadratics cannot divide p anyway
      if (poly_rem(p, q, ell).empty()) return false;
    }
  return true;
}

Poly elt_to_poly(Elt a, long long ell) {
  Poly p;
  while (a != 0) {
    p.push_back(a % ell);
    a /= ell;
  }
  return p;
}

Elt poly_to_elt(const Poly& p, long long ell) {
  Elt v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * ell + *it;
  return v;
}

constexpr long long kTableCardLimit = 1024;
constexpr long long kCardLimit = 1LL << 31;  // keep products inside int64

}  // namespace

namespace detail {

Elt RingImpl::gf_add_slow(Elt a, Elt b) const {
  Elt out = 0, base = 1;
  for (int i = 0; i < power; ++i) {
    out += ((a + b) % ell) * base;
    a /= ell;
    b /= ell;
    base *= ell;
  }
  return out;
}

Elt RingImpl::gf_neg_slow(Elt a) const {
  Elt out = 0, base = 1;
  for (int i = 0; i < power; ++i) {
    long long d = a % ell;
    out += (d == 0 ? 0 : ell - d) * base;
    a /= ell;
    base *= ell;
  }
  return out;
}

Elt RingImpl::gf_mul_slow(Elt a, Elt b) const {
  Poly full(2 * power - 1, 0);
  Poly pa = elt_to_poly(a, ell), pb = elt_to_poly(b, ell);
  for (size_t i = 0; i < pa.size(); ++i)
    for (size_t j = 0; j < pb.size(); ++j) full[i + j] = (full[i + j] + pa[i] * pb[j]) % ell;
  Poly mod = modpoly;
  mod.push_back(1);  // monic x^f + ...
  return poly_to_elt(poly_rem(std::move(full), mod, ell), ell);
}

}  // namespace detail

Ring Ring::zmod(long long ell, int n) {
  if (!is_prime(ell)) throw NotPrime("mod_ring: " + std::to_string(ell) + " is not prime");
  if (n < 1 || n > 6)
    throw UnsupportedDegree("mod_ring: exponent " + std::to_string(n) + " outside [1,6]");
  auto impl = std::make_shared<detail::RingImpl>();
  impl->kind = RingKind::Zmod;
  impl->ell = ell;
  impl->power = n;
  impl->card = 1;
  for (int i = 0; i < n; ++i) {
    impl->card *= ell;
    if (impl->card > kCardLimit) throw UnsupportedSize("mod_ring: modulus too large");
  }
  return Ring(std::move(impl));
}

Ring Ring::gf(long long ell, int f) {
  if (!is_prime(ell)) throw NotPrime("ff_make: " + std::to_string(ell) + " is not prime");
  if (f < 1 || f > 4)
    throw UnsupportedDegree("ff_make: degree " + std::to_string(f) + " outside [1,4]");
  auto impl = std::make_shared<detail::RingImpl>();
  impl->kind = RingKind::GF;
  impl->ell = ell;
  impl->power = f;
  impl->card = 1;
  for (int i = 0; i < f; ++i) {
    impl->card *= ell;
    if (impl->card > kCardLimit) throw UnsupportedSize("ff_make: field too large");
  }

  // Canonical modulus: the lexicographically smallest monic irreducible,
  // coefficients compared from the constant term up.
  std::vector<long long> digits(f, 0);
  for (;;) {
    Poly p(digits);
    p.push_back(1);
    if (is_irreducible(p, ell)) break;
    int i = f - 1;
    while (i >= 0 && digits[i] == ell - 1) digits[i--] = 0;
    if (i < 0) throw Error("ff_make: no irreducible modulus found");  // unreachable
    ++digits[i];
  }
  impl->modpoly = digits;

  if (impl->card <= kTableCardLimit) {
    long long q = impl->card;
    impl->add_tab.resize(q * q);
    impl->mul_tab.resize(q * q);
    impl->neg_tab.resize(q);
    impl->inv_tab.assign(q, 0);
    for (Elt a = 0; a < q; ++a) {
      impl->neg_tab[a] = static_cast<std::int32_t>(impl->gf_neg_slow(a));
      for (Elt b = 0; b < q; ++b) {
        impl->add_tab[a * q + b] = static_cast<std::int32_t>(impl->gf_add_slow(a, b));
        Elt m = impl->gf_mul_slow(a, b);
        impl->mul_tab[a * q + b] = static_cast<std::int32_t>(m);
        if (m == 1) impl->inv_tab[a] = static_cast<std::int32_t>(b);
      }
    }
  }
  return Ring(std::move(impl));
}

Elt Ring::inv(Elt a) const {
  if (!is_unit(a)) throw NonInvertible("inverse of non-unit " + str(a) + " in " + description());
  if (impl_->kind == RingKind::Zmod) {
    // extended Euclid on the integer representative
    long long t = 0, new_t = 1, r = impl_->card, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      std::swap(t -= q * new_t, new_t);
      std::swap(r -= q * new_r, new_r);
    }
    return t < 0 ? t + impl_->card : t;
  }
  if (!impl_->inv_tab.empty()) return impl_->inv_tab[a];
  return pow(a, impl_->card - 2);  // Fermat in F_q
}

Elt Ring::pow(Elt a, long long k) const {
  Elt r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::string Ring::str(Elt a) const { return std::to_string(a); }

std::string Ring::description() const {
  if (impl_->kind == RingKind::Zmod)
    return "Z/" + std::to_string(impl_->card);
  return "F_" + std::to_string(impl_->card);
}

}  // namespace avgamma
