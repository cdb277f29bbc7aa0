#pragma once

// Finite fields carrying a designated primitive n-th root of unity.

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3cert/cyclotomic.hpp"
#include "k3cert/galois_field.hpp"
#include "k3cert/upoly.hpp"

namespace k3cert {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldPtr make_prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return std::make_shared<const GaloisField>(GaloisField::Unchecked{}, p, std::vector<std::uint64_t>{0, 1});
}

/// Lifts integer coefficients (ascending) into F_p[X].
inline GfPoly reduce_mod_p(const FieldPtr& prime_field, const std::vector<std::int64_t>& coeffs) {
  std::vector<GfElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(prime_field->from_int(v));
  return GfPoly(prime_field->zero(), std::move(c));
}

/// F_p[t]/(modulus); rejects reducible or non-monic moduli.
inline FieldPtr make_extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  const auto fp = make_prime_field(p);
  if (modulus.size() < 2) throw std::invalid_argument("make_extension_field: modulus must have degree >= 1");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw std::invalid_argument("make_extension_field: modulus must be monic");
  if (modulus.size() == 2) return fp;
  std::vector<std::int64_t> as_int(modulus.begin(), modulus.end());
  if (!is_irreducible(reduce_mod_p(fp, as_int)))
    throw std::invalid_argument("make_extension_field: modulus is reducible over F_" + std::to_string(p));
  return std::make_shared<const GaloisField>(GaloisField::Unchecked{}, p, std::move(modulus));
}

/// Lexicographically smallest (ascending coefficient vector) monic irreducible
/// polynomial of degree k over F_p.
inline FieldPtr smallest_extension_field(std::uint64_t p, std::size_t k) {
  const auto fp = make_prime_field(p);
  if (k == 1) return fp;
  std::vector<std::uint64_t> tail(k, 0);
  while (true) {
    std::vector<GfElem> c;
    for (auto v : tail) c.push_back(fp->from_int(static_cast<std::int64_t>(v)));
    c.push_back(fp->one());
    if (is_irreducible(GfPoly(fp->zero(), c))) {
      tail.push_back(1);
      return std::make_shared<const GaloisField>(GaloisField::Unchecked{}, p, std::move(tail));
    }
    std::size_t i = 0;
    while (i < k && ++tail[i] == p) tail[i++] = 0;
    if (i == k) throw std::logic_error("smallest_extension_field: no irreducible found");
  }
}

/// Multiplicative order of p modulo n: the least k with n | p^k - 1.
inline std::int64_t min_extension_degree(std::uint64_t p, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("min_extension_degree: n must be positive");
  if (std::gcd(p, static_cast<std::uint64_t>(n)) != 1)
    throw std::invalid_argument("min_extension_degree: p = " + std::to_string(p) + " divides n = " + std::to_string(n));
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t acc = p % un;
  std::int64_t k = 1;
  while (acc != 1 % un) {
    acc = acc * (p % un) % un;
    ++k;
  }
  return k;
}

/// A finite field with a verified primitive n-th root of unity.
class FieldTower {
 public:
  FieldTower(FieldPtr field, GfElem zeta, std::int64_t n) : field_(std::move(field)), zeta_(std::move(zeta)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("FieldTower: n must be positive");
    if ((field_->order() - 1) % static_cast<std::uint64_t>(n_) != 0)
      throw std::invalid_argument("FieldTower: n does not divide q - 1");
    if (!zeta_.pow(static_cast<std::uint64_t>(n_)).is_one())
      throw std::invalid_argument("FieldTower: zeta^n != 1");
    for (auto l : detail::prime_divisors(static_cast<std::uint64_t>(n_))) {
      if (zeta_.pow(static_cast<std::uint64_t>(n_) / l).is_one())
        throw std::invalid_argument("FieldTower: zeta is not primitive");
    }
  }

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] const GfElem& zeta() const { return zeta_; }
  [[nodiscard]] std::int64_t root_order() const { return n_; }
  [[nodiscard]] std::uint64_t p() const { return field_->characteristic(); }
  [[nodiscard]] std::size_t k() const { return field_->degree(); }
  [[nodiscard]] std::uint64_t q() const { return field_->order(); }

 private:
  FieldPtr field_;
  GfElem zeta_;
  std::int64_t n_;
};

/// Smallest primitive root modulo a prime p.
inline std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto fp = make_prime_field(p);
  const auto divisors = detail::prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    const GfElem e = fp->from_int(static_cast<std::int64_t>(g));
    bool primitive = true;
    for (auto l : divisors) primitive = primitive && !e.pow((p - 1) / l).is_one();
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

/// F_{p^k} with k = ord_n(p). For k = 1, zeta = s^{(p-1)/n} with s the
/// smallest primitive root; otherwise the modulus is the smallest irreducible
/// factor of Phi_n mod p and zeta is the class of t.
inline FieldTower build_field_with_root(std::uint64_t p, std::int64_t n) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto k = min_extension_degree(p, n);
  const auto fp = make_prime_field(p);
  if (k == 1) {
    const auto s = fp->from_int(static_cast<std::int64_t>(smallest_primitive_root(p)));
    return FieldTower(fp, s.pow((p - 1) / static_cast<std::uint64_t>(n)), n);
  }
  const auto phi = reduce_mod_p(fp, cyclotomic_polynomial(n).coefficients());
  const auto factors = equal_degree_factorization(phi, static_cast<int>(k));
  std::vector<std::uint64_t> modulus;
  for (const auto& c : factors.front().coefficients()) modulus.push_back(c.residues()[0]);
  auto field = make_extension_field(p, std::move(modulus));
  return FieldTower(field, field->generator(), n);
}

}  // namespace k3cert
