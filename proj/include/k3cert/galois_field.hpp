#pragma once

// Finite fields F_{p^k} = F_p[t]/(modulus) with value-semantic elements.

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3cert {

class GfElem;

/// Arithmetic context for F_p or F_p[t]/(modulus). Construct through
/// make_prime_field / make_extension_field (field_tower.hpp), which verify
/// primality and irreducibility.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
 public:
  struct Unchecked {};

  /// `modulus` is monic of degree k, ascending coefficients reduced mod p.
  GaloisField(Unchecked, std::uint64_t p, std::vector<std::uint64_t> modulus)
      : p_(p), modulus_(std::move(modulus)) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("GaloisField: p out of range");
    if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("GaloisField: modulus must be monic");
    k_ = modulus_.size() - 1;
    order_ = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (order_ > UINT64_MAX / p_) throw std::invalid_argument("GaloisField: field order exceeds 64 bits");
      order_ *= p_;
    }
  }

  [[nodiscard]] std::uint64_t characteristic() const { return p_; }
  [[nodiscard]] std::size_t degree() const { return k_; }
  [[nodiscard]] std::uint64_t order() const { return order_; }
  [[nodiscard]] const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  [[nodiscard]] GfElem zero() const;
  [[nodiscard]] GfElem one() const;
  [[nodiscard]] GfElem from_int(std::int64_t v) const;
  /// Element with the given residues (ascending powers of t); missing entries are 0.
  [[nodiscard]] GfElem element(std::vector<std::uint64_t> residues) const;
  /// The residue class of t; equals from_int of the root for k = 1.
  [[nodiscard]] GfElem generator() const;
  /// Bijection {0..q-1} -> field, index = sum c_i p^i.
  [[nodiscard]] GfElem from_index(std::uint64_t index) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t p_;
  std::size_t k_ = 1;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> modulus_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Element of a GaloisField. Holds a shared reference to its field, so
/// elements outlive the code that created the field.
class GfElem {
 public:
  GfElem() = default;
  GfElem(FieldPtr field, std::vector<std::uint64_t> c) : field_(std::move(field)), c_(std::move(c)) {}

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] const std::vector<std::uint64_t>& residues() const { return c_; }
  [[nodiscard]] std::uint64_t characteristic() const { return field_->characteristic(); }
  [[nodiscard]] std::uint64_t field_order() const { return field_->order(); }

  [[nodiscard]] bool is_zero() const {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }
  [[nodiscard]] bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  /// True when the element lies in the prime subfield.
  [[nodiscard]] bool in_prime_field() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  [[nodiscard]] GfElem zero_like() const { return field_->zero(); }
  [[nodiscard]] GfElem one_like() const { return field_->one(); }

  [[nodiscard]] std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * field_->characteristic() + c_[i];
    return idx;
  }

  friend GfElem operator+(const GfElem& a, const GfElem& b) {
    a.check_same(b);
    const auto p = a.characteristic();
    std::vector<std::uint64_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto s = a.c_[i] + b.c_[i];
      r[i] = s >= p ? s - p : s;
    }
    return {a.field_, std::move(r)};
  }
  friend GfElem operator-(const GfElem& a, const GfElem& b) {
    a.check_same(b);
    const auto p = a.characteristic();
    std::vector<std::uint64_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p - b.c_[i];
    return {a.field_, std::move(r)};
  }
  friend GfElem operator-(const GfElem& a) { return a.zero_like() - a; }

  friend GfElem operator*(const GfElem& a, const GfElem& b) {
    a.check_same(b);
    const auto p = a.characteristic();
    const std::size_t k = a.c_.size();
    if (k == 1) return {a.field_, {a.c_[0] * b.c_[0] % p}};
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
    }
    const auto& mod = a.field_->modulus();
    for (std::size_t i = prod.size(); i-- > k;) {
      const std::uint64_t q = prod[i];
      if (q == 0) continue;
      // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
      for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - q) * mod[j]) % p;
      prod[i] = 0;
    }
    prod.resize(k);
    return {a.field_, std::move(prod)};
  }

  GfElem& operator+=(const GfElem& o) { return *this = *this + o; }
  GfElem& operator-=(const GfElem& o) { return *this = *this - o; }
  GfElem& operator*=(const GfElem& o) { return *this = *this * o; }

  /// Multiply by an integer, reduced mod p.
  [[nodiscard]] GfElem scaled(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(characteristic());
    const auto m = static_cast<std::uint64_t>(((n % p) + p) % p);
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] * m % characteristic();
    return {field_, std::move(r)};
  }

  [[nodiscard]] GfElem pow(std::uint64_t e) const {
    GfElem result = one_like();
    GfElem base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Signed exponent; negative powers go through the inverse.
  [[nodiscard]] GfElem pow_signed(std::int64_t e) const {
    return e >= 0 ? pow(static_cast<std::uint64_t>(e)) : inverse().pow(static_cast<std::uint64_t>(-e));
  }

  [[nodiscard]] GfElem inverse() const {
    if (is_zero()) throw std::domain_error("GfElem: inverse of zero");
    return pow(field_order() - 2);
  }

  /// Multiplicative order of a nonzero element (brute force over divisors of q-1).
  [[nodiscard]] std::uint64_t multiplicative_order() const {
    if (is_zero()) throw std::domain_error("GfElem: order of zero");
    const std::uint64_t group = field_order() - 1;
    std::uint64_t ord = group;
    std::uint64_t rest = group;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
      if (rest % f != 0) continue;
      while (rest % f == 0) rest /= f;
      while (ord % f == 0 && pow(ord / f).is_one()) ord /= f;
    }
    if (rest > 1)
      while (ord % rest == 0 && pow(ord / rest).is_one()) ord /= rest;
    return ord;
  }

  friend bool operator==(const GfElem& a, const GfElem& b) {
    return a.c_ == b.c_ && (a.field_ == b.field_ || (a.field_ && b.field_ && *a.field_ == *b.field_));
  }
  /// Total order by index; only meaningful within one field.
  friend bool operator<(const GfElem& a, const GfElem& b) {
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  /// Decimal residue for prime fields, otherwise a polynomial in t.
  [[nodiscard]] std::string to_string() const {
    if (c_.size() == 1) return std::to_string(c_[0]);
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
      if (i >= 1) out += (c_[i] != 1 ? "*t" : "t");
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const GfElem& e) { return os << e.to_string(); }

 private:
  void check_same(const GfElem& o) const {
    if (!field_ || !o.field_) throw std::logic_error("GfElem: uninitialized element");
    if (field_ != o.field_ && !(*field_ == *o.field_)) throw std::invalid_argument("GfElem: mixed fields");
  }

  FieldPtr field_;
  std::vector<std::uint64_t> c_;
};

inline GfElem GaloisField::zero() const { return {shared_from_this(), std::vector<std::uint64_t>(k_, 0)}; }
inline GfElem GaloisField::one() const {
  std::vector<std::uint64_t> c(k_, 0);
  c[0] = 1;
  return {shared_from_this(), std::move(c)};
}
inline GfElem GaloisField::from_int(std::int64_t v) const { return one().scaled(v); }
inline GfElem GaloisField::element(std::vector<std::uint64_t> residues) const {
  if (residues.size() > k_) throw std::invalid_argument("GaloisField::element: too many residues");
  residues.resize(k_, 0);
  for (auto& r : residues) r %= p_;
  return {shared_from_this(), std::move(residues)};
}
inline GfElem GaloisField::generator() const {
  if (k_ == 1) return from_int(static_cast<std::int64_t>((p_ - modulus_[0]) % p_));
  std::vector<std::uint64_t> c(k_, 0);
  c[1] = 1;
  return {shared_from_this(), std::move(c)};
}
inline GfElem GaloisField::from_index(std::uint64_t index) const {
  if (index >= order_) throw std::out_of_range("GaloisField::from_index");
  std::vector<std::uint64_t> c(k_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return {shared_from_this(), std::move(c)};
}

}  // namespace k3cert
