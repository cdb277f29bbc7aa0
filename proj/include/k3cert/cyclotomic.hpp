#pragma once

// Exact bookkeeping for Galois-closed eigenvalue lists of finite-order
// automorphisms acting on the second cohomology of a K3 surface.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3cert {

inline constexpr std::int64_t kK3SecondBetti = 22;

/// Euler's totient by trial division.
inline std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Sum of all primitive n-th roots of unity: 0 when n has a square factor,
/// (-1)^t when n is a product of t distinct primes.
inline int primitive_root_sum(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("primitive_root_sum: n must be positive");
  int sign = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Dense integer polynomial, coefficients in ascending degree. Arithmetic is
/// checked against int64 overflow.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(std::int64_t coeff, std::size_t degree) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const { return c_; }
  [[nodiscard]] std::int64_t coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  [[nodiscard]] std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  [[nodiscard]] std::int64_t evaluate(std::int64_t at) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, at), *it);
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coefficient(i), b.coefficient(i));
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coefficient(i), -b.coefficient(i));
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Quotient and remainder by a monic divisor (exact over Z).
  [[nodiscard]] std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& d) const {
    if (d.is_zero() || d.leading() != 1) throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<std::int64_t> rem = c_;
    const auto dd = static_cast<std::size_t>(d.degree());
    if (rem.size() <= dd) return {IntPolynomial{}, *this};
    std::vector<std::int64_t> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
      const std::int64_t q = rem[i];
      quot[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = checked_add(rem[i - dd + j], -checked_mul(q, d.c_[j]));
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  [[nodiscard]] std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const std::int64_t v = c_[i];
      if (v == 0) continue;
      const std::int64_t mag = v < 0 ? -v : v;
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += std::to_string(mag);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial: coefficient overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial: coefficient overflow");
    return r;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

/// The n-th cyclotomic polynomial, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d
/// and cached per order.
inline const IntPolynomial& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<std::int64_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPolynomial num = IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial({1});
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = num.divmod_monic(cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    num = std::move(q);
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(num)).first->second;
}

/// All phi(order) primitive order-th roots of unity, each repeated
/// `multiplicity` times.
struct Packet {
  std::int64_t order = 1;
  std::int64_t multiplicity = 1;

  [[nodiscard]] std::int64_t dimension() const { return multiplicity * euler_phi(order); }
  friend bool operator==(const Packet&, const Packet&) = default;
  friend auto operator<=>(const Packet&, const Packet&) = default;
};

/// Galois-closed multiset of roots of unity, stored as whole packets.
///
/// A lone primitive a-th root with a > 2 cannot be expressed: every entry is a
/// full conjugacy class. Entries are merged by order and kept sorted, so two
/// lists describing the same multiset compare equal.
class EigenPacketList {
 public:
  EigenPacketList(std::vector<Packet> packets, std::int64_t total_dim = kK3SecondBetti) : total_dim_(total_dim) {
    if (total_dim < 1) throw std::invalid_argument("EigenPacketList: total dimension must be positive");
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& pk : packets) {
      if (pk.order < 1) throw std::invalid_argument("EigenPacketList: packet order must be positive");
      if (pk.multiplicity < 1) throw std::invalid_argument("EigenPacketList: packet multiplicity must be positive");
      merged[pk.order] += pk.multiplicity;
    }
    std::int64_t dim = 0;
    for (const auto& [order, mult] : merged) {
      packets_.push_back({order, mult});
      dim += mult * euler_phi(order);
    }
    if (dim != total_dim_) {
      throw std::invalid_argument("EigenPacketList: packets span dimension " + std::to_string(dim) + ", expected " +
                                  std::to_string(total_dim_));
    }
  }

  [[nodiscard]] const std::vector<Packet>& packets() const { return packets_; }
  [[nodiscard]] std::int64_t total_dim() const { return total_dim_; }

  /// Multiplicity of primitive order-th roots (0 if absent).
  [[nodiscard]] std::int64_t multiplicity(std::int64_t order) const {
    for (const auto& pk : packets_)
      if (pk.order == order) return pk.multiplicity;
    return 0;
  }

  friend bool operator==(const EigenPacketList&, const EigenPacketList&) = default;

  /// Bracket notation, e.g. "[1, -1, (z50:20)]" or "[1.2, (z10:4).5]".
  [[nodiscard]] std::string to_string() const {
    std::string out = "[";
    bool first = true;
    for (const auto& pk : packets_) {
      if (!first) out += ", ";
      first = false;
      if (pk.order <= 2) {
        out += pk.order == 1 ? "1" : "-1";
      } else {
        out += "(z" + std::to_string(pk.order) + ":" + std::to_string(euler_phi(pk.order)) + ")";
      }
      if (pk.multiplicity != 1) out += "." + std::to_string(pk.multiplicity);
    }
    return out + "]";
  }

 private:
  std::vector<Packet> packets_;
  std::int64_t total_dim_;
};

/// Eigenvalue list of the k-th power: a packet of order a lands on order
/// a / gcd(a, k), each image root hit phi(a) / phi(a') times.
inline EigenPacketList power_list(const EigenPacketList& list, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("power_list: exponent must be positive");
  std::vector<Packet> out;
  out.reserve(list.packets().size());
  for (const auto& pk : list.packets()) {
    const std::int64_t image_order = pk.order / std::gcd(pk.order, k);
    const std::int64_t phi = euler_phi(pk.order);
    const std::int64_t image_phi = euler_phi(image_order);
    if (phi % image_phi != 0) {
      throw std::logic_error("power_list: phi(" + std::to_string(image_order) + ") does not divide phi(" +
                             std::to_string(pk.order) + ")");
    }
    out.push_back({image_order, pk.multiplicity * (phi / image_phi)});
  }
  EigenPacketList result(std::move(out), list.total_dim());
  if (result.total_dim() != list.total_dim()) throw std::logic_error("power_list: dimension not preserved");
  return result;
}

/// Trace on H^2: sum of multiplicity * R(order).
inline std::int64_t trace_h2(const EigenPacketList& list) {
  std::int64_t t = 0;
  for (const auto& pk : list.packets()) t += pk.multiplicity * primitive_root_sum(pk.order);
  return t;
}

/// Lefschetz number of a K3 automorphism: H^0 and H^4 contribute 1 each, odd
/// cohomology vanishes.
inline std::int64_t euler_k3(const EigenPacketList& list) { return 2 + trace_h2(list); }

/// prod Phi_a(x)^m over the packets.
inline IntPolynomial char_poly(const EigenPacketList& list) {
  IntPolynomial result({1});
  for (const auto& pk : list.packets())
    for (std::int64_t i = 0; i < pk.multiplicity; ++i) result = result * cyclotomic_polynomial(pk.order);
  return result;
}

/// Trace of the k-th power computed in Z[x]/(Phi_a) for each packet: the sum of
/// x^{kj} over units j mod a reduces to a Galois-fixed, hence constant, class.
/// Shares nothing with power_list/primitive_root_sum.
inline std::int64_t brute_trace(const EigenPacketList& list, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("brute_trace: exponent must be positive");
  std::int64_t total = 0;
  for (const auto& pk : list.packets()) {
    const IntPolynomial& phi = cyclotomic_polynomial(pk.order);
    std::vector<std::int64_t> acc(static_cast<std::size_t>(pk.order), 0);
    for (std::int64_t j = 1; j <= pk.order; ++j) {
      if (std::gcd(j, pk.order) != 1) continue;
      acc[static_cast<std::size_t>((k % pk.order) * j % pk.order)] += 1;  // x^a = 1 in the quotient
    }
    const auto reduced = IntPolynomial(std::move(acc)).divmod_monic(phi).second;
    for (int i = 1; i <= reduced.degree(); ++i) {
      if (reduced.coefficient(static_cast<std::size_t>(i)) != 0)
        throw std::logic_error("brute_trace: trace element did not reduce to a rational integer");
    }
    total += pk.multiplicity * reduced.coefficient(0);
  }
  return total;
}

}  // namespace k3cert
