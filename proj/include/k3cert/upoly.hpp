#pragma once

// Dense univariate polynomials over a field, plus the finite-field algorithms
// built on them: Rabin irreducibility, distinct/equal-degree factorization,
// root finding and resultants.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/galois_field.hpp"

namespace k3cert {

template <class T>
concept FieldElement = std::regular<T> && requires(const T a, const T b, std::int64_t n) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { a.inverse() } -> std::same_as<T>;
  { a.scaled(n) } -> std::same_as<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::same_as<T>;
  { a.one_like() } -> std::same_as<T>;
};

/// Dense polynomial in one variable; coefficients ascending, no trailing zeros.
/// `zero_` pins the coefficient field so that even the zero polynomial can
/// produce constants.
template <FieldElement T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(T zero) : zero_(std::move(zero)) {}
  UPoly(T zero, std::vector<T> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const T& c) { return UPoly(c.zero_like(), {c}); }
  /// c * X^degree
  static UPoly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, c.zero_like());
    v[degree] = c;
    return UPoly(c.zero_like(), std::move(v));
  }
  static UPoly x(const T& any) { return monomial(any.one_like(), 1); }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<T>& coefficients() const { return c_; }
  [[nodiscard]] T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  [[nodiscard]] T leading() const { return c_.empty() ? zero_ : c_.back(); }
  [[nodiscard]] const T& zero_element() const { return zero_; }

  [[nodiscard]] T evaluate(const T& at) const {
    T acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  [[nodiscard]] UPoly monic() const {
    if (is_zero()) return *this;
    const T inv = leading().inverse();
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v * inv);
    return UPoly(zero_, std::move(r));
  }

  [[nodiscard]] UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(zero_);
    std::vector<T> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(static_cast<std::int64_t>(i)));
    return UPoly(zero_, std::move(r));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
    return UPoly(a.zero_, std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) - b.coefficient(i);
    return UPoly(a.zero_, std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(a.zero_, std::move(r));
  }
  friend UPoly operator*(const T& s, const UPoly& a) { return UPoly::constant(s) * a; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (degree() < d.degree()) return {UPoly(zero_), *this};
    std::vector<T> rem = c_;
    const auto dd = static_cast<std::size_t>(d.degree());
    std::vector<T> quot(rem.size() - dd, zero_);
    const T lead_inv = d.leading().inverse();
    for (std::size_t i = rem.size(); i-- > dd;) {
      if (rem[i].is_zero()) continue;
      const T q = rem[i] * lead_inv;
      quot[i - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - q * d.c_[j];
    }
    rem.resize(dd);
    return {UPoly(zero_, std::move(quot)), UPoly(zero_, std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& d) { return a.divmod(d).second; }

  /// Quotient that must be exact.
  [[nodiscard]] UPoly exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("UPoly: inexact division");
    return q;
  }

  [[nodiscard]] std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].to_string() + ")";
      if (i >= 1) out += "*" + var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  T zero_{};
  std::vector<T> c_;
};

template <FieldElement T>
T ipow(T base, std::uint64_t e) {
  T result = base.one_like();
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Monic gcd (zero if both inputs are zero).
template <FieldElement T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FieldElement T>
UPoly<T> mulmod(const UPoly<T>& a, const UPoly<T>& b, const UPoly<T>& m) {
  return (a * b) % m;
}

template <FieldElement T>
UPoly<T> powmod(UPoly<T> base, std::uint64_t e, const UPoly<T>& m) {
  UPoly<T> result = UPoly<T>::constant(m.leading().one_like()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    e >>= 1U;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

/// Resultant over a field via the Euclidean remainder sequence. Zero if either
/// input is the zero polynomial.
template <FieldElement T>
T resultant(UPoly<T> a, UPoly<T> b) {
  const T zero = a.zero_element();
  if (a.is_zero() || b.is_zero()) return zero;
  T acc = zero.one_like();
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) return acc * ipow(b.leading(), static_cast<std::uint64_t>(da));
    if (da == 0) {
      // Res(a, b) = a^{deg b} for constant a
      return acc * ipow(a.leading(), static_cast<std::uint64_t>(db));
    }
    if (da < db) {
      if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
      std::swap(a, b);
      continue;
    }
    auto r = a % b;
    if (r.is_zero()) return zero;
    // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r) when b is the divisor
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    acc = acc * ipow(b.leading(), static_cast<std::uint64_t>(da - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

/// Determinant of a square matrix whose entries are polynomials, by
/// fraction-free Bareiss elimination (every division is exact).
template <FieldElement T>
UPoly<T> bareiss_determinant(std::vector<std::vector<UPoly<T>>> m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly<T>::constant(zero.one_like());
  UPoly<T> prev = UPoly<T>::constant(zero.one_like());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return UPoly<T>(zero);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
    }
    prev = m[k][k];
  }
  auto det = m[n - 1][n - 1];
  return negate ? UPoly<T>(zero) - det : det;
}

/// Sylvester-matrix resultant of two polynomials whose coefficients are given
/// as polynomials in a second variable. Formal degrees are the list lengths
/// minus one, so specializations commute with the result.
template <FieldElement T>
UPoly<T> sylvester_resultant(const std::vector<UPoly<T>>& a, const std::vector<UPoly<T>>& b, const T& zero) {
  if (a.empty() || b.empty()) return UPoly<T>(zero);
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return UPoly<T>::constant(zero.one_like());
  std::vector<std::vector<UPoly<T>>> mat(size, std::vector<UPoly<T>>(size, UPoly<T>(zero)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) mat[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) mat[n + r][r + i] = b[n - i];
  return bareiss_determinant(std::move(mat), zero);
}

// ---------------------------------------------------------------------------
// Finite-field algorithms (coefficients in a GaloisField).

using GfPoly = UPoly<GfElem>;

/// X^{q^i} mod f for i = 0..count-1 by repeated Frobenius.
inline std::vector<GfPoly> frobenius_powers(const GfPoly& f, std::size_t count) {
  const auto q = f.leading().field_order();
  std::vector<GfPoly> out;
  GfPoly h = GfPoly::x(f.leading()) % f;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(h);
    h = powmod(h, q, f);
  }
  return out;
}

namespace detail {
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace detail

/// Rabin's test over F_q: f of degree k is irreducible iff X^{q^k} = X mod f
/// and gcd(X^{q^{k/r}} - X, f) = 1 for each prime r | k.
inline bool is_irreducible(const GfPoly& f) {
  const int k = f.degree();
  if (k < 1) return false;
  if (k == 1) return true;
  const GfPoly fm = f.monic();
  const auto pows = frobenius_powers(fm, static_cast<std::size_t>(k) + 1);
  const GfPoly x = GfPoly::x(f.leading()) % fm;
  if (!(pows[static_cast<std::size_t>(k)] == x)) return false;
  for (auto r : detail::prime_divisors(static_cast<std::uint64_t>(k))) {
    const auto h = pows[static_cast<std::size_t>(k) / r] - x;
    if (gcd(h, fm).degree() != 0) return false;
  }
  return true;
}

/// Distinct-degree factorization of a squarefree monic f: pairs (g_d, d)
/// where g_d is the product of all degree-d irreducible factors.
inline std::vector<std::pair<GfPoly, int>> distinct_degree_factorization(GfPoly f) {
  std::vector<std::pair<GfPoly, int>> out;
  f = f.monic();
  const auto q = f.leading().field_order();
  const GfPoly x = GfPoly::x(f.leading());
  GfPoly h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, f);
    const auto g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f.exact_div(g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

/// Cantor–Zassenhaus splitting of a squarefree monic f whose irreducible
/// factors all have degree d. Factors come back sorted by ascending
/// coefficient vectors, so the output does not depend on the seed.
inline std::vector<GfPoly> equal_degree_factorization(const GfPoly& f, int d, std::uint64_t seed = 0x5eed) {
  if (f.degree() % d != 0) throw std::invalid_argument("equal_degree_factorization: degree mismatch");
  const GfElem zero = f.leading().zero_like();
  const FieldPtr& field = zero.field();
  const std::uint64_t q = field->order();
  const bool even = field->characteristic() == 2;
  std::mt19937_64 rng(seed);

  std::vector<GfPoly> done;
  std::vector<GfPoly> todo{f.monic()};
  while (!todo.empty()) {
    GfPoly g = todo.back();
    todo.pop_back();
    if (g.degree() == d) {
      done.push_back(g);
      continue;
    }
    while (true) {
      std::vector<GfElem> coeffs;
      for (int i = 0; i < g.degree(); ++i) coeffs.push_back(field->from_index(rng() % q));
      const GfPoly a(zero, std::move(coeffs));
      if (a.degree() < 1) continue;
      GfPoly b(zero);
      if (even) {
        // Trace map a + a^2 + ... + a^{2^{m d - 1}} where q = 2^m.
        const auto steps = static_cast<std::size_t>(field->degree()) * static_cast<std::size_t>(d);
        GfPoly term = a % g;
        b = term;
        for (std::size_t i = 1; i < steps; ++i) {
          term = mulmod(term, term, g);
          b = b + term;
        }
      } else {
        // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
        GfPoly norm = a % g;
        GfPoly frob = a % g;
        for (int i = 1; i < d; ++i) {
          frob = powmod(frob, q, g);
          norm = mulmod(norm, frob, g);
        }
        b = powmod(norm, (q - 1) / 2, g) - GfPoly::constant(zero.one_like());
      }
      const auto h = gcd(b, g);
      if (h.degree() > 0 && h.degree() < g.degree()) {
        todo.push_back(h);
        todo.push_back(g.exact_div(h));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end(), [](const GfPoly& a, const GfPoly& b) {
    return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(), b.coefficients().begin(),
                                        b.coefficients().end(), [](const GfElem& u, const GfElem& v) { return u < v; });
  });
  return done;
}

namespace detail {
/// Absolute trace F_{2^m} -> F_2.
inline GfElem absolute_trace(const GfElem& a) {
  GfElem acc = a;
  GfElem term = a;
  for (std::size_t i = 1; i < a.field()->degree(); ++i) {
    term = term * term;
    acc = acc + term;
  }
  return acc;
}

/// Square root in odd characteristic by Tonelli–Shanks; nullopt for non-squares.
inline std::optional<GfElem> sqrt_odd(const GfElem& a) {
  if (a.is_zero()) return a;
  const std::uint64_t q = a.field_order();
  if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;
  std::uint64_t s = 0;
  std::uint64_t t = q - 1;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  GfElem z = a.one_like();
  for (std::uint64_t idx = 2; idx < q; ++idx) {
    z = a.field()->from_index(idx);
    if (!z.pow((q - 1) / 2).is_one()) break;
  }
  GfElem c = z.pow(t);
  GfElem r = a.pow((t + 1) / 2);
  GfElem u = a.pow(t);
  std::uint64_t m = s;
  while (!u.is_one()) {
    std::uint64_t i = 0;
    GfElem probe = u;
    while (!probe.is_one()) {
      probe = probe * probe;
      ++i;
    }
    GfElem b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b;
    r = r * b;
    c = b * b;
    u = u * c;
    m = i;
  }
  return r;
}
}  // namespace detail

/// Distinct roots in F_q of f, sorted by index.
inline std::vector<GfElem> roots(const GfPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots: zero polynomial");
  std::vector<GfElem> out;
  if (f.degree() <= 0) return out;
  const GfElem zero = f.leading().zero_like();
  const auto q = zero.field_order();
  const bool even = zero.characteristic() == 2;
  const GfPoly g = f.monic();

  if (g.degree() == 1) {
    out.push_back(-g.coefficient(0));
  } else if (g.degree() == 2) {
    const GfElem b = g.coefficient(1);
    const GfElem c = g.coefficient(0);
    if (!even) {
      // Euler criterion on the discriminant, then the quadratic formula.
      const GfElem disc = b * b - c.scaled(4);
      if (auto s = detail::sqrt_odd(disc)) {
        const GfElem half = zero.one_like().scaled(2).inverse();
        out.push_back((-b + *s) * half);
        if (!s->is_zero()) out.push_back((-b - *s) * half);
      }
    } else if (b.is_zero()) {
      out.push_back(c.pow(q / 2));  // Frobenius is bijective: unique square root
    } else {
      // Artin–Schreier: w = b t with t^2 + t = c / b^2, solvable iff the trace vanishes.
      const GfElem u = c * (b * b).inverse();
      if (detail::absolute_trace(u).is_zero()) {
        const auto m = zero.field()->degree();
        GfElem t = zero;
        if (m % 2 == 1) {
          // half-trace: sum of u^{4^i}, i = 0..(m-1)/2
          GfElem term = u;
          t = u;
          for (std::size_t i = 1; i <= (m - 1) / 2; ++i) {
            term = term * term * term * term;
            t = t + term;
          }
        } else {
          const GfPoly as(zero, {u, zero.one_like(), zero.one_like()});
          t = -equal_degree_factorization(as, 1).front().coefficient(0);
        }
        out.push_back(b * t);
        out.push_back(b * (t + zero.one_like()));
      }
    }
  } else {
    const GfPoly x = GfPoly::x(zero);
    const auto split = gcd(powmod(x, q, g) - x, g);
    if (split.degree() > 0) {
      for (const auto& lin : equal_degree_factorization(split, 1)) out.push_back(-lin.coefficient(0));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace k3cert
