#pragma once

// Sparse multivariate polynomials with weighted grading, and polynomial
// coordinate maps acting on them by substitution.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/upoly.hpp"

namespace k3cert {

/// Ordered variable names with positive weights.
struct VariableSet {
  std::vector<std::string> names;
  std::vector<int> weights;

  VariableSet(std::vector<std::string> n, std::vector<int> w) : names(std::move(n)), weights(std::move(w)) {
    if (names.size() != weights.size() || names.empty())
      throw std::invalid_argument("VariableSet: names and weights must be non-empty and equally long");
    for (int wt : weights)
      if (wt < 1) throw std::invalid_argument("VariableSet: weights must be positive");
  }

  /// x, y, z, w with weights 1, 1, 1, 3.
  static VariableSet p1113() { return {{"x", "y", "z", "w"}, {1, 1, 1, 3}}; }
  /// x, y, z with weights 1, 1, 1.
  static VariableSet p2() { return {{"x", "y", "z"}, {1, 1, 1}}; }

  [[nodiscard]] std::size_t size() const { return names.size(); }
  [[nodiscard]] std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("VariableSet: unknown variable " + name);
  }
  friend bool operator==(const VariableSet&, const VariableSet&) = default;
};

using Exponents = std::vector<int>;

template <FieldElement T>
class SparsePoly {
 public:
  using Terms = std::map<Exponents, T>;

  SparsePoly(VariableSet vars, T zero) : vars_(std::move(vars)), zero_(std::move(zero)) {}
  SparsePoly(VariableSet vars, T zero, Terms terms) : vars_(std::move(vars)), zero_(std::move(zero)) {
    for (auto& [e, c] : terms) add_term(e, c);
  }

  static SparsePoly constant(VariableSet vars, const T& c) {
    SparsePoly r(std::move(vars), c.zero_like());
    r.add_term(Exponents(r.vars_.size(), 0), c);
    return r;
  }
  /// c * (variable i)
  static SparsePoly variable(VariableSet vars, std::size_t i, const T& c) {
    SparsePoly r(std::move(vars), c.zero_like());
    Exponents e(r.vars_.size(), 0);
    e.at(i) = 1;
    r.add_term(e, c);
    return r;
  }
  static SparsePoly monomial(VariableSet vars, const Exponents& e, const T& c) {
    SparsePoly r(std::move(vars), c.zero_like());
    r.add_term(e, c);
    return r;
  }

  [[nodiscard]] const VariableSet& variables() const { return vars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] const T& zero_element() const { return zero_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  [[nodiscard]] T coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// Adds c * monomial(e); zero coefficients are never stored.
  void add_term(const Exponents& e, const T& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("SparsePoly: exponent vector has wrong length");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("SparsePoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] int weighted_degree_of(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * vars_.weights[i];
    return d;
  }
  /// Maximum weighted degree over terms; -1 for zero.
  [[nodiscard]] int weighted_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree_of(e));
    return d;
  }
  [[nodiscard]] bool is_weighted_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = weighted_degree_of(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return weighted_degree_of(t.first) == d; });
  }
  [[nodiscard]] int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  /// True when every coefficient lies in the prime subfield (GfElem only).
  [[nodiscard]] bool coefficients_in_prime_field() const
    requires requires(const T& t) { t.in_prime_field(); }
  {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.in_prime_field(); });
  }

  [[nodiscard]] T evaluate(std::span<const T> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("SparsePoly::evaluate: wrong arity");
    T acc = zero_;
    for (const auto& [e, c] : terms_) {
      T term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * ipow(point[i], static_cast<std::uint64_t>(e[i]));
      acc = acc + term;
    }
    return acc;
  }

  /// Substitutes values for every variable except `keep`, returning a
  /// univariate polynomial in the kept variable.
  [[nodiscard]] UPoly<T> restrict_to(std::size_t keep, std::span<const T> point) const {
    std::vector<T> coeffs(static_cast<std::size_t>(std::max(degree_in(keep), 0)) + 1, zero_);
    for (const auto& [e, c] : terms_) {
      T term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != keep && e[i] > 0) term = term * ipow(point[i], static_cast<std::uint64_t>(e[i]));
      coeffs[static_cast<std::size_t>(e[keep])] = coeffs[static_cast<std::size_t>(e[keep])] + term;
    }
    return UPoly<T>(zero_, std::move(coeffs));
  }

  /// Formal partial derivative; integer multipliers reduce in the
  /// characteristic of the coefficients.
  [[nodiscard]] SparsePoly partial_derivative(std::size_t var) const {
    SparsePoly r(vars_, zero_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      r.add_term(d, c.scaled(e[var]));
    }
    return r;
  }
  [[nodiscard]] SparsePoly partial_derivative(const std::string& var) const {
    return partial_derivative(vars_.index_of(var));
  }

  /// Sets variable `var` to the constant `value`.
  [[nodiscard]] SparsePoly substitute(std::size_t var, const T& value) const {
    SparsePoly r(vars_, zero_);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[var] = 0;
      r.add_term(d, c * ipow(value, static_cast<std::uint64_t>(e[var])));
    }
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    a.check_same(b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    a.check_same(b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same(b);
    SparsePoly r(a.vars_, a.zero_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend SparsePoly operator*(const T& s, const SparsePoly& a) {
    SparsePoly r(a.vars_, a.zero_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] SparsePoly pow(unsigned n) const {
    SparsePoly result = constant(vars_, zero_.one_like());
    SparsePoly base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_.names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += c.to_string();
      } else if (c == c.one_like()) {
        out += mono;
      } else {
        out += "(" + c.to_string() + ")*" + mono;
      }
    }
    return out;
  }

 private:
  void check_same(const SparsePoly& o) const {
    if (!(vars_ == o.vars_)) throw std::invalid_argument("SparsePoly: mismatched variable sets");
  }

  VariableSet vars_;
  T zero_;
  Terms terms_;
};

/// An endomorphism of a weighted polynomial ring given by the image of each
/// coordinate. The image of a weight-d coordinate must be weighted-homogeneous
/// of degree d, so the map descends to weighted projective space.
template <FieldElement T>
class CoordinateMap {
 public:
  explicit CoordinateMap(std::vector<SparsePoly<T>> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("CoordinateMap: no images");
    const auto& vars = images_.front().variables();
    if (images_.size() != vars.size()) throw std::invalid_argument("CoordinateMap: one image per coordinate required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      const auto& im = images_[i];
      if (!(im.variables() == vars)) throw std::invalid_argument("CoordinateMap: images over different rings");
      if (im.is_zero() || !im.is_weighted_homogeneous() || im.weighted_degree() != vars.weights[i])
        throw std::invalid_argument("CoordinateMap: image of " + vars.names[i] +
                                    " must be weighted-homogeneous of degree " + std::to_string(vars.weights[i]));
    }
  }

  static CoordinateMap identity(const VariableSet& vars, const T& one) {
    std::vector<SparsePoly<T>> im;
    for (std::size_t i = 0; i < vars.size(); ++i) im.push_back(SparsePoly<T>::variable(vars, i, one));
    return CoordinateMap(std::move(im));
  }
  /// Coordinate i scaled by scalars[i].
  static CoordinateMap diagonal(const VariableSet& vars, const std::vector<T>& scalars) {
    if (scalars.size() != vars.size()) throw std::invalid_argument("CoordinateMap::diagonal: wrong arity");
    std::vector<SparsePoly<T>> im;
    for (std::size_t i = 0; i < vars.size(); ++i) im.push_back(SparsePoly<T>::variable(vars, i, scalars[i]));
    return CoordinateMap(std::move(im));
  }

  [[nodiscard]] const std::vector<SparsePoly<T>>& images() const { return images_; }
  [[nodiscard]] const VariableSet& variables() const { return images_.front().variables(); }

  /// Image of a point (unnormalized).
  [[nodiscard]] std::vector<T> apply(std::span<const T> point) const {
    std::vector<T> out;
    out.reserve(images_.size());
    for (const auto& im : images_) out.push_back(im.evaluate(point));
    return out;
  }

  /// Invertibility of a graded endomorphism: for each weight class, the
  /// matrix of coefficients on same-weight coordinates must be nonsingular.
  [[nodiscard]] bool is_invertible() const {
    const auto& vars = variables();
    std::vector<int> classes = vars.weights;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (int wt : classes) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars.weights[i] == wt) idx.push_back(i);
      std::vector<std::vector<T>> mat;
      for (auto i : idx) {
        std::vector<T> row;
        for (auto j : idx) {
          Exponents e(vars.size(), 0);
          e[j] = 1;
          row.push_back(images_[i].coefficient(e));
        }
        mat.push_back(std::move(row));
      }
      if (!nonsingular(std::move(mat))) return false;
    }
    return true;
  }

  friend bool operator==(const CoordinateMap& a, const CoordinateMap& b) { return a.images_ == b.images_; }

 private:
  static bool nonsingular(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col].is_zero()) ++piv;
      if (piv == n) return false;
      std::swap(m[piv], m[col]);
      const T inv = m[col][col].inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        const T f = m[r][col] * inv;
        for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
      }
    }
    return true;
  }

  std::vector<SparsePoly<T>> images_;
};

/// F with every variable replaced by its image under M.
template <FieldElement T>
SparsePoly<T> pullback(const SparsePoly<T>& f, const CoordinateMap<T>& m) {
  const auto& vars = f.variables();
  if (!(vars == m.variables())) throw std::invalid_argument("pullback: ring mismatch");
  std::vector<std::map<int, SparsePoly<T>>> power_cache(vars.size());
  auto image_power = [&](std::size_t i, int e) -> const SparsePoly<T>& {
    auto it = power_cache[i].find(e);
    if (it == power_cache[i].end()) it = power_cache[i].emplace(e, m.images()[i].pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  SparsePoly<T> out(vars, f.zero_element());
  for (const auto& [e, c] : f.terms()) {
    SparsePoly<T> term = SparsePoly<T>::constant(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * image_power(i, e[i]);
    out = out + term;
  }
  return out;
}

/// first ∘ second: applying the result to a point applies `second`, then `first`.
template <FieldElement T>
CoordinateMap<T> compose(const CoordinateMap<T>& first, const CoordinateMap<T>& second) {
  std::vector<SparsePoly<T>> im;
  for (const auto& f : first.images()) im.push_back(pullback(f, second));
  return CoordinateMap<T>(std::move(im));
}

/// M composed with itself k times (k >= 1).
template <FieldElement T>
CoordinateMap<T> map_power(const CoordinateMap<T>& m, unsigned k) {
  if (k == 0) return CoordinateMap<T>::identity(m.variables(), m.images().front().zero_element().one_like());
  CoordinateMap<T> result = m;
  for (unsigned i = 1; i < k; ++i) result = compose(result, m);
  return result;
}

/// lambda with pullback(F, M) = lambda * F, or nullopt when F is not an
/// eigenvector of the substitution.
template <FieldElement T>
std::optional<T> invariance_scalar(const SparsePoly<T>& f, const CoordinateMap<T>& m) {
  if (f.is_zero()) throw std::invalid_argument("invariance_scalar: zero polynomial");
  if (!f.is_weighted_homogeneous()) throw std::invalid_argument("invariance_scalar: polynomial is not weighted-homogeneous");
  const auto g = pullback(f, m);
  const auto& [e0, c0] = *f.terms().begin();
  const T lambda = g.coefficient(e0) * c0.inverse();
  if (lambda.is_zero()) return std::nullopt;
  if (!(g == lambda * f)) return std::nullopt;
  return lambda;
}

/// lambda with image_i = lambda^{w_i} * x_i for every coordinate, if M is a
/// weighted scaling (the identity of weighted projective space). Requires a
/// weight-1 coordinate to pin lambda.
template <FieldElement T>
std::optional<T> weighted_scaling_factor(const CoordinateMap<T>& m) {
  const auto& vars = m.variables();
  std::optional<T> lambda;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars.weights[i] != 1) continue;
    const auto& im = m.images()[i];
    Exponents e(vars.size(), 0);
    e[i] = 1;
    if (im.term_count() != 1 || im.terms().begin()->first != e) return std::nullopt;
    const T c = im.terms().begin()->second;
    if (lambda && !(*lambda == c)) return std::nullopt;
    lambda = c;
  }
  if (!lambda) throw std::invalid_argument("weighted_scaling_factor: no weight-1 coordinate");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars.weights[i] == 1) continue;
    Exponents e(vars.size(), 0);
    e[i] = 1;
    const auto expected = SparsePoly<T>::monomial(vars, e, ipow(*lambda, static_cast<std::uint64_t>(vars.weights[i])));
    if (!(m.images()[i] == expected)) return std::nullopt;
  }
  return lambda;
}

inline constexpr unsigned kDefaultOrderSearchCap = 200;

/// Least k >= 1 with M^k a weighted scaling. Compares coefficients
/// symbolically; throws if M is not invertible or no k <= cap works.
template <FieldElement T>
unsigned map_order(const CoordinateMap<T>& m, unsigned cap = kDefaultOrderSearchCap) {
  if (!m.is_invertible()) throw std::invalid_argument("map_order: map is not invertible");
  CoordinateMap<T> power = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (weighted_scaling_factor(power)) return k;
    power = compose(power, m);
  }
  throw std::runtime_error("map_order: no projective identity up to power " + std::to_string(cap));
}

/// Degree-d monomials x^a y^b z^c fixed by the diagonal action
/// (zeta^{e0}, zeta^{e1}, zeta^{e2}) with zeta of order n, i.e.
/// e0*a + e1*b + e2*c = 0 mod n. Sorted by descending x-exponent, then y.
inline std::vector<std::array<int, 3>> invariant_monomials(std::array<std::int64_t, 3> action, std::int64_t n, int d) {
  if (n < 1) throw std::invalid_argument("invariant_monomials: modulus must be positive");
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) {
      const int c = d - a - b;
      const std::int64_t weight = action[0] * a + action[1] * b + action[2] * c;
      if (((weight % n) + n) % n == 0) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace k3cert
