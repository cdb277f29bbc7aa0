#pragma once

// Rational points of weighted projective hypersurfaces over finite fields.
//
// Ambient spaces have the shape P(1,...,1) or P(1,...,1,d): weight-1
// coordinates first, optionally followed by a single heavier coordinate.
// Enumeration walks the canonical points of the weight-1 projective space and
// solves for the heavy coordinate.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3cert/field_tower.hpp"
#include "k3cert/sparse_poly.hpp"

namespace k3cert {

using Poly = SparsePoly<GfElem>;
using Map = CoordinateMap<GfElem>;

inline constexpr std::uint64_t kDefaultSurfaceMaxQ = std::uint64_t{1} << 14;
inline constexpr std::uint64_t kDefaultCurveMaxQ = std::uint64_t{1} << 20;

class EnumerationBoundExceeded : public std::runtime_error {
 public:
  EnumerationBoundExceeded(std::uint64_t q, std::uint64_t bound)
      : std::runtime_error("enumeration over F_" + std::to_string(q) + " exceeds bound q <= " + std::to_string(bound)) {}
};

/// Canonical point of a weighted projective space. The first nonzero weight-1
/// coordinate is 1; points with every weight-1 coordinate zero sit on the
/// singular stratum and keep the heavy coordinate as the least element of its
/// class under weighted scaling.
class WeightedPoint {
 public:
  [[nodiscard]] const std::vector<GfElem>& coords() const { return coords_; }
  [[nodiscard]] const std::vector<int>& weights() const { return weights_; }
  [[nodiscard]] bool singular_stratum() const { return singular_stratum_; }
  [[nodiscard]] const GfElem& operator[](std::size_t i) const { return coords_.at(i); }

  friend bool operator==(const WeightedPoint& a, const WeightedPoint& b) {
    return a.weights_ == b.weights_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const WeightedPoint& a, const WeightedPoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }

  /// "(c0, c1, ...)"
  [[nodiscard]] std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ", ";
      out += coords_[i].to_string();
    }
    return out + ")";
  }

  friend WeightedPoint normalize(std::vector<GfElem> coords, const std::vector<int>& weights);

 private:
  std::vector<GfElem> coords_;
  std::vector<int> weights_;
  bool singular_stratum_ = false;
};

/// Canonical representative of the class of `coords` under
/// (c_i) ~ (lambda^{w_i} c_i). Idempotent.
inline WeightedPoint normalize(std::vector<GfElem> coords, const std::vector<int>& weights) {
  if (coords.size() != weights.size() || coords.empty()) throw std::invalid_argument("normalize: arity mismatch");
  if (std::all_of(coords.begin(), coords.end(), [](const GfElem& c) { return c.is_zero(); }))
    throw std::invalid_argument("normalize: all coordinates are zero");
  WeightedPoint pt;
  pt.weights_ = weights;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (weights[i] == 1 && !coords[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot) {
    const GfElem inv = coords[*pivot].inverse();
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) coords[i] = coords[i] * ipow(inv, static_cast<std::uint64_t>(weights[i]));
    pt.coords_ = std::move(coords);
    return pt;
  }
  // Singular stratum: only heavy coordinates are nonzero. Supported when one
  // heavy coordinate is nonzero; its class is c * (F_q^*)^w, represented by
  // the least element of the coset.
  pt.singular_stratum_ = true;
  std::size_t heavy = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if (heavy != coords.size()) throw std::invalid_argument("normalize: multiple heavy coordinates on the singular stratum");
    heavy = i;
  }
  const GfElem c = coords[heavy];
  const auto& field = c.field();
  const std::uint64_t q = field->order();
  const auto w = static_cast<std::uint64_t>(weights[heavy]);
  const std::uint64_t g = std::gcd(w, q - 1);
  const std::uint64_t exponent = (q - 1) / g;  // coset character of the w-th powers
  const GfElem target = c.pow(exponent);
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    const GfElem cand = field->from_index(idx);
    if (cand.pow(exponent) == target) {
      coords[heavy] = cand;
      break;
    }
  }
  pt.coords_ = std::move(coords);
  return pt;
}

inline WeightedPoint normalize(std::vector<GfElem> coords, const VariableSet& vars) {
  return normalize(std::move(coords), vars.weights);
}

namespace detail {
/// Index of the single heavy coordinate, or nullopt for P(1,...,1). Weight-1
/// coordinates must come first.
inline std::optional<std::size_t> heavy_coordinate(const VariableSet& vars) {
  std::optional<std::size_t> heavy;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars.weights[i] == 1) {
      if (heavy) throw std::invalid_argument("ambient space: weight-1 coordinates must precede the heavy one");
      continue;
    }
    if (heavy) throw std::invalid_argument("ambient space: at most one coordinate of weight > 1 supported");
    heavy = i;
  }
  if (heavy && *heavy == 0) throw std::invalid_argument("ambient space: needs a weight-1 coordinate");
  return heavy;
}

/// Calls fn(point) for every canonical point of P^{m-1}(F_q), m = count,
/// in the order (1,*,...), (0,1,*,...), ..., (0,...,0,1).
template <class Fn>
void for_each_projective_point(const FieldPtr& field, std::size_t count, Fn&& fn) {
  const std::uint64_t q = field->order();
  std::vector<GfElem> elems;
  elems.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(field->from_index(i));
  std::vector<GfElem> pt(count, field->zero());
  for (std::size_t lead = 0; lead < count; ++lead) {
    std::fill(pt.begin(), pt.end(), field->zero());
    pt[lead] = field->one();
    const std::size_t free = count - lead - 1;
    std::vector<std::uint64_t> digits(free, 0);
    while (true) {
      for (std::size_t j = 0; j < free; ++j) pt[lead + 1 + j] = elems[digits[j]];
      fn(std::span<const GfElem>(pt));
      std::size_t j = free;
      while (j > 0) {
        --j;
        if (++digits[j] < q) break;
        digits[j] = 0;
        if (j == 0) {
          j = free + 1;
          break;
        }
      }
      if (free == 0 || j == free + 1) break;
    }
  }
}

inline void check_bound(const FieldPtr& field, std::uint64_t max_q) {
  if (field->order() > max_q) throw EnumerationBoundExceeded(field->order(), max_q);
}

inline void check_field(const Poly& f, const FieldPtr& field) {
  if (!f.is_zero() && !(*f.zero_element().field() == *field))
    throw std::invalid_argument("polynomial coefficients live in a different field");
}
}  // namespace detail

/// A weighted-homogeneous hypersurface.
class Hypersurface {
 public:
  explicit Hypersurface(Poly f) : f_(std::move(f)) {
    if (f_.is_zero()) throw std::invalid_argument("Hypersurface: zero polynomial");
    if (!f_.is_weighted_homogeneous()) throw std::invalid_argument("Hypersurface: polynomial is not weighted-homogeneous");
    degree_ = f_.weighted_degree();
    heavy_ = detail::heavy_coordinate(f_.variables());
    if (heavy_) {
      std::vector<GfElem> apex(f_.variables().size(), f_.zero_element());
      apex[*heavy_] = f_.zero_element().one_like();
      contains_apex_ = f_.evaluate(apex).is_zero();
    }
  }

  [[nodiscard]] const Poly& polynomial() const { return f_; }
  [[nodiscard]] const VariableSet& variables() const { return f_.variables(); }
  [[nodiscard]] int degree() const { return degree_; }
  /// Whether the singular-stratum point (0,...,0,1) lies on the hypersurface.
  [[nodiscard]] bool contains_singular_stratum() const { return contains_apex_; }

  [[nodiscard]] bool contains(const WeightedPoint& pt) const { return f_.evaluate(pt.coords()).is_zero(); }

 private:
  Poly f_;
  int degree_ = 0;
  std::optional<std::size_t> heavy_;
  bool contains_apex_ = false;
};

inline bool on_hypersurface(const WeightedPoint& pt, const Hypersurface& s) { return s.contains(pt); }

/// Every point where all polynomials of `system` vanish, sorted. For each
/// canonical weight-1 prefix the heavy coordinate is solved from the gcd of
/// the restricted univariate polynomials.
inline std::vector<WeightedPoint> common_zeros(const std::vector<Poly>& system, const FieldPtr& field,
                                               std::uint64_t max_q = kDefaultCurveMaxQ) {
  if (system.empty()) throw std::invalid_argument("common_zeros: empty system");
  detail::check_bound(field, max_q);
  const VariableSet& vars = system.front().variables();
  for (const auto& f : system) {
    if (!(f.variables() == vars)) throw std::invalid_argument("common_zeros: mixed rings");
    detail::check_field(f, field);
  }
  const auto heavy = detail::heavy_coordinate(vars);
  const std::size_t light = heavy ? *heavy : vars.size();
  std::vector<WeightedPoint> out;
  std::vector<GfElem> full(vars.size(), field->zero());

  detail::for_each_projective_point(field, light, [&](std::span<const GfElem> prefix) {
    std::copy(prefix.begin(), prefix.end(), full.begin());
    if (!heavy) {
      if (std::all_of(system.begin(), system.end(), [&](const Poly& f) { return f.evaluate(full).is_zero(); }))
        out.push_back(normalize(full, vars));
      return;
    }
    GfPoly g(field->zero());
    for (const auto& f : system) {
      g = gcd(g, f.restrict_to(*heavy, full));
      if (g.degree() == 0) return;
    }
    if (g.is_zero()) {
      for (std::uint64_t i = 0; i < field->order(); ++i) {
        full[*heavy] = field->from_index(i);
        out.push_back(normalize(full, vars));
      }
    } else {
      for (const auto& r : roots(g)) {
        full[*heavy] = r;
        out.push_back(normalize(full, vars));
      }
    }
  });
  if (heavy) {
    std::vector<GfElem> apex(vars.size(), field->zero());
    apex[*heavy] = field->one();
    if (std::all_of(system.begin(), system.end(), [&](const Poly& f) { return f.evaluate(apex).is_zero(); }))
      out.push_back(normalize(apex, vars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All F_q-points of the hypersurface, each once, sorted.
inline std::vector<WeightedPoint> enumerate_points(const Hypersurface& s, const FieldPtr& field,
                                                   std::uint64_t max_q = kDefaultSurfaceMaxQ) {
  detail::check_bound(field, max_q);
  return common_zeros({s.polynomial()}, field, max_q);
}

/// Normalized image of a point; throws if the image is the zero vector.
inline WeightedPoint apply_map(const Map& m, const WeightedPoint& pt) {
  auto image = m.apply(pt.coords());
  if (std::all_of(image.begin(), image.end(), [](const GfElem& c) { return c.is_zero(); }))
    throw std::invalid_argument("apply_map: point maps to zero (map not invertible there)");
  return normalize(std::move(image), pt.weights());
}

/// Points among `points` fixed by M^k.
inline std::vector<WeightedPoint> fixed_points(const Map& m, unsigned k, const std::vector<WeightedPoint>& points) {
  if (k < 1) throw std::invalid_argument("fixed_points: k must be positive");
  const Map power = map_power(m, k);
  std::vector<WeightedPoint> out;
  for (const auto& pt : points)
    if (apply_map(power, pt) == pt) out.push_back(pt);
  return out;
}

/// Fix(M^k) within S(F_q).
inline std::vector<WeightedPoint> fixed_points(const Map& m, unsigned k, const Hypersurface& s, const FieldPtr& field,
                                               std::uint64_t max_q = kDefaultSurfaceMaxQ) {
  return fixed_points(m, k, enumerate_points(s, field, max_q));
}

/// Partition of a point set closed under M into M-orbits. Orbits are listed
/// in order of their least point; each orbit starts at its least point and
/// follows M.
inline std::vector<std::vector<WeightedPoint>> orbit_decomposition(const Map& m, const std::vector<WeightedPoint>& points) {
  std::set<WeightedPoint> pool(points.begin(), points.end());
  std::vector<std::vector<WeightedPoint>> orbits;
  std::set<WeightedPoint> seen;
  for (const auto& start : pool) {
    if (seen.count(start)) continue;
    std::vector<WeightedPoint> orbit{start};
    seen.insert(start);
    WeightedPoint cur = apply_map(m, start);
    while (!(cur == start)) {
      if (!pool.count(cur)) throw std::invalid_argument("orbit_decomposition: point set is not closed under the map");
      if (seen.count(cur)) throw std::logic_error("orbit_decomposition: map is not injective on the set");
      orbit.push_back(cur);
      seen.insert(cur);
      cur = apply_map(m, cur);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// Orbit lengths, ascending.
inline std::vector<std::size_t> orbit_lengths(const std::vector<std::vector<WeightedPoint>>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Singularities of plane curves.

/// A singular point together with the degree of its minimal field of
/// definition over F_p.
struct SingularPoint {
  std::size_t extension_degree = 1;
  WeightedPoint point;
};

namespace detail {
/// Maps a polynomial with prime-field coefficients into another field of the
/// same characteristic.
inline Poly lift_coefficients(const Poly& f, const FieldPtr& target) {
  if (!f.coefficients_in_prime_field()) throw std::invalid_argument("lift_coefficients: coefficients outside F_p");
  if (f.zero_element().characteristic() != target->characteristic())
    throw std::invalid_argument("lift_coefficients: characteristic mismatch");
  Poly out(f.variables(), target->zero());
  for (const auto& [e, c] : f.terms()) out.add_term(e, target->from_int(static_cast<std::int64_t>(c.residues()[0])));
  return out;
}

/// Smallest j with every coordinate fixed by the p^j-Frobenius.
inline std::size_t definition_degree(const WeightedPoint& pt) {
  const auto& field = pt[0].field();
  const auto k = field->degree();
  const auto p = field->characteristic();
  for (std::size_t j = 1; j < k; ++j) {
    if (k % j != 0) continue;
    std::uint64_t pj = 1;
    for (std::size_t i = 0; i < j; ++i) pj *= p;
    if (std::all_of(pt.coords().begin(), pt.coords().end(), [&](const GfElem& c) { return c.pow(pj) == c; })) return j;
  }
  return k;
}

/// {F, F_x, F_y, F_z}, dropping zero polynomials. F itself stays in the list
/// because Euler's relation only eliminates it when p does not divide deg F.
inline std::vector<Poly> jacobian_system(const Poly& f) {
  std::vector<Poly> sys{f};
  for (std::size_t i = 0; i < f.variables().size(); ++i) {
    auto d = f.partial_derivative(i);
    if (!d.is_zero()) sys.push_back(std::move(d));
  }
  return sys;
}
}  // namespace detail

/// Singular points of the plane curve F = 0 over F_{p^j}, j = 1..max_extension,
/// found as common zeros of F and its partials (Jacobian criterion). Each
/// point is reported once, over its minimal field of definition.
inline std::vector<SingularPoint> singular_search(const Poly& f, std::size_t max_extension,
                                                  std::uint64_t max_q = kDefaultCurveMaxQ) {
  if (f.variables().size() != 3 || f.variables().weights != std::vector<int>{1, 1, 1})
    throw std::invalid_argument("singular_search: expects a plane curve in x, y, z");
  if (!f.is_weighted_homogeneous() || f.is_zero()) throw std::invalid_argument("singular_search: curve must be homogeneous");
  const auto p = f.zero_element().characteristic();
  std::vector<SingularPoint> out;
  for (std::size_t j = 1; j <= max_extension; ++j) {
    const auto field = smallest_extension_field(p, j);
    detail::check_bound(field, max_q);
    const auto system = detail::jacobian_system(detail::lift_coefficients(f, field));
    // z is eliminated pointwise over the lines through (0:0:1).
    const VariableSet& vars = f.variables();
    std::vector<WeightedPoint> found;
    detail::for_each_projective_point(field, 2, [&](std::span<const GfElem> xy) {
      std::vector<GfElem> full{xy[0], xy[1], field->zero()};
      GfPoly g(field->zero());
      for (const auto& h : system) {
        g = gcd(g, h.restrict_to(2, full));
        if (g.degree() == 0) return;
      }
      const auto zs = g.is_zero() ? std::vector<GfElem>{} : roots(g);
      if (g.is_zero()) {
        for (std::uint64_t i = 0; i < field->order(); ++i) {
          full[2] = field->from_index(i);
          found.push_back(normalize(full, vars));
        }
      }
      for (const auto& z : zs) {
        full[2] = z;
        found.push_back(normalize(full, vars));
      }
    });
    std::vector<GfElem> apex{field->zero(), field->zero(), field->one()};
    if (std::all_of(system.begin(), system.end(), [&](const Poly& h) { return h.evaluate(apex).is_zero(); }))
      found.push_back(normalize(apex, vars));
    std::sort(found.begin(), found.end());
    for (auto& pt : found)
      if (detail::definition_degree(pt) == j) out.push_back({j, std::move(pt)});
  }
  return out;
}

/// Exact certificate that F, F_x, F_y, F_z have no common zero in P^2 over the
/// algebraic closure of F_p. Chart x = 1: for a pivot A and two other members
/// B, C of the Jacobian system, R1 = Res_z(A, B) and R2 = Res_z(A, C) vanish at
/// the y-coordinate of any common zero, so Res_y(R1, R2) != 0 excludes the
/// chart. The line x = 0 is checked by univariate gcds in z at y = 1 and by
/// evaluation at (0:0:1). Returns the nonzero resultant on success.
inline std::optional<GfElem> smoothness_certificate(const Poly& f) {
  if (f.variables().size() != 3) throw std::invalid_argument("smoothness_certificate: expects a plane curve");
  if (!f.coefficients_in_prime_field())
    throw std::invalid_argument("smoothness_certificate: coefficients must lie in the prime field");
  const auto field = f.zero_element().field();
  const GfElem zero = field->zero();
  const GfElem one = field->one();
  const auto system = detail::jacobian_system(f);

  // Line x = 0.
  {
    std::vector<GfElem> pt{zero, one, zero};
    GfPoly g(zero);
    for (const auto& h : system) g = gcd(g, h.restrict_to(2, pt));
    if (g.degree() != 0) return std::nullopt;
    std::vector<GfElem> apex{zero, zero, one};
    if (std::all_of(system.begin(), system.end(), [&](const Poly& h) { return h.evaluate(apex).is_zero(); }))
      return std::nullopt;
  }

  // Coefficients in z of h(1, y, z), each a polynomial in y.
  auto z_coefficients = [&](const Poly& h) {
    const int dz = std::max(h.degree_in(2), 0);
    std::vector<std::vector<GfElem>> dense(static_cast<std::size_t>(dz) + 1);
    for (const auto& [e, c] : h.terms()) {
      auto& row = dense[static_cast<std::size_t>(e[2])];
      if (row.size() <= static_cast<std::size_t>(e[1])) row.resize(static_cast<std::size_t>(e[1]) + 1, zero);
      row[static_cast<std::size_t>(e[1])] = row[static_cast<std::size_t>(e[1])] + c;
    }
    std::vector<GfPoly> out;
    for (auto& row : dense) out.emplace_back(zero, std::move(row));
    return out;
  };
  auto eliminate_z = [&](const Poly& a, const Poly& b) {
    if (a.degree_in(2) <= 0 && b.degree_in(2) <= 0) {
      // Both free of z: common zeros are the common roots in y.
      return gcd(z_coefficients(a).front(), z_coefficients(b).front());
    }
    return sylvester_resultant(z_coefficients(a), z_coefficients(b), zero);
  };

  for (std::size_t ia = 0; ia < system.size(); ++ia) {
    for (std::size_t ib = 0; ib < system.size(); ++ib) {
      for (std::size_t ic = ib + 1; ic < system.size(); ++ic) {
        if (ib == ia || ic == ia) continue;
        const auto r1 = eliminate_z(system[ia], system[ib]);
        const auto r2 = eliminate_z(system[ia], system[ic]);
        if (r1.is_zero() || r2.is_zero()) continue;
        const GfElem res = r1.degree() == 0 ? r1.leading() : resultant(r1, r2);
        if (!res.is_zero()) return res;
      }
    }
  }
  return std::nullopt;
}

/// Weil window for a smooth curve of genus g: (N - q - 1)^2 <= 4 g^2 q.
inline bool within_curve_weil_bound(std::uint64_t count, std::uint64_t q, std::uint64_t genus) {
  const auto dev = static_cast<std::int64_t>(count) - static_cast<std::int64_t>(q) - 1;
  return static_cast<unsigned __int128>(dev * dev) <= static_cast<unsigned __int128>(4) * genus * genus * q;
}

/// |N - q^2 - 1| <= 22 q for a K3 surface.
inline bool within_k3_weil_bound(std::uint64_t count, std::uint64_t q) {
  const auto dev = static_cast<std::int64_t>(count) - static_cast<std::int64_t>(q * q) - 1;
  return static_cast<std::uint64_t>(dev < 0 ? -dev : dev) <= 22 * q;
}

}  // namespace k3cert
