#pragma once

// The explicit surface/automorphism pairs in P(1,1,1,3).

#include <stdexcept>
#include <string>

#include "k3cert/field_tower.hpp"
#include "k3cert/geometry.hpp"

namespace k3cert {

namespace detail {
inline Poly mono(const VariableSet& v, Exponents e, const GfElem& c) { return Poly::monomial(v, e, c); }
}  // namespace detail

/// x^6 + x y^5 + y z^5 in the ring of `vars` (first three variables x, y, z).
inline Poly branch_sextic(const FieldPtr& field, const VariableSet& vars = VariableSet::p2()) {
  const auto one = field->one();
  Exponents x6(vars.size(), 0), xy5(vars.size(), 0), yz5(vars.size(), 0);
  x6[0] = 6;
  xy5[0] = 1;
  xy5[1] = 5;
  yz5[1] = 1;
  yz5[2] = 5;
  return detail::mono(vars, x6, one) + detail::mono(vars, xy5, one) + detail::mono(vars, yz5, one);
}

/// w^2 - (x^6 + x y^5 + y z^5).
inline Poly order50_surface(const FieldPtr& field) {
  const auto vars = VariableSet::p1113();
  return detail::mono(vars, {0, 0, 0, 2}, field->one()) - branch_sextic(field, vars);
}

/// w^2 + x^3 w - (x^6 + x y^5 + y z^5), the characteristic-2 model.
inline Poly char2_surface(const FieldPtr& field) {
  const auto vars = VariableSet::p1113();
  return detail::mono(vars, {0, 0, 0, 2}, field->one()) + detail::mono(vars, {3, 0, 0, 1}, field->one()) -
         branch_sextic(field, vars);
}

/// (x, y, z, w) -> (x, zeta^40 y, zeta^2 z, zeta^25 w) for zeta of order 50.
inline Map order50_automorphism(const FieldTower& tower) {
  if (tower.root_order() != 50) throw std::invalid_argument("order50_automorphism: needs a primitive 50th root");
  const auto& z = tower.zeta();
  return Map::diagonal(VariableSet::p1113(), {z.one_like(), z.pow(40), z.pow(2), z.pow(25)});
}

/// (x, y, z, w) -> (x, zeta^20 y, zeta z, w + x^3) for zeta of order 25.
inline Map char2_automorphism(const FieldTower& tower) {
  if (tower.root_order() != 25) throw std::invalid_argument("char2_automorphism: needs a primitive 25th root");
  const auto vars = VariableSet::p1113();
  const auto& z = tower.zeta();
  const auto one = z.one_like();
  return Map({Poly::variable(vars, 0, one), Poly::variable(vars, 1, z.pow(20)), Poly::variable(vars, 2, z),
              Poly::variable(vars, 3, one) + detail::mono(vars, {3, 0, 0, 0}, one)});
}

/// Induced action on the plane: (x, y, z) -> (x, zeta^{e1} y, zeta^{e2} z).
inline Map plane_diagonal(const FieldTower& tower, std::int64_t e1, std::int64_t e2) {
  const auto& z = tower.zeta();
  return Map::diagonal(VariableSet::p2(), {z.one_like(), z.pow_signed(e1), z.pow_signed(e2)});
}

}  // namespace k3cert
