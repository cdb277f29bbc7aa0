#pragma once

// JSON encodings of reports and of the algebraic objects they mention.

#include <json.hpp>

#include <string>
#include <vector>

#include "k3cert/cyclotomic.hpp"
#include "k3cert/field_tower.hpp"
#include "k3cert/geometry.hpp"
#include "k3cert/verifier.hpp"

namespace k3cert {

using Json = nlohmann::json;

/// [[order, multiplicity], ...]
inline Json packets_to_json(const EigenPacketList& list) {
  Json out = Json::array();
  for (const auto& pk : list.packets()) out.push_back({pk.order, pk.multiplicity});
  return out;
}

inline EigenPacketList packets_from_json(const Json& j) {
  std::vector<Packet> packets;
  for (const auto& e : j) packets.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()});
  return EigenPacketList(std::move(packets));
}

inline Json element_to_json(const GfElem& e) { return e.residues(); }

inline Json field_to_json(const FieldTower& t) {
  return {{"p", t.p()},
          {"k", t.k()},
          {"modulus", t.field()->modulus()},
          {"zeta", element_to_json(t.zeta())},
          {"n", t.root_order()}};
}

/// [[exponents, residues], ...] in the polynomial's term order.
inline Json poly_to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({e, element_to_json(c)});
  return out;
}

inline Poly poly_from_json(const Json& j, const FieldPtr& field, const VariableSet& vars) {
  Poly f(vars, field->zero());
  for (const auto& term : j) {
    f.add_term(term.at(0).get<Exponents>(), field->element(term.at(1).get<std::vector<std::uint64_t>>()));
  }
  return f;
}

inline Json points_to_json(const std::vector<WeightedPoint>& pts) {
  Json out = Json::array();
  for (const auto& pt : pts) out.push_back(pt.to_string());
  return out;
}

inline Json orbits_to_json(const std::vector<std::vector<WeightedPoint>>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) out.push_back(points_to_json(o));
  return out;
}

inline Json check_to_json(const Check& c) {
  return {{"id", c.id},
          {"claim", c.claim},
          {"expected", c.expected},
          {"observed", c.observed},
          {"status", to_string(c.status)}};
}

inline Check check_from_json(const Json& j) {
  return {j.at("id").get<std::string>(), j.at("claim").get<std::string>(), j.at("expected").get<std::string>(),
          j.at("observed").get<std::string>(), status_from_string(j.at("status").get<std::string>())};
}

inline Json summary_to_json(const Report& r) {
  return {{"total", r.checks().size()},
          {"pass", r.count(Status::Pass)},
          {"fail", r.count(Status::Fail)},
          {"contradiction_confirmed", r.count(Status::ContradictionConfirmed)},
          {"not_mechanized", r.count(Status::NotMechanized)},
          {"ok", r.ok()}};
}

/// {config, checks: [...], summary}
inline Json report_to_json(const Report& r, const Json& config) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) checks.push_back(check_to_json(c));
  return {{"config", config}, {"checks", checks}, {"summary", summary_to_json(r)}};
}

/// Rebuilds the check list; ids already carry their report prefix.
inline Report report_from_json(const Json& j, const std::string& name = "report") {
  Report r(name);
  for (const auto& c : j.at("checks")) {
    auto check = check_from_json(c);
    r.add_raw(std::move(check));
  }
  return r;
}

inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace k3cert
