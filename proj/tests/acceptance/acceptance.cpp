// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "k3cert/verifier.hpp"

using namespace k3cert;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  template <class A, class B>
  void eq(const std::string& what, const A& expected, const B& observed) {
    if (!(expected == observed)) {
      ok = false;
      detail << what << " mismatch; ";
    }
  }
  void require(const std::string& what, bool cond) {
    if (!cond) {
      ok = false;
      detail << what << " failed; ";
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "error: " << e.what();
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  const auto d = o.detail.str();
  if (!d.empty()) std::cout << " [" << d << "]";
  std::cout << "\n";
}

// Every list on a 22-dimensional space whose packet orders divide 50.
std::vector<EigenPacketList> all_lists_dividing_50() {
  std::vector<EigenPacketList> out;
  for (std::int64_t m25 = 0; m25 <= 1; ++m25)
    for (std::int64_t m50 = 0; m25 + m50 <= 1; ++m50)
      for (std::int64_t m5 = 0; 20 * (m25 + m50) + 4 * m5 <= 22; ++m5)
        for (std::int64_t m10 = 0; 20 * (m25 + m50) + 4 * (m5 + m10) <= 22; ++m10) {
          const std::int64_t rest = 22 - 20 * (m25 + m50) - 4 * (m5 + m10);
          for (std::int64_t m1 = 0; m1 <= rest; ++m1) {
            std::vector<Packet> pk;
            for (auto [a, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                     {1, m1}, {2, rest - m1}, {5, m5}, {10, m10}, {25, m25}, {50, m50}})
              if (m > 0) pk.push_back({a, m});
            out.emplace_back(std::move(pk));
          }
        }
  return out;
}

}  // namespace

int main() {
  criterion(1, "Euler numbers of the realized and excluded lists", [](Outcome& o) {
    const auto realized = realized_order50_list();
    for (auto [k, e] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {5, 7}, {10, -1}, {25, -18}})
      o.eq("realized e(g^" + std::to_string(k) + ")", e, euler_k3(power_list(realized, k)));
    const auto excluded = excluded_order50_list();
    for (auto [k, e] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 4}, {5, 9}, {25, -16}})
      o.eq("excluded e(g^" + std::to_string(k) + ")", e, euler_k3(power_list(excluded, k)));
  });

  criterion(2, "packet traces agree with the brute-force root-of-unity sum", [](Outcome& o) {
    std::size_t cases = 0, bad = 0;
    for (const auto& list : all_lists_dividing_50())
      for (std::int64_t k = 1; k <= 50; ++k) {
        ++cases;
        if (trace_h2(power_list(list, k)) != brute_trace(list, k)) ++bad;
      }
    o.eq("mismatches", std::size_t{0}, bad);
    o.require("at least 2500 cases", cases >= 2500);
    o.detail << cases << " cases";
  });

  const auto tower = build_field_with_root(101, 50);
  const auto& field = tower.field();
  const auto vars = VariableSet::p1113();
  const Hypersurface x50(order50_surface(field));
  const Map g = order50_automorphism(tower);
  std::vector<WeightedPoint> points;
  try {
    points = enumerate_points(x50, field);
  } catch (const std::exception& e) {
    std::cout << "enumeration over F_101 failed: " << e.what() << "\n";
  }
  const auto z = Poly::variable(vars, 2, field->one());
  const auto w = Poly::variable(vars, 3, field->one());

  criterion(3, "explicit order-50 pair over F_101", [&](Outcome& o) {
    const auto lam = invariance_scalar(x50.polynomial(), g);
    o.require("invariance scalar is 1", lam && lam->is_one());
    o.eq("map order", 50u, map_order(g));
    const auto p6 = detail::point(field, {0, 1, 0, 0}, vars);
    const auto q = detail::point(field, {0, 0, 1, 0}, vars);
    o.eq("Fix(g)", (std::set<WeightedPoint>{p6, q}), detail::as_set(fixed_points(g, 1, points)));
    o.eq("#Fix(g^5)", std::size_t{7}, fixed_points(g, 5, points).size());
    const auto six = common_zeros({z, w, x50.polynomial()}, field);
    o.eq("#{z = w = f = 0}", std::size_t{6}, six.size());
    o.eq("orbit split", (std::vector<std::size_t>{1, 5}), orbit_lengths(orbit_decomposition(g, six)));
    const auto q1 = detail::point(field, {1, 0, 0, 1}, vars);
    const auto q2 = detail::point(field, {1, 0, 0, -1}, vars);
    o.require("g swaps (1,0,0,1) and (1,0,0,-1)", apply_map(g, q1) == q2 && apply_map(g, q2) == q1);
  });

  criterion(4, "Fix-set identities for all a, b in 1..50 over F_101", [&](Outcome& o) {
    o.require("points enumerated", !points.empty());
    o.eq("identity failures", std::size_t{0}, fixset_identity_failures(fixed_sets_by_power(g, 50, points), 50));
  });

  criterion(5, "degeneration at p = 101, 5 and 2", [](Outcome& o) {
    const auto f101 = make_prime_field(101);
    const auto s101 = branch_sextic(f101);
    o.require("no singular point at p = 101", singular_search(s101, 2).empty());
    o.require("certificate at p = 101", smoothness_certificate(s101).has_value());
    const auto f5 = make_prime_field(5);
    const auto sing5 = singular_search(branch_sextic(f5), 1);
    std::set<WeightedPoint> got;
    for (const auto& s : sing5) got.insert(s.point);
    o.eq("singular set at p = 5", (std::set<WeightedPoint>{detail::point(f5, {1, -1, 0}, VariableSet::p2())}), got);
    const auto f2 = make_prime_field(2);
    o.require("inseparable at p = 2", order50_surface(f2).partial_derivative("w").is_zero());
  });

  criterion(6, "characteristic-2 pair over F_{2^20}", [](Outcome& o) {
    const auto t2 = build_field_with_root(2, 25);
    o.eq("field degree", std::size_t{20}, t2.k());
    const auto lam = invariance_scalar(char2_surface(t2.field()), char2_automorphism(t2));
    o.require("invariance scalar is 1", lam && lam->is_one());
    o.eq("map order", 50u, map_order(char2_automorphism(t2)));
  });

  criterion(7, "Hurwitz and Hodge-index replays", [](Outcome& o) {
    o.eq("g'", boost::rational<std::int64_t>(-1), hurwitz_deficit({25, 9, {{25, 4}, {5, 5}}}));
    bool all = true;
    for (std::int64_t d = 0; d <= 1000; ++d) all = all && hodge_index_violation(18, 2 * d + 4, 7);
    o.require("18(2d+4) > 49 for d in 0..1000", all);
    o.require("18*2 <= 49", !hodge_index_violation(18, 2, 7));
  });

  criterion(8, "invariant sextic monomials and the residue of j", [](Outcome& o) {
    o.eq("invariants for j = 1", (std::vector<std::array<int, 3>>{{6, 0, 0}, {1, 5, 0}, {0, 1, 5}}),
         invariant_monomials({0, 20, 1}, 25, 6));
    for (std::int64_t j = 0; j < 25; j += 5) {
      const auto inv = invariant_monomials({0, 20, j}, 25, 6);
      o.require("no y z^5 for j = " + std::to_string(j),
                std::find(inv.begin(), inv.end(), std::array<int, 3>{0, 1, 5}) == inv.end());
    }
    for (std::int64_t j = 0; j < 25; ++j) {
      const auto inv = invariant_monomials({0, 20, j}, 25, 6);
      const bool has = std::find(inv.begin(), inv.end(), std::array<int, 3>{0, 1, 5}) != inv.end();
      o.eq("y z^5 invariant iff j = 1 mod 5 (j = " + std::to_string(j) + ")", j % 5 == 1, has);
    }
  });

  criterion(9, "Weil windows over F_101", [&](Outcome& o) {
    const std::int64_t n = static_cast<std::int64_t>(points.size());
    o.require("|#X - 101^2 - 1| <= 22*101", n > 0 && std::llabs(n - 101 * 101 - 1) <= 22 * 101);
    const std::int64_t d2 = static_cast<std::int64_t>(common_zeros({z, x50.polynomial()}, field).size());
    o.require("|#{z = 0} - 102| <= 40", std::llabs(d2 - 102) <= 40);
    o.eq("genus of a plane sextic", std::int64_t{10}, genus_degree(6));
    o.detail << "#X = " << n << ", #D2 = " << d2;
  });

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
