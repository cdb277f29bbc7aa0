// k3cert command-line front end: eigenvalue bookkeeping, replays and
// fixed-point listings.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "k3cert/report_json.hpp"

namespace {

using namespace k3cert;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

// Default field: 50 | 101 - 1.
constexpr std::uint64_t kDefaultPrime = 101;

const std::vector<std::string> kCheckNames{"lemma50", "no1", "normalization", "char2", "degeneration"};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t p = kDefaultPrime;
  std::uint64_t max_q = kDefaultSurfaceMaxQ;
  std::int64_t j = 1;
  std::string checks;
  std::string out;
};

EigenPacketList parse_list(const std::string& spec) {
  std::vector<Packet> packets;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("malformed packet '" + item + "', expected order:multiplicity");
    try {
      std::size_t used_a = 0, used_m = 0;
      const std::string a = item.substr(0, colon), m = item.substr(colon + 1);
      const auto order = std::stoll(a, &used_a);
      const auto mult = std::stoll(m, &used_m);
      if (used_a != a.size() || used_m != m.size()) throw std::invalid_argument(item);
      packets.push_back({order, mult});
    } catch (const std::logic_error&) {
      throw ConfigError("malformed packet '" + item + "', expected order:multiplicity");
    }
  }
  if (packets.empty()) throw ConfigError("empty eigenvalue list");
  try {
    return EigenPacketList(std::move(packets));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
}

std::vector<std::string> parse_checks(const std::string& spec) {
  if (spec.empty()) return kCheckNames;
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::find(kCheckNames.begin(), kCheckNames.end(), item) == kCheckNames.end())
      throw ConfigError("unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError("no checks selected");
  return out;
}

VerifyConfig verify_config(const RunConfig& rc) {
  VerifyConfig vc;
  vc.p = rc.p;
  vc.max_q_surface = rc.max_q;
  vc.max_q_curve = std::max<std::uint64_t>(rc.max_q, kDefaultCurveMaxQ);
  vc.normalization_j = rc.j;
  return vc;
}

Json config_json(const RunConfig& rc, const VerifyConfig& vc, const std::vector<std::string>& checks) {
  Json j{{"p", vc.p},
         {"checks", checks},
         {"max_q_surface", vc.max_q_surface},
         {"max_q_curve", vc.max_q_curve},
         {"normalization_j", rc.j},
         {"singular_max_extension", vc.singular_max_extension}};
  if (50 % vc.p != 0) j["field"] = field_to_json(build_field_with_root(vc.p, 50));
  return j;
}

Report run_checks(const std::vector<std::string>& checks, const VerifyConfig& vc) {
  Report all("all");
  for (const auto& name : checks) {
    if ((name == "lemma50" || name == "normalization") && 50 % vc.p == 0)
      throw ConfigError("check '" + name + "' needs a prime not dividing 50, got " + std::to_string(vc.p));
    if (name == "lemma50") all.append(replay_realized_list(vc));
    if (name == "no1") all.append(replay_excluded_list());
    if (name == "normalization") all.append(replay_normalization(vc.normalization_j, vc));
    if (name == "char2") all.append(replay_char2());
    if (name == "degeneration") all.append(degeneration_report(vc.p, vc));
  }
  return all;
}

void print_table(const Report& r) {
  std::size_t id_width = 2;
  for (const auto& c : r.checks()) id_width = std::max(id_width, c.id.size());
  for (const auto& c : r.checks()) {
    std::cout << std::left << std::setw(24) << to_string(c.status) << std::setw(static_cast<int>(id_width) + 2) << c.id
              << "expected: " << c.expected << "  observed: " << c.observed << "\n";
  }
  std::cout << "summary: " << r.checks().size() << " checks, " << r.count(Status::Pass) << " pass, "
            << r.count(Status::Fail) << " fail, " << r.count(Status::ContradictionConfirmed)
            << " contradiction-confirmed, " << r.count(Status::NotMechanized) << " not mechanized\n";
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
}

int cmd_eig(const std::string& list_spec, std::int64_t k) {
  if (k < 1) throw ConfigError("--k must be positive");
  const auto list = parse_list(list_spec);
  const auto power = power_list(list, k);
  std::cout << "list   " << list.to_string() << "\n"
            << "g^" << k << "*  " << power.to_string() << "\n"
            << "trace  " << trace_h2(power) << "\n"
            << "euler  " << euler_k3(power) << "\n"
            << "charpoly " << char_poly(power).to_string() << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& rc, bool json_to_stdout) {
  require_prime(rc.p);
  if (rc.max_q < 1) throw ConfigError("--max-q must be positive");
  const auto checks = parse_checks(rc.checks);
  const auto vc = verify_config(rc);
  const auto report = run_checks(checks, vc);
  const auto text = dump_report(report_to_json(report, config_json(rc, vc, checks)));
  if (json_to_stdout && rc.out.empty()) {
    std::cout << text;
  } else {
    if (!json_to_stdout) print_table(report);
    if (!rc.out.empty()) write_output(rc.out, text);
  }
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_fixed(const RunConfig& rc, std::int64_t k) {
  require_prime(rc.p);
  if (k < 1 || k > 50) throw ConfigError("--k must lie in 1..50");
  if (50 % rc.p == 0) throw ConfigError("the order-50 pair needs a prime not dividing 50");
  const auto tower = build_field_with_root(rc.p, 50);
  if (tower.q() > rc.max_q)
    throw ConfigError("q = " + std::to_string(tower.p()) + "^" + std::to_string(tower.k()) +
                      " exceeds the enumeration bound " + std::to_string(rc.max_q));
  const Hypersurface x50(order50_surface(tower.field()));
  const auto g = order50_automorphism(tower);
  const auto fix = fixed_points(g, static_cast<unsigned>(k), enumerate_points(x50, tower.field(), rc.max_q));
  const auto orbits = orbit_decomposition(g, fix);

  std::cout << "field  F_" << tower.p() << (tower.k() > 1 ? "^" + std::to_string(tower.k()) : "")
            << ", zeta = " << tower.zeta().to_string() << "\n"
            << "Fix(g^" << k << ")  " << fix.size() << " points\n";
  constexpr std::size_t kListLimit = 200;
  for (std::size_t i = 0; i < std::min(fix.size(), kListLimit); ++i) std::cout << "  " << fix[i].to_string() << "\n";
  if (fix.size() > kListLimit) std::cout << "  ... " << fix.size() - kListLimit << " more\n";
  std::cout << "orbits under g: " << orbits.size() << ", lengths";
  std::map<std::size_t, std::size_t> histogram;
  for (auto len : orbit_lengths(orbits)) ++histogram[len];
  for (auto [len, count] : histogram) std::cout << " " << len << "x" << count;
  std::cout << "\n";
  if (!rc.out.empty()) {
    const Json j{{"field", field_to_json(tower)},
                 {"k", k},
                 {"count", fix.size()},
                 {"points", points_to_json(fix)},
                 {"orbits", orbits_to_json(orbits)}};
    write_output(rc.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for K3 surfaces with an automorphism of order 50"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string list_spec;
  std::int64_t k = 1;

  auto* eig = app.add_subcommand("eig", "Powers, trace and Euler number of an eigenvalue list on H^2");
  eig->add_option("--list", list_spec, "order:multiplicity,... summing to 22")->required();
  eig->add_option("--k", k, "power of g")->default_val(1);

  auto add_common = [&rc](CLI::App* sub) {
    sub->add_option("--p", rc.p, "prime characteristic")->default_val(kDefaultPrime);
    sub->add_option("--max-q", rc.max_q, "largest field size for surface enumeration")->default_val(kDefaultSurfaceMaxQ);
    sub->add_option("--out", rc.out, "write JSON to this path");
  };
  auto add_checks = [&rc](CLI::App* sub) {
    sub->add_option("--checks", rc.checks, "comma-separated: lemma50,no1,normalization,char2,degeneration");
    sub->add_option("--j", rc.j, "z-exponent of the plane action in the normalization replay")->default_val(1);
  };

  auto* verify = app.add_subcommand("verify", "Run replays and print a check table");
  add_common(verify);
  add_checks(verify);
  auto* report = app.add_subcommand("report", "Run replays and emit the JSON report");
  add_common(report);
  add_checks(report);
  auto* fixed = app.add_subcommand("fixed", "List Fix(g^k) on w^2 = x^6 + x y^5 + y z^5 over F_q");
  add_common(fixed);
  fixed->add_option("--k", k, "power of g (1..50)")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*eig) return cmd_eig(list_spec, k);
    if (*verify) return cmd_verify(rc, false);
    if (*report) return cmd_verify(rc, true);
    if (*fixed) return cmd_fixed(rc, k);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfig;
}
