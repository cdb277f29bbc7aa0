#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "k3cert/cyclotomic.hpp"

using namespace k3cert;

namespace {

const EigenPacketList kRealized({{1, 1}, {2, 1}, {50, 1}});
const EigenPacketList kExcluded({{1, 2}, {50, 1}});

std::vector<std::int64_t> divisors_of_50() { return {1, 2, 5, 10, 25, 50}; }

// Every list on H^2 built from a single packet of order a | 50 padded with 1s.
std::vector<EigenPacketList> single_packet_lists() {
  std::vector<EigenPacketList> out;
  for (auto a : divisors_of_50()) {
    const auto phi = euler_phi(a);
    for (std::int64_t m = 1; m * phi <= 22; ++m) {
      std::vector<Packet> pk{{a, m}};
      if (22 - m * phi > 0) pk.push_back({a == 1 ? 2 : 1, 22 - m * phi});
      out.emplace_back(pk);
    }
  }
  return out;
}

}  // namespace

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(50), 20);
  EXPECT_EQ(euler_phi(10), 4);
  EXPECT_EQ(euler_phi(25), 20);
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
}

TEST(EulerPhi, MatchesCoprimeCount) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t count = 0;
    for (std::int64_t j = 1; j <= n; ++j) count += std::gcd(j, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(PrimitiveRootSum, Examples) {
  EXPECT_EQ(primitive_root_sum(50), 0);
  EXPECT_EQ(primitive_root_sum(10), 1);
  EXPECT_EQ(primitive_root_sum(5), -1);
  EXPECT_EQ(primitive_root_sum(1), 1);
  EXPECT_EQ(primitive_root_sum(2), -1);
  EXPECT_EQ(primitive_root_sum(30), -1);
  EXPECT_THROW(primitive_root_sum(0), std::invalid_argument);
}

TEST(PrimitiveRootSum, EqualsSubleadingCyclotomicCoefficient) {
  // Phi_n = x^phi - R(n) x^{phi-1} + ...
  for (std::int64_t n = 2; n <= 120; ++n) {
    const auto& phi = cyclotomic_polynomial(n);
    const auto& c = phi.coefficients();
    EXPECT_EQ(-c[c.size() - 2], primitive_root_sum(n)) << n;
  }
}

TEST(EigenPacketList, Validation) {
  EXPECT_THROW(EigenPacketList({{1, 21}}), std::invalid_argument);
  EXPECT_THROW(EigenPacketList({{50, 1}, {1, 3}}), std::invalid_argument);
  EXPECT_THROW(EigenPacketList({{0, 22}}), std::invalid_argument);
  EXPECT_THROW(EigenPacketList({{1, 23}, {2, -1}}), std::invalid_argument);
  EXPECT_THROW(EigenPacketList(std::vector<Packet>{}), std::invalid_argument);
}

TEST(EigenPacketList, MergesEqualOrders) {
  const EigenPacketList merged({{2, 1}, {1, 1}, {1, 20}});
  EXPECT_EQ(merged, EigenPacketList({{1, 21}, {2, 1}}));
  EXPECT_EQ(merged.packets().size(), 2u);
  EXPECT_EQ(merged.multiplicity(1), 21);
  EXPECT_EQ(merged.multiplicity(7), 0);
}

TEST(EigenPacketList, ToString) {
  EXPECT_EQ(kRealized.to_string(), "[1, -1, (z50:20)]");
  EXPECT_EQ(power_list(kRealized, 5).to_string(), "[1, -1, (z10:4).5]");
}

TEST(PowerList, Examples) {
  EXPECT_EQ(power_list(kRealized, 5), EigenPacketList({{1, 1}, {2, 1}, {10, 5}}));
  EXPECT_EQ(power_list(kExcluded, 25), EigenPacketList({{1, 2}, {2, 20}}));
  EXPECT_EQ(power_list(kRealized, 10), EigenPacketList({{1, 2}, {5, 5}}));
  EXPECT_EQ(power_list(kRealized, 1), kRealized);
  EXPECT_EQ(power_list(kExcluded, 1), kExcluded);
  EXPECT_THROW(power_list(kRealized, 0), std::invalid_argument);
}

TEST(PowerList, CompositionAndDimension) {
  for (const auto& list : {kRealized, kExcluded}) {
    for (std::int64_t a = 1; a <= 50; ++a) {
      const auto pa = power_list(list, a);
      EXPECT_EQ(pa.total_dim(), 22);
      for (std::int64_t b = 1; b <= 50; ++b) EXPECT_EQ(power_list(pa, b), power_list(list, a * b)) << a << " " << b;
    }
  }
}

TEST(TraceH2, Examples) {
  EXPECT_EQ(trace_h2(EigenPacketList({{1, 2}, {2, 20}})), -18);
  EXPECT_EQ(trace_h2(kRealized), 0);
  EXPECT_EQ(trace_h2(EigenPacketList({{1, 22}})), 22);
}

TEST(EulerK3, Examples) {
  EXPECT_EQ(euler_k3(power_list(kRealized, 25)), -18);
  EXPECT_EQ(euler_k3(power_list(kExcluded, 25)), -16);
  EXPECT_EQ(euler_k3(power_list(kExcluded, 5)), 9);
  EXPECT_EQ(euler_k3(power_list(kRealized, 10)), -1);
  EXPECT_EQ(euler_k3(EigenPacketList({{1, 22}})), 24);
}

TEST(CyclotomicPolynomial, Phi50) {
  // x^20 - x^15 + x^10 - x^5 + 1
  std::vector<std::int64_t> expected(21, 0);
  expected[0] = 1;
  expected[5] = -1;
  expected[10] = 1;
  expected[15] = -1;
  expected[20] = 1;
  EXPECT_EQ(cyclotomic_polynomial(50).coefficients(), expected);
  EXPECT_EQ(cyclotomic_polynomial(1).coefficients(), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2).coefficients(), (std::vector<std::int64_t>{1, 1}));
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXnMinusOne) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    IntPolynomial prod({1});
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    EXPECT_EQ(prod, IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial({1})) << n;
  }
}

TEST(CharPoly, Examples) {
  const auto x_minus_1 = IntPolynomial({-1, 1});
  const auto x_plus_1 = IntPolynomial({1, 1});
  IntPolynomial p22({1}), m22({1});
  for (int i = 0; i < 22; ++i) {
    p22 = p22 * x_minus_1;
    m22 = m22 * x_plus_1;
  }
  EXPECT_EQ(char_poly(EigenPacketList({{1, 22}})), p22);
  EXPECT_EQ(char_poly(EigenPacketList({{2, 22}})), m22);
  const auto c = char_poly(kRealized);
  EXPECT_EQ(c, x_minus_1 * x_plus_1 * cyclotomic_polynomial(50));
  EXPECT_EQ(c.degree(), 22);
  EXPECT_EQ(c.coefficients(), (std::vector<std::int64_t>{-1, 0, 1, 0, 0, 1, 0, -1, 0, 0, -1, 0,
                                                          1, 0, 0, 1, 0, -1, 0, 0, -1, 0, 1}));
}

TEST(CharPoly, ValuesAtPlusMinusOne) {
  for (const auto& list : single_packet_lists()) {
    std::int64_t at1 = 1, at_m1 = 1;
    for (const auto& pk : list.packets()) {
      for (std::int64_t i = 0; i < pk.multiplicity; ++i) {
        at1 *= cyclotomic_polynomial(pk.order).evaluate(1);
        at_m1 *= cyclotomic_polynomial(pk.order).evaluate(-1);
      }
    }
    EXPECT_EQ(char_poly(list).evaluate(1), at1) << list.to_string();
    EXPECT_EQ(char_poly(list).evaluate(-1), at_m1) << list.to_string();
  }
}

TEST(BruteTrace, Examples) {
  EXPECT_EQ(brute_trace(kRealized, 5), 5);
  EXPECT_EQ(brute_trace(kExcluded, 25), -18);
  for (std::int64_t k = 1; k <= 60; ++k) EXPECT_EQ(brute_trace(EigenPacketList({{1, 22}}), k), 22);
  EXPECT_THROW(brute_trace(kRealized, 0), std::invalid_argument);
}

TEST(BruteTrace, AgreesWithPacketArithmetic) {
  std::size_t cases = 0;
  for (const auto& list : single_packet_lists()) {
    for (std::int64_t k = 1; k <= 50; ++k) {
      EXPECT_EQ(trace_h2(power_list(list, k)), brute_trace(list, k)) << list.to_string() << " k=" << k;
      ++cases;
    }
  }
  for (std::int64_t k = 1; k <= 50; ++k) {
    EXPECT_EQ(trace_h2(power_list(kRealized, k)), brute_trace(kRealized, k));
    EXPECT_EQ(trace_h2(power_list(kExcluded, k)), brute_trace(kExcluded, k));
  }
  EXPECT_GE(cases, 50u);
}

TEST(IntPolynomial, ArithmeticAndOverflow) {
  const IntPolynomial a({1, 2, 3});
  const IntPolynomial b({-1, 1});
  EXPECT_EQ((a * b).coefficients(), (std::vector<std::int64_t>{-1, -1, -1, 3}));
  const auto [q, r] = (a * b + IntPolynomial({5})).divmod_monic(b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, IntPolynomial({5}));
  EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
  EXPECT_EQ(IntPolynomial({-1, 0, 1}).to_string(), "x^2 - 1");
  const IntPolynomial big({std::int64_t{1} << 62});
  EXPECT_THROW(big * big, std::overflow_error);
}
