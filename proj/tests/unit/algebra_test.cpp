#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "k3cert/surfaces.hpp"

using namespace k3cert;

namespace {

const VariableSet kW = VariableSet::p1113();
const VariableSet kP2 = VariableSet::p2();

Poly var(const VariableSet& v, std::size_t i, const GfElem& c) { return Poly::variable(v, i, c); }

Poly random_homogeneous(const FieldPtr& f, const VariableSet& vars, int degree, std::mt19937_64& rng) {
  Poly out(vars, f->zero());
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) {
      Exponents e(vars.size(), 0);
      e[0] = a;
      e[1] = b;
      e[2] = degree - a - b;
      out.add_term(e, f->from_index(rng() % f->order()));
    }
  return out;
}

}  // namespace

class Order50Pair : public ::testing::Test {
 protected:
  FieldTower tower = build_field_with_root(101, 50);
  FieldPtr f = tower.field();
  GfElem zeta = tower.zeta();
  Poly x50 = order50_surface(f);
  Map g = order50_automorphism(tower);
};

TEST_F(Order50Pair, PullbackExamples) {
  EXPECT_EQ(pullback(x50, g), x50);
  EXPECT_EQ(pullback(var(kW, 1, f->one()), g), var(kW, 1, zeta.pow(40)));
}

TEST_F(Order50Pair, InvarianceScalar) {
  const auto lam = invariance_scalar(x50, g);
  ASSERT_TRUE(lam);
  EXPECT_TRUE(lam->is_one());
  const Map scale_x = Map::diagonal(kW, {zeta, f->one(), f->one(), f->one()});
  const auto x6 = Poly::monomial(kW, {6, 0, 0, 0}, f->one());
  EXPECT_EQ(invariance_scalar(x6, scale_x), zeta.pow(6));
  EXPECT_FALSE(invariance_scalar(x50, scale_x));
  EXPECT_THROW(invariance_scalar(Poly(kW, f->zero()), g), std::invalid_argument);
  EXPECT_THROW(invariance_scalar(x6 + var(kW, 0, f->one()), g), std::invalid_argument);
}

TEST_F(Order50Pair, MapOrder) {
  EXPECT_EQ(map_order(g), 50u);
  EXPECT_EQ(map_order(Map::identity(kW, f->one())), 1u);
  // (-x, -y, -z, -w) is the weighted scaling by -1; the covering involution
  // (x, y, z, -w) is not.
  EXPECT_EQ(map_order(Map::diagonal(kW, {-f->one(), -f->one(), -f->one(), -f->one()})), 1u);
  EXPECT_EQ(map_order(Map::diagonal(kW, {f->one(), f->one(), f->one(), -f->one()})), 2u);
  EXPECT_EQ(map_power(g, 25), Map::diagonal(kW, {f->one(), f->one(), f->one(), -f->one()}));
  EXPECT_EQ(map_order(map_power(g, 2)), 25u);
  EXPECT_EQ(map_order(map_power(g, 5)), 10u);
  EXPECT_EQ(map_order(map_power(g, 25)), 2u);
  EXPECT_THROW(map_order(g, 49), std::runtime_error);
}

TEST_F(Order50Pair, MapOrderIsMinimal) {
  const unsigned n = map_order(g);
  for (unsigned k = 1; k < n; ++k) EXPECT_FALSE(weighted_scaling_factor(map_power(g, k))) << k;
  EXPECT_TRUE(weighted_scaling_factor(map_power(g, n)));
}

TEST_F(Order50Pair, NonInvertibleMapRejected) {
  const Map degenerate({var(kW, 0, f->one()), var(kW, 0, f->one()), var(kW, 2, f->one()), var(kW, 3, f->one())});
  EXPECT_FALSE(degenerate.is_invertible());
  EXPECT_THROW(map_order(degenerate), std::invalid_argument);
}

TEST_F(Order50Pair, CoordinateMapValidatesWeights) {
  // w must map to a weight-3 form.
  EXPECT_THROW(Map({var(kW, 0, f->one()), var(kW, 1, f->one()), var(kW, 2, f->one()), var(kW, 0, f->one())}),
               std::invalid_argument);
  EXPECT_THROW(Map({var(kW, 0, f->one())}), std::invalid_argument);
  EXPECT_NO_THROW(Map({var(kW, 0, f->one()), var(kW, 1, f->one()), var(kW, 2, f->one()),
                       var(kW, 3, f->one()) + Poly::monomial(kW, {1, 1, 1, 0}, f->one())}));
}

TEST_F(Order50Pair, PullbackIsMultiplicative) {
  std::mt19937_64 rng(11);
  const Map mixed({var(kW, 0, f->one()) + var(kW, 1, f->from_int(3)), var(kW, 1, zeta), var(kW, 2, f->one()),
                   var(kW, 3, f->one()) + Poly::monomial(kW, {2, 1, 0, 0}, f->from_int(7))});
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_homogeneous(f, kW, 2, rng);
    const auto b = random_homogeneous(f, kW, 3, rng) + var(kW, 3, f->from_index(rng() % 101));
    for (const auto& m : {g, mixed}) EXPECT_EQ(pullback(a * b, m), pullback(a, m) * pullback(b, m));
  }
}

TEST_F(Order50Pair, InvarianceScalarOfCompositeIsProduct) {
  const auto x6 = Poly::monomial(kW, {6, 0, 0, 0}, f->one()) + Poly::monomial(kW, {0, 6, 0, 0}, f->from_int(5));
  const Map m = Map::diagonal(kW, {zeta.pow(3), zeta.pow(3), f->one(), f->one()});
  const auto lam = invariance_scalar(x6, m);
  ASSERT_TRUE(lam);
  EXPECT_EQ(invariance_scalar(x6, compose(m, m)), *lam * *lam);
  EXPECT_EQ(invariance_scalar(x50, compose(g, g)), f->one());
}

TEST_F(Order50Pair, ComposeMatchesPointwiseApplication) {
  const Map h({var(kW, 0, f->one()) + var(kW, 2, f->from_int(2)), var(kW, 1, f->one()), var(kW, 2, zeta),
               var(kW, 3, f->one()) + Poly::monomial(kW, {3, 0, 0, 0}, f->one())});
  const std::vector<GfElem> pt{f->from_int(3), f->from_int(5), f->from_int(7), f->from_int(11)};
  const auto gh = compose(g, h);
  const auto inner = h.apply(pt);
  EXPECT_EQ(gh.apply(pt), g.apply(inner));
  EXPECT_EQ(pullback(x50, gh), pullback(pullback(x50, g), h));
}

TEST(PartialDerivative, Examples) {
  const auto f101 = make_prime_field(101);
  const auto sextic = branch_sextic(f101);
  EXPECT_EQ(sextic.partial_derivative("x"),
            Poly::monomial(kP2, {5, 0, 0}, f101->from_int(6)) + Poly::monomial(kP2, {0, 5, 0}, f101->one()));
  const auto f5 = make_prime_field(5);
  EXPECT_EQ(branch_sextic(f5).partial_derivative("y"), Poly::monomial(kP2, {0, 0, 5}, f5->one()));
  EXPECT_TRUE(branch_sextic(f5).partial_derivative("z").is_zero());
  const auto f2 = make_prime_field(2);
  EXPECT_TRUE(Poly::monomial(kW, {0, 0, 0, 2}, f2->one()).partial_derivative("w").is_zero());
  EXPECT_THROW(sextic.partial_derivative("w"), std::invalid_argument);
}

TEST(SparsePoly, NoZeroCoefficientsStored) {
  const auto f = make_prime_field(7);
  const auto a = Poly::monomial(kP2, {1, 0, 0}, f->one());
  const auto sum = a + Poly::monomial(kP2, {1, 0, 0}, f->from_int(6));
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum.term_count(), 0u);
  EXPECT_EQ((f->zero() * a).term_count(), 0u);
}

TEST(SparsePoly, WeightedDegree) {
  const auto f = make_prime_field(101);
  EXPECT_EQ(order50_surface(f).weighted_degree(), 6);
  EXPECT_TRUE(order50_surface(f).is_weighted_homogeneous());
  EXPECT_FALSE((order50_surface(f) + Poly::variable(kW, 3, f->one())).is_weighted_homogeneous());
  EXPECT_EQ(char2_surface(make_prime_field(2)).weighted_degree(), 6);
}

TEST(SparsePoly, ToString) {
  const auto f = make_prime_field(101);
  EXPECT_EQ(branch_sextic(f).to_string(), "x^6 + x*y^5 + y*z^5");
}

TEST(Char2Pair, PullbackAndOrder) {
  const auto tower = build_field_with_root(2, 25);
  const auto y = char2_surface(tower.field());
  const auto fmap = char2_automorphism(tower);
  EXPECT_EQ(pullback(y, fmap), y);
  const auto lam = invariance_scalar(y, fmap);
  ASSERT_TRUE(lam);
  EXPECT_TRUE(lam->is_one());
  EXPECT_EQ(map_order(fmap), 50u);
}

TEST(InvariantMonomials, Examples) {
  EXPECT_EQ(invariant_monomials({0, 20, 1}, 25, 6),
            (std::vector<std::array<int, 3>>{{6, 0, 0}, {1, 5, 0}, {0, 1, 5}}));
  EXPECT_EQ(invariant_monomials({0, 0, 0}, 25, 2).size(), 6u);
  const auto j5 = invariant_monomials({0, 20, 5}, 25, 6);
  for (const auto& m : j5) EXPECT_FALSE(m[0] == 0 && m[1] == 1) << m[1] << " " << m[2];
}

TEST(InvariantMonomials, MatchesBruteForce) {
  for (std::int64_t j = 0; j < 25; ++j) {
    std::vector<std::array<int, 3>> brute;
    for (int a = 6; a >= 0; --a)
      for (int b = 6 - a; b >= 0; --b)
        if ((20 * b + j * (6 - a - b)) % 25 == 0) brute.push_back({a, b, 6 - a - b});
    EXPECT_EQ(invariant_monomials({0, 20, j}, 25, 6), brute) << j;
  }
}

TEST(InvariantMonomials, NoYZ5WhenFiveDividesJ) {
  for (std::int64_t j = 0; j < 25; j += 5) {
    const auto set = invariant_monomials({0, 20, j}, 25, 6);
    EXPECT_EQ(std::count(set.begin(), set.end(), std::array<int, 3>{0, 1, 5}), 0) << j;
  }
}
