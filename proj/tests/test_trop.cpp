#include <gtest/gtest.h>

#include "tropcluster/trop.hpp"
#include "properties.hpp"

using namespace tropcluster;

namespace {

RingPtr flag3_ring() {
  return PolyRing::make({"p_1", "p_2", "p_3", "p_12", "p_13", "p_23"},
                        {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}});
}

Ideal I(const RingPtr& r, std::vector<std::string> g) { return Ideal::parse(r, g); }

Ideal j3() { return I(flag3_ring(), {"p_1*p_23 - p_2*p_13 + p_3*p_12"}); }

const QVector w1{0, 1, 1, 0, 0, 0}, w2{1, 0, 1, 0, 0, 0}, w3{1, 1, 0, 0, 0, 0};

RingPtr jb_ring() { return PolyRing::make({"A1", "A2", "A3", "A4", "A5", "A6"}); }

Ideal jb_ideal() {
  return I(jb_ring(), {"A1*A4 - 1 - A2", "A2*A5 - A3 - A4", "A6*A4 - A3 - A5", "A5*A1 - A6 - 1",
                       "A6*A2 - A3*A1 - 1"});
}

QVector neg(const QVector& v) {
  QVector r = v;
  for (auto& x : r) x = -x;
  return r;
}

// Ray rows of the A2+frozen example, fed to the MAX engine with a sign flip.
Cone tau_cone(bool mutated) {
  std::vector<QVector> rows = {mutated ? QVector{1, 1, -1, -1, -2, -1} : QVector{-1, -1, 1, 0, 1, 1},
                               {1, 0, 0, -1, -1, 0},
                               {1, 0, -1, -1, -1, 0}};
  Cone c;
  for (const auto& r : rows) c.rays.push_back(neg(r));
  return c;
}

}  // namespace

TEST(InTropicalization, Flag3) {
  EXPECT_TRUE(in_tropicalization(j3(), w1));
  EXPECT_TRUE(in_tropicalization(j3(), w2));
  EXPECT_TRUE(in_tropicalization(j3(), w3));
  EXPECT_FALSE(in_tropicalization(j3(), {5, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(in_tropicalization(j3(), QVector(6, Rational(0))));
}

TEST(Lineality, BlockVectors) {
  auto v = lineality_vectors(*flag3_ring());
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (QVector{1, 1, 1, 0, 0, 0}));
  EXPECT_EQ(v[1], (QVector{0, 0, 0, 1, 1, 1}));
  auto single = lineality_vectors(*PolyRing::make({"x", "y", "z"}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], QVector(3, Rational(1)));
}

TEST(Lineality, InvariantWeights) {
  for (const auto& l : lineality_vectors(*flag3_ring())) {
    for (const auto& w : {w1, w2, w3}) {
      QVector s = w;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += 3 * l[i];
      EXPECT_TRUE(same_groebner_cone(j3(), w, s));
    }
  }
}

TEST(ConeInitialIdeal, ExampleRayCones) {
  Ideal j = jb_ideal();
  Ideal is = cone_initial_ideal(j, tau_cone(false));
  EXPECT_TRUE(ideal_equal(is, I(jb_ring(), {"A4*A6 - A5", "A2*A6 - 1", "A1*A5 - 1", "A2*A5 - A4", "A1*A4 - A2"})));
  Ideal is1 = cone_initial_ideal(j, tau_cone(true));
  EXPECT_TRUE(ideal_equal(is1, I(jb_ring(), {"A2*A6 - 1", "A1*A4 - 1", "A1*A5 - A6", "A2*A5 - A4", "A4*A6 - A5"})));
}

TEST(ConeInitialIdeal, MisprintedMutatedRowIsNotTropical) {
  // (1,1,-1,-1,0,-1) differs from the product -B^{-T} G in entry 5.
  EXPECT_FALSE(in_tropicalization(jb_ideal(), neg({1, 1, -1, -1, 0, -1})));
  EXPECT_TRUE(in_tropicalization(jb_ideal(), neg({1, 1, -1, -1, -2, -1})));
}

TEST(ConeInitialIdeal, RayOrderIrrelevant) {
  Ideal j = jb_ideal();
  Cone c = tau_cone(false);
  Ideal base = cone_initial_ideal(j, c);
  std::vector<std::size_t> perm = {0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    Cone p;
    for (auto i : perm) p.rays.push_back(c.rays[i]);
    EXPECT_TRUE(ideal_equal(cone_initial_ideal(j, p), base));
  }
}

TEST(ConeInitialIdeal, LinealityOnlyAndErrors) {
  Cone lin;
  lin.lineality = lineality_vectors(*flag3_ring());
  EXPECT_TRUE(ideal_equal(cone_initial_ideal(j3(), lin), j3()));
  Cone bad;
  bad.rays = {{5, 1, 0, 0, 0, 0}};
  try {
    cone_initial_ideal(j3(), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACone);
  }
  Cone zero;
  zero.rays = {QVector(6, Rational(0))};
  EXPECT_THROW(cone_initial_ideal(j3(), zero), Error);
}

TEST(Binomial, Examples) {
  EXPECT_TRUE(is_binomial(cone_initial_ideal(jb_ideal(), tau_cone(false))));
  EXPECT_FALSE(is_binomial(j3()));
  auto r = PolyRing::make({"x", "y"});
  EXPECT_TRUE(is_binomial(I(r, {"x - 1"})));
}

TEST(PrimeBinomial, Examples) {
  EXPECT_TRUE(is_prime_binomial(cone_initial_ideal(jb_ideal(), tau_cone(false))));
  EXPECT_TRUE(is_prime_binomial(cone_initial_ideal(jb_ideal(), tau_cone(true))));
  auto r = PolyRing::make({"x", "y", "z"});
  EXPECT_FALSE(is_prime_binomial(I(r, {"x^2 - y^2"})));
  EXPECT_FALSE(is_prime_binomial(I(r, {"x*y - x*z"})));
  EXPECT_FALSE(is_prime_binomial(I(r, {"x*y"})));
  EXPECT_TRUE(is_prime_binomial(I(r, {"x - y", "y - z"})));
  EXPECT_TRUE(is_prime_binomial(I(r, {"x*z - y^2"})));
  EXPECT_FALSE(is_prime_binomial(I(r, {"x^2 - y", "y^2 - x"})));
  EXPECT_TRUE(is_prime_binomial(Ideal(r, {})));
  try {
    is_prime_binomial(j3());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBinomial);
  }
}

TEST(PrimeBinomial, AgreesWithFactoringOracle) {
  props::Result r = props::prime_binomial_factoring();
  EXPECT_EQ(r.checked, 150u);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

TEST(TotalPositivity, Flag3) {
  Ideal i2 = initial_ideal(j3(), OrderSpec::weight(w2));
  auto c2 = is_totally_positive(i2);
  EXPECT_EQ(c2.verdict, PositivityCertificate::Verdict::NotPositive);
  EXPECT_EQ(c2.witness, Polynomial::parse(flag3_ring(), "p_1*p_23 + p_3*p_12"));
  for (const auto& w : {w1, w3}) {
    auto c = is_totally_positive(initial_ideal(j3(), OrderSpec::weight(w)));
    EXPECT_EQ(c.verdict, PositivityCertificate::Verdict::Positive);
    EXPECT_TRUE(c.exact());
  }
}

TEST(TotalPositivity, ExampleConeAndCertificatePoint) {
  Ideal is = cone_initial_ideal(jb_ideal(), tau_cone(false));
  auto c = is_totally_positive(is);
  ASSERT_EQ(c.verdict, PositivityCertificate::Verdict::Positive);
  ASSERT_TRUE(c.exact());
  for (const auto& g : is.generators()) EXPECT_EQ(g.evaluate(c.point), 0);
}

TEST(TotalPositivity, ZeroUnitAndRatios) {
  auto r = PolyRing::make({"x", "y", "z"});
  auto z = is_totally_positive(Ideal(r, {}));
  EXPECT_EQ(z.verdict, PositivityCertificate::Verdict::Positive);
  EXPECT_EQ(z.point, QVector(3, Rational(1)));
  EXPECT_EQ(is_totally_positive(I(r, {"1"})).verdict, PositivityCertificate::Verdict::NotPositive);
  EXPECT_EQ(is_totally_positive(I(r, {"x + y"})).verdict, PositivityCertificate::Verdict::NotPositive);

  Ideal q = I(r, {"x - 2*y", "y^2 - 3*z"});
  auto c = is_totally_positive(q);
  ASSERT_EQ(c.verdict, PositivityCertificate::Verdict::Positive);
  ASSERT_EQ(c.approx_point.size(), 3u);
  const auto& p = c.approx_point;
  EXPECT_NEAR(p[0], 2 * p[1], 1e-9);
  EXPECT_NEAR(p[1] * p[1], 3 * p[2], 1e-9);

  // A trinomial with mixed signs is beyond the binomial certificates.
  EXPECT_EQ(is_totally_positive(I(r, {"x^2 - x*y - y^2"})).verdict, PositivityCertificate::Verdict::Inconclusive);
}

TEST(SameGroebnerCone, Flag3) {
  QVector twice = w1;
  for (auto& x : twice) x *= 2;
  EXPECT_TRUE(same_groebner_cone(j3(), w1, twice));
  EXPECT_FALSE(same_groebner_cone(j3(), w1, w3));
}

TEST(ConesAdjacent, ExampleSeeds) {
  Ideal j = jb_ideal();
  EXPECT_TRUE(cones_adjacent(j, tau_cone(false), tau_cone(true)));
  EXPECT_FALSE(cones_adjacent(j, tau_cone(false), tau_cone(false)));
}

TEST(ConesAdjacent, RayMatchingUsesLinealityAndScaling) {
  Cone a, b;
  a.lineality = {{1, 1, 1}};
  b.lineality = a.lineality;
  a.rays = {{1, 0, 0}, {0, 1, 0}};
  b.rays = {{3, 1, 1}, {0, 0, 1}};  // 2*(1,0,0) + lineality, and a new ray
  EXPECT_EQ(unmatched_rays(a, b), 1u);
  EXPECT_EQ(unmatched_rays(b, a), 1u);
  b.rays = {{-1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(unmatched_rays(a, b), 1u);
}

TEST(InitialIdeal, Idempotent) {
  Ideal j = jb_ideal();
  for (const auto& r : tau_cone(false).rays) {
    Ideal once = initial_ideal(j, OrderSpec::weight(r));
    EXPECT_TRUE(ideal_equal(initial_ideal(once, OrderSpec::weight(r)), once));
  }
}
