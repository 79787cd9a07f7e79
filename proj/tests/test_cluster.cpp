#include <gtest/gtest.h>

#include <random>

#include "tropcluster/cluster.hpp"
#include "tropcluster/errors.hpp"
#include "properties.hpp"

using namespace tropcluster;

namespace {

SeedData a2_frozen() {
  SeedData s;
  s.n = 2;
  s.m = 1;
  s.B = IntMatrix::from_rows({{0, 1, 0}, {-1, 0, -1}, {0, 1, 1}});
  s.d = {1, 1, 1};
  s.labels = {"A1", "A2", "A3"};
  return s;
}

std::vector<BasisElement> a2_basis() {
  return {{{}, 1, "A1"}, {{}, 2, "A2"}, {{}, 3, "A3"}, {{1}, 1, "A4"}, {{1, 2}, 2, "A5"}, {{1, 2, 1}, 1, "A6"}};
}

QMatrix qrows(const std::vector<std::vector<long>>& rows) { return to_rational(IntMatrix::from_rows(rows)); }

QVector column(const QMatrix& M, std::size_t j) { return M.col(j); }

LaurentPoly lp(std::vector<std::pair<Exponent, long>> terms) {
  LaurentPoly::Terms t;
  for (auto& [e, c] : terms) t[e] += c;
  return LaurentPoly(std::move(t));
}

}  // namespace

TEST(Seed, ValidateRejectsBadShapes) {
  SeedData s = a2_frozen();
  EXPECT_NO_THROW(s.validate());
  s.d = {1, 1};
  EXPECT_THROW(s.validate(), Error);
  s = a2_frozen();
  s.B(0, 1) = 2;
  EXPECT_THROW(s.validate(), Error);
  s = a2_frozen();
  s.B(1, 2) = 0;
  EXPECT_THROW(s.validate(), Error);
}

TEST(Seed, SkewSymmetrizableMutation) {
  // Type B2 with d = (1, 2): d_j b_ij = -d_i b_ji.
  SeedData s;
  s.n = 2;
  s.m = 0;
  s.B = IntMatrix::from_rows({{0, 1}, {-2, 0}});
  s.d = {1, 2};
  s.labels = {"x", "y"};
  EXPECT_NO_THROW(s.validate());
  SeedData t = s;
  for (int step = 0; step < 6; ++step) {
    t = mutate_matrix(t, 1 + step % 2);
    EXPECT_NO_THROW(t.validate());
  }
  EXPECT_EQ(t, s);
}

TEST(MuMatrices, MinusColumnOfExample) {
  auto mu = mu_matrices(a2_frozen(), 1, Sign::Minus);
  EXPECT_EQ(column(mu.X, 0), (QVector{-1, 1, 0}));
}

TEST(MuMatrices, AreInvolutions) {
  SeedData s = a2_frozen();
  for (std::size_t k = 1; k <= 2; ++k)
    for (Sign sg : {Sign::Plus, Sign::Minus}) {
      auto mu = mu_matrices(s, k, sg);
      EXPECT_EQ(mu.A * mu.A, QMatrix::identity(3));
      EXPECT_EQ(mu.X * mu.X, QMatrix::identity(3));
    }
}

TEST(MuMatrices, FrozenDirectionThrows) {
  try {
    mu_matrices(a2_frozen(), 3, Sign::Plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FrozenDirection);
  }
  EXPECT_THROW(mutate_matrix(a2_frozen(), 3), Error);
}

TEST(MutateMatrix, ExampleFirstDirection) {
  SeedData s1 = mutate_matrix(a2_frozen(), 1);
  EXPECT_EQ(s1.B, IntMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
  QMatrix neg_inv_t = -invert(to_rational(s1.B)).transpose();
  EXPECT_EQ(neg_inv_t, qrows({{-1, 1, -1}, {-1, 0, 0}, {-1, 0, -1}}));
  QMatrix neg_inv_t0 = -invert(to_rational(a2_frozen().B)).transpose();
  EXPECT_EQ(neg_inv_t0, qrows({{-1, -1, 1}, {1, 0, 0}, {1, 0, -1}}));
}

TEST(MutateMatrix, BothSignProductsAgreeOnExample) {
  SeedData s = a2_frozen();
  QMatrix bt = to_rational(s.B).transpose();
  for (std::size_t k = 1; k <= 2; ++k) {
    auto p = mu_matrices(s, k, Sign::Plus);
    auto q = mu_matrices(s, k, Sign::Minus);
    EXPECT_EQ(p.X * bt * p.A, q.X * bt * q.A);
    EXPECT_EQ(to_rational(mutate_matrix(s, k).B).transpose(), p.X * bt * p.A);
  }
}

TEST(MutateGVector, Example) {
  SeedData s = a2_frozen();
  EXPECT_EQ(mutate_gvector({-1, 0, 0}, s, 1), (IVector{1, -1, 0}));
  // b_{13} = 0, so e_3 is fixed by mutation at 1.
  EXPECT_EQ(mutate_gvector({0, 0, 1}, s, 1), (IVector{0, 0, 1}));
}

TEST(MutateGVector, TransportsWholeGMatrix) {
  SeedData s = a2_frozen();
  QMatrix Gs = qrows({{1, 0, 0, -1, -1, 0}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 0, 0, 0}});
  QMatrix Gs1 = qrows({{-1, 0, 0, 1, 1, 0}, {0, 1, 0, 0, -1, -1}, {0, 0, 1, 0, 0, 0}});
  for (std::size_t j = 0; j < 6; ++j) {
    IVector g;
    for (const auto& x : Gs.col(j)) g.push_back(x.get_num().get_si());
    IVector h = mutate_gvector(g, s, 1);
    QVector hq(h.begin(), h.end());
    EXPECT_EQ(hq, Gs1.col(j)) << "column " << j + 1;
  }
}

TEST(GVectorOfExchanged, Examples) {
  SeedData s = a2_frozen();
  EXPECT_EQ(gvector_of_exchanged_variable(s, 1), (IVector{-1, 1, 0}));
  // b_{i2} = (1, 0, 1): no negative entries, so only -f_2 survives.
  EXPECT_EQ(gvector_of_exchanged_variable(s, 2), (IVector{0, -1, 0}));
  IVector via_laurent = gvector_from_laurent(laurent_expand(s, {2}, 2), s);
  EXPECT_EQ(via_laurent, (IVector{0, -1, 0}));
}

TEST(GVectorOfExchanged, IsolatedVertex) {
  SeedData s;
  s.n = 2;
  s.m = 0;
  s.B = IntMatrix(2, 2);
  s.d = {1, 1};
  s.labels = {"x", "y"};
  EXPECT_EQ(gvector_of_exchanged_variable(s, 2), (IVector{0, -1}));
}

TEST(Laurent, ExampleExpansions) {
  SeedData s = a2_frozen();
  EXPECT_EQ(laurent_expand(s, {}, 2), LaurentPoly::variable(3, 1));
  EXPECT_EQ(laurent_expand(s, {1}, 1), lp({{{-1, 0, 0}, 1}, {{-1, 1, 0}, 1}}));
  EXPECT_EQ(laurent_expand(s, {1, 2}, 2), lp({{{0, -1, 1}, 1}, {{-1, -1, 0}, 1}, {{-1, 0, 0}, 1}}));
  EXPECT_EQ(laurent_expand(s, {1}, 1).to_string(s.labels), "A1^(-1)*A2 + A1^(-1)");
}

TEST(Laurent, ExchangeRelationsHold) {
  // A1*A4 = 1 + A2 and A2*A5 = A3 + A4 in the Laurent ring.
  SeedData s = a2_frozen();
  auto A = [&](std::size_t i) { return LaurentPoly::variable(3, i); };
  auto one = LaurentPoly::monomial({0, 0, 0});
  LaurentPoly A4 = laurent_expand(s, {1}, 1), A5 = laurent_expand(s, {1, 2}, 2), A6 = laurent_expand(s, {1, 2, 1}, 1);
  EXPECT_EQ(A(0) * A4, one + A(1));
  EXPECT_EQ(A(1) * A5, A(2) + A4);
  EXPECT_EQ(A6 * A4, A(2) + A5);
  EXPECT_EQ(A5 * A(0), A6 + one);
  EXPECT_EQ(A6 * A(1), A(2) * A(0) + one);
}

TEST(Laurent, DivideExactRejectsNonDivisible) {
  auto x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  auto one = LaurentPoly::monomial({0, 0});
  EXPECT_EQ(LaurentPoly::divide_exact((x + one) * (y + x), y + x), x + one);
  EXPECT_THROW(LaurentPoly::divide_exact(x + one, y + one), Error);
}

TEST(Dominance, Examples) {
  SeedData s = a2_frozen();
  EXPECT_EQ(dominance_less({-1, 0, 0}, {-1, -1, 0}, s), Dominance::Less);
  EXPECT_EQ(dominance_less({-1, -1, 0}, {-1, 0, 0}, s), Dominance::Greater);
  EXPECT_EQ(dominance_less({-1, 0, 0}, {0, -1, 1}, s), Dominance::Less);
  EXPECT_EQ(dominance_less({2, 3, 4}, {2, 3, 4}, s), Dominance::Equal);
  EXPECT_EQ(dominance_less({0, 0, 0}, {0, 0, 1}, s), Dominance::Incomparable);
}

TEST(InCone, SmallCases) {
  QMatrix A = qrows({{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(in_cone(A, {2, 3}));
  EXPECT_FALSE(in_cone(A, {-1, 0}));
  EXPECT_TRUE(in_cone(A, {0, 0}));
  // Redundant generators with a kernel: (1,-1) needs a negative coefficient.
  QMatrix B = qrows({{1, 1}, {1, 1}});
  EXPECT_FALSE(in_cone(B, {1, -1}));
  EXPECT_TRUE(in_cone(B, {1, 1}));
  QMatrix C = qrows({{1, -1, 0}, {0, 1, -1}});
  EXPECT_TRUE(in_cone(C, {-5, 7}));
}

TEST(GVectorFromLaurent, AllSixVariables) {
  SeedData s = a2_frozen();
  QMatrix Gs = qrows({{1, 0, 0, -1, -1, 0}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 0, 0, 0}});
  auto basis = a2_basis();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    IVector g = gvector_from_laurent(laurent_expand(s, basis[j].word, basis[j].index), s);
    QVector gq(g.begin(), g.end());
    EXPECT_EQ(gq, Gs.col(j)) << basis[j].name;
  }
}

TEST(GVectorFromLaurent, AmbiguousAndZero) {
  SeedData s = a2_frozen();
  // A1 + A3 has two incomparable exponents.
  LaurentPoly p = LaurentPoly::variable(3, 0) + LaurentPoly::variable(3, 2);
  try {
    gvector_from_laurent(p, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbiguousMinimum);
  }
  EXPECT_THROW(gvector_from_laurent(LaurentPoly(), s), Error);
}

TEST(GVectorFromLaurent, TiebreakIndependentOnClusterVariables) {
  SeedData s = a2_frozen();
  // Pairs to 3 and 1 with the two mutable columns.
  QVector alt{0, -3, 1};
  for (const auto& b : a2_basis()) {
    LaurentPoly p = laurent_expand(s, b.word, b.index);
    EXPECT_EQ(gvector_from_laurent(p, s), gvector_from_laurent(p, s, &alt)) << b.name;
  }
}

TEST(GMatrix, ExampleFrames) {
  SeedData s = a2_frozen();
  EXPECT_EQ(gmatrix(s, a2_basis(), {}), qrows({{1, 0, 0, -1, -1, 0}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 0, 0, 0}}));
  EXPECT_EQ(gmatrix(s, a2_basis(), {1}), qrows({{-1, 0, 0, 1, 1, 0}, {0, 1, 0, 0, -1, -1}, {0, 0, 1, 0, 0, 0}}));
}

TEST(GMatrix, OwnSeedIsIdentity) {
  SeedData s = a2_frozen();
  std::vector<BasisElement> own = {{{}, 1, ""}, {{}, 2, ""}, {{}, 3, ""}};
  EXPECT_EQ(gmatrix(s, own, {}), QMatrix::identity(3));
  std::vector<BasisElement> framed = {{{1, 2}, 1, ""}, {{1, 2}, 2, ""}, {{1, 2}, 3, ""}};
  EXPECT_EQ(gmatrix(s, framed, {1, 2}), QMatrix::identity(3));
}

namespace {

void expect_property(const props::Result& r) {
  EXPECT_GT(r.checked, 0u) << r.name;
  for (const auto& f : r.failures) ADD_FAILURE() << r.name << ": " << f;
}

}  // namespace

TEST(ClusterProperties, MutationIsAnInvolution) { expect_property(props::mutation_involution()); }

TEST(ClusterProperties, SignChoicesAgree) { expect_property(props::mutation_sign_consistency()); }

TEST(ClusterProperties, LaurentRouteMatchesTransport) { expect_property(props::gvector_oracle_agreement()); }

TEST(ClusterProperties, FrameRoundTrip) {
  // G in frame s' equals transport of each column of G in frame s.
  std::mt19937 rng(14);
  for (int t = 0; t < 50; ++t) {
    SeedData s = props::random_rank3_seed(rng, 1);
    MutationWord w = props::random_word(rng, 4);
    std::vector<BasisElement> basis;
    for (std::size_t i = 1; i <= 3; ++i) basis.push_back({w, i, ""});
    QMatrix G0 = gmatrix(s, basis, {});
    QMatrix G1 = gmatrix(s, basis, {2});
    for (std::size_t j = 0; j < 3; ++j) {
      IVector g;
      for (const auto& x : G0.col(j)) g.push_back(x.get_num().get_si());
      IVector h = mutate_gvector(g, s, 2);
      EXPECT_EQ(QVector(h.begin(), h.end()), G1.col(j));
    }
  }
}
