#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tropcluster/exactmath.hpp"

using namespace tropcluster;

namespace {

QMatrix q(std::initializer_list<std::initializer_list<Rational>> rows) { return QMatrix(rows); }

ZMatrix z(std::initializer_list<std::initializer_list<Integer>> rows) { return ZMatrix(rows); }

Integer abs_det(const ZMatrix& m) { return abs(determinant(to_rational(m)).get_num()); }

bool is_diagonal_chain(const ZMatrix& d) {
  Integer prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
      if (i == j) {
        if (d(i, i) < 0) return false;
        if (d(i, i) == 0) {
          seen_zero = true;
          continue;
        }
        if (seen_zero || d(i, i) % prev != 0) return false;
        prev = d(i, i);
      }
    }
  return true;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational(" 4 / 6 "), Rational(2, 3));
  EXPECT_EQ(parse_rational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
}

TEST(Invert, ExampleSeedMatrices) {
  QMatrix Bs = q({{0, 1, 0}, {-1, 0, -1}, {0, 1, 1}});
  EXPECT_EQ(invert(-Bs.transpose()), q({{-1, -1, 1}, {1, 0, 0}, {1, 0, -1}}));
  // Matrix of the seed mutated at direction 1.
  QMatrix Bsp = q({{0, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  EXPECT_EQ(invert(-Bsp.transpose()), q({{-1, 1, -1}, {-1, 0, 0}, {-1, 0, -1}}));
  EXPECT_EQ(invert(QMatrix::identity(3)), QMatrix::identity(3));
}

TEST(Invert, SingularThrows) {
  try {
    invert(q({{1, 2}, {2, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Invert, RandomRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  int done = 0;
  while (done < 50) {
    QMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = Rational(dist(rng), 1 + (dist(rng) + 4) % 3);
        m(i, j).canonicalize();
      }
    if (determinant(m) == 0) continue;
    EXPECT_EQ(m * invert(m), QMatrix::identity(4));
    ++done;
  }
}

TEST(Smith, SmallCases) {
  ZMatrix m = z({{2, 0}, {0, 3}});
  SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.D, z({{1, 0}, {0, 6}}));
  EXPECT_EQ(s.U * m * s.V, s.D);

  ZMatrix zero(2, 3);
  EXPECT_EQ(smith_normal_form(zero).D, zero);
  EXPECT_EQ(smith_normal_form(ZMatrix::identity(3)).D, ZMatrix::identity(3));
}

TEST(Smith, RandomUnimodularAndChain) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-6, 6);
  std::uniform_int_distribution<int> shape(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = static_cast<std::size_t>(shape(rng)), c = static_cast<std::size_t>(shape(rng));
    ZMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_TRUE(is_diagonal_chain(s.D));
    EXPECT_EQ(abs_det(s.U), 1);
    EXPECT_EQ(abs_det(s.V), 1);
  }
}

TEST(Saturation, Basic) {
  EXPECT_FALSE(is_saturated(IntLattice{{{2, 0}}}, 2));
  EXPECT_TRUE(is_saturated(IntLattice{{{1, 1}}}, 2));
  EXPECT_TRUE(is_saturated(IntLattice{}, 3));
}

// Brute-force oracle: a lattice L is saturated iff no integer point v in a
// small box has k*v in L for some k > 1 while v itself is not in L. Membership
// in L and in L tensor Q is decided with rational solves.
TEST(Saturation, BruteForceOracle) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::uniform_int_distribution<int> count(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    IntLattice lat;
    int k = count(rng);
    for (int g = 0; g < k; ++g) {
      ZVector v(4);
      for (auto& x : v) x = dist(rng);
      lat.generators.push_back(v);
    }
    // Reduce to an independent generating set via Hermite-like SNF: the lattice
    // equals the row span of the nonzero rows of D*V^{-1}.
    ZMatrix m(lat.generators.size(), 4);
    for (std::size_t i = 0; i < lat.generators.size(); ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = lat.generators[i][j];
    SmithForm s = smith_normal_form(m);
    QMatrix vinv = invert(to_rational(s.V));
    QMatrix basis_rows = to_rational(s.D) * vinv;
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < basis_rows.rows(); ++i) {
      QVector r = basis_rows.row(i);
      bool nz = false;
      for (auto& x : r) nz = nz || x != 0;
      if (nz) basis.push_back(r);
    }
    bool oracle = true;
    if (!basis.empty()) {
      QMatrix bt(4, basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j) bt(j, i) = basis[i][j];
      for (int a = -3; a <= 3 && oracle; ++a)
        for (int b = -3; b <= 3 && oracle; ++b)
          for (int c = -3; c <= 3 && oracle; ++c)
            for (int d = -3; d <= 3 && oracle; ++d) {
              QVector v{a, b, c, d};
              QVector x;
              if (!solve(bt, v, x)) continue;
              for (auto& xi : x)
                if (xi.get_den() != 1) oracle = false;
            }
    }
    EXPECT_EQ(is_saturated(lat, 4), oracle) << "trial " << trial;
  }
}

TEST(Kernel, Basic) {
  EXPECT_TRUE(kernel_basis(QMatrix::identity(3)).empty());
  auto k = kernel_basis(q({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (QVector{-1, 1}));
  QMatrix m = q({{1, 2}, {2, 4}});
  auto k2 = kernel_basis(m);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(m * k2[0], (QVector{0, 0}));
}

TEST(Kernel, DimensionFormula) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    QMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = dist(rng);
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size(), 5 - rank(m));
    for (const auto& v : k) EXPECT_EQ(m * v, QVector(3, Rational(0)));
  }
}

TEST(Primitive, ClearsDenominators) {
  EXPECT_EQ(primitive_integer_vector(QVector{Rational(1, 2), Rational(-3, 4)}), (ZVector{2, -3}));
  EXPECT_EQ(primitive_integer_vector(QVector{4, 6}), (ZVector{2, 3}));
}
