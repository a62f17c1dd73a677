#include <gtest/gtest.h>

#include <random>

#include "mindeg/exact.hpp"

using namespace mindeg;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(d(rng), 1 + (d(rng) & 1));
      m(i, j).canonicalize();
    }
  return m;
}

// Cofactor expansion, independent of elimination.
Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    Rational t = m(0, j) * cofactor_det(minor);
    s += (j % 2 == 0) ? t : Rational(-t);
  }
  return s;
}

}  // namespace

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_EQ(parse_rational("+2"), Rational(2));
  EXPECT_EQ(to_string(parse_rational("5/10")), "1/2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1/-2", "1.5", "/3", "3/", "--1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Matrix, RankAndKernelOfKnownMatrix) {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  Matrix k = kernel_basis(m);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE((m * k.row(0) == std::vector<Rational>(3, Rational(0))));
  EXPECT_EQ(determinant(m), 0);
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m = random_matrix(rng, n, n);
    EXPECT_EQ(determinant(m), cofactor_det(m));
  }
}

TEST(Matrix, InverseAndSolveProperties) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Matrix m = random_matrix(rng, n, n);
    auto inv = inverse(m);
    if (determinant(m) == 0) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, Matrix::identity(n));
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = Rational(static_cast<long>(i) - 1) / 3;
    auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
}

TEST(Matrix, RankNullityAndKernelVanishes) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 2 + trial % 5;
    // Low-rank products exercise dependent rows.
    Matrix m = random_matrix(rng, r, 2) * random_matrix(rng, 2, c);
    Matrix k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.rows(), c);
    EXPECT_EQ(rank(k), k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE((m * k.row(i) == std::vector<Rational>(r, Rational(0))));
    EXPECT_EQ(rank(m), rank(m.transpose()));
    EXPECT_EQ(rref(m).reduced.rows(), rank(m));
  }
}

TEST(Matrix, InconsistentSystemHasNoSolution) {
  Matrix m{{1, 1}, {2, 2}};
  EXPECT_FALSE(solve(m, {1, 3}).has_value());
}

TEST(ProjPoint, NormalizesAndRejectsZero) {
  ProjPoint p{2, 4, 6};
  ProjPoint q{1, 2, 3};
  EXPECT_EQ(p, q);
  EXPECT_TRUE(proportional(p.coords(), {Rational(-1), Rational(-2), Rational(-3)}));
  EXPECT_THROW(ProjPoint({0, 0, 0}), Error);
}

TEST(LinearSubspace, IntersectionOfPlanesInP3) {
  // x0 = 0 and x1 = 0 in P^3, as spans.
  auto a = LinearSubspace(Matrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto b = LinearSubspace(Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  LinearSubspace c = a.intersect(b);
  EXPECT_EQ(c.projective_dim(), 1);
  EXPECT_TRUE(c.contains(ProjPoint{0, 0, 1, 5}));
  EXPECT_FALSE(c.contains(ProjPoint{1, 0, 0, 0}));
  EXPECT_THROW(LinearSubspace(Matrix{{1, 2}, {2, 4}}), Error);
}

TEST(LinearSubspace, GrassmannFormulaOnRandomSubspaces) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix a = random_matrix(rng, 2 + trial % 3, 6), b = random_matrix(rng, 3, 6);
    auto sa = LinearSubspace(row_space_basis(a)), sb = LinearSubspace(row_space_basis(b));
    const long sum = static_cast<long>(rank(vstack(sa.basis(), sb.basis())));
    EXPECT_EQ(sa.intersect(sb).projective_dim() + 1, sa.projective_dim() + 1 + sb.projective_dim() + 1 - sum);
  }
}

TEST(FrameTransform, SendsPointsToStandardFrame) {
  std::vector<ProjPoint> src{{1, 2, 0}, {0, 1, 1}, {3, 0, 1}, {1, 1, 1}};
  Matrix t = frame_transform(src);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rational> e(3, 0);
    e[i] = 1;
    EXPECT_TRUE(proportional(t * src[i].coords(), e));
  }
  EXPECT_TRUE(proportional(t * src[3].coords(), {1, 1, 1}));
}

TEST(FrameTransform, DegenerateFramesAreRejected) {
  try {
    frame_transform({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegeneratePosition);
  }
  try {
    frame_transform({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegeneratePosition);
  }
}

TEST(SparseEchelon, AgreesWithDenseRank) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 3, 2) * random_matrix(rng, 2, 7);
    m.append_row(random_matrix(rng, 1, 7).row(0));
    SparseEchelon e(7);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      SparseRow r;
      for (std::size_t j = 0; j < 7; ++j)
        if (m(i, j) != 0) r.emplace_back(j, m(i, j));
      e.insert(r);
    }
    EXPECT_EQ(e.rank(), rank(m));
    EXPECT_EQ(rank(vstack(e.to_matrix(), m)), rank(m));
  }
}
