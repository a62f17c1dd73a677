#include <gtest/gtest.h>

#include <random>

#include "mindeg/gale.hpp"

using namespace mindeg;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(41);
  return g;
}

Rational small_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
  Rational q(num(rng()), den(rng()));
  q.canonicalize();
  return q;
}

PointConfig random_config(std::size_t r, std::size_t gamma) {
  while (true) {
    PointConfig c;
    for (std::size_t i = 0; i < gamma; ++i) {
      std::vector<Rational> v(r + 1);
      for (auto& x : v) x = small_rational();
      if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) v[0] = 1;
      c.push_back(ProjPoint(v));
    }
    if (linearly_general(c)) return c;
  }
}

Matrix random_invertible(std::size_t n) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational();
    if (determinant(m) != 0) return m;
  }
}

PointConfig transformed(const PointConfig& c, const Matrix& g) {
  PointConfig out;
  for (const auto& p : c) out.push_back(p.transformed(g));
  return out;
}

}  // namespace

TEST(Gale, FourPointsOnTheLine) {
  PointConfig c{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  GaleTransform g = gale_transform(c);
  EXPECT_EQ(g.dual.rows(), 4u);
  EXPECT_EQ(g.dual.cols(), 2u);
  // Columns of the dual are orthogonal to the columns of the coordinate matrix.
  Matrix a = coordinate_matrix(c);
  EXPECT_TRUE((a.transpose() * g.dual).is_zero());
  // Four points of P^1 and their associates share the cross ratio.
  EXPECT_EQ(cross_ratio(g.points), cross_ratio(c));
}

TEST(Gale, OrthogonalityAndRankOnRandomConfigs) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t gamma = r + 3; gamma <= r + 5; ++gamma) {
      PointConfig c = random_config(r, gamma);
      GaleTransform g = gale_transform(c);
      const std::size_t s = gamma - r - 2;
      EXPECT_EQ(common_ambient(g.points), s);
      EXPECT_EQ(rank(g.dual), s + 1);
      EXPECT_TRUE((coordinate_matrix(c).transpose() * g.dual).is_zero());
    }
}

TEST(Gale, DoubleTransformIsEquivalent) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t gamma = r + 3; gamma <= r + 5; ++gamma) {
      PointConfig c = random_config(r, gamma);
      GaleTransform once = gale_transform(c);
      if (!linearly_general(once.points)) continue;
      GaleTransform twice = gale_transform(once.points);
      Equivalence e = projectively_equivalent(twice.points, c);
      EXPECT_TRUE(e.equivalent) << "r=" << r << " gamma=" << gamma;
      ASSERT_TRUE(e.witness.has_value());
      for (std::size_t i = 0; i < gamma; ++i) EXPECT_TRUE(proportional(*e.witness * twice.points[i].coords(), c[i].coords()));
    }
}

TEST(Gale, ProjectiveChangeOfCoordinatesDoesNotMatter) {
  PointConfig c = random_config(2, 7);
  PointConfig moved = transformed(c, random_invertible(3));
  EXPECT_TRUE(projectively_equivalent(gale_transform(c).points, gale_transform(moved).points).equivalent);
}

TEST(Gale, ErrorPaths) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::OutOfRange;
  };
  EXPECT_EQ(kind([] { gale_transform({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind([] { gale_transform({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {2, 1, 0}}); }),
            ErrorKind::RankDeficient);
  // A point off the span of the rest is forced to weight zero.
  EXPECT_EQ(kind([] { gale_transform({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}}); }),
            ErrorKind::ZeroDualRow);
  EXPECT_EQ(kind([] { gale_transform({{1, 0}, {0, 1, 0}}); }), ErrorKind::InvalidArgument);
}

TEST(Equivalence, DetectsTransformsAndPerturbations) {
  for (int trial = 0; trial < 10; ++trial) {
    PointConfig c = random_config(2, 6);
    Matrix g = random_invertible(3);
    PointConfig d = transformed(c, g);
    Equivalence e = projectively_equivalent(c, d);
    ASSERT_TRUE(e.equivalent);
    // Six points in general position fix the transform up to scale.
    std::vector<Rational> w, gg;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        w.push_back((*e.witness)(i, j));
        gg.push_back(g(i, j));
      }
    EXPECT_TRUE(proportional(w, gg));
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(proportional(*e.witness * c[i].coords(), d[i].coords()));
    PointConfig bent = d;
    bent.back() = ProjPoint{bent.back()[0] + 1, bent.back()[1], bent.back()[2] + 1};
    EXPECT_FALSE(projectively_equivalent(c, bent).equivalent);
  }
}

TEST(Equivalence, MismatchedInputs) {
  EXPECT_THROW(projectively_equivalent({{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {0, 1}}), Error);
  EXPECT_THROW(projectively_equivalent({{1, 0}, {1, 0}, {1, 0}}, {{1, 0}, {0, 1}, {1, 1}}), Error);
}

TEST(LinearlyGeneral, CollinearTriples) {
  EXPECT_TRUE(linearly_general({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}}));
  EXPECT_FALSE(linearly_general({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 3}}));
}

TEST(CrossRatio, HarmonicAndInvariance) {
  // (0, inf; 1, -1) is harmonic.
  PointConfig h{{0, 1}, {1, 0}, {1, 1}, {-1, 1}};
  EXPECT_EQ(cross_ratio(h), -1);
  Matrix g{{2, 1}, {1, 3}};
  EXPECT_EQ(cross_ratio(transformed(h, g)), -1);
  EXPECT_THROW(cross_ratio({{1, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);
}
