#include <gtest/gtest.h>

#include <random>

#include "mindeg/constructions.hpp"

using namespace mindeg;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(31);
  return g;
}

Rational small_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng()), den(rng()));
}

ProjPoint random_point(std::size_t n) {
  while (true) {
    std::vector<Rational> v(n + 1);
    for (auto& x : v) x = small_rational();
    for (auto& x : v) x.canonicalize();
    if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; })) return ProjPoint(v);
  }
}

Matrix random_invertible(std::size_t n) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = small_rational();
        m(i, j).canonicalize();
      }
    if (determinant(m) != 0) return m;
  }
}

template <class F>
ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

Polynomial partial(const Polynomial& f, std::size_t i) {
  Polynomial out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    std::vector<int> e = m.exponents();
    --e[i];
    out.add_term(Monomial(e), c * m[i]);
  }
  return out;
}

LinearSubspace span_rows(const Matrix& m) { return LinearSubspace(row_space_basis(m)); }

}  // namespace

TEST(Lagrange, MatchesVandermondeSolve) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<std::pair<Rational, Rational>> pairs;
    Matrix v(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational x;
      do {
        x = small_rational();
        x.canonicalize();
      } while (std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == x; }));
      Rational y = small_rational();
      y.canonicalize();
      pairs.emplace_back(x, y);
      Rational pw = 1;
      for (std::size_t j = 0; j < n; ++j, pw *= x) v(i, j) = pw;
      rhs[i] = y;
    }
    UniPoly p = lagrange(pairs);
    EXPECT_EQ(p, UniPoly(*solve(v, rhs)));
    for (const auto& [x, y] : pairs) EXPECT_EQ(p(x), y);
    EXPECT_LT(p.degree(), static_cast<long>(n));
  }
}

TEST(Lagrange, KnownQuadraticAndDuplicates) {
  UniPoly p = lagrange({{0, 1}, {1, 2}, {2, 5}});  // t^2 + 1
  EXPECT_EQ(p, UniPoly({1, 0, 1}));
  EXPECT_EQ(p.to_string(), "t^2 + 1");
  EXPECT_EQ(thrown_kind([] { lagrange({{1, 2}, {1, 3}}); }), ErrorKind::DuplicateNode);
  EXPECT_TRUE(lagrange({}).is_zero());
}

TEST(RationalNormalCurve, ThroughRandomPoints) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      PointConfig pts;
      for (std::size_t i = 0; i < n + 3; ++i) pts.push_back(random_point(n));
      ParamCurve c;
      try {
        c = rnc_through_points(pts);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegeneratePosition);
        continue;
      }
      EXPECT_EQ(c.degree(), static_cast<long>(n));
      EXPECT_TRUE(c.spans_ambient());
      EXPECT_TRUE(certificates_hold(c, pts));
    }
}

TEST(RationalNormalCurve, ConicAgreesWithLinearSystem) {
  // The conic through five points, found by linear algebra, vanishes on the
  // parametrized curve.
  PointConfig pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 4}};
  ParamCurve c = rnc_through_points(pts);
  std::vector<FatPointCondition> conds;
  for (const auto& p : pts) conds.push_back({p, 1});
  LinearSystem ls = vanishing_linear_system(2, conds);
  ASSERT_EQ(ls.dimension, 1u);
  for (int t = -3; t <= 3; ++t) EXPECT_EQ(ls.basis[0].evaluate(c.at(Rational(t, 2))), 0);
}

TEST(RationalNormalCurve, RejectsSpecialPositions) {
  EXPECT_EQ(thrown_kind([] { rnc_through_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}}); }),
            ErrorKind::DegeneratePosition);
  EXPECT_EQ(thrown_kind([] { rnc_through_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 2}}); }),
            ErrorKind::DegeneratePosition);
  EXPECT_EQ(thrown_kind([] { rnc_through_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }), ErrorKind::InvalidArgument);
}

TEST(SegreScroll, StandardConfigurationGivesStandardMinors) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t n = 2 * k;
    std::vector<LinearSubspace> lines, planes;
    for (std::size_t i = 0; i < k; ++i) {
      Matrix b(2, n);
      b(0, 2 * i) = 1;
      b(1, 2 * i + 1) = 1;
      lines.push_back(LinearSubspace(b));
    }
    for (auto [s, t] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
      Matrix b(k, n);
      for (std::size_t i = 0; i < k; ++i) {
        b(i, 2 * i) = s;
        b(i, 2 * i + 1) = t;
      }
      planes.push_back(LinearSubspace(b));
    }
    SegreScroll sc = segre_through_config(lines, planes);
    TwoRowMatrix std_m{n, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
      std_m.top.push_back(Polynomial::variable(n, 2 * i));
      std_m.bottom.push_back(Polynomial::variable(n, 2 * i + 1));
    }
    const Ideal expect = minors_ideal(std_m);
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(same_row_space(degree_span(sc.ideal, m), degree_span(expect, m)));
  }
}

TEST(SegreScroll, TransformedConfigurationsAreRecovered) {
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::size_t n = 2 * k;
    Matrix g = random_invertible(n);
    auto moved = [&](const Matrix& rows) { return span_rows((g * rows.transpose()).transpose()); };
    std::vector<LinearSubspace> lines, planes;
    for (std::size_t i = 0; i < k; ++i) {
      Matrix b(2, n);
      b(0, 2 * i) = 1;
      b(1, 2 * i + 1) = 1;
      lines.push_back(moved(b));
    }
    for (auto [s, t] : {std::pair{1, 0}, {0, 1}, {2, 3}}) {
      Matrix b(k, n);
      for (std::size_t i = 0; i < k; ++i) {
        b(i, 2 * i) = s;
        b(i, 2 * i + 1) = t;
      }
      planes.push_back(moved(b));
    }
    SegreScroll sc = segre_through_config(lines, planes);
    for (const auto& l : lines) EXPECT_TRUE(vanishes_on(sc.ideal, l));
    for (const auto& p : planes) EXPECT_TRUE(vanishes_on(sc.ideal, p));
    for (int m = 0; m <= 3; ++m)
      EXPECT_EQ(static_cast<std::int64_t>(hilbert_function_by_rank(sc.ideal, m)),
                scroll_hilbert_poly(static_cast<int>(k), static_cast<int>(k), m));
  }
}

TEST(SegreScroll, DegenerateConfigurations) {
  auto sub = [](std::initializer_list<std::initializer_list<Rational>> rows) { return LinearSubspace(Matrix(rows)); };
  std::vector<LinearSubspace> lines{sub({{1, 0, 0, 0}, {0, 1, 0, 0}}), sub({{0, 0, 1, 0}, {0, 0, 0, 1}})};
  auto p0 = sub({{1, 0, 0, 0}, {0, 0, 1, 0}});
  auto p1 = sub({{0, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(thrown_kind([&] { segre_through_config(lines, {p0, p1}); }), ErrorKind::DegenerateConfig);
  EXPECT_EQ(thrown_kind([&] { segre_through_config(lines, {p0, p1, p0}); }), ErrorKind::DegenerateConfig);
  auto skew = sub({{1, 1, 0, 0}, {1, 0, 0, 0}});  // contains the first line
  EXPECT_EQ(thrown_kind([&] { segre_through_config(lines, {p0, p1, skew}); }), ErrorKind::DegenerateConfig);
}

TEST(LinearSystem, SimplePointsCountsAreExpected) {
  for (int e = 1; e <= 4; ++e) {
    const long forms = (e + 1) * (e + 2) / 2;
    for (long npts = 0; npts <= forms + 1; ++npts) {
      std::vector<FatPointCondition> conds;
      for (long i = 0; i < npts; ++i) conds.push_back({random_point(2), 1});
      LinearSystem ls = vanishing_linear_system(e, conds);
      EXPECT_EQ(ls.expected, forms - npts);
      EXPECT_EQ(static_cast<long>(ls.dimension), std::max(0L, forms - npts)) << "e=" << e << " points=" << npts;
      for (const auto& f : ls.basis)
        for (const auto& c : conds) EXPECT_EQ(f.evaluate(c.point.coords()), 0);
    }
  }
}

TEST(LinearSystem, DoublePointsKillGradients) {
  std::vector<FatPointCondition> conds{{ProjPoint{1, 2, 3}, 2}, {ProjPoint{0, 1, -1}, 2}, {ProjPoint{2, 0, 1}, 1}};
  LinearSystem ls = vanishing_linear_system(4, conds);
  EXPECT_EQ(ls.expected, 15 - 3 - 3 - 1);
  EXPECT_EQ(static_cast<long>(ls.dimension), ls.expected);
  for (const auto& f : ls.basis)
    for (const auto& c : conds) {
      EXPECT_EQ(f.evaluate(c.point.coords()), 0);
      if (c.multiplicity != 2) continue;
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(partial(f, i).evaluate(c.point.coords()), 0);
    }
}

TEST(LinearSystem, SuperabundantDoubleConics) {
  // Conics double at two points contain the doubled line: dimension 1, expected 0.
  LinearSystem ls = vanishing_linear_system(2, {{ProjPoint{1, 0, 0}, 2}, {ProjPoint{0, 1, 0}, 2}});
  EXPECT_EQ(ls.expected, 0);
  EXPECT_EQ(ls.dimension, 1u);
  Polynomial z = Polynomial::variable(3, 2);
  EXPECT_EQ(ls.basis[0].monic(MonomialOrder::grevlex(3)), z * z);
  EXPECT_THROW(vanishing_linear_system(0, {}), Error);
  EXPECT_THROW(vanishing_linear_system(2, {{ProjPoint{1, 0, 0, 0}, 1}}), Error);
}

TEST(Triad, WitnessIsSingular) {
  TriadWitness w = singular_triad_witness();
  ASSERT_EQ(w.gamma.size(), 13u);
  TriadResult r = is_singular_triad(w.gamma, w.triad);
  EXPECT_TRUE(r.singular);
  EXPECT_EQ(r.dimension, 2u);
  // The product of the triangle, the line M and a line through the free point
  // vanishes where required.
  Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), zz = Polynomial::variable(3, 2);
  Polynomial m = Rational(2) * x + Rational(3) * y - zz;
  Polynomial l = Rational(5) * x - Rational(3) * y;  // through (3:5:7)
  Polynomial f = x * y * zz * m * l;
  for (const auto& p : w.gamma) EXPECT_EQ(f.evaluate(p.coords()), 0);
  for (const auto& p : w.triad)
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(partial(f, i).evaluate(p.coords()), 0);
}

TEST(Triad, GeneralPointsAreNotSingular) {
  PointConfig gamma;
  for (int i = 0; i < 13; ++i) gamma.push_back(random_point(2));
  PointConfig triad{random_point(2), random_point(2), random_point(2)};
  TriadResult r = is_singular_triad(gamma, triad);
  EXPECT_FALSE(r.singular);
  EXPECT_EQ(r.dimension, 0u);
  PointConfig overlap = triad;
  overlap[0] = gamma[4];
  EXPECT_EQ(thrown_kind([&] { is_singular_triad(gamma, overlap); }), ErrorKind::OverlappingSupport);
  EXPECT_EQ(thrown_kind([&] { is_singular_triad({}, triad); }), ErrorKind::InvalidArgument);
}

TEST(Cremona, StandardMapAndInvolution) {
  PointConfig std_centers{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(cremona(std_centers, {{1, 2, 3}}).front(), (ProjPoint{6, 3, 2}));
  PointConfig centers{{1, 2, 0}, {0, 1, 5}, {3, -1, 1}};
  for (int trial = 0; trial < 15; ++trial) {
    ProjPoint p = random_point(2);
    PointConfig once;
    try {
      once = cremona(centers, {p});
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::CenterHit);
      continue;
    }
    // Away from the triangle the map is an involution.
    try {
      EXPECT_EQ(cremona(centers, once).front(), p);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::CenterHit);
    }
  }
  EXPECT_EQ(thrown_kind([&] { cremona(centers, {centers[1]}); }), ErrorKind::CenterHit);
  EXPECT_EQ(thrown_kind([] { cremona({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{1, 2, 3}}); }), ErrorKind::CollinearCenters);
}
