#include <gtest/gtest.h>

#include <map>

#include "mindeg/combinat.hpp"

using namespace mindeg;

namespace {

// All partitions inside the k x k box, generated as nonincreasing k-tuples.
std::vector<std::vector<int>> box_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int cap) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= cap; ++a) {
      cur.push_back(a);
      self(self, a);
      cur.pop_back();
    }
  };
  rec(rec, k);
  return out;
}

// mu / lambda is a horizontal p-strip: interlacing mu_1 >= lambda_1 >= mu_2 >= lambda_2 ...
bool horizontal_strip(const std::vector<int>& lam, const std::vector<int>& mu, int p) {
  int added = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (mu[i] < lam[i]) return false;
    if (i + 1 < lam.size() && mu[i + 1] > lam[i]) return false;
    added += mu[i] - lam[i];
  }
  return added == p;
}

// Coefficient of the full box in sigma_{p_1} ... sigma_{p_n} by dynamic programming over the box.
Integer box_coefficient(int k, const std::vector<int>& specials) {
  auto parts = box_partitions(k);
  std::map<std::vector<int>, Integer> cur{{std::vector<int>(static_cast<std::size_t>(k), 0), Integer(1)}};
  for (int p : specials) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [lam, c] : cur)
      for (const auto& mu : parts)
        if (horizontal_strip(lam, mu, p)) next[mu] += c;
    cur = std::move(next);
  }
  auto it = cur.find(std::vector<int>(static_cast<std::size_t>(k), k));
  return it == cur.end() ? Integer(0) : it->second;
}

// Hook length formula for the k x k square.
Integer square_syt(int k) {
  Integer num = factorial(static_cast<long>(k) * k), den = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) den *= (k - i) + (k - j) - 1;
  return num / den;
}

}  // namespace

TEST(Tableaux, InvolutionNumbers) {
  const std::vector<long> known{1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(syt_total(n), known[static_cast<std::size_t>(n)]);
    EXPECT_EQ(syt_total_brute_force(n), syt_total(n));
  }
  EXPECT_THROW(syt_total(-1), Error);
  EXPECT_THROW(syt_total_brute_force(11), Error);
}

TEST(Pieri, SmallProducts) {
  const int k = 3;
  SchubertCycle c = pieri_multiply(SchubertCycle::special(k, 1), 1);
  EXPECT_EQ(c.coeff({2}), 1);
  EXPECT_EQ(c.coeff({1, 1}), 1);
  EXPECT_EQ(c.terms.size(), 2u);
  SchubertCycle d = pieri_multiply(SchubertCycle::special(k, 2), 2);
  EXPECT_EQ(d.coeff({3, 1}), 1);
  EXPECT_EQ(d.coeff({2, 2}), 1);
  EXPECT_EQ(d.coeff({4}), 0);  // outside the box
  EXPECT_EQ(d.terms.size(), 2u);
  EXPECT_THROW(pieri_multiply(c, 4), Error);
  EXPECT_THROW(SchubertCycle::special(k, 0), Error);
}

TEST(Pieri, ProductsCommute) {
  for (int k = 2; k <= 4; ++k)
    for (int p = 1; p <= k; ++p)
      for (int q = 1; q <= k; ++q)
        EXPECT_EQ(pieri_multiply(SchubertCycle::special(k, p), q), pieri_multiply(SchubertCycle::special(k, q), p));
}

TEST(Pieri, PowersOfHyperplaneClassCountSquareTableaux) {
  for (int k = 2; k <= 4; ++k) {
    SchubertCycle c = SchubertCycle::unit(k);
    for (int i = 0; i < k * k; ++i) c = pieri_multiply(c, 1);
    EXPECT_EQ(c.coeff(Partition(static_cast<std::size_t>(k), k)), square_syt(k));
  }
  EXPECT_EQ(square_syt(2), 2);
  EXPECT_EQ(square_syt(3), 42);
}

TEST(Pieri, AgreesWithInterlacingOracle) {
  for (int k = 2; k <= 4; ++k) {
    std::vector<std::vector<int>> words{{1, 1, 1, 1}, {2, 1, 1}, {k, 1}, {1, 2, 1}};
    for (auto w : words) {
      int total = 0;
      for (int p : w) total += p;
      while (total < k * k) {
        w.push_back(1);
        ++total;
      }
      if (total != k * k) continue;
      SchubertCycle c = SchubertCycle::unit(k);
      for (int p : w) c = pieri_multiply(c, p);
      EXPECT_EQ(c.coeff(Partition(static_cast<std::size_t>(k), k)), box_coefficient(k, w)) << "k=" << k;
    }
  }
}

TEST(Pieri, PlanesThroughPointMeetingLines) {
  for (int k = 2; k <= 7; ++k) {
    std::vector<int> w{k};
    for (int i = 0; i < k; ++i) w.push_back(k - 1);
    const Integer oracle = box_coefficient(k, w);
    EXPECT_EQ(planes_through_point_meeting_lines(k), oracle) << k;
    EXPECT_EQ(oracle, 1) << k;
  }
  EXPECT_THROW(planes_through_point_meeting_lines(1), Error);
}

TEST(QuadricDegree, ClosedFormValues) {
  const std::vector<long> known{1, 5, 35, 294};
  for (int k = 2; k <= 5; ++k) EXPECT_EQ(rank4_quadric_degree(k), known[static_cast<std::size_t>(k - 2)]);
  for (int k = 2; k <= 25; ++k) EXPECT_EQ(rank4_quadric_degree(k).get_den(), 1) << k;
  EXPECT_THROW(rank4_quadric_degree(1), Error);
}

TEST(QuadricDegree, ProductFormIsSeparate) {
  EXPECT_EQ(rank4_quadric_degree_product(2), 1);
  EXPECT_EQ(rank4_quadric_degree_product(3), 1);
  EXPECT_NE(rank4_quadric_degree_product(3), rank4_quadric_degree(3));
  EXPECT_EQ(binomial_ratio(4, 2, 6, 3), Rational(3, 10));
}

TEST(Counting, MultinomialAndVeroneseCount) {
  EXPECT_EQ(multinomial({2, 2, 2}), 90);
  EXPECT_EQ(multinomial({3, 1}), 4);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(veronese_degeneration_count(), 630);
}
