#pragma once

// Counting: standard Young tableaux, Pieri products in the cohomology of
// G(k, 2k), the degree of the rank <= 4 locus of symmetric matrices and the
// Veronese degeneration count.

#include <algorithm>
#include <map>
#include <vector>

#include "mindeg/error.hpp"
#include "mindeg/exact.hpp"

namespace mindeg {

/// Weakly decreasing, no zero parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

/// Involutions: a(n) = a(n-1) + (n-1) a(n-2).
inline Integer syt_total(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative size");
  Integer prev = 1, cur = 1;
  for (int i = 2; i <= n; ++i) {
    Integer next = cur + Integer(i - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Standard tableaux of every shape with n boxes, placing 1..n one at a time
/// at the end of a row whose length stays below the row above.
inline Integer syt_total_brute_force(int n) {
  if (n < 0 || n > 10) throw Error(ErrorKind::OutOfRange, "brute force is limited to n <= 10");
  Integer count = 0;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == n) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      if (r == rows.size()) {
        rows.push_back(1);
        self(self, placed + 1);
        rows.pop_back();
      } else if (r == 0 || rows[r] < rows[r - 1]) {
        ++rows[r];
        self(self, placed + 1);
        --rows[r];
      }
    }
  };
  rec(rec, 0);
  return count;
}

/// Linear combination of Schubert classes of G(k, 2k), indexed by partitions
/// in the k x k box.
struct SchubertCycle {
  int k = 0;
  std::map<Partition, Integer> terms;

  static SchubertCycle unit(int k) { return {k, {{Partition{}, Integer(1)}}}; }
  static SchubertCycle special(int k, int p) {
    if (p < 1 || p > k) throw Error(ErrorKind::OutOfRange, "special class index must be in 1..k");
    return {k, {{Partition{p}, Integer(1)}}};
  }
  Integer coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Integer(0) : it->second;
  }
  friend bool operator==(const SchubertCycle&, const SchubertCycle&) = default;
};

/// Multiply by sigma_p: add p boxes, at most one per column, staying in the box.
inline SchubertCycle pieri_multiply(const SchubertCycle& c, int p) {
  const int k = c.k;
  if (p < 1 || p > k) throw Error(ErrorKind::OutOfRange, "special class index must be in 1..k");
  SchubertCycle out{k, {}};
  for (const auto& [lambda, coeff] : c.terms) {
    std::vector<int> lam(static_cast<std::size_t>(k), 0);
    std::copy(lambda.begin(), lambda.end(), lam.begin());
    std::vector<int> mu(lam);
    // row i may grow up to lam[i-1] (horizontal strip) and up to k.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == lam.size()) {
        if (left != 0) return;
        Partition res;
        for (int x : mu)
          if (x > 0) res.push_back(x);
        out.terms[res] += coeff;
        return;
      }
      const int cap = i == 0 ? k : lam[i - 1];
      for (int add = 0; add <= std::min(left, cap - lam[i]); ++add) {
        mu[i] = lam[i] + add;
        self(self, i + 1, left - add);
      }
      mu[i] = lam[i];
    };
    rec(rec, 0, p);
  }
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

/// Coefficient of the full box in sigma_k * sigma_{k-1}^k.
inline Integer planes_through_point_meeting_lines(int k) {
  if (k < 2) throw Error(ErrorKind::OutOfRange, "k must be at least 2");
  SchubertCycle c = SchubertCycle::special(k, k);
  for (int i = 0; i < k; ++i) c = pieri_multiply(c, k - 1);
  return c.coeff(Partition(static_cast<std::size_t>(k), k));
}

inline Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// (2k-2)! (2k-1)! / ((k-1)!^2 k! (k+1)!).
inline Rational rank4_quadric_degree(int k) {
  if (k < 2) throw Error(ErrorKind::OutOfRange, "k must be at least 2");
  Rational q(factorial(2 * k - 2) * factorial(2 * k - 1),
             factorial(k - 1) * factorial(k - 1) * factorial(k) * factorial(k + 1));
  q.canonicalize();
  return q;
}

inline Rational binomial_ratio(long n1, long k1, long n2, long k2) {
  Integer a, b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n1), static_cast<unsigned long>(k1));
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n2), static_cast<unsigned long>(k2));
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// prod_{a=0}^{k-3} C(k+1+a, k-3-a) / C(2a+2, a). Does not agree with
/// rank4_quadric_degree (already at k = 3 it gives 1, not 5).
inline Rational rank4_quadric_degree_product(int k) {
  if (k < 2) throw Error(ErrorKind::OutOfRange, "k must be at least 2");
  Rational q = 1;
  for (long a = 0; a <= k - 3; ++a) q *= binomial_ratio(k + 1 + a, k - 3 - a, 2 * a + 2, a);
  return q;
}

inline Integer multinomial(const std::vector<int>& parts) {
  long n = 0;
  for (int p : parts) n += p;
  Integer m = factorial(n);
  for (int p : parts) m /= factorial(p);
  return m;
}

/// 7 choices of the free point times 6!/(2!2!2!) ordered pairings of the rest.
inline Integer veronese_degeneration_count() { return 7 * multinomial({2, 2, 2}); }

}  // namespace mindeg
