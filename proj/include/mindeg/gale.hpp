#pragma once

// Gale transform (association) of ordered point configurations and
// projective equivalence of ordered configurations.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mindeg/error.hpp"
#include "mindeg/exact.hpp"

namespace mindeg {

struct GaleTransform {
  /// gamma x (s+1); columns span the kernel of A^T.
  Matrix dual;
  PointConfig points;
};

inline std::size_t common_ambient(const PointConfig& c) {
  if (c.empty()) throw Error(ErrorKind::InvalidArgument, "empty configuration");
  const std::size_t r = c.front().ambient_dim();
  for (const auto& p : c)
    if (p.ambient_dim() != r) throw Error(ErrorKind::InvalidArgument, "mixed ambient dimensions");
  return r;
}

/// gamma points of P^r go to gamma points of P^s, s = gamma - r - 2.
inline GaleTransform gale_transform(const PointConfig& c) {
  const std::size_t r = common_ambient(c);
  const std::size_t gamma = c.size();
  if (gamma < r + 3) throw Error(ErrorKind::InvalidArgument, "need gamma >= r + 3 so that s >= 1");
  const Matrix a = coordinate_matrix(c);
  if (rank(a) != r + 1) throw Error(ErrorKind::RankDeficient, "points do not span P^r");
  const Matrix k = kernel_basis(a.transpose());
  GaleTransform out{k.transpose(), {}};
  for (std::size_t i = 0; i < gamma; ++i) {
    std::vector<Rational> row = out.dual.row(i);
    bool zero = std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; });
    if (zero) throw Error(ErrorKind::ZeroDualRow, "dual row " + std::to_string(i) + " vanishes");
    out.points.push_back(ProjPoint(std::move(row)));
  }
  return out;
}

/// Every r+1 of the points are independent.
inline bool linearly_general(const PointConfig& c) {
  const std::size_t r = common_ambient(c);
  if (c.size() <= r + 1) return rank(coordinate_matrix(c)) == c.size();
  std::vector<std::size_t> idx(r + 1);
  for (std::size_t i = 0; i <= r; ++i) idx[i] = i;
  while (true) {
    PointConfig sub;
    for (auto i : idx) sub.push_back(c[i]);
    if (rank(coordinate_matrix(sub)) != r + 1) return false;
    std::size_t pos = r + 1;
    while (pos-- > 0 && idx[pos] == c.size() - (r + 1) + pos) {
    }
    if (pos > r) return true;
    ++idx[pos];
    for (std::size_t j = pos + 1; j <= r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Equivalence {
  bool equivalent = false;
  /// T with T c1_i proportional to c2_i, when equivalent.
  std::optional<Matrix> witness;
  /// Indices of the frame used for the comparison.
  std::vector<std::size_t> frame;
};

inline Equivalence projectively_equivalent(const PointConfig& c1, const PointConfig& c2) {
  const std::size_t r = common_ambient(c1);
  if (common_ambient(c2) != r || c1.size() != c2.size())
    throw Error(ErrorKind::InvalidArgument, "configurations differ in ambient or length");
  const std::size_t gamma = c1.size();
  const std::size_t f = r + 2;
  if (gamma < f) throw Error(ErrorKind::DegeneratePosition, "fewer than r+2 points");
  std::vector<std::size_t> idx(f);
  for (std::size_t i = 0; i < f; ++i) idx[i] = i;
  while (true) {
    PointConfig s1, s2;
    for (auto i : idx) {
      s1.push_back(c1[i]);
      s2.push_back(c2[i]);
    }
    std::optional<Matrix> t1, t2;
    try {
      t1 = frame_transform(s1);
      t2 = frame_transform(s2);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePosition) throw;
      t1.reset();
    }
    if (t1 && t2) {
      Equivalence out;
      out.frame = idx;
      const Matrix w = *inverse(*t2) * *t1;
      for (std::size_t i = 0; i < gamma; ++i)
        if (!proportional(w * c1[i].coords(), c2[i].coords())) return out;
      out.equivalent = true;
      out.witness = w;
      return out;
    }
    std::size_t pos = f;
    while (pos-- > 0 && idx[pos] == gamma - f + pos) {
    }
    if (pos >= f) break;
    ++idx[pos];
    for (std::size_t j = pos + 1; j < f; ++j) idx[j] = idx[j - 1] + 1;
  }
  throw Error(ErrorKind::DegeneratePosition, "no r+2 indices are in general position in both configurations");
}

/// (a, b; c, d) for four points of P^1.
inline Rational cross_ratio(const PointConfig& c) {
  if (c.size() != 4 || common_ambient(c) != 1) throw Error(ErrorKind::InvalidArgument, "cross ratio needs four points of P^1");
  auto det = [&](std::size_t i, std::size_t j) -> Rational { return c[i][0] * c[j][1] - c[i][1] * c[j][0]; };
  const Rational den = det(0, 3) * det(1, 2);
  if (den == 0) throw Error(ErrorKind::DegeneratePosition, "cross ratio of coincident points");
  return det(0, 2) * det(1, 3) / den;
}

}  // namespace mindeg
