#pragma once

// Interpolation constructions with exact certificates: Lagrange polynomials,
// the rational normal curve through n+3 points, the Segre scroll through k
// lines and three (k-1)-planes, linear systems of plane curves with fat base
// points, singular triads and the quadratic Cremona map.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mindeg/error.hpp"
#include "mindeg/exact.hpp"
#include "mindeg/polyring.hpp"
#include "mindeg/scrolls.hpp"

namespace mindeg {

/// Univariate polynomial, coefficients in ascending degree, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& a) { return UniPoly({a}); }
  /// a t + b.
  static UniPoly linear(const Rational& a, const Rational& b) { return UniPoly({b, a}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rational a = c_[i];
      if (s.empty()) {
        if (a < 0) s += "-";
      } else {
        s += a < 0 ? " - " : " + ";
      }
      a = abs(a);
      if (i == 0 || a != 1) s += mindeg::to_string(a);
      if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Unique polynomial of degree < n through n nodes, via the Lagrange basis.
inline UniPoly lagrange(const std::vector<std::pair<Rational, Rational>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].first)
        throw Error(ErrorKind::DuplicateNode, "node " + to_string(pairs[i].first) + " repeats");
  UniPoly out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    UniPoly basis = UniPoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::linear(1, -pairs[j].first);
      denom *= pairs[i].first - pairs[j].first;
    }
    out = out + Rational(pairs[i].second / denom) * basis;
  }
  return out;
}

/// Parameter value at which a curve passes through an input point;
/// nullopt stands for the point at infinity of the parameter line.
struct CurveCertificate {
  std::size_t point = 0;
  std::optional<Rational> parameter;
};

/// t -> (c_0(t) : ... : c_r(t)).
struct ParamCurve {
  std::size_t ambient = 0;
  std::vector<UniPoly> components;
  std::vector<CurveCertificate> certificates;

  long degree() const {
    long d = -1;
    for (const auto& c : components) d = std::max(d, c.degree());
    return d;
  }

  std::vector<Rational> at(const Rational& t) const {
    std::vector<Rational> v;
    for (const auto& c : components) v.push_back(c(t));
    return v;
  }

  /// Leading coefficients in the common degree.
  std::vector<Rational> at_infinity() const {
    const auto d = static_cast<std::size_t>(std::max(0L, degree()));
    std::vector<Rational> v;
    for (const auto& c : components) v.push_back(c.coeff(d));
    return v;
  }

  std::vector<Rational> at(const std::optional<Rational>& t) const { return t ? at(*t) : at_infinity(); }

  /// Rows: components, columns: coefficients of t^0..t^degree.
  Matrix coefficient_matrix() const {
    const auto d = static_cast<std::size_t>(std::max(0L, degree()));
    Matrix m(components.size(), d + 1);
    for (std::size_t i = 0; i < components.size(); ++i)
      for (std::size_t j = 0; j <= d; ++j) m(i, j) = components[i].coeff(j);
    return m;
  }

  bool spans_ambient() const { return rank(coefficient_matrix()) == ambient + 1; }
};

/// Each certificate evaluates to a nonzero multiple of its point.
inline bool certificates_hold(const ParamCurve& c, const PointConfig& pts) {
  if (c.certificates.size() != pts.size()) return false;
  for (const auto& cert : c.certificates) {
    if (cert.point >= pts.size()) return false;
    if (!proportional(c.at(cert.parameter), pts[cert.point].coords())) return false;
  }
  return true;
}

/// Rational normal curve through n+3 points of P^n. After the first n+2
/// points become the standard frame and the last becomes q, component i is
/// q_i * prod_{j != i}(q_j t + 1); point i sits at t = -1/q_i, the unit point
/// at t = infinity and q at t = 0.
inline ParamCurve rnc_through_points(const PointConfig& pts) {
  if (pts.empty()) throw Error(ErrorKind::InvalidArgument, "rnc_through_points: no points");
  const std::size_t n = pts.front().ambient_dim();
  if (n < 1 || pts.size() != n + 3) throw Error(ErrorKind::InvalidArgument, "rnc_through_points needs n+3 points in P^n, n >= 1");
  for (const auto& p : pts)
    if (p.ambient_dim() != n) throw Error(ErrorKind::InvalidArgument, "mixed ambient dimensions");
  const Matrix t = frame_transform(PointConfig(pts.begin(), pts.begin() + static_cast<long>(n + 2)));
  const std::vector<Rational> q = t * pts.back().coords();
  for (std::size_t i = 0; i <= n; ++i) {
    if (q[i] == 0)
      throw Error(ErrorKind::DegeneratePosition, "last point lies on a hyperplane spanned by n frame points");
    for (std::size_t j = 0; j < i; ++j)
      if (q[i] == q[j])
        throw Error(ErrorKind::DegeneratePosition, "last point lies on a hyperplane through n-1 frame points and the unit point");
  }
  std::vector<UniPoly> normal;
  for (std::size_t i = 0; i <= n; ++i) {
    UniPoly c = UniPoly::constant(q[i]);
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) c = c * UniPoly::linear(q[j], 1);
    normal.push_back(std::move(c));
  }
  const Matrix back = *inverse(t);
  ParamCurve out;
  out.ambient = n;
  for (std::size_t i = 0; i <= n; ++i) {
    UniPoly c;
    for (std::size_t j = 0; j <= n; ++j) c = c + back(i, j) * normal[j];
    out.components.push_back(std::move(c));
  }
  for (std::size_t i = 0; i <= n; ++i) out.certificates.push_back({i, Rational(-1 / q[i])});
  out.certificates.push_back({n + 1, std::nullopt});
  out.certificates.push_back({n + 2, Rational(0)});
  return out;
}

/// Every generator vanishes identically on the subspace.
inline bool vanishes_on(const Ideal& ideal, const LinearSubspace& l) {
  const Matrix& b = l.basis();
  if (b.cols() != ideal.nvars()) throw Error(ErrorKind::InvalidArgument, "subspace and ring dimensions differ");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < b.cols(); ++i) {
    Polynomial p(b.rows());
    for (std::size_t s = 0; s < b.rows(); ++s) p.add_term(Monomial::variable(b.rows(), s), b(s, i));
    images.push_back(std::move(p));
  }
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& g) { return g.substitute(images).is_zero(); });
}

struct SegreScroll {
  Ideal ideal;
  /// y = change * x puts the scroll in the form rank [y0 y2 ...; y1 y3 ...] <= 1.
  Matrix change;
};

/// The unique Segre P^1 x P^{k-1} in P^{2k-1} containing k given lines and
/// three given (k-1)-planes that each meet every line.
inline SegreScroll segre_through_config(const std::vector<LinearSubspace>& lines,
                                        const std::vector<LinearSubspace>& planes) {
  const std::size_t k = lines.size();
  if (k < 1) throw Error(ErrorKind::DegenerateConfig, "no lines given");
  if (planes.size() != 3) throw Error(ErrorKind::DegenerateConfig, "exactly three planes are needed");
  const std::size_t n = 2 * k;
  for (std::size_t i = 0; i < k; ++i)
    if (lines[i].ambient_dim() + 1 != n || lines[i].projective_dim() != 1)
      throw Error(ErrorKind::DegenerateConfig, "line " + std::to_string(i + 1) + " is not a line in P^" + std::to_string(n - 1));
  for (std::size_t a = 0; a < 3; ++a)
    if (planes[a].ambient_dim() + 1 != n || planes[a].projective_dim() != static_cast<long>(k) - 1)
      throw Error(ErrorKind::DegenerateConfig, "plane " + std::to_string(a + 1) + " is not a (k-1)-plane in P^" + std::to_string(n - 1));

  std::vector<std::vector<std::vector<Rational>>> meet(3, std::vector<std::vector<Rational>>(k));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < k; ++i) {
      LinearSubspace p = lines[i].intersect(planes[a]);
      if (p.projective_dim() != 0)
        throw Error(ErrorKind::DegenerateConfig, "plane " + std::to_string(a + 1) + " does not meet line " + std::to_string(i + 1) + " in exactly one point");
      meet[a][i] = p.basis().row(0);
    }

  Matrix c(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        if (proportional(meet[a][i], meet[b][i]))
          throw Error(ErrorKind::DegenerateConfig, "planes " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " meet line " + std::to_string(i + 1) + " in the same point");
    Matrix two(n, 2);
    for (std::size_t r = 0; r < n; ++r) {
      two(r, 0) = meet[0][i][r];
      two(r, 1) = meet[1][i][r];
    }
    const auto ab = *solve(two, meet[2][i]);
    for (std::size_t r = 0; r < n; ++r) {
      c(r, 2 * i) = ab[0] * meet[0][i][r];
      c(r, 2 * i + 1) = ab[1] * meet[1][i][r];
    }
  }
  auto change = inverse(c);
  if (!change) throw Error(ErrorKind::DegenerateConfig, "the lines do not span P^" + std::to_string(n - 1));

  std::vector<Polynomial> y;
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial p(n);
    for (std::size_t s = 0; s < n; ++s) p.add_term(Monomial::variable(n, s), (*change)(r, s));
    y.push_back(std::move(p));
  }
  TwoRowMatrix m{n, {}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    m.top.push_back(y[2 * i]);
    m.bottom.push_back(y[2 * i + 1]);
  }
  SegreScroll out{Ideal(n, m.minors()), *change};
  for (std::size_t i = 0; i < k; ++i)
    if (!vanishes_on(out.ideal, lines[i])) throw Error(ErrorKind::DegenerateConfig, "line " + std::to_string(i + 1) + " is not on the scroll");
  for (std::size_t a = 0; a < 3; ++a)
    if (!vanishes_on(out.ideal, planes[a]))
      throw Error(ErrorKind::DegenerateConfig, "plane " + std::to_string(a + 1) + " is not on the scroll (its points on the lines are dependent)");
  return out;
}

struct FatPointCondition {
  ProjPoint point;
  int multiplicity = 1;
};

struct LinearSystem {
  std::size_t dimension = 0;
  std::vector<Polynomial> basis;
  /// C(e+2,2) - sum C(m+1,2), the count if conditions are independent.
  long expected = 0;
};

/// Ternary forms of degree e with multiplicity >= m_i at each point. The
/// conditions are the partial derivatives of order m-1 at p (order e if
/// e < m-1), which by Euler's formula imply the lower orders.
inline LinearSystem vanishing_linear_system(int e, const std::vector<FatPointCondition>& conditions) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  const std::vector<Monomial> mons = monomials_of_degree(3, e);
  Matrix a(0, mons.size());
  LinearSystem out;
  out.expected = static_cast<long>(mons.size());
  for (const auto& c : conditions) {
    if (c.point.ambient_dim() != 2) throw Error(ErrorKind::InvalidArgument, "fat points must lie in P^2");
    if (c.multiplicity < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity must be positive");
    out.expected -= static_cast<long>(c.multiplicity) * (c.multiplicity + 1) / 2;
    const int order = std::min(c.multiplicity - 1, e);
    for (const Monomial& alpha : monomials_of_degree(3, order)) {
      std::vector<Rational> row(mons.size());
      for (std::size_t j = 0; j < mons.size(); ++j) {
        const Monomial& beta = mons[j];
        if (!alpha.divides(beta)) continue;
        Rational v = 1;
        for (std::size_t x = 0; x < 3; ++x) {
          for (int f = 0; f < alpha[x]; ++f) v *= beta[x] - f;
          for (int f = 0; f < beta[x] - alpha[x]; ++f) v *= c.point[x];
        }
        row[j] = v;
      }
      a.append_row(row);
    }
  }
  const Matrix ker = a.rows() ? kernel_basis(a) : Matrix::identity(mons.size());
  out.dimension = ker.rows();
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Polynomial f(3);
    for (std::size_t j = 0; j < mons.size(); ++j) f.add_term(mons[j], ker(i, j));
    out.basis.push_back(std::move(f));
  }
  return out;
}

struct TriadResult {
  bool singular = false;
  std::size_t dimension = 0;
};

/// Quintics through 13 points and double at the 3 triad points: a singular
/// triad has exactly a pencil of them.
inline TriadResult is_singular_triad(const PointConfig& gamma, const PointConfig& triad) {
  if (gamma.size() != 13 || triad.size() != 3) throw Error(ErrorKind::InvalidArgument, "need 13 points and a triad of 3");
  std::vector<FatPointCondition> conds;
  for (const auto& t : triad) {
    if (std::find(gamma.begin(), gamma.end(), t) != gamma.end())
      throw Error(ErrorKind::OverlappingSupport, "triad point lies in the 13-point set");
    conds.push_back({t, 2});
  }
  for (const auto& g : gamma) conds.push_back({g, 1});
  const LinearSystem ls = vanishing_linear_system(5, conds);
  return {ls.dimension == 2, ls.dimension};
}

struct TriadWitness {
  PointConfig gamma;
  PointConfig triad;
};

/// Triad at the coordinate vertices; two points on each side of the
/// triangle, a free point, and six points on a further line M. The quintics
/// M * (triangle) * (line through the free point) form a pencil.
inline TriadWitness singular_triad_witness() {
  auto pt = [](long x, long y, long z) { return ProjPoint{Rational(x), Rational(y), Rational(z)}; };
  TriadWitness w;
  w.triad = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
  w.gamma = {pt(1, 2, 0), pt(2, -3, 0),   // z = 0
             pt(1, 0, 3), pt(-2, 0, 5),   // y = 0
             pt(0, 1, 4), pt(0, 3, -2),   // x = 0
             pt(3, 5, 7)};
  // M: 2x + 3y - z = 0
  for (auto [s, u] : {std::pair{1, 1}, {1, 2}, {1, -1}, {2, 1}, {1, 3}, {3, -1}}) w.gamma.push_back(pt(s, u, 2 * s + 3 * u));
  return w;
}

/// T^{-1} o (x:y:z) -> (yz:xz:xy) o T, with T sending the centers to the
/// coordinate vertices.
inline PointConfig cremona(const PointConfig& centers, const PointConfig& pts) {
  if (centers.size() != 3) throw Error(ErrorKind::InvalidArgument, "cremona needs three centers");
  Matrix cols(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    if (centers[j].ambient_dim() != 2) throw Error(ErrorKind::InvalidArgument, "centers must lie in P^2");
    for (std::size_t i = 0; i < 3; ++i) cols(i, j) = centers[j][i];
  }
  auto t = inverse(cols);
  if (!t) throw Error(ErrorKind::CollinearCenters, "the three centers are collinear");
  PointConfig out;
  for (const auto& p : pts) {
    if (p.ambient_dim() != 2) throw Error(ErrorKind::InvalidArgument, "points must lie in P^2");
    const std::vector<Rational> y = *t * p.coords();
    if (std::count(y.begin(), y.end(), Rational(0)) >= 2)
      throw Error(ErrorKind::CenterHit, "point coincides with a center");
    out.push_back(ProjPoint(cols * std::vector<Rational>{y[1] * y[2], y[0] * y[2], y[0] * y[1]}));
  }
  return out;
}

}  // namespace mindeg
