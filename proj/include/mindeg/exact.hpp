#pragma once

// Exact rational scalars and dense linear algebra over Q.
//
// Rationals are GMP's mpq_class, which keeps every value in lowest terms with
// a positive denominator. Matrices are small and dense; elimination is done
// fraction-free on integer-scaled rows (Bareiss) and only the final echelon
// form is converted back to rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindeg/error.hpp"

namespace mindeg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix diagonal(const std::vector<Rational>& diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<Rational> col(std::size_t j) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void append_row(const std::vector<Rational>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<Rational> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Bareiss elimination on an integer copy of m. Returns the echelon rows (as
// integers, one per pivot) and pivot columns.
inline std::pair<std::vector<std::vector<Integer>>, std::vector<std::size_t>> bareiss(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
  }
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

inline Echelon rref(const Matrix& m) {
  auto [ints, pivots] = detail::bareiss(m);
  const std::size_t r = pivots.size();
  Matrix red(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& lead = ints[i][pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      red(i, j) = Rational(ints[i][j], lead);
      red(i, j).canonicalize();
    }
  }
  // Back-substitute to clear entries above each pivot.
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = red(k, pivots[i]);
      if (f == 0) continue;
      for (std::size_t j = pivots[i]; j < m.cols(); ++j) red(k, j) -= f * red(i, j);
    }
  }
  return {std::move(red), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return detail::bareiss(m).second.size(); }

/// Rows form a basis of {v : m v = 0}.
inline Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix k(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    k.append_row(v);
  }
  return k;
}

/// Independent rows spanning the row space of m.
inline Matrix row_space_basis(const Matrix& m) { return rref(m).reduced; }

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a(i, c) / a(c, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Some solution of a x = b, if one exists.
inline std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

/// A point of P^r with canonical scaling: the first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const Rational& q) { return q != 0; });
    if (it == coords_.end()) throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
    Rational lead = *it;
    for (auto& q : coords_) q /= lead;
  }
  ProjPoint(std::initializer_list<Rational> coords) : ProjPoint(std::vector<Rational>(coords)) {}

  std::size_t ambient_dim() const { return coords_.size() - 1; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  ProjPoint transformed(const Matrix& t) const { return ProjPoint(t * coords_); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords_.size(); ++i) os << (i ? ":" : "") << p.coords_[i];
    return os << ')';
  }

 private:
  std::vector<Rational> coords_;
};

/// True when v is a nonzero multiple of w (both nonzero).
inline bool proportional(const std::vector<Rational>& v, const std::vector<Rational>& w) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  bool vz = std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
  bool wz = std::all_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; });
  return !vz && !wz;
}

/// Rows are the coordinate vectors of the points.
using PointConfig = std::vector<ProjPoint>;

inline Matrix coordinate_matrix(const std::vector<ProjPoint>& pts) {
  Matrix m(0, pts.empty() ? 0 : pts.front().coords().size());
  for (const auto& p : pts) m.append_row(p.coords());
  return m;
}

/// Projective linear subspace, stored as independent spanning vectors.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  explicit LinearSubspace(Matrix basis) : basis_(std::move(basis)) {
    if (rank(basis_) != basis_.rows())
      throw Error(ErrorKind::RankDeficient, "subspace basis rows are linearly dependent");
  }
  static LinearSubspace span(const std::vector<ProjPoint>& pts) {
    return LinearSubspace(row_space_basis(coordinate_matrix(pts)));
  }

  std::size_t ambient_dim() const { return basis_.cols() - 1; }
  /// Projective dimension; -1 for the empty subspace.
  long projective_dim() const { return static_cast<long>(basis_.rows()) - 1; }
  const Matrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const {
    Matrix m = basis_;
    m.append_row(v);
    return rank(m) == basis_.rows();
  }
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }

  LinearSubspace intersect(const LinearSubspace& other) const {
    if (basis_.rows() == 0 || other.basis_.rows() == 0) return LinearSubspace(Matrix(0, basis_.cols()));
    // (u, w) with u A + w B = 0 gives u A in both spans.
    Matrix stacked = vstack(basis_, other.basis_);
    Matrix ker = kernel_basis(stacked.transpose());
    Matrix pts(0, basis_.cols());
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      std::vector<Rational> v(basis_.cols());
      for (std::size_t j = 0; j < basis_.rows(); ++j)
        for (std::size_t c = 0; c < basis_.cols(); ++c) v[c] += ker(i, j) * basis_(j, c);
      pts.append_row(v);
    }
    return LinearSubspace(row_space_basis(pts));
  }

 private:
  Matrix basis_;
};

/// Matrix T with T src_i proportional to e_i for i <= r and T src_{r+1}
/// proportional to (1, ..., 1).
inline Matrix frame_transform(const std::vector<ProjPoint>& src) {
  if (src.empty()) throw Error(ErrorKind::InvalidArgument, "frame_transform: no points");
  const std::size_t n = src.front().coords().size();
  if (src.size() != n + 1)
    throw Error(ErrorKind::InvalidArgument, "frame_transform needs r+2 points in P^r");
  Matrix cols(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (src[j].coords().size() != n) throw Error(ErrorKind::InvalidArgument, "mixed ambient dimensions");
    for (std::size_t i = 0; i < n; ++i) cols(i, j) = src[j][i];
  }
  if (rank(cols) < n) throw Error(ErrorKind::DegeneratePosition, "first r+1 frame points are dependent");
  auto lambda = solve(cols, src[n].coords());
  for (const auto& l : *lambda)
    if (l == 0) throw Error(ErrorKind::DegeneratePosition, "last frame point lies on a coordinate hyperplane of the frame");
  return *inverse(cols * Matrix::diagonal(*lambda));
}

/// Sparse rows for large, very sparse eliminations (Macaulay-type matrices).
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Row echelon basis kept keyed by leading column; leading coefficients are 1.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols = 0) : cols_(cols) {}

  /// Top-reduces r; the result is zero iff r lies in the current span.
  SparseRow reduce(SparseRow r) const {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) break;
      r = axpy(r, -Rational(r.front().second), it->second);
    }
    return r;
  }

  bool contains(const SparseRow& r) const { return reduce(r).empty(); }

  /// Adds r to the span; returns false if r was already in it.
  bool insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Rational lead = r.front().second;
    if (lead != 1)
      for (auto& [c, q] : r) q /= lead;
    pivots_.emplace(r.front().first, std::move(r));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const std::map<std::size_t, SparseRow>& rows() const { return pivots_; }

  Matrix to_matrix() const {
    Matrix m(pivots_.size(), cols_);
    std::size_t i = 0;
    for (const auto& [lead, row] : pivots_) {
      for (const auto& [c, q] : row) m(i, c) = q;
      ++i;
    }
    return m;
  }

  static SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f * b[j].second);
        ++j;
      } else {
        Rational q = a[i].second + f * b[j].second;
        if (q != 0) out.emplace_back(a[i].first, std::move(q));
        ++i;
        ++j;
      }
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace mindeg
