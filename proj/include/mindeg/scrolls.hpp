#pragma once

// Rational normal scrolls S(a_1, ..., a_k) as determinantal varieties: the
// two-row scroll matrix, its 2x2 minors, the one-parameter degeneration to a
// scroll of degree d-1 union a k-plane, and the Hilbert function bookkeeping
// around them.
//
// Variables are x_{i,j} (1 <= i <= k, 0 <= j <= a_i), flattened block by
// block, so the ring has d + k variables and the scroll lives in P^{d+k-1}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mindeg/error.hpp"
#include "mindeg/exact.hpp"
#include "mindeg/polyring.hpp"

namespace mindeg {

class ScrollType {
 public:
  explicit ScrollType(std::vector<int> parts) : a_(std::move(parts)) {
    if (a_.empty()) throw Error(ErrorKind::InvalidArgument, "scroll type needs at least one block");
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] < 1) throw Error(ErrorKind::InvalidArgument, "scroll blocks must be positive");
      if (i > 0 && a_[i] > a_[i - 1]) throw Error(ErrorKind::InvalidArgument, "scroll blocks must be nonincreasing");
    }
  }

  /// Parses "2,1,1".
  static ScrollType parse(std::string_view text) {
    std::vector<int> parts;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        parts.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad scroll type '" + std::string(text) + "'");
      }
    }
    return ScrollType(std::move(parts));
  }

  const std::vector<int>& parts() const { return a_; }
  int degree() const { return std::accumulate(a_.begin(), a_.end(), 0); }
  int dim() const { return static_cast<int>(a_.size()); }
  int ambient_dim() const { return degree() + dim() - 1; }
  std::size_t nvars() const { return static_cast<std::size_t>(degree() + dim()); }

  /// Flat index of x_{block+1, j}.
  std::size_t var_index(std::size_t block, int j) const {
    std::size_t idx = 0;
    for (std::size_t b = 0; b < block; ++b) idx += static_cast<std::size_t>(a_[b] + 1);
    return idx + static_cast<std::size_t>(j);
  }

  std::vector<std::string> variable_names() const {
    std::vector<std::string> names;
    for (std::size_t b = 0; b < a_.size(); ++b)
      for (int j = 0; j <= a_[b]; ++j) names.push_back("x_{" + std::to_string(b + 1) + "," + std::to_string(j) + "}");
    return names;
  }

  std::string to_string() const {
    std::string s = "S(";
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
    return s + ")";
  }

  friend bool operator==(const ScrollType&, const ScrollType&) = default;

 private:
  std::vector<int> a_;
};

/// Graded lex with x_{1,0} > x_{1,1} > ... > x_{k,a_k}. Under it the leading
/// term of every scroll minor is its main-diagonal product, which gives the
/// standard-monomial description of the quotient.
inline MonomialOrder scroll_order(const ScrollType& s) { return MonomialOrder::grlex(s.nvars()); }

/// Graded reverse lex with x_{1,0} < ... < x_{k,a_k}. Leading terms of the
/// minors are the anti-diagonal products here.
inline MonomialOrder scroll_grevlex(const ScrollType& s) { return MonomialOrder::grevlex_ascending(s.nvars()); }

/// Two-row matrix of linear forms.
struct TwoRowMatrix {
  std::size_t nvars = 0;
  std::vector<Polynomial> top;
  std::vector<Polynomial> bottom;

  std::size_t cols() const { return top.size(); }

  /// All 2x2 minors top_p bottom_q - top_q bottom_p, p < q.
  std::vector<Polynomial> minors() const {
    std::vector<Polynomial> out;
    for (std::size_t p = 0; p < cols(); ++p)
      for (std::size_t q = p + 1; q < cols(); ++q) out.push_back(top[p] * bottom[q] - top[q] * bottom[p]);
    return out;
  }
};

struct ScrollMatrix {
  ScrollType type;
  TwoRowMatrix entries;
};

inline ScrollMatrix scroll_matrix(const ScrollType& s) {
  TwoRowMatrix m{s.nvars(), {}, {}};
  for (std::size_t b = 0; b < s.parts().size(); ++b)
    for (int j = 0; j < s.parts()[b]; ++j) {
      m.top.push_back(Polynomial::variable(s.nvars(), s.var_index(b, j)));
      m.bottom.push_back(Polynomial::variable(s.nvars(), s.var_index(b, j + 1)));
    }
  return {s, std::move(m)};
}

inline Ideal minors_ideal(const TwoRowMatrix& m) { return Ideal(m.nvars, m.minors()); }
inline Ideal minors_ideal(const ScrollMatrix& m) { return minors_ideal(m.entries); }
inline Ideal scroll_ideal(const ScrollType& s) { return minors_ideal(scroll_matrix(s)); }

/// f_{d,k}(m) = d C(m+k-1, k) + C(m+k-1, k-1). Accepts d = 0 (a (k-1)-plane's
/// cone point count) for degeneration bookkeeping.
inline std::int64_t scroll_hilbert_poly(int d, int k, int m) {
  if (d < 0 || k < 1 || m < 0) throw Error(ErrorKind::InvalidArgument, "scroll_hilbert_poly needs d >= 0, k >= 1, m >= 0");
  Integer v = Integer(d) * binomial(m + k - 1, k) + binomial(m + k - 1, k - 1);
  return v.get_si();
}

/// Merges the first two blocks: S(a_1, a_2, ..., a_k) -> S(a_1 + a_2, a_3, ...).
inline ScrollType hyperplane_section_type(const ScrollType& s) {
  if (s.dim() < 2) throw Error(ErrorKind::DimensionTooSmall, "hyperplane section of a curve is not a scroll");
  std::vector<int> parts{s.parts()[0] + s.parts()[1]};
  parts.insert(parts.end(), s.parts().begin() + 2, s.parts().end());
  return ScrollType(std::move(parts));
}

/// Every type with dimension <= max_dim and degree <= max_degree, ordered by
/// dimension, then degree, then parts in decreasing lex order.
inline std::vector<ScrollType> scroll_types_up_to(int max_dim, int max_degree) {
  std::vector<ScrollType> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int k, int left, int cap) -> void {
    if (static_cast<int>(parts.size()) == k) {
      if (left == 0) out.emplace_back(parts);
      return;
    }
    const int slots = k - static_cast<int>(parts.size());
    for (int a = std::min(cap, left - (slots - 1)); a >= 1; --a) {
      parts.push_back(a);
      self(self, k, left - a, a);
      parts.pop_back();
    }
  };
  for (int k = 1; k <= max_dim; ++k)
    for (int d = k; d <= max_degree; ++d) rec(rec, k, d, d);
  return out;
}

/// The family over A^1 whose matrix has the last top entry of block `block`
/// (0-based) multiplied by t. At t = 0 it breaks into X (a scroll of degree
/// d-1 spanning the hyperplane x_{i,a_i} = 0) and a k-plane Y.
class DegenerationFamily {
 public:
  DegenerationFamily(ScrollType s, std::size_t block) : type_(std::move(s)), block_(block) {
    const auto& a = type_.parts();
    if (block_ >= a.size()) throw Error(ErrorKind::InvalidBlock, "block index out of range");
    if (block_ + 1 < a.size() && a[block_] <= a[block_ + 1])
      throw Error(ErrorKind::InvalidBlock, "degenerating block " + std::to_string(block_ + 1) + " needs a_i > a_{i+1}");
  }

  const ScrollType& type() const { return type_; }
  std::size_t block() const { return block_; }

  /// Column of the scaled entry.
  std::size_t special_column() const {
    std::size_t c = 0;
    for (std::size_t b = 0; b <= block_; ++b) c += static_cast<std::size_t>(type_.parts()[b]);
    return c - 1;
  }
  /// x_{i,a_i}: the bottom entry under the scaled one.
  std::size_t hyperplane_variable() const { return type_.var_index(block_, type_.parts()[block_]); }

  TwoRowMatrix matrix_at(const Rational& t) const {
    TwoRowMatrix m = scroll_matrix(type_).entries;
    m.top[special_column()] = t * m.top[special_column()];
    return m;
  }
  Ideal specialize(const Rational& t) const { return minors_ideal(matrix_at(t)); }
  Ideal special_fiber() const { return specialize(0); }

  /// The scroll matrix with the special column removed (type a with a_i - 1).
  TwoRowMatrix reduced_matrix() const {
    TwoRowMatrix m = scroll_matrix(type_).entries;
    m.top.erase(m.top.begin() + static_cast<std::ptrdiff_t>(special_column()));
    m.bottom.erase(m.bottom.begin() + static_cast<std::ptrdiff_t>(special_column()));
    return m;
  }

  /// x_{i,a_i} times each top entry of the reduced matrix.
  Ideal ideal_i1() const {
    TwoRowMatrix n = reduced_matrix();
    Polynomial h = Polynomial::variable(type_.nvars(), hyperplane_variable());
    std::vector<Polynomial> gens;
    for (const auto& u : n.top) gens.push_back(h * u);
    return Ideal(type_.nvars(), std::move(gens));
  }
  Ideal ideal_i2() const { return minors_ideal(reduced_matrix()); }
  Ideal ideal_x() const {
    return ideal_i2() + Ideal(type_.nvars(), {Polynomial::variable(type_.nvars(), hyperplane_variable())});
  }
  /// The k-plane where every top entry of the reduced matrix vanishes.
  Ideal ideal_y() const { return Ideal(type_.nvars(), reduced_matrix().top); }
  Ideal ideal_x_cap_y() const { return ideal_x() + ideal_y(); }

 private:
  ScrollType type_;
  std::size_t block_;
};

/// Admissible blocks (0-based) for degeneration_family.
inline std::vector<std::size_t> admissible_blocks(const ScrollType& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.parts().size(); ++i)
    if (i + 1 == s.parts().size() || s.parts()[i] > s.parts()[i + 1]) out.push_back(i);
  return out;
}

inline DegenerationFamily degeneration_family(const ScrollType& s, std::size_t block) { return {s, block}; }

struct DegenerationDegree {
  int degree = 0;
  std::int64_t expected = 0;            // f_{d,k}(m)
  std::size_t fiber_hilbert = 0;        // h of the t = 0 ideal
  std::size_t x_hilbert = 0, y_hilbert = 0, xy_hilbert = 0;
  bool hilbert_ok = false;
  bool decomposition_ok = false;
  bool inclusion_exclusion_ok = false;
};

struct DegenerationReport {
  ScrollType type;
  std::size_t block = 0;
  std::vector<DegenerationDegree> degrees;

  bool hilbert_ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.hilbert_ok; });
  }
  bool decomposition_ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.decomposition_ok; });
  }
  bool inclusion_exclusion_ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.inclusion_exclusion_ok; });
  }
  bool passed() const { return hilbert_ok() && decomposition_ok() && inclusion_exclusion_ok(); }
};

/// Degreewise checks of the t = 0 fiber for every m in [0, max_degree]:
///  - its Hilbert function equals f_{d,k};
///  - (I_1 + I_2)_m equals the t = 0 minors and (I_X)_m ∩ (I_Y)_m;
///  - h_X, h_Y, h_{X∩Y} equal f_{d-1,k}, C(m+k,k), C(m+k-1,k-1) and combine
///    by inclusion-exclusion to f_{d,k}.
inline DegenerationReport verify_degeneration(const DegenerationFamily& f, int max_degree) {
  if (max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max_degree must be at least 1");
  const ScrollType& s = f.type();
  const int d = s.degree(), k = s.dim();
  const MonomialOrder ord = scroll_order(s);

  Ideal fiber = f.special_fiber();
  Ideal i12 = f.ideal_i1() + f.ideal_i2();
  Ideal ix = f.ideal_x(), iy = f.ideal_y(), ixy = f.ideal_x_cap_y();

  auto leads_of = [&](const Ideal& I) {
    std::vector<Monomial> leads;
    const Ideal gb = buchberger(I, ord);
    for (const auto& g : gb.generators()) leads.push_back(g.leading_monomial(ord));
    return leads;
  };
  auto fiber_leads = leads_of(fiber), x_leads = leads_of(ix), y_leads = leads_of(iy), xy_leads = leads_of(ixy);
  const std::size_t n = s.nvars();

  DegenerationReport report{s, f.block(), {}};
  for (int m = 0; m <= max_degree; ++m) {
    DegenerationDegree r;
    r.degree = m;
    r.expected = scroll_hilbert_poly(d, k, m);
    r.fiber_hilbert = count_standard_monomials(fiber_leads, n, m);
    r.hilbert_ok = static_cast<std::int64_t>(r.fiber_hilbert) == r.expected;

    Matrix span12 = degree_span(i12, m);
    r.decomposition_ok = same_row_space(span12, degree_span(fiber, m)) &&
                         same_row_space(span12, degree_intersection(ix, iy, m));

    r.x_hilbert = count_standard_monomials(x_leads, n, m);
    r.y_hilbert = count_standard_monomials(y_leads, n, m);
    r.xy_hilbert = count_standard_monomials(xy_leads, n, m);
    const std::int64_t px = scroll_hilbert_poly(d - 1, k, m);
    const std::int64_t py = binomial(m + k, k).get_si();
    const std::int64_t pxy = binomial(m + k - 1, k - 1).get_si();
    r.inclusion_exclusion_ok = px + py - pxy == r.expected && static_cast<std::int64_t>(r.x_hilbert) == px &&
                               static_cast<std::int64_t>(r.y_hilbert) == py &&
                               static_cast<std::int64_t>(r.xy_hilbert) == pxy &&
                               r.fiber_hilbert + r.xy_hilbert == r.x_hilbert + r.y_hilbert;
    report.degrees.push_back(r);
  }
  return report;
}

}  // namespace mindeg
