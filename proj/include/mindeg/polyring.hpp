#pragma once

// Multivariate polynomials over Q, monomial orders, Buchberger completion and
// degreewise linear algebra on homogeneous ideals.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mindeg/error.hpp"
#include "mindeg/exact.hpp"

namespace mindeg {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_)
      if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  }
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    std::vector<int> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }
  int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > 0 && other.exp_[i] > 0) return false;
    return true;
  }
  Monomial lcm(const Monomial& other) const {
    std::vector<int> e(exp_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exp_[i], other.exp_[i]);
    return Monomial(std::move(e));
  }
  /// this / divisor; divisor must divide this.
  Monomial quotient(const Monomial& divisor) const {
    std::vector<int> e(exp_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exp_[i] - divisor.exp_[i];
    return Monomial(std::move(e));
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exp_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exp_[i] + b.exp_[i];
    return Monomial(std::move(e));
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exp_;
};

/// Graded order on monomials. `precedence` lists variable indices from the
/// largest variable to the smallest.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Grlex };

  MonomialOrder(Kind kind, std::vector<std::size_t> precedence) : kind_(kind), prec_(std::move(precedence)) {
    std::vector<std::size_t> sorted = prec_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw Error(ErrorKind::InvalidArgument, "variable precedence is not a permutation");
  }

  /// x_0 > x_1 > ... > x_{n-1}.
  static MonomialOrder grevlex(std::size_t n) { return {Kind::Grevlex, identity(n)}; }
  /// x_0 < x_1 < ... < x_{n-1}.
  static MonomialOrder grevlex_ascending(std::size_t n) {
    auto p = identity(n);
    std::reverse(p.begin(), p.end());
    return {Kind::Grevlex, p};
  }
  static MonomialOrder grlex(std::size_t n) { return {Kind::Grlex, identity(n)}; }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return prec_; }

  /// -1, 0, 1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (kind_ == Kind::Grlex) {
      for (std::size_t v : prec_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    } else {
      for (auto it = prec_.rbegin(); it != prec_.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  Kind kind_;
  std::vector<std::size_t> prec_;
};

inline std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x_" + std::to_string(i));
  return names;
}

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, i), 1);
    return p;
  }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw Error(ErrorKind::InvalidArgument, "monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += c * m * g
  void add_multiple(const Polynomial& g, const Monomial& m, const Rational& c) {
    for (const auto& [gm, gc] : g.terms_) add_term(gm * m, c * gc);
  }

  Polynomial times_term(const Monomial& m, const Rational& c) const {
    Polynomial p(nvars_);
    if (c == 0) return p;
    for (const auto& [gm, gc] : terms_) p.terms_.emplace(gm * m, c * gc);
    return p;
  }

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (ord.compare(it->first, best->first) > 0) best = it;
    return *best;
  }
  Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }

  Polynomial monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return times_term(Monomial::one(nvars_), 1 / leading_term(ord).second);
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "evaluation point has the wrong length");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) v *= point[i];
      total += v;
    }
    return total;
  }

  /// Replaces x_i by images[i]; all images share one ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "substitution needs one image per variable");
    std::size_t target = images.empty() ? 0 : images.front().nvars();
    Polynomial out(target);
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (const auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(target, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
        t = t * pw[m[i]];
      }
      out += t;
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a.times_term(Monomial::one(a.nvars_), -1); }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.times_term(Monomial::one(p.nvars_), c); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial p(a.nvars_);
    for (const auto& [m, c] : b.terms_) p.add_multiple(a, m, c);
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms in decreasing order, e.g. "x_{1,0}x_{2,1} - x_{1,1}x_{2,0}".
  std::string to_string(const std::vector<std::string>& names, const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ts) {
      Rational mag = abs(c);
      if (first) os << (c < 0 ? "-" : "");
      else os << (c < 0 ? " - " : " + ");
      first = false;
      bool unit = m.degree() == 0;
      if (mag != 1 || unit) os << mag;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        os << names.at(i);
        if (m[i] > 1) os << '^' << m[i];
      }
    }
    return os.str();
  }
  std::string to_string() const { return to_string(default_variable_names(nvars_), MonomialOrder::grevlex(nvars_)); }

 private:
  void check_ring(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "polynomials live in different rings");
  }

  std::size_t nvars_;
  Terms terms_;
};

/// Ideal given by a generator list; zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(std::size_t nvars = 0, std::vector<Polynomial> gens = {}) : nvars_(nvars) {
    for (auto& g : gens) {
      if (g.nvars() != nvars) throw Error(ErrorKind::InvalidArgument, "generator in the wrong ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// Ideal sum I + J.
  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "ideals live in different rings");
    std::vector<Polynomial> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.nvars_, std::move(g));
  }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> gens_;
};

/// Remainder of multivariate division: no term is divisible by a leading
/// monomial of gens, and f - remainder lies in (gens).
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) leads.push_back(g.leading_term(ord));
  Polynomial p = f, rem(f.nvars());
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading_term(ord);
    std::size_t i = 0;
    while (i < leads.size() && !leads[i].first.divides(lm)) ++i;
    if (i < leads.size()) {
      p.add_multiple(gens[i], lm.quotient(leads[i].first), -lc / leads[i].second);
    } else {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto [fm, fc] = f.leading_term(ord);
  auto [gm, gc] = g.leading_term(ord);
  Monomial l = fm.lcm(gm);
  return f.times_term(l.quotient(fm), 1 / fc) - g.times_term(l.quotient(gm), 1 / gc);
}

/// Every S-polynomial of the list reduces to zero modulo the list.
inline bool is_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i].leading_monomial(ord).coprime(gens[j].leading_monomial(ord))) continue;
      if (!reduce(s_polynomial(gens[i], gens[j], ord), gens, ord).is_zero()) return false;
    }
  return true;
}

/// Reduced Groebner basis, sorted by decreasing leading monomial.
inline Ideal buchberger(const Ideal& ideal, const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) basis.push_back(g.monic(ord));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    return basis[p.first].leading_monomial(ord).lcm(basis[p.second].leading_monomial(ord));
  };
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return ord.less(pair_lcm(a), pair_lcm(b));
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (basis[i].leading_monomial(ord).coprime(basis[j].leading_monomial(ord))) continue;
    Polynomial r = reduce(s_polynomial(basis[i], basis[j], ord), basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(ord));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimalize, then inter-reduce tails.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial li = basis[i].leading_monomial(ord);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial lj = basis[j].leading_monomial(ord);
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others, ord).monic(ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(ord), b.leading_monomial(ord)) > 0;
  });
  return Ideal(ideal.nvars(), std::move(reduced));
}

/// Leading monomials of the reduced Groebner basis.
inline Ideal initial_ideal(const Ideal& ideal, const MonomialOrder& ord) {
  std::vector<Polynomial> lead;
  const Ideal gb = buchberger(ideal, ord);
  for (const auto& g : gb.generators()) lead.push_back(Polynomial::term(g.leading_monomial(ord), 1));
  return Ideal(ideal.nvars(), std::move(lead));
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// All monomials of total degree m in n variables, in lex-decreasing order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  if (n == 0) {
    if (m == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, m);
  return out;
}

/// Degree-m monomials not divisible by any of `leads`.
inline std::size_t count_standard_monomials(const std::vector<Monomial>& leads, std::size_t n, int m) {
  std::size_t count = 0;
  for (const auto& mono : monomials_of_degree(n, m))
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(mono); })) ++count;
  return count;
}

/// dim_Q (R/I)_m via standard monomials of the initial ideal.
inline std::size_t hilbert_function(const Ideal& ideal, int m, const MonomialOrder& ord) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  std::vector<Monomial> leads;
  const Ideal in = initial_ideal(ideal, ord);
  for (const auto& g : in.generators()) leads.push_back(g.terms().begin()->first);
  return count_standard_monomials(leads, ideal.nvars(), m);
}
inline std::size_t hilbert_function(const Ideal& ideal, int m) {
  return hilbert_function(ideal, m, MonomialOrder::grevlex(ideal.nvars()));
}

namespace detail {

inline std::map<Monomial, std::size_t> monomial_index(std::size_t n, int m) {
  std::map<Monomial, std::size_t> idx;
  for (const auto& mono : monomials_of_degree(n, m)) idx.emplace(mono, idx.size());
  return idx;
}

inline SparseRow to_sparse(const Polynomial& p, const std::map<Monomial, std::size_t>& idx, std::size_t offset = 0) {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(idx.at(m) + offset, c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

template <class Visit>
void for_each_degree_multiple(const Ideal& ideal, int m, Visit&& visit) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "degreewise spans need homogeneous generators");
    int e = g.degree();
    if (e > m) continue;
    for (const auto& mono : monomials_of_degree(ideal.nvars(), m - e)) visit(g.times_term(mono, 1));
  }
}

}  // namespace detail

/// Echelon basis of I_m over the degree-m monomials (column order as in
/// monomials_of_degree).
inline SparseEchelon degree_span_echelon(const Ideal& ideal, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  auto idx = detail::monomial_index(ideal.nvars(), m);
  SparseEchelon ech(idx.size());
  detail::for_each_degree_multiple(ideal, m, [&](const Polynomial& p) { ech.insert(detail::to_sparse(p, idx)); });
  return ech;
}

/// Rows: a basis of I_m as coefficient vectors over monomials_of_degree(n, m).
inline Matrix degree_span(const Ideal& ideal, int m) { return degree_span_echelon(ideal, m).to_matrix(); }

/// dim (R/I)_m by the rank of I_m; independent of any Groebner computation.
inline std::size_t hilbert_function_by_rank(const Ideal& ideal, int m) {
  std::size_t total = binomial(static_cast<long>(ideal.nvars()) + m - 1, m).get_ui();
  return total - degree_span_echelon(ideal, m).rank();
}

/// Basis of I_m ∩ J_m (Zassenhaus: rows [a|a] and [b|0]).
inline Matrix degree_intersection(const Ideal& a, const Ideal& b, int m) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::InvalidArgument, "ideals live in different rings");
  auto idx = detail::monomial_index(a.nvars(), m);
  const std::size_t n = idx.size();
  SparseEchelon ech(2 * n);
  detail::for_each_degree_multiple(a, m, [&](const Polynomial& p) {
    SparseRow left = detail::to_sparse(p, idx), right = detail::to_sparse(p, idx, n);
    left.insert(left.end(), right.begin(), right.end());
    ech.insert(std::move(left));
  });
  detail::for_each_degree_multiple(b, m, [&](const Polynomial& p) { ech.insert(detail::to_sparse(p, idx)); });
  Matrix out(0, n);
  for (const auto& [lead, row] : ech.rows()) {
    if (lead < n) continue;
    std::vector<Rational> v(n);
    for (const auto& [c, q] : row) v[c - n] = q;
    out.append_row(v);
  }
  return out;
}

inline SparseRow to_sparse_row(const Matrix& m, std::size_t i) {
  SparseRow r;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(i, j) != 0) r.emplace_back(j, m(i, j));
  return r;
}

/// Row spaces coincide (sparse elimination; the spans here are large and thin).
inline bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  SparseEchelon ea(a.cols()), eb(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) ea.insert(to_sparse_row(a, i));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (!ea.contains(to_sparse_row(b, i))) return false;
    eb.insert(to_sparse_row(b, i));
  }
  return ea.rank() == eb.rank();
}

}  // namespace mindeg
