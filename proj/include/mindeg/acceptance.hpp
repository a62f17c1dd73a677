#pragma once

// The acceptance suite: nine seeded, exact checks shared by the test binary
// and `mindeg verify-all`. Each check collects failures instead of stopping.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mindeg/cohomology.hpp"
#include "mindeg/combinat.hpp"
#include "mindeg/constructions.hpp"
#include "mindeg/gale.hpp"
#include "mindeg/numerics.hpp"
#include "mindeg/polyring.hpp"
#include "mindeg/scrolls.hpp"

namespace mindeg::acceptance {

inline constexpr std::uint64_t default_seed = 20240917;

struct Options {
  std::uint64_t seed = default_seed;
  int max_degree = 6;
};

struct CriterionResult {
  CriterionResult() = default;
  CriterionResult(int i, std::string n) : id(i), name(std::move(n)) {}

  int id = 0;
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

/// Small random rationals and the configurations built from them.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9) {
    Rational q(integer(-bound, bound), integer(1, 3));
    q.canonicalize();
    return q;
  }
  Rational nonzero(long bound = 9) {
    Rational q = 0;
    while (q == 0) q = rational(bound);
    return q;
  }
  std::vector<Rational> vector(std::size_t n) {
    std::vector<Rational> v;
    while (true) {
      v.clear();
      for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
      if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; })) return v;
    }
  }
  ProjPoint point(std::size_t ambient) { return ProjPoint(vector(ambient + 1)); }
  PointConfig points(std::size_t ambient, std::size_t count) {
    PointConfig c;
    for (std::size_t i = 0; i < count; ++i) c.push_back(point(ambient));
    return c;
  }
  Matrix invertible(std::size_t n) {
    while (true) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rational();
      if (rank(m) == n) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string type_label(const ScrollType& s) { return s.to_string(); }

inline CriterionResult hilbert_agreement(const Options& o) {
  CriterionResult r{1, "Hilbert function: initial ideal = degreewise rank = closed formula (k<=4, d<=6)"};
  for (const ScrollType& s : scroll_types_up_to(4, 6)) {
    const Ideal ideal = scroll_ideal(s);
    for (const auto& [oname, ord] : {std::pair{"diagonal", scroll_order(s)}, std::pair{"grevlex", scroll_grevlex(s)}}) {
      const Ideal in = initial_ideal(ideal, ord);
      std::vector<Monomial> leads;
      for (const auto& g : in.generators()) leads.push_back(g.leading_monomial(ord));
      for (int m = 0; m <= o.max_degree; ++m) {
        const auto by_gb = static_cast<std::int64_t>(count_standard_monomials(leads, s.nvars(), m));
        const std::int64_t formula = scroll_hilbert_poly(s.degree(), s.dim(), m);
        std::ostringstream what;
        what << type_label(s) << " m=" << m << " (" << oname << "): gb=" << by_gb << " formula=" << formula;
        if (std::string(oname) == "diagonal") {
          const auto by_rank = static_cast<std::int64_t>(hilbert_function_by_rank(ideal, m));
          what << " rank=" << by_rank;
          r.expect(by_rank == formula, what.str());
        }
        r.expect(by_gb == formula, what.str());
      }
    }
  }
  return r;
}

inline CriterionResult groebner_claim(const Options&) {
  CriterionResult r{2, "Raw 2x2 minors are a Groebner basis (k<=4, d<=6)"};
  for (const ScrollType& s : scroll_types_up_to(4, 6)) {
    const Ideal ideal = scroll_ideal(s);
    for (const auto& [oname, ord] : {std::pair{"diagonal", scroll_order(s)}, std::pair{"grevlex", scroll_grevlex(s)}}) {
      const Ideal gb = buchberger(ideal, ord);
      std::ostringstream what;
      what << type_label(s) << " (" << oname << "): " << ideal.size() << " minors, reduced basis " << gb.size();
      r.expect(is_groebner_basis(ideal.generators(), ord) && gb.size() == ideal.size(), what.str());
    }
  }
  return r;
}

inline CriterionResult degenerations(const Options& o) {
  CriterionResult r{3, "Degenerations: fiber Hilbert function, I1+I2 = IX cap IY, inclusion-exclusion (d<=5, k<=3)"};
  const int top = std::min(4, o.max_degree);
  for (const ScrollType& s : scroll_types_up_to(3, 5))
    for (std::size_t b : admissible_blocks(s)) {
      const DegenerationReport rep = verify_degeneration(degeneration_family(s, b), top);
      std::ostringstream what;
      what << type_label(s) << " block " << b + 1 << ": hilbert=" << rep.hilbert_ok()
           << " decomposition=" << rep.decomposition_ok() << " inclusion_exclusion=" << rep.inclusion_exclusion_ok();
      r.expect(rep.passed(), what.str());
    }
  return r;
}

inline CriterionResult dimension_identities(const Options& o) {
  CriterionResult r{4, "Dimension identities: point/plane split, chi(End), balanced h0(End), h0(Sym^m)"};
  for (int k = 1; k <= 10; ++k)
    for (int d = std::max(k, 2 * k - 1); d <= 2 * k + 20; ++d) {
      const long lhs = static_cast<long>(d - 1) * (d + 2 * k + 1) + 2 * k - 2;
      r.expect(lhs == scroll_hilb_dim(d, k), "split identity d=" + std::to_string(d) + " k=" + std::to_string(k));
      r.expect(scroll_hilb_pieces(d, k).dim == scroll_hilb_dim(d, k),
               "bundle pieces d=" + std::to_string(d) + " k=" + std::to_string(k));
      r.expect(h0(end_bundle(SplitBundle::of_scroll(balanced_type(d, k)))) == static_cast<long>(k) * k,
               "balanced h0(End) d=" + std::to_string(d) + " k=" + std::to_string(k));
    }
  Sampler rnd(o.seed ^ 0x4444);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> deg;
    const long rk = rnd.integer(1, 7);
    for (long j = 0; j < rk; ++j) deg.push_back(static_cast<int>(rnd.integer(-6, 9)));
    SplitBundle e(deg);
    r.expect(euler_characteristic(end_bundle(e)) == rk * rk, "chi(End) for " + e.to_string());
  }
  for (const ScrollType& s : scroll_types_up_to(4, 6))
    for (int m = 0; m <= o.max_degree; ++m)
      r.expect(h0(sym(SplitBundle::of_scroll(s), m)) == scroll_hilbert_poly(s.degree(), s.dim(), m),
               "h0(Sym^" + std::to_string(m) + ") for " + type_label(s));
  return r;
}

inline CriterionResult enumerative(const Options&) {
  CriterionResult r{5, "Enumerative: sigma_k sigma_{k-1}^k = T(k-1) (k=2..7), tableaux, quadric degrees"};
  for (int k = 2; k <= 7; ++k) {
    const Integer planes = planes_through_point_meeting_lines(k);
    const Integer t = syt_total(k - 1);
    r.expect(planes == t, "k=" + std::to_string(k) + ": Schubert product " + planes.get_str() + " vs T(k-1) = " + t.get_str());
  }
  for (int n = 0; n <= 8; ++n)
    r.expect(syt_total(n) == syt_total_brute_force(n), "tableaux recurrence vs enumeration at n=" + std::to_string(n));
  r.expect(syt_total(2) == 2, "T(2) = 2");
  r.expect(rank4_quadric_degree(2) == 1, "rank-4 quadric degree k=2");
  r.expect(rank4_quadric_degree(3) == 5, "rank-4 quadric degree k=3");
  r.expect(rank4_quadric_degree(4) == 35, "rank-4 quadric degree k=4");
  for (int k = 2; k <= 12; ++k) {
    const Rational q = rank4_quadric_degree(k);
    r.expect(q > 0 && q.get_den() == 1, "rank-4 quadric degree integral at k=" + std::to_string(k));
  }
  r.expect(veronese_degeneration_count() == 630, "Veronese degeneration count 630");
  return r;
}

inline CriterionResult gale_involution(const Options& o) {
  CriterionResult r{6, "Gale transform is an involution up to projective equivalence (100 configurations)"};
  Sampler rnd(o.seed ^ 0x6666);
  int done = 0;
  while (done < 100) {
    const auto rr = static_cast<std::size_t>(rnd.integer(1, 4));
    const auto ss = static_cast<std::size_t>(rnd.integer(1, 4));
    const PointConfig c = rnd.points(rr, rr + ss + 2);
    if (!linearly_general(c)) continue;
    ++done;
    std::ostringstream what;
    what << "r=" << rr << " s=" << ss << " #" << done;
    try {
      const GaleTransform g = gale_transform(c);
      r.expect((coordinate_matrix(c).transpose() * g.dual).is_zero(), what.str() + ": A^T B != 0");
      const GaleTransform gg = gale_transform(g.points);
      const Equivalence eq = projectively_equivalent(gg.points, c);
      bool witnessed = eq.equivalent && eq.witness && rank(*eq.witness) == rr + 1;
      if (witnessed)
        for (std::size_t i = 0; i < c.size(); ++i)
          witnessed = witnessed && proportional(*eq.witness * gg.points[i].coords(), c[i].coords());
      r.expect(witnessed, what.str() + ": double transform not equivalent");
    } catch (const Error& e) {
      r.expect(false, what.str() + ": " + e.what());
    }
  }
  return r;
}

/// Lines span(P1_i, P2_i) and planes span(P_a,*) with P3_i = alpha P1_i + beta P2_i.
struct SegreConfig {
  std::vector<LinearSubspace> lines;
  std::vector<LinearSubspace> planes;
};

inline SegreConfig random_segre_config(Sampler& rnd, std::size_t k) {
  const std::size_t n = 2 * k;
  std::vector<std::vector<Rational>> p1, p2, p3;
  for (std::size_t i = 0; i < k; ++i) {
    p1.push_back(rnd.vector(n));
    p2.push_back(rnd.vector(n));
    const Rational a = rnd.nonzero(), b = rnd.nonzero();
    std::vector<Rational> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = a * p1.back()[c] + b * p2.back()[c];
    p3.push_back(v);
  }
  auto span = [&](const std::vector<std::vector<Rational>>& rows) { return LinearSubspace(row_space_basis(Matrix::from_rows(rows, n))); };
  SegreConfig cfg;
  for (std::size_t i = 0; i < k; ++i) cfg.lines.push_back(span({p1[i], p2[i]}));
  cfg.planes = {span(p1), span(p2), span(p3)};
  return cfg;
}

inline CriterionResult construction_certificates(const Options& o) {
  CriterionResult r{7, "Construction certificates: rational normal curves (n<=6), Segre scrolls (k<=3)"};
  Sampler rnd(o.seed ^ 0x7777);
  for (std::size_t n = 1; n <= 6; ++n) {
    int done = 0;
    while (done < 50) {
      const PointConfig pts = rnd.points(n, n + 3);
      ParamCurve c;
      try {
        c = rnc_through_points(pts);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegeneratePosition) continue;
        throw;
      }
      ++done;
      const std::string what = "rnc n=" + std::to_string(n) + " #" + std::to_string(done);
      r.expect(certificates_hold(c, pts), what + ": certificate mismatch");
      r.expect(c.spans_ambient() && c.degree() == static_cast<long>(n), what + ": not a spanning degree-n curve");
    }
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    int done = 0;
    while (done < 5) {
      const SegreConfig cfg = random_segre_config(rnd, k);
      SegreScroll s;
      try {
        s = segre_through_config(cfg.lines, cfg.planes);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateConfig || e.kind() == ErrorKind::RankDeficient) continue;
        throw;
      }
      ++done;
      const std::string what = "segre k=" + std::to_string(k) + " #" + std::to_string(done);
      bool contains = true;
      for (const auto& l : cfg.lines) contains = contains && vanishes_on(s.ideal, l);
      for (const auto& p : cfg.planes) contains = contains && vanishes_on(s.ideal, p);
      r.expect(contains, what + ": input subspace not contained");
      for (int m = 0; m <= 4; ++m)
        r.expect(static_cast<std::int64_t>(hilbert_function_by_rank(s.ideal, m)) ==
                     scroll_hilbert_poly(static_cast<int>(k), static_cast<int>(k), m),
                 what + ": Hilbert function at m=" + std::to_string(m));
    }
  }
  return r;
}

inline CriterionResult numerics_tables(const Options&) {
  CriterionResult r{8, "Numerics: del Pezzo table, Castelnuovo exceptions, Veronese point counts"};
  for (int d = 3; d <= 9; ++d) {
    if (d == 8) {
      for (auto v : {DelPezzoVariant::Type0, DelPezzoVariant::Type1})
        r.expect(delpezzo_row_consistent(delpezzo_conditions(d, v)), "del Pezzo degree 8 " + std::string(to_string(v)));
      bool threw = false;
      try {
        delpezzo_conditions(8);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::UnknownVariant;
      }
      r.expect(threw, "degree 8 without a variant must be rejected");
    } else {
      r.expect(delpezzo_row_consistent(delpezzo_conditions(d)), "del Pezzo degree " + std::to_string(d));
    }
  }
  struct Case {
    int d, g, r;
    bool weak;
    Tristate full;
  };
  const std::vector<Case> cases{
      {5, 2, 3, false, Tristate::No},   {6, 2, 4, false, Tristate::No},   {7, 2, 5, false, Tristate::No},
      {6, 4, 3, false, Tristate::Undefined}, {10, 6, 5, false, Tristate::Undefined}, {9, 3, 6, true, Tristate::Yes},
      {4, 1, 3, true, Tristate::Yes},   {7, 3, 4, true, Tristate::Yes},   {12, 15, 4, false, Tristate::No},
  };
  for (const auto& c : cases) {
    const CastelnuovoDecision dec = castelnuovo_decision(c.d, c.g, c.r);
    std::ostringstream what;
    what << "castelnuovo (" << c.d << "," << c.g << "," << c.r << "): weak=" << dec.weak << " full=" << to_string(dec.full);
    r.expect(dec.weak == c.weak && dec.full == c.full, what.str());
  }
  // Every Castelnuovo triple in a range: weak fails exactly on d > 2r and the five exceptions.
  int weak_failures_in_range = 0;
  for (int rr = 3; rr <= 8; ++rr)
    for (int d = rr; d <= 2 * rr; ++d) {
      const long g = castelnuovo_params(d, rr).genus;
      if (!castelnuovo_decision(d, g, rr).weak) ++weak_failures_in_range;
    }
  r.expect(weak_failures_in_range == 5, "exactly five weak-interpolation exceptions with d <= 2r, got " + std::to_string(weak_failures_in_range));
  r.expect(veronese_point_count(2, 2) == 9, "Veronese surface point count 9");
  r.expect(veronese_point_count(2, 3) == 13, "cubic Veronese surface point count 13");
  r.expect(castelnuovo_hilb_dim(9, 3, CastelnuovoCase::SpaceCurve) == 38, "Castelnuovo dim r=3 d=9");
  r.expect(castelnuovo_hilb_dim(14, 5, CastelnuovoCase::Veronese) == 62, "Castelnuovo dim Veronese d=14");
  r.expect(castelnuovo_hilb_dim(11, 4, CastelnuovoCase::Generic) == 47, "Castelnuovo dim generic r=4 d=11");
  return r;
}

inline std::vector<FatPointCondition> simple(const PointConfig& pts, int mult = 1) {
  std::vector<FatPointCondition> c;
  for (const auto& p : pts) c.push_back({p, mult});
  return c;
}

inline CriterionResult linear_systems(const Options& o) {
  CriterionResult r{9, "Linear systems: conic pencil counts, quartic pencil, triads"};
  Sampler rnd(o.seed ^ 0x9999);
  const std::size_t conic = vanishing_linear_system(2, simple(rnd.points(2, 5))).dimension;
  r.expect(conic == 1, "conics through 5 general points: " + std::to_string(conic));
  const std::size_t quartic = vanishing_linear_system(4, simple(rnd.points(2, 13))).dimension;
  r.expect(quartic == 2, "quartics through 13 general points: " + std::to_string(quartic));
  const TriadResult general = is_singular_triad(rnd.points(2, 13), rnd.points(2, 3));
  r.expect(!general.singular && general.dimension == 0, "general triad: dimension " + std::to_string(general.dimension));
  const TriadWitness w = singular_triad_witness();
  const TriadResult witness = is_singular_triad(w.gamma, w.triad);
  r.expect(witness.singular && witness.dimension == 2, "witness triad: dimension " + std::to_string(witness.dimension));
  return r;
}

struct Criterion {
  int id;
  std::function<CriterionResult(const Options&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, hilbert_agreement},  {2, groebner_claim},          {3, degenerations},
      {4, dimension_identities}, {5, enumerative},          {6, gale_involution},
      {7, construction_certificates}, {8, numerics_tables}, {9, linear_systems},
  };
  return all;
}

inline CriterionResult run_criterion(int id, const Options& o) {
  for (const auto& c : criteria())
    if (c.id == id) {
      const auto start = std::chrono::steady_clock::now();
      CriterionResult r;
      try {
        r = c.run(o);
      } catch (const std::exception& e) {
        r.id = id;
        r.failures.push_back(std::string("exception: ") + e.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw Error(ErrorKind::OutOfRange, "no acceptance criterion " + std::to_string(id));
}

inline std::vector<CriterionResult> run_all(const Options& o) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c.id, o));
  return out;
}

}  // namespace mindeg::acceptance
