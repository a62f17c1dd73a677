#pragma once

// Interpolation condition counting: splitting a Hilbert scheme dimension into
// point conditions plus one linear space, the scroll and del Pezzo targets,
// and the Castelnuovo curve calculus.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "mindeg/cohomology.hpp"
#include "mindeg/error.hpp"
#include "mindeg/polyring.hpp"

namespace mindeg {

/// dim = points * codim + remainder with 0 <= remainder < codim; the extra
/// plane has dimension codim - remainder and is vacuous when that is codim.
struct InterpolationTarget {
  long dim = 0;
  long codim = 0;
  long points = 0;
  long remainder = 0;
  long plane_dim = 0;

  bool vacuous() const { return plane_dim == codim; }

  /// A 0-plane is one more point.
  InterpolationTarget normalized() const {
    if (plane_dim != 0) return *this;
    return {dim, codim, points + 1, 0, codim};
  }

  friend bool operator==(const InterpolationTarget&, const InterpolationTarget&) = default;
};

inline InterpolationTarget interpolation_split(long dim, long n, long k) {
  if (n <= k || k < 0) throw Error(ErrorKind::InvalidCodim, "need n > k >= 0");
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension");
  const long codim = n - k;
  InterpolationTarget t;
  t.dim = dim;
  t.codim = codim;
  t.points = dim / codim;
  t.remainder = dim % codim;
  t.plane_dim = codim - t.remainder;
  return t;
}

/// Points plus plane for degree d, dimension k scrolls:
///   d >= 2k-1:       d + 2k + 1 points and a (d - 2k + 1)-plane,
///   k <= d <= 2k-2:  d + 2k + 2 points and a 2(d - k)-plane.
/// The plane may be 0-dimensional; compare via normalized().
inline InterpolationTarget scroll_targets(int d, int k) {
  const long dim = scroll_hilb_dim(d, k);
  InterpolationTarget t;
  t.dim = dim;
  t.codim = d - 1;
  if (d >= 2 * k - 1) {
    t.points = d + 2 * k + 1;
    t.plane_dim = d - 2 * k + 1;
  } else {
    t.points = d + 2 * k + 2;
    t.plane_dim = 2 * (d - k);
  }
  t.remainder = t.codim - t.plane_dim;
  return t;
}

enum class DelPezzoVariant { Default, Type0, Type1 };

inline std::string_view to_string(DelPezzoVariant v) {
  switch (v) {
    case DelPezzoVariant::Type0: return "type0";
    case DelPezzoVariant::Type1: return "type1";
    default: return "default";
  }
}

struct DelPezzoRow {
  int degree = 0;
  DelPezzoVariant variant = DelPezzoVariant::Default;
  long dim = 0;
  long points = 0;
  std::optional<long> plane_dim;  // nullopt: no extra plane condition
};

/// Interpolation conditions for del Pezzo surfaces of degree 3..9 in P^degree.
/// Degree 8 has two components (F_0 and F_1 type) with the same numbers.
inline DelPezzoRow delpezzo_conditions(int degree, DelPezzoVariant variant = DelPezzoVariant::Default) {
  if (degree < 3 || degree > 9) throw Error(ErrorKind::OutOfRange, "del Pezzo degree must be in 3..9");
  if (degree == 8 && variant == DelPezzoVariant::Default)
    throw Error(ErrorKind::UnknownVariant, "degree 8 needs variant type0 or type1");
  if (degree != 8 && variant != DelPezzoVariant::Default)
    throw Error(ErrorKind::UnknownVariant, "only degree 8 has type variants");
  struct Row {
    long dim, points;
    long plane;  // -1: none
  };
  static constexpr std::array<Row, 7> table{{
      {19, 19, -1},
      {26, 13, -1},
      {35, 11, 1},
      {46, 11, 2},
      {59, 11, 1},
      {74, 12, 4},
      {91, 13, -1},
  }};
  const Row& r = table[static_cast<std::size_t>(degree - 3)];
  DelPezzoRow out{degree, variant, r.dim, r.points, std::nullopt};
  if (r.plane >= 0) out.plane_dim = r.plane;
  return out;
}

/// The row agrees with interpolation_split(dim, degree, 2).
inline bool delpezzo_row_consistent(const DelPezzoRow& row) {
  InterpolationTarget t = interpolation_split(row.dim, row.degree, 2);
  if (t.points != row.points) return false;
  return row.plane_dim ? (!t.vacuous() && t.plane_dim == *row.plane_dim) : t.vacuous();
}

struct CastelnuovoData {
  int d = 0, r = 0;
  int m = 0, epsilon = 0;
  long genus = 0;  // π(d, r)
};

/// d = m(r-1) + ε + 1 with 0 <= ε <= r-2, π = C(m,2)(r-1) + mε.
inline CastelnuovoData castelnuovo_params(int d, int r) {
  if (r < 3 || d < 1) throw Error(ErrorKind::InvalidArgument, "castelnuovo_params needs r >= 3, d >= 1");
  CastelnuovoData c;
  c.d = d;
  c.r = r;
  c.m = (d - 1) / (r - 1);
  c.epsilon = (d - 1) % (r - 1);
  c.genus = static_cast<long>(c.m) * (c.m - 1) / 2 * (r - 1) + static_cast<long>(c.m) * c.epsilon;
  return c;
}

enum class CastelnuovoCase {
  SpaceCurve,      // r = 3
  Veronese,        // on a (degenerate) Veronese surface in P^5, ε in {1, 3}
  ScrollDirectrix, // class m h - (r-2-ε) f on a surface scroll, ε = 0, r >= 4
  ScrollFiber,     // class m h + f on a surface scroll, ε = 0, r >= 4
  Generic,         // every other component (r >= 4, ε > 0)
};

inline std::optional<CastelnuovoCase> parse_castelnuovo_case(std::string_view s) {
  if (s == "r3") return CastelnuovoCase::SpaceCurve;
  if (s == "veronese") return CastelnuovoCase::Veronese;
  if (s == "scroll-directrix") return CastelnuovoCase::ScrollDirectrix;
  if (s == "scroll-fiber") return CastelnuovoCase::ScrollFiber;
  if (s == "generic") return CastelnuovoCase::Generic;
  return std::nullopt;
}

/// Dimension of the Hilbert scheme component for the selected case. Which
/// component a curve lies on is not determined by (d, r), so the caller picks.
inline long castelnuovo_hilb_dim(int d, int r, CastelnuovoCase which) {
  if (r < 3 || d < 2 * r + 1) throw Error(ErrorKind::InvalidArgument, "castelnuovo_hilb_dim needs r >= 3 and d >= 2r+1");
  const CastelnuovoData c = castelnuovo_params(d, r);
  const long m = c.m, e = c.epsilon, rr = r;
  const long base = (rr - 1) * (m * (m + 1) / 2 + rr + 2);
  switch (which) {
    case CastelnuovoCase::SpaceCurve:
      if (r != 3) throw Error(ErrorKind::CaseInapplicable, "space-curve case needs r = 3");
      return m * (m + 3) + 10;
    case CastelnuovoCase::Veronese: {
      if (r != 5 || (e != 1 && e != 3) || d % 2 != 0)
        throw Error(ErrorKind::CaseInapplicable, "Veronese case needs r = 5, d even, ε in {1, 3}");
      const long a = d / 2;
      return 27 + a * (a + 3) / 2;
    }
    case CastelnuovoCase::ScrollDirectrix:
      if (e != 0 || r < 4) throw Error(ErrorKind::CaseInapplicable, "scroll cases need ε = 0 and r >= 4");
      return base + 2 * m;
    case CastelnuovoCase::ScrollFiber:
      if (e != 0 || r < 4) throw Error(ErrorKind::CaseInapplicable, "scroll cases need ε = 0 and r >= 4");
      return base + 2 * (m - 1);
    case CastelnuovoCase::Generic:
      if (r < 4 || e == 0) throw Error(ErrorKind::CaseInapplicable, "generic case needs r >= 4 and ε > 0");
      return base + (e + 2) * (m + 2) - 4;
  }
  throw Error(ErrorKind::CaseInapplicable, "unknown case");
}

enum class Tristate { No, Yes, Undefined };

inline std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    default: return "undefined";
  }
}

struct CastelnuovoDecision {
  bool weak = false;
  Tristate full = Tristate::Undefined;
};

inline bool castelnuovo_weak_exception(int d, long g, int r) {
  static constexpr std::array<std::tuple<int, long, int>, 5> exceptions{
      {{5, 2, 3}, {6, 2, 4}, {7, 2, 5}, {6, 4, 3}, {10, 6, 5}}};
  return std::find(exceptions.begin(), exceptions.end(), std::tuple<int, long, int>{d, g, r}) != exceptions.end();
}

inline bool castelnuovo_full_exception(int d, long g, int r) {
  static constexpr std::array<std::tuple<int, long, int>, 3> exceptions{{{5, 2, 3}, {6, 2, 4}, {7, 2, 5}}};
  return std::find(exceptions.begin(), exceptions.end(), std::tuple<int, long, int>{d, g, r}) != exceptions.end();
}

/// Weak interpolation iff d <= 2r outside five exceptions; full interpolation
/// is decided only for d != 2r (the canonical-curve case d = 2r is open).
inline CastelnuovoDecision castelnuovo_decision(int d, long g, int r) {
  const CastelnuovoData c = castelnuovo_params(d, r);
  if (g != c.genus)
    throw Error(ErrorKind::NotCastelnuovo, "genus " + std::to_string(g) + " is not the Castelnuovo bound " + std::to_string(c.genus));
  CastelnuovoDecision out;
  out.weak = d <= 2 * r && !castelnuovo_weak_exception(d, g, r);
  if (d == 2 * r) out.full = Tristate::Undefined;
  else out.full = (d < 2 * r && !castelnuovo_full_exception(d, g, r)) ? Tristate::Yes : Tristate::No;
  return out;
}

enum class Characteristic { NotTwo, Two };

/// Number of 2-Veronese surfaces in P^5 through 9 general points.
inline int veronese_surface_counts(Characteristic ch) { return ch == Characteristic::Two ? 2 : 4; }

/// Generic degree of the map sending a Veronese surface with 9 marked points
/// to the 9-point configuration.
inline constexpr int veronese_nine_point_map_degree = 4;

}  // namespace mindeg
