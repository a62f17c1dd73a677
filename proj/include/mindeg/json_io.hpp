#pragma once

// JSON encodings. Rationals are strings ("3/4"); matrices and point lists are
// arrays of rows; polynomials are term lists over exponent vectors.

#include <string>
#include <vector>

#include "json.hpp"
#include "mindeg/cohomology.hpp"
#include "mindeg/constructions.hpp"
#include "mindeg/error.hpp"
#include "mindeg/exact.hpp"
#include "mindeg/polyring.hpp"
#include "mindeg/scrolls.hpp"

namespace mindeg::io {

using nlohmann::json;

inline json to_json(const Rational& q) { return to_string(q); }

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

inline json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

inline std::vector<Rational> vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  if (rows.empty()) return Matrix(0, 0);
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error(ErrorKind::ParseError, "ragged matrix");
  return Matrix::from_rows(rows);
}

inline json to_json(const ProjPoint& p) { return to_json(p.coords()); }

inline json to_json(const PointConfig& c) {
  json a = json::array();
  for (const auto& p : c) a.push_back(to_json(p));
  return a;
}

inline PointConfig points_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of points");
  PointConfig c;
  for (const auto& p : j) c.push_back(ProjPoint(vector_from_json(p)));
  return c;
}

inline json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& [m, c] : p.terms()) a.push_back({{"exponents", m.exponents()}, {"coeff", to_json(c)}});
  return a;
}

inline Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a term list");
  Polynomial p(nvars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
      throw Error(ErrorKind::ParseError, "term needs exponents and coeff");
    auto e = t.at("exponents").get<std::vector<int>>();
    if (e.size() != nvars) throw Error(ErrorKind::ParseError, "exponent vector has the wrong length");
    p.add_term(Monomial(std::move(e)), rational_from_json(t.at("coeff")));
  }
  return p;
}

inline json to_json(const Ideal& ideal, const std::vector<std::string>& names) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return {{"variables", names}, {"generators", gens}};
}

inline Ideal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw Error(ErrorKind::ParseError, "ideal needs variables and generators");
  const std::size_t n = j.at("variables").size();
  std::vector<Polynomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(polynomial_from_json(g, n));
  return Ideal(n, std::move(gens));
}

inline json to_json(const UniPoly& p) { return to_json(p.coeffs()); }

inline json to_json(const ParamCurve& c) {
  json comps = json::array();
  for (const auto& p : c.components) comps.push_back(to_json(p));
  json certs = json::array();
  for (const auto& cert : c.certificates)
    certs.push_back({{"point", cert.point}, {"parameter", cert.parameter ? to_json(*cert.parameter) : json("inf")}});
  return {{"ambient", c.ambient}, {"degree", c.degree()}, {"components", comps}, {"certificates", certs}};
}

inline ParamCurve curve_from_json(const json& j) {
  ParamCurve c;
  c.ambient = j.at("ambient").get<std::size_t>();
  for (const auto& p : j.at("components")) c.components.push_back(UniPoly(vector_from_json(p)));
  for (const auto& cert : j.at("certificates")) {
    CurveCertificate k{cert.at("point").get<std::size_t>(), std::nullopt};
    if (cert.at("parameter") != "inf") k.parameter = rational_from_json(cert.at("parameter"));
    c.certificates.push_back(k);
  }
  return c;
}

inline json to_json(const LinearSubspace& l) { return to_json(l.basis()); }

inline LinearSubspace subspace_from_json(const json& j) { return LinearSubspace(matrix_from_json(j)); }

inline json to_json(const SplitBundle& b) { return b.degrees(); }

inline json to_json(const DegenerationReport& r) {
  json degs = json::array();
  for (const auto& d : r.degrees)
    degs.push_back({{"m", d.degree},
                    {"expected", d.expected},
                    {"fiber", d.fiber_hilbert},
                    {"h_x", d.x_hilbert},
                    {"h_y", d.y_hilbert},
                    {"h_x_cap_y", d.xy_hilbert},
                    {"hilbert_ok", d.hilbert_ok},
                    {"decomposition_ok", d.decomposition_ok},
                    {"inclusion_exclusion_ok", d.inclusion_exclusion_ok}});
  return {{"type", r.type.parts()},
          {"block", r.block + 1},
          {"hilbert_ok", r.hilbert_ok()},
          {"decomposition_ok", r.decomposition_ok()},
          {"inclusion_exclusion_ok", r.inclusion_exclusion_ok()},
          {"passed", r.passed()},
          {"degrees", degs}};
}

}  // namespace mindeg::io
