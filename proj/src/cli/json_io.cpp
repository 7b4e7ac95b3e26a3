#include "newton_mu/json_io.hpp"
#include "newton_mu/diagram.hpp"
#include "newton_mu/errors.hpp"

namespace newton_mu::io {

Json rational_json(const Rational& q) { return to_string(q); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json exponent_json(const Point& p) {
  if (!p.is_integral()) return point_json(p);
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(integer_json(c.get_num()));
  return a;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(rational_json(c));
  return a;
}

Json subset_json(const CoordinateSubset& s) {
  Json a = Json::array();
  for (auto i : s.members()) a.push_back(i + 1);
  return a;
}

namespace {

Json simplex_json(const std::vector<Point>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(point_json(p));
  return a;
}

}  // namespace

Json support_json(const SupportSet& s) {
  Json j;
  j["variables"] = s.variables();
  j["monomials"] = s.points();
  return j;
}

Json region_json(const NewtonRegion& x) {
  Json j;
  j["n"] = x.dim();
  Json simplices = Json::array();
  for (const auto& s : x.simplices()) simplices.push_back(simplex_json(s.vertices()));
  j["simplices"] = std::move(simplices);
  j["contains_origin"] = x.has_origin();
  return j;
}

Json diagram_json(const NewtonDiagram& d) {
  Json j;
  j["n"] = d.n;
  Json verts = Json::array();
  for (const auto& v : d.vertices) verts.push_back(exponent_json(v));
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : d.facets) {
    Json fj;
    Json fv = Json::array();
    for (const auto& v : f.vertices) fv.push_back(exponent_json(v));
    fj["vertices"] = std::move(fv);
    Json w = Json::array();
    for (const auto& x : f.inner_normal) w.push_back(integer_json(x));
    fj["inner_normal"] = std::move(w);
    fj["offset"] = rational_json(Rational(f.offset));
    facets.push_back(std::move(fj));
  }
  j["facets"] = std::move(facets);
  return j;
}

Json report_json(const NewtonReport& r) {
  Json j;
  j["n"] = r.n;
  j["nu"] = rational_json(r.total);
  j["total"] = rational_json(r.total);
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"I", subset_json(t.subset)}, {"factorial_volume", rational_json(t.factorial_volume)}, {"sign", t.sign}});
  j["terms"] = std::move(terms);
  return j;
}

Json report_json(const RNewtonReport& r) {
  Json j;
  j["n"] = r.n;
  j["r"] = r.d.size();
  j["d"] = r.d;
  j["nu_r"] = rational_json(r.total);
  j["total"] = rational_json(r.total);
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"I", subset_json(t.subset)},
                     {"factorial_volume", rational_json(t.factorial_volume)},
                     {"weight", integer_json(t.weight)},
                     {"sign", t.sign},
                     {"value", rational_json(t.value)}});
  j["terms"] = std::move(terms);
  j["epsilon"] = r.epsilon;
  j["epsilon_term"] = rational_json(r.epsilon_term);
  return j;
}

Json certificate_json(const BoundCertificate& c) {
  Json j;
  Json a = Json::array();
  for (const auto& x : c.a) a.push_back(rational_json(x));
  j["a"] = std::move(a);
  if (!c.d.empty()) {
    j["r"] = c.d.size();
    j["d"] = c.d;
  }
  j["nu_g"] = rational_json(c.nu_value);
  j["bound"] = rational_json(c.bound);
  j["verdict"] = c.verdict;
  j["m_used"] = c.modification_m ? Json(*c.modification_m) : Json(nullptr);
  if (c.mu_oracle) j["mu_oracle"] = integer_json(*c.mu_oracle);
  Json chain = Json::array();
  for (const auto& s : c.chain) {
    Json step{{"lhs", s.lhs}, {"rel", s.rel}, {"rhs", s.rhs}, {"status", s.status}};
    step["holds"] = s.holds ? Json(*s.holds) : Json(nullptr);
    chain.push_back(std::move(step));
  }
  j["chain"] = std::move(chain);
  return j;
}

Json pieces_json(const std::vector<DecompositionPiece>& pieces) {
  Json a = Json::array();
  for (const auto& p : pieces) {
    Json simplices = Json::array();
    for (const auto& s : p.simplices) simplices.push_back(simplex_json(s.vertices()));
    a.push_back({{"piece_id", p.id},
                 {"minimal_I", subset_json(p.minimal)},
                 {"base", simplex_json(p.base)},
                 {"simplices", std::move(simplices)},
                 {"nu", rational_json(p.nu)}});
  }
  return a;
}

Json vanishing_json(const VanishingVerdict& v) {
  Json j;
  j["nu"] = rational_json(v.nu);
  Json units = Json::array();
  for (auto k : v.unit_vertices) units.push_back(k + 1);
  j["unit_vertices"] = std::move(units);
  j["quasi_convenient"] = v.quasi_convenient;
  j["zero_implies_unit"] = v.zero_implies_unit;
  j["isolated_unit"] = v.isolated_unit ? Json(*v.isolated_unit + 1) : Json(nullptr);
  j["complement_convex"] = v.complement_convex ? Json(*v.complement_convex) : Json(nullptr);
  j["iff_holds"] = v.iff_holds ? Json(*v.iff_holds) : Json(nullptr);
  return j;
}

Json truncation_json(const TruncationVerdict& v) {
  Json j;
  j["case"] = v.zero_case;
  j["witness_vertex"] = v.witness ? exponent_json(*v.witness) : Json(nullptr);
  j["permutation"] = v.permutation;
  j["nu_f0"] = rational_json(v.nu_f0);
  j["nu_f1"] = rational_json(v.nu_f1);
  j["equal"] = v.equal;
  j["pattern"] = v.pattern ? Json(*v.pattern) : Json(nullptr);
  j["predicted_equal"] = v.predicted_equal;
  j["nu_delta"] = rational_json(v.nu_delta);
  Json delta = Json::array();
  for (const auto& p : v.delta) delta.push_back(exponent_json(p));
  j["delta"] = std::move(delta);
  return j;
}

SupportSet parse_support_json(const Json& j) {
  if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_array())
    throw UsageError("support JSON needs a \"monomials\" array");
  std::vector<Exponent> pts;
  for (const auto& m : j["monomials"]) {
    if (!m.is_array()) throw UsageError("each monomial must be an array of exponents");
    Exponent e;
    for (const auto& c : m) {
      if (!c.is_number_integer()) throw UsageError("exponents must be integers");
      e.push_back(c.get<std::int64_t>());
    }
    pts.push_back(std::move(e));
  }
  if (pts.empty()) throw UsageError("support is empty");
  if (j.contains("variables")) return SupportSet(j["variables"].get<std::vector<std::string>>(), std::move(pts));
  const std::size_t n = pts.front().size();
  return SupportSet::with_default_names(n, std::move(pts));
}

namespace {

Rational coordinate(const Json& c) {
  if (c.is_number_integer()) return Rational(static_cast<long>(c.get<std::int64_t>()));
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad coordinate: ") + e.what());
    }
  }
  throw UsageError("coordinates must be integers or \"p/q\" strings");
}

}  // namespace

NewtonRegion parse_region_json(const Json& j) {
  if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
    throw UsageError("region JSON needs a \"simplices\" array");
  std::vector<Simplex> simplices;
  std::size_t n = j.contains("n") ? j["n"].get<std::size_t>() : 0;
  for (const auto& s : j["simplices"]) {
    std::vector<Point> verts;
    for (const auto& p : s) {
      std::vector<Rational> coords;
      for (const auto& c : p) coords.push_back(coordinate(c));
      if (n == 0) n = coords.size();
      if (coords.size() != n) throw UsageError("point of length " + std::to_string(coords.size()) + " in dimension " + std::to_string(n));
      verts.emplace_back(std::move(coords));
    }
    if (verts.empty()) throw UsageError("empty simplex");
    simplices.emplace_back(std::move(verts));
  }
  if (n == 0) throw UsageError("region dimension unknown");
  return NewtonRegion::from_simplices(n, std::move(simplices));
}

}  // namespace newton_mu::io
