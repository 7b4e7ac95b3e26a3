#pragma once

#include "newton_mu/diagram.hpp"
#include "newton_mu/family.hpp"
#include "newton_mu/higher.hpp"
#include "newton_mu/polynomial.hpp"

#include <json.hpp>

namespace newton_mu::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "newton-mu/1";

Json rational_json(const Rational& q);
Json integer_json(const Integer& z);
/// Integral points as number arrays (exponent vectors), others as strings.
Json exponent_json(const Point& p);
Json point_json(const Point& p);
Json subset_json(const CoordinateSubset& s);

Json support_json(const SupportSet& s);
Json region_json(const NewtonRegion& x);
Json diagram_json(const NewtonDiagram& d);
Json report_json(const NewtonReport& r);
Json report_json(const RNewtonReport& r);
Json certificate_json(const BoundCertificate& c);
Json pieces_json(const std::vector<DecompositionPiece>& pieces);
Json vanishing_json(const VanishingVerdict& v);
Json truncation_json(const TruncationVerdict& v);

/// {"variables":[...],"monomials":[[...],...]}; variables default to x,y,z,w / z1..zn.
SupportSet parse_support_json(const Json& j);
/// {"n":2,"simplices":[[[0,0],[3,0],[0,2]],...]} with numbers or "p/q" strings.
NewtonRegion parse_region_json(const Json& j);

}  // namespace newton_mu::io
