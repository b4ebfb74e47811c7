#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "goldentiles/angles.hpp"
#include "goldentiles/crs.hpp"
#include "goldentiles/golden.hpp"
#include "goldentiles/inflation.hpp"
#include "goldentiles/matrix.hpp"
#include "goldentiles/polyhedra.hpp"
#include "goldentiles/tower.hpp"

namespace goldentiles {

using Json = nlohmann::json;

// Exact values serialize to strings so nothing is lost to floating point:
// rationals as "p/q" (plain "p" when integral), golden numbers as
// {"a","b"}, tower elements as the 8 rational coordinates in the fixed
// monomial basis (1, ρ, √3, ρ√3), each split into golden (a,b) pairs.

Json to_json(const Rational& q);
Json to_json(const GoldenNumber& g);
Json to_json(const TowerElement& t);
Json to_json(const AngleExpr& e);
Json to_json(const DehnValue& d);
Json to_json(const ExactPolyhedron& p);
Json to_json(const RationalMatrix& m);
Json to_json(const GoldenMatrix& m);
Json to_json(const CoveringCertificate& c);
Json to_json(const CrsAngle& c);

Rational rational_from_json(const Json& j);
GoldenNumber golden_from_json(const Json& j);
TowerElement tower_from_json(const Json& j);
AngleExpr angle_from_json(const Json& j);
DehnValue dehn_from_json(const Json& j);
ExactPolyhedron polyhedron_from_json(const Json& j);
RationalMatrix rational_matrix_from_json(const Json& j);
GoldenMatrix golden_matrix_from_json(const Json& j);
CoveringCertificate certificate_from_json(const Json& j);

/// Parse an ExactPolyhedron from file contents; throws std::invalid_argument
/// with a field-level diagnostic on malformed input.
ExactPolyhedron load_polyhedron(const std::string& path);

/// The catalog as a JSON array: name, edge lengths, edge angles, volume, dehn.
Json catalog_to_json();

} // namespace goldentiles
