#pragma once

#include <nlohmann/json.hpp>

#include "uavg/descent.hpp"
#include "uavg/simplicial.hpp"

namespace uavg::io {

using nlohmann::json;

/// Parsing state shared by one document: the extension field, if the
/// document declares one under "field".
struct Context {
  FieldPtr field = ScalarField::rationals();
};

/// Reads the optional "field" member: {"variable", "modulus" (low to high)}.
Context read_context(const json& doc);
json field_to_json(const FieldPtr& field);

/// Integers in [-2^63, 2^63) as JSON numbers, larger ones as decimal strings.
json integer_to_json(const mpz_class& z);
mpz_class integer_from_json(const json& j);

/// {"num", "den"} for rationals, {"coords": [...]} otherwise. Accepted on
/// input as well: bare integers and "p/q" strings.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Context& ctx);
Rational rational_from_json(const json& j);

/// {"q", "params", "terms": [{"exp", "coef"}]}, exponents in normal form.
json to_json(const SimplexPoly& p);
SimplexPoly poly_from_json(const json& j, const Context& ctx);

/// {"n", "q", "params", "entries"}: constant entries as scalars, the rest as
/// polynomials. Entry polynomials may omit q and params.
json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j, const Context& ctx);
json to_json(const NilMatrix& m);
json to_json(const UniMatrix& m);
NilMatrix nil_from_json(const json& j, const Context& ctx);
UniMatrix uni_from_json(const json& j, const Context& ctx);

/// {"preset": "heisenberg" | "upper_triangular" | "abelian_column", "n"} or
/// {"n", "basis": [matrices]}.
json to_json(const LieSpan& g);
LieSpanPtr lie_from_json(const json& j, const Context& ctx);

/// {"group", "sections"}.
json to_json(const SectionTuple& t);
SectionTuple tuple_from_json(const json& doc);

json to_json(const FiniteCover& c);
FiniteCover cover_from_json(const json& j);
/// {"open", "values": {label: matrix}}.
LocalSection local_from_json(const json& j, const Context& ctx);
/// {"i0.i1...": {label: matrix}} for all levels.
json levels_to_json(const SimplicialSection& s);
SimplicialSection section_from_json(const json& doc);
json to_json(const SimplicialReport& r);
json to_json(const TowerReport& r);

/// Document: {"field": {..., "generators": [scalars]}, "group", "points"}.
GaloisOrbit orbit_from_json(const json& doc);

/// Comma-separated rationals such as "1/3,2/3".
WeightSeq weights_from_string(const std::string& s);

/// Decimal rendering of a rational, for display only.
std::string decimal(const Rational& r, int digits = 12);

}  // namespace uavg::io
