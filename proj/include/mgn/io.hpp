#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgn/ample_model.hpp"
#include "mgn/divisor.hpp"
#include "mgn/fcurves.hpp"
#include "mgn/geometry_props.hpp"
#include "mgn/positivity.hpp"

namespace mgn::io {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Throws ParseError with the parser's diagnostic.
Json parse(const std::string& text);
Json read_file(const std::string& path);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json index_to_json(const BoundaryIndex& idx);  // [i, [marks]] or "irr"
BoundaryIndex index_from_json(const Json& j, const MarkedGenus& amb);

Json tsubset_to_json(const TSubset& T);
TSubset tsubset_from_json(const Json& j, const MarkedGenus& amb);
// Compact single-token form for CSV cells, e.g. {irr;0:1;1:1}.
std::string tsubset_token(const TSubset& T);

Json divisor_to_json(const DivisorClass& L);
DivisorClass divisor_from_json(const Json& j);

Json fcurve_to_json(const FCurve& C);
FCurve fcurve_from_json(const Json& j, const MarkedGenus& amb);

// "alpha_default" fills indices missing from "alphas".
Json params_to_json(const AdjointParams& p);
AdjointParams params_from_json(const Json& j);

Json verdict_to_json(const PositivityVerdict& v);
Json inequality_to_json(const Inequality& q);
Json result_to_json(const AmpleModelResult& r);
AmpleModelResult result_from_json(const Json& j, const MarkedGenus& amb);
Json bridge_to_json(const BridgeType& B);
Json factorization_to_json(const FactorizationDescriptor& f);

GridSpec grid_from_json(const Json& j);
Json grid_to_json(const GridSpec& grid);

void write_sweep_csv(std::ostream& os, const GridSpec& grid, const std::vector<ChamberRecord>& records);
// Cells over (α, α_irr); needs a uniform profile and a single value of a.
void write_sweep_svg(std::ostream& os, const GridSpec& grid, const std::vector<ChamberRecord>& records);

}  // namespace mgn::io
