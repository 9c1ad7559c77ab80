#pragma once

#include "qheis/askey_wilson.hpp"
#include "qheis/dcm.hpp"
#include "qheis/oracle.hpp"

#include "json.hpp"

namespace qheis {

using Json = nlohmann::json;

// {"num": [[exp, "coeff"], ...], "den": [...]}, zero coefficients omitted.
Json to_json(const RationalFunction& x);
// {"terms": [{"k", "l", "letter": "A"|"B"|null, "coeff"}]}
Json to_json(const HElement& x);
// As HElement with an "h" field per term.
Json to_json(const PElement& x);
Json to_json(const ReductionTrace& t);
Json to_json(const LieExpr& e);
Json to_json(const RatMatrix& m); // row-major array of rational strings
Json to_json(const AWRelationReport& r, const AWGeneratorsReport& g);

// Inverses; throw std::invalid_argument on schema violations.
RationalFunction rf_from_json(const Json& j);
HElement helement_from_json(const Json& j);
PElement pelement_from_json(const Json& j);
LieExpr lie_from_json(const Json& j);

} // namespace qheis
