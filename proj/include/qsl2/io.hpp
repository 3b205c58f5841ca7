// JSON and plain-text renderings of the library's values.
#pragma once

#include <string>

#include <json.hpp>

#include "qsl2/ideals.hpp"
#include "qsl2/reptheory.hpp"
#include "qsl2/statesum.hpp"

namespace qsl2 {

using Json = nlohmann::ordered_json;

// Scalars travel as their text form: "q^2 - 1", "(q + 1)/(q^2)".
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const AlgebraElement& x);  // [[coef, [a, b, c]], ...]
AlgebraElement algebra_from_json(const Json& j);

Json to_json(const Color& c);  // {"V2": coef, ...}
Color color_from_json(const Json& j);

Json to_json(const TensorInvariant& J);
TensorInvariant invariant_from_json(const Json& j);

Json to_json(const FactoredIdeal& I);
FactoredIdeal ideal_from_json(const Json& j);

Json to_json(const Certificate& c);
Json to_json(const BrunnianReport& r);

// One line per term: coef * (a,b,c) ⊗ (a,b,c) ..., preceded by the ledger when
// it is nonzero.
std::string format_invariant(const TensorInvariant& J);
std::string format_monomial(const Monomial& m);

}  // namespace qsl2
