#pragma once

#include "normcalc.hpp"

#include <nlohmann/json.hpp>

namespace fgf {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// {"schema": "fgf-function-v1", "order": n, "values": [[re, im], ...]}.
// Bare arrays of pairs or of real numbers are also accepted on input.
Json function_to_json(const ScalarFunction& u);
ScalarFunction function_from_json(const Json& j, int expected_order);

// {"schema": "fgf-bifunction-v1", "order": n, "values": row-major n x n}.
Json bifunction_to_json(const BiFunction& w);
BiFunction bifunction_from_json(const Json& j, int expected_order);

// {"schema": "fgf-operator-v1", "blocks": [{"dim": d, "values": row-major}]}.
Json operator_to_json(const UnitaryDual& dual, const BlockOperator& t);
BlockOperator operator_from_json(const UnitaryDual& dual, const Json& j);

// Full dual snapshot, including the Cayley table for self-containment.
Json dual_to_json(const UnitaryDual& dual);

Json solver_report_to_json(const SolverReport& r);

// Round to the given number of significant digits (norm reporting).
double round_sig(double v, int digits);

}  // namespace fgf
