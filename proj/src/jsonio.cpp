#include "jsonio.hpp"

#include <cmath>

namespace fgf {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ParseError("expected a number or an [re, im] pair, got " + j.dump());
}

namespace {

Json matrix_values(const CMatrix& m) {
  Json values = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      values.push_back(complex_to_json(m(i, j)));
  return values;
}

CMatrix matrix_from_values(const Json& values, int rows, int cols,
                           const std::string& what) {
  if (!values.is_array() ||
      values.size() != static_cast<std::size_t>(rows) * cols)
    throw ParseError(what + ": expected " + std::to_string(rows * cols) +
                     " row-major entries");
  CMatrix m(rows, cols);
  std::size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = complex_from_json(values[idx++]);
  return m;
}

const Json& unwrap(const Json& j, const char* schema) {
  if (j.is_object()) {
    if (j.contains("schema") && j["schema"] != schema)
      throw ParseError(std::string("unexpected schema '") +
                       j["schema"].get<std::string>() + "', wanted '" +
                       schema + "'");
    if (!j.contains("values")) throw ParseError("missing 'values' field");
    return j["values"];
  }
  return j;
}

}  // namespace

Json function_to_json(const ScalarFunction& u) {
  Json values = Json::array();
  for (Eigen::Index s = 0; s < u.size(); ++s)
    values.push_back(complex_to_json(u(s)));
  return Json{{"schema", "fgf-function-v1"},
              {"order", u.size()},
              {"values", values}};
}

ScalarFunction function_from_json(const Json& j, int expected_order) {
  const Json& values = unwrap(j, "fgf-function-v1");
  if (!values.is_array())
    throw ParseError("function values must be an array");
  if (expected_order >= 0 &&
      values.size() != static_cast<std::size_t>(expected_order))
    throw ParseError("function has " + std::to_string(values.size()) +
                     " values, group order is " +
                     std::to_string(expected_order));
  ScalarFunction u(values.size());
  for (std::size_t s = 0; s < values.size(); ++s)
    u(static_cast<Eigen::Index>(s)) = complex_from_json(values[s]);
  return u;
}

Json bifunction_to_json(const BiFunction& w) {
  return Json{{"schema", "fgf-bifunction-v1"},
              {"order", w.rows()},
              {"values", matrix_values(w)}};
}

BiFunction bifunction_from_json(const Json& j, int expected_order) {
  const Json& values = unwrap(j, "fgf-bifunction-v1");
  int order = expected_order;
  if (j.is_object() && j.contains("order")) order = j["order"].get<int>();
  if (order < 0) {
    const double side = std::sqrt(static_cast<double>(values.size()));
    order = static_cast<int>(std::lround(side));
  }
  if (expected_order >= 0 && order != expected_order)
    throw ParseError("bifunction order " + std::to_string(order) +
                     " does not match group order " +
                     std::to_string(expected_order));
  return matrix_from_values(values, order, order, "bifunction");
}

Json operator_to_json(const UnitaryDual& dual, const BlockOperator& t) {
  Json blocks = Json::array();
  for (int p = 0; p < dual.size(); ++p)
    blocks.push_back(Json{{"label", dual.irreps[p].label},
                          {"dim", dual.dim(p)},
                          {"values", matrix_values(t.blocks[p])}});
  return Json{{"schema", "fgf-operator-v1"}, {"blocks", blocks}};
}

BlockOperator operator_from_json(const UnitaryDual& dual, const Json& j) {
  const Json* blocks = nullptr;
  if (j.is_object()) {
    if (j.contains("schema") && j["schema"] != "fgf-operator-v1")
      throw ParseError("unexpected operator schema");
    if (!j.contains("blocks")) throw ParseError("missing 'blocks' field");
    blocks = &j["blocks"];
  } else {
    blocks = &j;
  }
  if (!blocks->is_array() ||
      blocks->size() != static_cast<std::size_t>(dual.size()))
    throw ParseError("operator needs " + std::to_string(dual.size()) +
                     " blocks for this dual");
  BlockOperator t;
  for (int p = 0; p < dual.size(); ++p) {
    const Json& entry = (*blocks)[p];
    const Json& values = entry.is_object() ? entry.at("values") : entry;
    t.blocks.push_back(matrix_from_values(
        values, dual.dim(p), dual.dim(p),
        "operator block " + dual.irreps[p].label));
  }
  return t;
}

Json dual_to_json(const UnitaryDual& dual) {
  Json irreps = Json::array();
  for (const auto& ir : dual.irreps) {
    Json mats = Json::array();
    for (const auto& m : ir.matrices) mats.push_back(matrix_values(m));
    irreps.push_back(
        Json{{"label", ir.label}, {"dim", ir.dim}, {"matrices", mats}});
  }
  Json intertwiners = Json::array();
  for (const auto& m : dual.intertwiners)
    intertwiners.push_back(matrix_values(m));
  return Json{{"schema", "fgf-dual-v1"},
              {"order", dual.group.order},
              {"cayley", serialize_cayley(dual.group)},
              {"seed", dual.seed},
              {"total_dim", dual.total_dim},
              {"irreps", irreps},
              {"conj_map", dual.conj_map},
              {"intertwiners", intertwiners}};
}

Json solver_report_to_json(const SolverReport& r) {
  return Json{{"value", r.value},
              {"lower_bracket", r.lower_bracket},
              {"upper_bracket", r.upper_bracket},
              {"iterations", r.iterations},
              {"residual", r.residual},
              {"converged", r.converged}};
}

double round_sig(double v, int digits) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  const double mag =
      std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(v))));
  return std::round(v * mag) / mag;
}

}  // namespace fgf
