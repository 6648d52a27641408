#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsonio.hpp"

using namespace fgf;

TEST_SUITE("jsonio") {

TEST_CASE("complex values encode as two-element arrays") {
  const Json j = complex_to_json(Complex(1.5, -2.25));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0].get<double>() == 1.5);
  CHECK(j[1].get<double>() == -2.25);
  CHECK(complex_from_json(j) == Complex(1.5, -2.25));
  CHECK(complex_from_json(Json(3.0)) == Complex(3.0, 0.0));
}

TEST_CASE("function round trip is exact") {
  Rng rng(81);
  const ScalarFunction u = random_function(rng, 6);
  const Json j = function_to_json(u);
  CHECK(j.at("schema") == "fgf-function-v1");
  CHECK(j.at("order") == 6);
  const ScalarFunction v = function_from_json(j, 6);
  CHECK((u - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("function input accepts bare arrays and rejects bad sizes") {
  const Json bare = Json::array({1.0, 2.0, Json::array({0.0, 1.0})});
  const ScalarFunction u = function_from_json(bare, 3);
  CHECK(u(0) == Complex(1.0, 0.0));
  CHECK(u(2) == Complex(0.0, 1.0));
  CHECK_THROWS(function_from_json(bare, 4));
  CHECK_THROWS(function_from_json(Json::object(), 3));
}

TEST_CASE("bifunction round trip is exact") {
  Rng rng(82);
  const BiFunction w = rng.gaussian_matrix(4, 4);
  const Json j = bifunction_to_json(w);
  CHECK(j.at("schema") == "fgf-bifunction-v1");
  const BiFunction v = bifunction_from_json(j, 4);
  CHECK(max_abs(w - v) == 0.0);
  CHECK_THROWS(bifunction_from_json(j, 5));
}

TEST_CASE("operator round trip preserves blocks and labels") {
  const UnitaryDual dual = compute_dual(build_symmetric(3), 7);
  Rng rng(83);
  const BlockOperator t = random_operator(rng, dual);
  const Json j = operator_to_json(dual, t);
  CHECK(j.at("schema") == "fgf-operator-v1");
  REQUIRE(j.at("blocks").size() == 3);
  CHECK(j.at("blocks")[2].at("dim") == 2);
  CHECK(j.at("blocks")[0].at("label") == "pi0");
  const BlockOperator s = operator_from_json(dual, j);
  for (int p = 0; p < dual.size(); ++p)
    CHECK(max_abs(s.blocks[p] - t.blocks[p]) == 0.0);
}

TEST_CASE("operator input validates the block count") {
  const UnitaryDual dual = compute_dual(build_cyclic(4), 7);
  Json j = Json{{"schema", "fgf-operator-v1"}, {"blocks", Json::array()}};
  CHECK_THROWS(operator_from_json(dual, j));
}

TEST_CASE("dual snapshot is self-contained") {
  const FiniteGroup g = build_quaternion8();
  const UnitaryDual dual = compute_dual(g, 11);
  const Json j = dual_to_json(dual);
  CHECK(j.at("schema") == "fgf-dual-v1");
  CHECK(j.at("order") == 8);
  CHECK(j.at("seed") == 11);
  CHECK(j.at("total_dim") == 6);
  REQUIRE(j.at("irreps").size() == 5);
  CHECK(j.at("irreps")[4].at("dim") == 2);
  CHECK(j.at("irreps")[4].at("matrices").size() == 8);
  // the embedded table parses back to the same group
  const FiniteGroup g2 = parse_cayley(j.at("cayley").get<std::string>());
  CHECK(g2.table == g.table);
  CHECK(j.at("conj_map").size() == 5);
  CHECK(j.at("intertwiners").size() == 5);
}

TEST_CASE("solver reports serialize every field") {
  SolverReport r;
  r.value = 2.0;
  r.lower_bracket = 1.9;
  r.upper_bracket = 2.0;
  r.iterations = 17;
  r.residual = 1e-8;
  r.converged = true;
  const Json j = solver_report_to_json(r);
  CHECK(j.at("value") == 2.0);
  CHECK(j.at("lower_bracket") == 1.9);
  CHECK(j.at("iterations") == 17);
  CHECK(j.at("converged") == true);
}

TEST_CASE("significant digit rounding") {
  CHECK(round_sig(123456.789, 3) == doctest::Approx(123000.0));
  CHECK(round_sig(0.00123456, 3) == doctest::Approx(0.00123));
  CHECK(round_sig(-9.87654e-7, 2) == doctest::Approx(-9.9e-7));
  CHECK(round_sig(0.0, 5) == 0.0);
}

}  // TEST_SUITE
