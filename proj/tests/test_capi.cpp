#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fgfourier.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct Group {
  fgf_group* ptr = nullptr;
  explicit Group(const char* spec) {
    REQUIRE(fgf_group_from_spec(spec, &ptr) == FGF_OK);
  }
  ~Group() { fgf_group_free(ptr); }
};

struct Dual {
  fgf_dual* ptr = nullptr;
  Dual(const fgf_group* g, uint64_t seed) {
    REQUIRE(fgf_dual_compute(g, seed, &ptr) == FGF_OK);
  }
  ~Dual() { fgf_dual_free(ptr); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version string and error slot") {
  const char* v = fgf_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
  fgf_group* g = nullptr;
  CHECK(fgf_group_from_spec("not_a_spec", &g) == FGF_PARSE_ERROR);
  CHECK(g == nullptr);
  CHECK(std::strlen(fgf_last_error()) > 0);
}

TEST_CASE("status codes map the failure modes") {
  fgf_group* g = nullptr;
  CHECK(fgf_group_from_spec(nullptr, &g) == FGF_INVALID_ARGUMENT);
  CHECK(fgf_group_from_spec("cyclic:banana", &g) == FGF_PARSE_ERROR);
  CHECK(fgf_group_from_cayley("2\n0 1 1 1", &g) == FGF_NOT_A_GROUP);
  CHECK(fgf_group_from_cayley("2\n0 z 1 0", &g) == FGF_PARSE_ERROR);
}

TEST_CASE("group handles expose order and table") {
  Group g("dihedral:4");
  CHECK(fgf_group_order(g.ptr) == 8);
  char* text = nullptr;
  REQUIRE(fgf_group_cayley(g.ptr, &text) == FGF_OK);
  REQUIRE(text != nullptr);
  CHECK(std::string(text).substr(0, 2) == "8\n");
  // the emitted table round-trips through the parser entry point
  fgf_group* g2 = nullptr;
  REQUIRE(fgf_group_from_cayley(text, &g2) == FGF_OK);
  CHECK(fgf_group_order(g2) == 8);
  fgf_group_free(g2);
  fgf_string_free(text);
}

TEST_CASE("dual handles expose the decomposition shape") {
  Group g("q8");
  Dual d(g.ptr, 7);
  REQUIRE(fgf_dual_irrep_count(d.ptr) == 5);
  CHECK(fgf_dual_total_dim(d.ptr) == 6);
  std::vector<int> dims(5);
  REQUIRE(fgf_dual_dims(d.ptr, dims.data()) == FGF_OK);
  int sum_sq = 0;
  for (int x : dims) sum_sq += x * x;
  CHECK(sum_sq == 8);
  CHECK(dims[4] == 2);

  char* json = nullptr;
  REQUIRE(fgf_dual_to_json(d.ptr, &json) == FGF_OK);
  CHECK(std::string(json).find("fgf-dual-v1") != std::string::npos);
  fgf_string_free(json);
}

TEST_CASE("norms of a point mass are exactly one") {
  Group g("s:3");
  Dual d(g.ptr, 7);
  std::vector<double> delta(2 * 6, 0.0);
  delta[2 * 4] = 1.0;  // the function 1_{s=4}
  double a = 0, adelta = 0, agamma = 0;
  REQUIRE(fgf_function_norms(d.ptr, delta.data(), &a, &adelta, &agamma) ==
          FGF_OK);
  CHECK(a == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(adelta == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(agamma == doctest::Approx(10.0 / 6.0).epsilon(1e-11));
}

TEST_CASE("operator norms of the identity block operator") {
  Group g("cyclic:4");
  Dual d(g.ptr, 7);
  std::vector<double> id = {1, 0, 1, 0, 1, 0, 1, 0};
  double vn = 0, add = 0;
  REQUIRE(fgf_operator_norms(d.ptr, id.data(), &vn, &add) == FGF_OK);
  CHECK(vn == doctest::Approx(1.0));
  CHECK(add == doctest::Approx(1.0));
}

TEST_CASE("convolution through the flat interface") {
  // on the cyclic group, deltas at a and b convolve to (1/n) delta at a+b
  Group g("cyclic:5");
  std::vector<double> u(10, 0.0), v(10, 0.0), out(10, 0.0);
  u[2 * 2] = 1.0;
  v[2 * 4] = 1.0;
  REQUIRE(fgf_apply_convolve(g.ptr, u.data(), v.data(), out.data()) == FGF_OK);
  for (int s = 0; s < 5; ++s) {
    const double expect = (s == (2 + 4) % 5) ? 0.2 : 0.0;
    CHECK(out[2 * s] == doctest::Approx(expect));
    CHECK(out[2 * s + 1] == doctest::Approx(0.0));
  }
}

TEST_CASE("averaging maps through the flat interface") {
  // w(s, t) = u(s) v(t) with deltas: gamma gives u * v-check, the twisted
  // variant gives u * v; on klein4 every element is self-inverse so both
  // agree and put mass 1/4 at a+b
  Group g("klein4");
  std::vector<double> w(2 * 16, 0.0);
  const int a = 1, b = 2;
  w[2 * (a * 4 + b)] = 1.0;  // delta at (a, b)
  std::vector<double> out1(8, 0.0), out2(8, 0.0);
  REQUIRE(fgf_apply_gamma(g.ptr, w.data(), out1.data()) == FGF_OK);
  REQUIRE(fgf_apply_gamma_check(g.ptr, w.data(), out2.data()) == FGF_OK);
  for (int s = 0; s < 4; ++s) {
    const double expect = (s == (a ^ b)) ? 0.25 : 0.0;
    CHECK(out1[2 * s] == doctest::Approx(expect));
    CHECK(out2[2 * s] == doctest::Approx(expect));
  }
}

TEST_CASE("adjoint norm tables come back as csv") {
  Group g("s:3");
  Dual d(g.ptr, 7);
  // identity operator: blocks I_1, I_1, I_2 flattened with interleaving
  std::vector<double> t = {1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0};
  char* csv = nullptr;
  REQUIRE(fgf_adjoint_norm_table(d.ptr, t.data(), 1, 1, &csv) == FGF_OK);
  const std::string s(csv);
  CHECK(s.find("pi_prime,pi,n,norm") == 0);
  CHECK(s.find("pi2,pi2,1,") != std::string::npos);
  fgf_string_free(csv);
  CHECK(fgf_adjoint_norm_table(d.ptr, t.data(), 0, 1, &csv) ==
        FGF_INVALID_ARGUMENT);
  CHECK(fgf_adjoint_norm_table(d.ptr, t.data(), 1, 7, &csv) ==
        FGF_INVALID_ARGUMENT);
}

TEST_CASE("verification runs end to end through the C surface") {
  int pass = 0, nonconv = 0;
  char* json = nullptr;
  REQUIRE(fgf_verify_run("lemma1.1;sec1_identities", "s:3;cyclic:4", 7, -1.0,
                         10, 3, &pass, &nonconv, &json) == FGF_OK);
  CHECK(pass == 1);
  CHECK(nonconv == 0);
  REQUIRE(json != nullptr);
  const std::string s(json);
  CHECK(s.find("\"all_pass\"") != std::string::npos);
  CHECK(s.find("lemma1.1") != std::string::npos);
  fgf_string_free(json);
}

TEST_CASE("unknown checks are rejected before any work runs") {
  int pass = 0;
  char* json = nullptr;
  CHECK(fgf_verify_run("lemma1.1;nope", nullptr, 7, -1.0, 1, 3, &pass, nullptr,
                       &json) == FGF_INVALID_ARGUMENT);
  CHECK(json == nullptr);
  CHECK(std::string(fgf_last_error()).find("nope") != std::string::npos);
}

TEST_CASE("null handles are rejected, frees tolerate null") {
  CHECK(fgf_group_order(nullptr) == 0);
  CHECK(fgf_dual_irrep_count(nullptr) == 0);
  char* out = nullptr;
  CHECK(fgf_dual_to_json(nullptr, &out) == FGF_INVALID_ARGUMENT);
  fgf_group_free(nullptr);
  fgf_dual_free(nullptr);
  fgf_string_free(nullptr);
}

}  // TEST_SUITE
