#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convolution.hpp"

#include <cmath>
#include <sstream>

using namespace fgf;

namespace {

// Convolution straight from the averaging definition.
ScalarFunction convolve_by_definition(const FiniteGroup& g,
                                      const ScalarFunction& u,
                                      const ScalarFunction& v) {
  ScalarFunction out = ScalarFunction::Zero(g.order);
  for (int s = 0; s < g.order; ++s) {
    Complex acc = 0.0;
    for (int r = 0; r < g.order; ++r) acc += u(r) * v(g.mul(g.inv(r), s));
    out(s) = acc / static_cast<double>(g.order);
  }
  return out;
}

}  // namespace

TEST_SUITE("convolution") {

TEST_CASE("convolve matches the definition") {
  for (const char* spec : {"cyclic:6", "s:3", "dihedral:4"}) {
    CAPTURE(spec);
    const FiniteGroup g = group_from_spec(spec);
    Rng rng(51);
    for (int t = 0; t < 10; ++t) {
      const ScalarFunction u = random_function(rng, g.order);
      const ScalarFunction v = random_function(rng, g.order);
      const ScalarFunction a = convolve(g, u, v);
      const ScalarFunction b = convolve_by_definition(g, u, v);
      CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("deltas convolve to the product element") {
  const FiniteGroup g = build_quaternion8();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      ScalarFunction da = ScalarFunction::Zero(8), db = ScalarFunction::Zero(8);
      da(a) = 1.0;
      db(b) = 1.0;
      const ScalarFunction c = convolve(g, da, db);
      for (int s = 0; s < 8; ++s) {
        const double expect = (s == g.mul(a, b)) ? 1.0 / 8.0 : 0.0;
        CHECK(std::abs(c(s) - expect) < 1e-14);
      }
    }
}

TEST_CASE("transform turns convolution into reversed block products") {
  const UnitaryDual dual = compute_dual(build_symmetric(3), 7);
  Rng rng(52);
  for (int t = 0; t < 10; ++t) {
    const ScalarFunction u = random_function(rng, 6);
    const ScalarFunction v = random_function(rng, 6);
    const BlockOperator uh = fourier_transform(dual, u);
    const BlockOperator vh = fourier_transform(dual, v);
    const BlockOperator ch =
        fourier_transform(dual, convolve(dual.group, u, v));
    for (int p = 0; p < dual.size(); ++p)
      CHECK(max_abs(ch.blocks[p] - vh.blocks[p] * uh.blocks[p]) < 1e-12);
  }
}

TEST_CASE("convolution is associative but not commutative here") {
  const FiniteGroup g = build_symmetric(3);
  Rng rng(53);
  const ScalarFunction u = random_function(rng, 6);
  const ScalarFunction v = random_function(rng, 6);
  const ScalarFunction w = random_function(rng, 6);
  const ScalarFunction l = convolve(g, convolve(g, u, v), w);
  const ScalarFunction r = convolve(g, u, convolve(g, v, w));
  CHECK((l - r).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((convolve(g, u, v) - convolve(g, v, u)).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("the two averaging maps on elementary tensors") {
  for (const char* spec : {"cyclic:4", "s:3", "q8"}) {
    CAPTURE(spec);
    const FiniteGroup g = group_from_spec(spec);
    Rng rng(54);
    for (int t = 0; t < 8; ++t) {
      const ScalarFunction u = random_function(rng, g.order);
      const ScalarFunction v = random_function(rng, g.order);
      const BiFunction w = tensor_function(u, v);
      const ScalarFunction viaGamma = gamma_map(g, w);
      const ScalarFunction expectGamma = convolve(g, u, check_function(g, v));
      CHECK((viaGamma - expectGamma).cwiseAbs().maxCoeff() < 1e-12);
      const ScalarFunction viaCheck = gamma_check_map(g, w);
      const ScalarFunction expectCheck = convolve(g, u, v);
      CHECK((viaCheck - expectCheck).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("flatten agrees with the product group indexing") {
  const FiniteGroup g = build_cyclic(3);
  Rng rng(55);
  const BiFunction w = rng.gaussian_matrix(3, 3);
  const ScalarFunction f = flatten_bifunction(w);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) CHECK(f(s * 3 + t) == w(s, t));
}

TEST_CASE("adjoint identity for the first averaging map") {
  // <Gamma w, T> over G equals <w, Gamma^* T> over G x G
  const UnitaryDual dual = compute_dual(build_symmetric(3), 7);
  const UnitaryDual pd = build_product_dual(dual, dual);
  const FiniteGroup& g = dual.group;
  Rng rng(56);
  for (int t = 0; t < 6; ++t) {
    const BiFunction w = rng.gaussian_matrix(6, 6);
    const BlockOperator op = random_operator(rng, dual);
    const Complex lhs = dual_pairing(dual, gamma_map(g, w), op);

    const BiBlockOperator adj = gamma_adjoint(dual, op);
    const BlockOperator flat{[&] {
      std::vector<CMatrix> blocks;
      for (int p = 0; p < dual.size(); ++p)
        for (int q = 0; q < dual.size(); ++q) blocks.push_back(adj.blocks[p][q]);
      return blocks;
    }()};
    const Complex rhs = dual_pairing(pd, flatten_bifunction(w), flat);
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("adjoint identity for the inverted averaging map") {
  const UnitaryDual dual = compute_dual(build_dihedral(4), 7);
  const UnitaryDual pd = build_product_dual(dual, dual);
  const FiniteGroup& g = dual.group;
  Rng rng(57);
  for (int t = 0; t < 6; ++t) {
    const BiFunction w = rng.gaussian_matrix(8, 8);
    const BlockOperator op = random_operator(rng, dual);
    const Complex lhs = dual_pairing(dual, gamma_check_map(g, w), op);
    const BiBlockOperator adj = gamma_check_adjoint(dual, op);
    const BlockOperator flat{[&] {
      std::vector<CMatrix> blocks;
      for (int p = 0; p < dual.size(); ++p)
        for (int q = 0; q < dual.size(); ++q) blocks.push_back(adj.blocks[p][q]);
      return blocks;
    }()};
    const Complex rhs = dual_pairing(pd, flatten_bifunction(w), flat);
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("first adjoint is supported on conjugate irrep pairs") {
  const UnitaryDual dual = compute_dual(build_quaternion8(), 7);
  Rng rng(58);
  const BlockOperator op = random_operator(rng, dual);
  const BiBlockOperator adj = gamma_adjoint(dual, op);
  for (int p = 0; p < dual.size(); ++p)
    for (int q = 0; q < dual.size(); ++q) {
      if (p == dual.conj_map[q]) continue;
      CHECK(max_abs(adj.blocks[p][q]) < 1e-12);
    }
}

TEST_CASE("second adjoint is block diagonal with scaled swap structure") {
  const UnitaryDual dual = compute_dual(build_symmetric(3), 7);
  Rng rng(59);
  const BlockOperator op = random_operator(rng, dual);
  const BiBlockOperator adj = gamma_check_adjoint(dual, op);
  for (int p = 0; p < dual.size(); ++p)
    for (int q = 0; q < dual.size(); ++q) {
      const double n = spectral_norm(adj.blocks[p][q]);
      if (p == q)
        CHECK(n == doctest::Approx(spectral_norm(op.blocks[p]) / dual.dim(p))
                       .epsilon(1e-10));
      else
        CHECK(n < 1e-12);
    }
}

TEST_CASE("averaging a conjugated matrix yields the normalized trace") {
  const UnitaryDual dual = compute_dual(build_symmetric(4), 7);
  Rng rng(60);
  for (const auto& ir : dual.irreps) {
    const CMatrix a = rng.gaussian_matrix(ir.dim, ir.dim);
    const CMatrix e = tracial_expectation(ir, a);
    const CMatrix expect = (a.trace() / static_cast<double>(ir.dim)) *
                           CMatrix::Identity(ir.dim, ir.dim);
    CHECK(max_abs(e - expect) < 1e-10);
    // and it is invariant under further averaging
    CHECK(max_abs(tracial_expectation(ir, e) - e) < 1e-10);
  }
}

TEST_CASE("tensor averaging projects exactly on conjugate pairs") {
  const UnitaryDual dual = compute_dual(build_quaternion8(), 7);
  const FiniteGroup& g = dual.group;
  for (int a = 0; a < dual.size(); ++a)
    for (int b = 0; b < dual.size(); ++b) {
      const CMatrix p = projection_P(g, dual.irreps[a], dual.irreps[b]);
      CHECK(max_abs(p * p - p) < 1e-10);
      CHECK(max_abs(p - p.adjoint()) < 1e-10);
      if (a == dual.conj_map[b])
        CHECK(std::abs(p.trace() - Complex(1.0, 0.0)) < 1e-10);
      else
        CHECK(max_abs(p) < 1e-12);
    }
}

TEST_CASE("flip operator is the tensor swap and is unitary") {
  const UnitaryDual dual = compute_dual(build_dihedral(4), 7);
  for (const auto& ir : dual.irreps) {
    const CMatrix u = flip_unitary(dual.group, ir);
    const int d = ir.dim;
    CHECK(max_abs(u * u.adjoint() - CMatrix::Identity(d * d, d * d)) < 1e-12);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
          for (int l = 0; l < d; ++l) {
            const double expect = (i == l && k == j) ? 1.0 : 0.0;
            CHECK(std::abs(u(i * d + k, j * d + l) - expect) < 1e-12);
          }
  }
}

TEST_CASE("permutation distance is zero exactly on permutation patterns") {
  CMatrix perm = CMatrix::Zero(3, 3);
  perm(0, 1) = Complex(0.0, 1.0);  // unit modulus entries allowed
  perm(1, 2) = 1.0;
  perm(2, 0) = -1.0;
  CHECK(nearest_permutation_distance(perm) < 1e-12);
  CMatrix off = perm;
  off(0, 1) = 0.5;
  CHECK(nearest_permutation_distance(off) > 0.4);
}

TEST_CASE("amplified adjoint blocks stack level-major") {
  const UnitaryDual dual = compute_dual(build_symmetric(3), 7);
  Rng rng(61);
  const BlockOperator a = random_operator(rng, dual);
  const BlockOperator b = random_operator(rng, dual);
  // diagonal operator matrix diag(a, b): blocks are built per level pair
  BlockOperatorMatrix ts(2);
  ts[0] = {a, zero_operator(dual)};
  ts[1] = {zero_operator(dual), b};
  const BiBlockOperator big = gamma_check_adjoint(dual, ts);
  const BiBlockOperator ba = gamma_check_adjoint(dual, a);
  const BiBlockOperator bb = gamma_check_adjoint(dual, b);
  REQUIRE(big.level == 2);
  for (int p = 0; p < dual.size(); ++p)
    for (int q = 0; q < dual.size(); ++q) {
      const int cell = dual.dim(p) * dual.dim(q);
      CHECK(max_abs(big.blocks[p][q].block(0, 0, cell, cell) -
                    ba.blocks[p][q]) < 1e-12);
      CHECK(max_abs(big.blocks[p][q].block(cell, cell, cell, cell) -
                    bb.blocks[p][q]) < 1e-12);
      CHECK(max_abs(big.blocks[p][q].block(0, cell, cell, cell)) < 1e-12);
    }
}

TEST_CASE("materialized block norm equals the assembled spectral norm") {
  const UnitaryDual dual = compute_dual(build_quaternion8(), 7);
  Rng rng(62);
  const BlockOperator op = random_operator(rng, dual);
  const BiBlockOperator adj = gamma_adjoint(dual, op);
  double expect = 0.0;
  for (int p = 0; p < dual.size(); ++p)
    for (int q = 0; q < dual.size(); ++q)
      expect = std::max(expect, spectral_norm(adj.blocks[p][q]));
  CHECK(bi_spectral_norm(adj) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("norm table emits one labelled row per irrep pair") {
  const UnitaryDual dual = compute_dual(build_symmetric(3), 7);
  Rng rng(63);
  const BiBlockOperator adj =
      gamma_check_adjoint(dual, random_operator(rng, dual));
  const std::string csv = norm_table_csv(dual, adj);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "pi_prime,pi,n,norm");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == dual.size() * dual.size());
  CHECK(csv.find("pi0,pi0,1,") != std::string::npos);
}

}  // TEST_SUITE
