#include "fourier.hpp"

#include <cmath>

namespace fgf {

BlockOperator zero_operator(const UnitaryDual& dual) {
  BlockOperator t;
  for (const auto& ir : dual.irreps)
    t.blocks.push_back(CMatrix::Zero(ir.dim, ir.dim));
  return t;
}

BlockOperator identity_operator(const UnitaryDual& dual) {
  BlockOperator t;
  for (const auto& ir : dual.irreps)
    t.blocks.push_back(CMatrix::Identity(ir.dim, ir.dim));
  return t;
}

BlockOperator lambda_operator(const UnitaryDual& dual, int s) {
  BlockOperator t;
  for (const auto& ir : dual.irreps) t.blocks.push_back(ir.at(s));
  return t;
}

BlockOperator fourier_transform(const UnitaryDual& dual,
                                const ScalarFunction& u) {
  const int n = dual.group.order;
  BlockOperator t = zero_operator(dual);
  for (int p = 0; p < dual.size(); ++p) {
    for (int s = 0; s < n; ++s) t.blocks[p] += u(s) * dual.mat(p, dual.group.inv(s));
    t.blocks[p] /= static_cast<double>(n);
  }
  return t;
}

ScalarFunction inverse_transform(const UnitaryDual& dual,
                                 const BlockOperator& t) {
  const int n = dual.group.order;
  ScalarFunction u = ScalarFunction::Zero(n);
  for (int s = 0; s < n; ++s)
    for (int p = 0; p < dual.size(); ++p)
      u(s) += static_cast<double>(dual.dim(p)) *
              (t.blocks[p] * dual.mat(p, s)).trace();
  return u;
}

Complex dual_pairing(const UnitaryDual& dual, const ScalarFunction& u,
                     const BlockOperator& t) {
  const BlockOperator uhat = fourier_transform(dual, u);
  Complex acc = 0.0;
  for (int p = 0; p < dual.size(); ++p)
    acc += static_cast<double>(dual.dim(p)) *
           (uhat.blocks[p] * t.blocks[p]).trace();
  return acc;
}

ScalarFunction check_function(const FiniteGroup& g, const ScalarFunction& u) {
  ScalarFunction v(g.order);
  for (int s = 0; s < g.order; ++s) v(s) = u(g.inv(s));
  return v;
}

BlockOperator check_operator(const UnitaryDual& dual, const BlockOperator& t) {
  BlockOperator out = zero_operator(dual);
  for (int p = 0; p < dual.size(); ++p) {
    const int sigma = dual.conj_map[p];
    const CMatrix& omega = dual.intertwiners[p];
    out.blocks[p] = (omega * t.blocks[sigma] * omega.adjoint()).transpose();
  }
  return out;
}

double norm_A(const UnitaryDual& dual, const ScalarFunction& u) {
  const BlockOperator uhat = fourier_transform(dual, u);
  double acc = 0.0;
  for (int p = 0; p < dual.size(); ++p)
    acc += dual.dim(p) * trace_norm(uhat.blocks[p]);
  return acc;
}

double norm_ADelta(const UnitaryDual& dual, const ScalarFunction& u) {
  const BlockOperator uhat = fourier_transform(dual, u);
  double acc = 0.0;
  for (int p = 0; p < dual.size(); ++p)
    acc += std::pow(static_cast<double>(dual.dim(p)), 1.5) *
           hs_norm(uhat.blocks[p]);
  return acc;
}

double norm_Agamma(const UnitaryDual& dual, const ScalarFunction& u) {
  const BlockOperator uhat = fourier_transform(dual, u);
  double acc = 0.0;
  for (int p = 0; p < dual.size(); ++p)
    acc += static_cast<double>(dual.dim(p)) * dual.dim(p) *
           trace_norm(uhat.blocks[p]);
  return acc;
}

double norm_VN(const UnitaryDual&, const BlockOperator& t) {
  double best = 0.0;
  for (const auto& block : t.blocks)
    best = std::max(best, spectral_norm(block));
  return best;
}

double norm_ADelta_dual(const UnitaryDual& dual, const BlockOperator& t) {
  double best = 0.0;
  for (int p = 0; p < dual.size(); ++p)
    best = std::max(best, hs_norm(t.blocks[p]) /
                              std::sqrt(static_cast<double>(dual.dim(p))));
  return best;
}

CMatrix assemble_block_diagonal(const UnitaryDual& dual,
                                const BlockOperator& t) {
  CMatrix out = CMatrix::Zero(dual.total_dim, dual.total_dim);
  int offset = 0;
  for (int p = 0; p < dual.size(); ++p) {
    out.block(offset, offset, dual.dim(p), dual.dim(p)) = t.blocks[p];
    offset += dual.dim(p);
  }
  return out;
}

ScalarFunction random_function(Rng& rng, int order) {
  ScalarFunction u(order);
  for (int s = 0; s < order; ++s) u(s) = rng.complex_gaussian();
  return u;
}

BlockOperator random_operator(Rng& rng, const UnitaryDual& dual) {
  BlockOperator t;
  for (const auto& ir : dual.irreps)
    t.blocks.push_back(rng.gaussian_matrix(ir.dim, ir.dim));
  return t;
}

}  // namespace fgf
