#include "convolution.hpp"

#include <iomanip>
#include <sstream>

namespace fgf {

BiFunction tensor_function(const ScalarFunction& u, const ScalarFunction& v) {
  return u * v.transpose();
}

ScalarFunction flatten_bifunction(const BiFunction& w) {
  const int n = static_cast<int>(w.rows());
  ScalarFunction flat(n * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) flat(s * n + t) = w(s, t);
  return flat;
}

ScalarFunction gamma_map(const FiniteGroup& g, const BiFunction& w) {
  ScalarFunction u = ScalarFunction::Zero(g.order);
  for (int s = 0; s < g.order; ++s) {
    for (int r = 0; r < g.order; ++r) u(s) += w(g.mul(s, r), r);
    u(s) /= static_cast<double>(g.order);
  }
  return u;
}

ScalarFunction gamma_check_map(const FiniteGroup& g, const BiFunction& w) {
  ScalarFunction u = ScalarFunction::Zero(g.order);
  for (int s = 0; s < g.order; ++s) {
    for (int r = 0; r < g.order; ++r) u(s) += w(g.mul(s, r), g.inv(r));
    u(s) /= static_cast<double>(g.order);
  }
  return u;
}

ScalarFunction convolve(const FiniteGroup& g, const ScalarFunction& u,
                        const ScalarFunction& v) {
  ScalarFunction out = ScalarFunction::Zero(g.order);
  for (int s = 0; s < g.order; ++s) {
    for (int r = 0; r < g.order; ++r) out(s) += u(r) * v(g.mul(g.inv(r), s));
    out(s) /= static_cast<double>(g.order);
  }
  return out;
}

namespace {

BlockOperatorMatrix as_matrix(const BlockOperator& t) { return {{t}}; }

// Shared assembly for both adjoints.  entry(p, q, i, j, s) supplies the
// second tensor factor of the s-term of block (i, j) at irrep pair (p, q).
template <typename EntryFn>
BiBlockOperator assemble_adjoint(const UnitaryDual& dual, int level,
                                 EntryFn&& entry) {
  const int n = dual.group.order;
  BiBlockOperator out;
  out.level = level;
  out.blocks.assign(dual.size(), std::vector<CMatrix>(dual.size()));
  for (int p = 0; p < dual.size(); ++p)
    for (int q = 0; q < dual.size(); ++q) {
      const int cell = dual.dim(p) * dual.dim(q);
      CMatrix big = CMatrix::Zero(level * cell, level * cell);
      for (int i = 0; i < level; ++i)
        for (int j = 0; j < level; ++j) {
          CMatrix acc = CMatrix::Zero(cell, cell);
          for (int s = 0; s < n; ++s)
            acc += kron(dual.mat(p, s), entry(p, q, i, j, s));
          big.block(i * cell, j * cell, cell, cell) =
              acc / static_cast<double>(n);
        }
      out.blocks[p][q] = std::move(big);
    }
  return out;
}

}  // namespace

BiBlockOperator gamma_adjoint(const UnitaryDual& dual,
                              const BlockOperatorMatrix& ts) {
  const int level = static_cast<int>(ts.size());
  std::vector<std::vector<BlockOperator>> checked(level);
  for (int i = 0; i < level; ++i)
    for (int j = 0; j < level; ++j)
      checked[i].push_back(check_operator(dual, ts[i][j]));
  return assemble_adjoint(
      dual, level, [&](int, int q, int i, int j, int s) -> CMatrix {
        return checked[i][j].blocks[q] * dual.mat(q, s);
      });
}

BiBlockOperator gamma_adjoint(const UnitaryDual& dual, const BlockOperator& t) {
  return gamma_adjoint(dual, as_matrix(t));
}

BiBlockOperator gamma_check_adjoint(const UnitaryDual& dual,
                                    const BlockOperatorMatrix& ts) {
  const int level = static_cast<int>(ts.size());
  return assemble_adjoint(
      dual, level, [&](int, int q, int i, int j, int s) -> CMatrix {
        return dual.mat(q, s).adjoint() * ts[i][j].blocks[q];
      });
}

BiBlockOperator gamma_check_adjoint(const UnitaryDual& dual,
                                    const BlockOperator& t) {
  return gamma_check_adjoint(dual, as_matrix(t));
}

CMatrix tracial_expectation(const Irrep& pi, const CMatrix& a) {
  const int n = static_cast<int>(pi.matrices.size());
  CMatrix out = CMatrix::Zero(pi.dim, pi.dim);
  for (int s = 0; s < n; ++s) out += pi.at(s).adjoint() * a * pi.at(s);
  return out / static_cast<double>(n);
}

CMatrix projection_P(const FiniteGroup& g, const Irrep& pi_prime,
                     const Irrep& pi) {
  CMatrix out = CMatrix::Zero(pi_prime.dim * pi.dim, pi_prime.dim * pi.dim);
  for (int s = 0; s < g.order; ++s) out += kron(pi_prime.at(s), pi.at(s));
  return out / static_cast<double>(g.order);
}

CMatrix flip_unitary(const FiniteGroup& g, const Irrep& pi) {
  CMatrix out = CMatrix::Zero(pi.dim * pi.dim, pi.dim * pi.dim);
  for (int s = 0; s < g.order; ++s) out += kron(pi.at(s), pi.at(s).adjoint());
  return out * (static_cast<double>(pi.dim) / g.order);
}

double nearest_permutation_distance(const CMatrix& m) {
  CMatrix pattern = CMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index jmax = 0;
    const double mod = m.row(i).cwiseAbs().maxCoeff(&jmax);
    // Unit-modulus entry with the matrix's own phase; the distance then
    // measures modulus defect plus all off-pattern mass.
    pattern(i, jmax) = mod > 0.0 ? m(i, jmax) / mod : Complex(1.0, 0.0);
  }
  return max_abs(m - pattern);
}

double bi_spectral_norm(const BiBlockOperator& b) {
  double best = 0.0;
  for (const auto& row : b.blocks)
    for (const auto& block : row) best = std::max(best, spectral_norm(block));
  return best;
}

std::string norm_table_csv(const UnitaryDual& dual, const BiBlockOperator& b) {
  std::ostringstream out;
  out << "pi_prime,pi,n,norm\n";
  out << std::setprecision(12);
  for (int p = 0; p < dual.size(); ++p)
    for (int q = 0; q < dual.size(); ++q)
      out << dual.irreps[p].label << ',' << dual.irreps[q].label << ','
          << b.level << ',' << spectral_norm(b.blocks[p][q]) << "\n";
  return out.str();
}

}  // namespace fgf
