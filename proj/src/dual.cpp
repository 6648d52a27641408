#include "dual.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fgf {

namespace {

constexpr int kMaxAttempts = 12;
constexpr double kCharMatchTol = 1e-6;

using RepMatrices = std::vector<CMatrix>;

// Cluster boundaries of an ascending eigenvalue list, gap relative to the
// overall magnitude.
std::vector<std::pair<int, int>> cluster_spans(const Eigen::VectorXd& ev) {
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double threshold = kEigenGap * scale;
  std::vector<std::pair<int, int>> spans;
  int start = 0;
  for (int i = 1; i < ev.size(); ++i) {
    if (ev(i) - ev(i - 1) > threshold) {
      spans.emplace_back(start, i - start);
      start = i;
    }
  }
  spans.emplace_back(start, static_cast<int>(ev.size()) - start);
  return spans;
}

// Splits a dense unitary rep into invariant pieces by eigenspaces of a
// randomized commutant element, recursing until the commutant is trivial.
void split_dense(const FiniteGroup& g, const RepMatrices& rho, Rng& rng,
                 std::vector<RepMatrices>& leaves, int depth) {
  const int d = static_cast<int>(rho[0].rows());
  if (d == 1) {
    leaves.push_back(rho);
    return;
  }
  if (depth > 32) throw NumericError("representation splitting recursed too deep");

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const CMatrix x = rng.hermitian_matrix(d);
    CMatrix y = CMatrix::Zero(d, d);
    for (int s = 0; s < g.order; ++s) y += rho[s] * x * rho[s].adjoint();
    y /= static_cast<double>(g.order);

    Eigen::SelfAdjointEigenSolver<CMatrix> es(y);
    if (es.info() != Eigen::Success)
      throw NumericError("eigendecomposition failed while splitting");
    const auto spans = cluster_spans(es.eigenvalues());

    if (spans.size() > 1) {
      for (const auto& [start, len] : spans) {
        const CMatrix q = es.eigenvectors().middleCols(start, len);
        RepMatrices sub(g.order);
        for (int s = 0; s < g.order; ++s) sub[s] = q.adjoint() * rho[s] * q;
        split_dense(g, sub, rng, leaves, depth + 1);
      }
      return;
    }

    const int cdim = commutant_dimension(rho, kTauRank);
    if (cdim == 1) {
      leaves.push_back(rho);
      return;
    }
    // Reducible but the draw failed to separate eigenvalues; resample.
  }
  throw NumericError("could not split a reducible representation after " +
                     std::to_string(kMaxAttempts) + " random draws");
}

// First stage operates on the left regular representation through index
// permutations instead of materialized |G| x |G| matrices.
std::vector<RepMatrices> split_regular(const FiniteGroup& g, Rng& rng) {
  const int n = g.order;
  std::vector<RepMatrices> leaves;
  if (n == 1) {
    leaves.push_back({CMatrix::Identity(1, 1)});
    return leaves;
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const CMatrix x = rng.hermitian_matrix(n);
    CMatrix y(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Complex acc = 0.0;
        for (int s = 0; s < n; ++s) {
          const int si = g.inv(s);
          acc += x(g.mul(si, a), g.mul(si, b));
        }
        y(a, b) = acc / static_cast<double>(n);
      }

    Eigen::SelfAdjointEigenSolver<CMatrix> es(y);
    if (es.info() != Eigen::Success)
      throw NumericError("eigendecomposition failed on the regular representation");
    const auto spans = cluster_spans(es.eigenvalues());
    if (spans.size() <= 1) continue;  // degenerate draw, resample

    for (const auto& [start, len] : spans) {
      const CMatrix q = es.eigenvectors().middleCols(start, len);
      CMatrix pq(n, len);
      RepMatrices sub(n);
      for (int s = 0; s < n; ++s) {
        const int si = g.inv(s);
        for (int a = 0; a < n; ++a) pq.row(a) = q.row(g.mul(si, a));
        sub[s] = q.adjoint() * pq;
      }
      split_dense(g, sub, rng, leaves, 1);
    }
    return leaves;
  }
  throw NumericError("could not split the regular representation after " +
                     std::to_string(kMaxAttempts) + " random draws");
}

void unitarize(const FiniteGroup& g, RepMatrices& rho) {
  const int d = static_cast<int>(rho[0].rows());
  rho[0] = CMatrix::Identity(d, d);
  for (int s = 1; s < g.order; ++s)
    if (g.inv(s) >= s) rho[s] = polar_unitary(rho[s]);
  for (int s = 1; s < g.order; ++s)
    if (g.inv(s) < s) rho[s] = rho[g.inv(s)].adjoint();
}

std::vector<Complex> character_of(const RepMatrices& rho) {
  std::vector<Complex> chi(rho.size());
  for (std::size_t s = 0; s < rho.size(); ++s) chi[s] = rho[s].trace();
  return chi;
}

// Quantized key making the (dimension, character) order deterministic.
std::vector<std::pair<long long, long long>> char_key(
    const std::vector<Complex>& chi) {
  std::vector<std::pair<long long, long long>> key(chi.size());
  for (std::size_t s = 0; s < chi.size(); ++s)
    key[s] = {llround(chi[s].real() * 1e7), llround(chi[s].imag() * 1e7)};
  return key;
}

double char_inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex acc = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) acc += a[s] * std::conj(b[s]);
  return (acc / static_cast<double>(a.size())).real();
}

CMatrix conjugation_intertwiner(const FiniteGroup& g, const Irrep& a,
                                const Irrep& b, Rng& rng) {
  const int d = a.dim;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const CMatrix r = rng.gaussian_matrix(d, d);
    CMatrix omega = CMatrix::Zero(d, d);
    for (int s = 0; s < g.order; ++s)
      omega += a.at(s).conjugate() * r * b.at(s).adjoint();
    omega /= static_cast<double>(g.order);
    if (max_abs(omega) < 1e-8) continue;  // averaged to nothing, redraw

    omega = polar_unitary(omega);

    // Canonical global phase: largest entry becomes real and positive.
    int bi = 0, bj = 0;
    double best = -1.0;
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        if (std::abs(omega(i, j)) > best) {
          best = std::abs(omega(i, j));
          bi = i;
          bj = j;
        }
    omega *= std::conj(omega(bi, bj)) / std::abs(omega(bi, bj));

    double residual = 0.0;
    for (int s = 0; s < g.order; ++s)
      residual = std::max(
          residual,
          max_abs(a.at(s).conjugate() - omega * b.at(s) * omega.adjoint()));
    if (residual <= kTauRep) return omega;
  }
  throw NumericError("failed to build a conjugation intertwiner for " +
                     a.label);
}

}  // namespace

int commutant_dimension(const std::vector<CMatrix>& rep, double tau_rank) {
  const int d = static_cast<int>(rep[0].rows());
  if (d == 1) return 1;
  const int n = static_cast<int>(rep.size());
  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix stacked((n - 1) * d * d, d * d);
  for (int s = 1; s < n; ++s)
    stacked.middleRows((s - 1) * d * d, d * d) =
        kron(id, rep[s]) - kron(rep[s].transpose(), id);
  Eigen::BDCSVD<CMatrix> svd(stacked);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = tau_rank * std::max(sv(0), 1e-300);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return d * d - rank;
}

UnitaryDual compute_dual(const FiniteGroup& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RepMatrices> leaves = split_regular(g, rng);

  for (auto& leaf : leaves) unitarize(g, leaf);

  // One representative per equivalence class, recognized by characters.
  std::vector<RepMatrices> reps;
  std::vector<std::vector<Complex>> chars;
  for (auto& leaf : leaves) {
    const auto chi = character_of(leaf);
    bool seen = false;
    for (const auto& known : chars)
      if (std::abs(char_inner(chi, known)) > 0.5) {
        seen = true;
        break;
      }
    if (!seen) {
      reps.push_back(std::move(leaf));
      chars.push_back(chi);
    }
  }

  int dim_sq = 0;
  for (const auto& rep : reps) dim_sq += static_cast<int>(rep[0].rows() *
                                                          rep[0].rows());
  if (dim_sq != g.order)
    throw NumericError("dual incomplete: squared dimensions sum to " +
                       std::to_string(dim_sq) + " instead of " +
                       std::to_string(g.order));

  std::vector<int> order_idx(reps.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::vector<std::vector<std::pair<long long, long long>>> keys;
  keys.reserve(chars.size());
  for (const auto& chi : chars) keys.push_back(char_key(chi));
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    const int da = static_cast<int>(reps[a][0].rows());
    const int db = static_cast<int>(reps[b][0].rows());
    if (da != db) return da < db;
    return keys[a] < keys[b];
  });

  UnitaryDual dual;
  dual.group = g;
  dual.seed = seed;
  for (std::size_t k = 0; k < order_idx.size(); ++k) {
    Irrep ir;
    ir.label = "pi" + std::to_string(k);
    ir.dim = static_cast<int>(reps[order_idx[k]][0].rows());
    ir.matrices = std::move(reps[order_idx[k]]);
    dual.total_dim += ir.dim;
    dual.irreps.push_back(std::move(ir));
  }

  // Structural invariants: homomorphism, unitarity, irreducibility.
  for (const auto& ir : dual.irreps) {
    const CMatrix id = CMatrix::Identity(ir.dim, ir.dim);
    for (int s = 0; s < g.order; ++s) {
      if (max_abs(ir.at(s) * ir.at(s).adjoint() - id) > kTauRep)
        throw NumericError(ir.label + " is not unitary at element " +
                           std::to_string(s));
      for (int t = 0; t < g.order; ++t)
        if (max_abs(ir.at(s) * ir.at(t) - ir.at(g.mul(s, t))) > kTauRep)
          throw NumericError(ir.label + " violates the homomorphism law at (" +
                             std::to_string(s) + ", " + std::to_string(t) + ")");
    }
    if (commutant_dimension(ir.matrices, kTauRank) != 1)
      throw NumericError(ir.label + " is not irreducible");
  }

  // Conjugation involution and its unitary intertwiners.
  const int count = dual.size();
  dual.conj_map.assign(count, -1);
  for (int p = 0; p < count; ++p) {
    for (int q = 0; q < count; ++q) {
      if (dual.dim(q) != dual.dim(p)) continue;
      double dev = 0.0;
      for (int s = 0; s < g.order; ++s)
        dev = std::max(dev, std::abs(std::conj(dual.irreps[p].character(s)) -
                                     dual.irreps[q].character(s)));
      if (dev < kCharMatchTol) {
        dual.conj_map[p] = q;
        break;
      }
    }
    if (dual.conj_map[p] < 0)
      throw NumericError("no conjugate partner found for " +
                         dual.irreps[p].label);
  }
  for (int p = 0; p < count; ++p)
    if (dual.conj_map[dual.conj_map[p]] != p)
      throw NumericError("conjugation map is not an involution");

  dual.intertwiners.resize(count);
  for (int p = 0; p < count; ++p) {
    Rng sub = rng.fork(1000 + static_cast<std::uint64_t>(p));
    dual.intertwiners[p] = conjugation_intertwiner(
        g, dual.irreps[p], dual.irreps[dual.conj_map[p]], sub);
  }

  return dual;
}

std::pair<int, CMatrix> conjugate_partner(const UnitaryDual& dual, int p) {
  return {dual.conj_map[p], dual.intertwiners[p]};
}

double verify_schur(const UnitaryDual& dual) {
  const int n = dual.group.order;
  CMatrix coeffs(n, n);
  std::vector<double> inv_dim;
  int col = 0;
  for (const auto& ir : dual.irreps)
    for (int j = 0; j < ir.dim; ++j)
      for (int i = 0; i < ir.dim; ++i) {
        for (int s = 0; s < n; ++s) coeffs(s, col) = ir.at(s)(i, j);
        inv_dim.push_back(1.0 / ir.dim);
        ++col;
      }
  CMatrix gram = coeffs.adjoint() * coeffs / static_cast<double>(n);
  for (int c = 0; c < n; ++c) gram(c, c) -= inv_dim[c];
  return max_abs(gram);
}

double regular_character_deviation(const UnitaryDual& dual) {
  const int n = dual.group.order;
  double dev = 0.0;
  for (int s = 0; s < n; ++s) {
    Complex acc = 0.0;
    for (const auto& ir : dual.irreps)
      acc += static_cast<double>(ir.dim) * ir.character(s);
    if (s == 0) acc -= static_cast<double>(n);
    dev = std::max(dev, std::abs(acc));
  }
  return dev;
}

UnitaryDual build_product_dual(const UnitaryDual& dual1,
                               const UnitaryDual& dual2) {
  UnitaryDual out;
  out.group = build_product(dual1.group, dual2.group);
  out.seed = dual1.seed;
  const int n2 = dual2.group.order;
  const int c2 = dual2.size();
  for (int p = 0; p < dual1.size(); ++p)
    for (int q = 0; q < c2; ++q) {
      Irrep ir;
      ir.label = "(" + dual1.irreps[p].label + "," + dual2.irreps[q].label + ")";
      ir.dim = dual1.dim(p) * dual2.dim(q);
      ir.matrices.resize(out.group.order);
      for (int s = 0; s < dual1.group.order; ++s)
        for (int t = 0; t < n2; ++t)
          ir.matrices[s * n2 + t] = kron(dual1.mat(p, s), dual2.mat(q, t));
      out.total_dim += ir.dim;
      out.irreps.push_back(std::move(ir));
      out.conj_map.push_back(dual1.conj_map[p] * c2 + dual2.conj_map[q]);
      out.intertwiners.push_back(
          kron(dual1.intertwiners[p], dual2.intertwiners[q]));
    }
  return out;
}

}  // namespace fgf
