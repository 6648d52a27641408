#pragma once

#include "group.hpp"
#include "linalg.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fgf {

// One irreducible unitary representation, stored as a matrix per element.
// Invariants enforced at construction: pi(0) = I, pi(s t) = pi(s) pi(t) and
// unitarity within tau_rep, trivial commutant (irreducibility).
struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<CMatrix> matrices;

  const CMatrix& at(int s) const { return matrices[s]; }
  Complex character(int s) const { return matrices[s].trace(); }
};

// Complete set of pairwise inequivalent irreducibles, ordered by dimension
// and then by lexicographic character, together with the conjugation
// involution.  intertwiners[p] is the unitary Omega with
// conj(pi_p(s)) = Omega pi_{conj_map[p]}(s) Omega^* for all s.
struct UnitaryDual {
  FiniteGroup group;
  std::uint64_t seed = 0;
  std::vector<Irrep> irreps;
  std::vector<int> conj_map;
  std::vector<CMatrix> intertwiners;
  int total_dim = 0;  // sum of irrep dimensions

  int size() const { return static_cast<int>(irreps.size()); }
  int dim(int p) const { return irreps[p].dim; }
  const CMatrix& mat(int p, int s) const { return irreps[p].matrices[s]; }
};

// Numerical tolerances of the representation layer.
inline constexpr double kTauRep = 1e-9;    // homomorphism / unitarity residual
inline constexpr double kTauRank = 1e-8;   // rank decisions (commutant nullity)
inline constexpr double kEigenGap = 1e-6;  // relative eigenvalue cluster gap

// Decomposes the left regular representation by averaging random Hermitian
// matrices over the group action.  Deterministic for fixed (g, seed).
UnitaryDual compute_dual(const FiniteGroup& g, std::uint64_t seed);

// The partner index sigma with conj(pi_p) ~ pi_sigma, and the unitary
// intertwiner realizing the equivalence.
std::pair<int, CMatrix> conjugate_partner(const UnitaryDual& dual, int p);

// Worst deviation of the orthogonality integrals
// (1/|G|) sum_s pi_ij(s) conj(pi'_kl(s)) from their closed-form values.
double verify_schur(const UnitaryDual& dual);

// Worst deviation of sum_p d_p chi_p(s) from |G| delta_{s,0}.
double regular_character_deviation(const UnitaryDual& dual);

// Dual of g1 x g2 assembled from tensor products of the factors' irreps;
// element (s, t) of the product has index s * |g2| + t, matching
// build_product.  Irrep (p, q) has index p * dual2.size() + q.
UnitaryDual build_product_dual(const UnitaryDual& dual1,
                               const UnitaryDual& dual2);

// Dimension of {X : X pi(s) = pi(s) X for all s} decided with tau_rank.
int commutant_dimension(const std::vector<CMatrix>& rep, double tau_rank);

}  // namespace fgf
