#ifndef BDM_GEVREY_HPP
#define BDM_GEVREY_HPP

#include <utility>
#include <vector>

#include "bdm/model.hpp"

namespace bdm {

/// Truncated series sum_u rho(u) (v)_{u-}/(v+u)_{u+} x_J^{v+u}, u over the
/// component lattice with |u|_inf <= N and nonzero coefficient.
struct PhiSeries {
  RatVec v;                                  // indexed by position in J
  std::vector<std::pair<IntVec, Rat>> terms;  // (u, coefficient); u = 0 has coeff 1
};

/// Requires A_J v = beta' (checked); throws PochhammerPole when a
/// denominator Pochhammer vanishes on a term with nonzero numerator.
PhiSeries phi_series(const MatrixA& A, const std::vector<size_t>& J, const PartialCharacter& rho,
                     const RatVec& v, int N);

struct ExponentCandidate {
  RatVec v;                   // J-positioned
  std::vector<size_t> sigma;  // support subset of J used for the square solve
};

/// Base exponents for series along {x_i = 0}: square solves A_sigma v_sigma
/// = beta' - sum k_j a_j over sigma in J \ {i}, k_j natural, deduplicated
/// modulo the component lattice, pole-free within the window. Automatic
/// mode covers rank A_J <= 2 (UnsupportedRank beyond).
std::vector<ExponentCandidate> exponent_candidates(const PrimaryComponent& c, const MatrixA& A,
                                                   const RatVec& beta_prime, size_t direction,
                                                   int N);

/// Monomial socle n = <d_j^{p_j} : j not in J> with each power in C;
/// returns (variable, minimal power) pairs. Throws CapExceeded.
std::vector<std::pair<size_t, int>> monomial_socle(const PrimaryComponent& c, const MatrixA& A,
                                                   int cap = 40,
                                                   const GroebnerOptions& opts = {});

struct AnsatzUnknown {
  Exponent gamma;  // n-vector supported off J (a standard monomial of the socle)
  size_t k;        // candidate index within its gamma
  RatVec v;
  std::vector<size_t> sigma;
};

struct GevreyBasis {
  std::vector<AnsatzUnknown> unknowns;
  // RREF rows of the exact constraint system, as (unknown, coefficient)
  // pairs; rows with a single entry force that unknown to zero.
  std::vector<std::vector<std::pair<size_t, Rat>>> relations;
  std::vector<size_t> forced_zero;
  std::vector<RatVec> solutions;  // lambda vectors, one per basis element
  std::vector<std::vector<std::pair<RatVec, Rat>>> series;  // materialized terms
  size_t dimension = 0;
  Rat slope_tag;  // 1 when the supports already sit on the F-umbrella
  int N = 0;
};

/// Ansatz sum lambda_{gamma,k} x^gamma phi_k solved against the generators
/// of B outside the socle, with equations restricted to exponents fully
/// determined at truncation N.
GevreyBasis gevrey_basis(const PrimaryComponent& c, const MatrixA& A, const RatVec& beta,
                         size_t direction, int N, const GroebnerOptions& opts = {});

struct VerifyReport {
  bool euler_exact = false;
  bool interior_zero = false;
  size_t interior_checked = 0;
  size_t boundary_terms = 0;
};

/// Checks that a basis element is annihilated exactly by every Euler
/// operator and, on the truncation-interior window, by every generator of
/// C.
VerifyReport verify_solution(const GevreyBasis& basis, size_t series_index,
                             const PrimaryComponent& c, const MatrixA& A, const RatVec& beta);

}  // namespace bdm

#endif
