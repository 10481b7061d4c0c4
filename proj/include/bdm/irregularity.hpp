#ifndef BDM_IRREGULARITY_HPP
#define BDM_IRREGULARITY_HPP

#include <cstdint>
#include <vector>

#include "bdm/model.hpp"

namespace bdm {

/// Volume of conv({0} ∪ integer points), normalized so the unit simplex of
/// Z^m has volume 1 (m = dimension spanned by the points; m! times the
/// Euclidean volume).
Int lattice_normalized_volume(const std::vector<IntVec>& pts, size_t m);

/// vol_{ZA_J}(A_tau): volume of conv{0, a_j : j in tau} normalized so the
/// unit simplex of ZA_J ∩ span(A_tau) has volume one. tau is a subset of J
/// (global column indices).
Int normalized_volume(const MatrixA& A, const std::vector<size_t>& J,
                      const std::vector<size_t>& tau);

struct Multiplicity {
  Int mu;
  std::string method;          // "specialization"
  std::vector<RatVec> points;  // torus points used (J-coordinates)
};

/// mu = colength of C specialized at a random point of the I_rho torus
/// orbit; two independent points must agree; checked against mu_hint.
/// Requires a saturated lattice.
Multiplicity multiplicity(const PrimaryComponent& c, const MatrixA& A, uint64_t seed = 1,
                          const GroebnerOptions& opts = {});

/// Sum of mu * vol_{ZA_J}(A_J) over the relevant components; requires
/// GENERIC beta and all relevant components toral of Krull dimension d.
Int holonomic_rank_generic(const Problem& p, uint64_t seed = 1, const GroebnerOptions& opts = {});

struct IrrEntry {
  size_t component;
  Int dim;
};

struct IrrResult {
  std::vector<IrrEntry> per_component;
  Int total;
};

/// Generic-stalk dimension of the irregularity complex of order s along
/// {x_i = 0}: per relevant component, mu * sum of vol_{ZA_J}(A_tau) over
/// faces tau new at level s with i not in tau. Requires GENERIC beta, s > 1.
IrrResult dim_irr_stalk(const Problem& p, size_t i, const Rat& s, uint64_t seed = 1,
                        const GroebnerOptions& opts = {});

}  // namespace bdm

#endif
