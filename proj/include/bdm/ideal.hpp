#ifndef BDM_IDEAL_HPP
#define BDM_IDEAL_HPP

#include <vector>

#include "bdm/model.hpp"

namespace bdm {

Poly binomial_to_poly(const Binomial& b, const TermOrder& ord);

/// Generators of the lattice ideal I_rho in n variables: binomials
/// d^{u+} - rho(u) d^{u-} over a lattice basis, saturated at the product of
/// the support variables (computed by eliminating an auxiliary variable).
std::vector<Poly> lattice_ideal_gens(const PartialCharacter& rho, size_t n,
                                     const TermOrder& ord,
                                     const GroebnerOptions& opts = {});

/// Generators of the primary component ideal C = I_rho + B.
std::vector<Poly> component_ideal_gens(const PrimaryComponent& c, size_t n,
                                       const TermOrder& ord,
                                       const GroebnerOptions& opts = {});

/// Variable generators of m_J = <d_j : j not in J>.
std::vector<Poly> mJ_gens(const std::vector<size_t>& J, size_t n);

}  // namespace bdm

#endif
