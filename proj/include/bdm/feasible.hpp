#ifndef BDM_FEASIBLE_HPP
#define BDM_FEASIBLE_HPP

#include <vector>

#include "bdm/numeric.hpp"

namespace bdm {

/// One linear constraint  a·x (< or <=) c.
struct LinConstraint {
  RatVec a;
  Rat c;
  bool strict = false;
};

/// Decides feasibility of a system of linear inequalities over Q by
/// Fourier-Motzkin elimination. Exact; intended for small dimensions.
bool feasible(std::vector<LinConstraint> cons, size_t dim);

}  // namespace bdm

#endif
