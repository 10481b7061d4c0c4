#ifndef BDM_LINSOLVE_HPP
#define BDM_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "bdm/matrix.hpp"

namespace bdm {

/// Exact parametrization of {x : M x = b}: particular + span(kernel).
struct AffineSolution {
  RatVec particular;
  std::vector<RatVec> kernel;  // basis of the homogeneous solution space
};

std::optional<AffineSolution> solve_rational(const RatMatrix& M, const RatVec& b);
std::optional<AffineSolution> solve_rational(const IntMatrix& M, const RatVec& b);

/// Basis of {x : M x = 0} over Q.
std::vector<RatVec> rational_kernel(const RatMatrix& M);

/// True iff v lies in the column span of M.
bool in_column_span(const IntMatrix& M, const RatVec& v);

}  // namespace bdm

#endif
