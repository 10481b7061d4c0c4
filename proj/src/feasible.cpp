#include "bdm/feasible.hpp"

#include <stdexcept>

namespace bdm {

bool feasible(std::vector<LinConstraint> cons, size_t dim) {
  for (const auto& c : cons)
    if (c.a.size() != dim) throw std::invalid_argument("constraint dim mismatch");

  for (size_t v = dim; v-- > 0;) {
    std::vector<LinConstraint> lower, upper, rest;
    for (auto& c : cons) {
      if (c.a[v] > 0)
        upper.push_back(std::move(c));  // x_v <= (c - a'·x')/a_v
      else if (c.a[v] < 0)
        lower.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // Combine to eliminate x_v: a_up[v]*lo + (-a_lo[v])*up.
        LinConstraint n;
        n.a.assign(dim, Rat(0));
        Rat flo = up.a[v];    // > 0
        Rat fup = -lo.a[v];   // > 0
        for (size_t j = 0; j < dim; ++j) n.a[j] = flo * lo.a[j] + fup * up.a[j];
        n.c = flo * lo.c + fup * up.c;
        n.a[v] = 0;
        n.strict = lo.strict || up.strict;
        rest.push_back(std::move(n));
      }
    }
    cons = std::move(rest);
  }
  for (const auto& c : cons) {
    // All coefficients are zero now: 0 (<|<=) c.
    if (c.strict ? !(Rat(0) < c.c) : !(Rat(0) <= c.c)) return false;
  }
  return true;
}

}  // namespace bdm
