#ifndef BDM_NORMALFORM_HPP
#define BDM_NORMALFORM_HPP

#include "bdm/matrix.hpp"

namespace bdm {

struct HnfResult {
  IntMatrix H;  // H = U * M, row Hermite echelon form
  IntMatrix U;  // unimodular
};

// Canonical Hermite form: pivots positive, entries above each pivot reduced
// into [0, pivot), zero rows last. Two matrices with equal row lattices get
// identical H.
HnfResult hermite_normal_form(const IntMatrix& M);

struct SnfResult {
  IntMatrix S;  // S = U * M * V, diagonal, d1 | d2 | ...
  IntMatrix U;
  IntMatrix V;
};

SnfResult smith_normal_form(const IntMatrix& M);

}  // namespace bdm

#endif
