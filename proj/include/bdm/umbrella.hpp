#ifndef BDM_UMBRELLA_HPP
#define BDM_UMBRELLA_HPP

#include <vector>

#include "bdm/model.hpp"

namespace bdm {

/// Filtration weight: the subspace {x_k = 0 : k in K} and the parameter
/// r >= 1; column j gets denominator v_j = r for j in K and 1 otherwise.
struct WeightL {
  std::vector<size_t> K;  // 0-based column indices
  Rat r = 1;
};

/// Face of the scaled-column hull avoiding the origin, identified with its
/// set of touching columns; h is the supporting functional in intrinsic
/// coordinates (h . a_j/v_j = 1 on the face, < 1 off it).
struct UmbrellaFace {
  std::vector<size_t> cols;  // sorted global column indices; empty face allowed
  RatVec h;

  bool operator==(const UmbrellaFace& o) const { return cols == o.cols; }
};

struct Umbrella {
  std::vector<UmbrellaFace> faces;  // sorted by cols; includes the empty face
  size_t intrinsic_rank = 0;

  bool same_faces(const Umbrella& o) const;
  bool has_face(const std::vector<size_t>& cols) const;
};

/// Columns of A_J in integer coordinates w.r.t. a basis of the saturation
/// of ZA_J (so rank-deficient column sets become full-dimensional).
struct IntrinsicCols {
  size_t rank = 0;
  std::vector<IntVec> cols;  // one per member of J, length rank
  Lattice zaj;               // lattice generated by the columns, in Z^d
  Lattice sat;               // its saturation
};

IntrinsicCols intrinsic_columns(const MatrixA& A, const std::vector<size_t>& J);

/// All faces of conv{0, a_j/v_j : j in J} avoiding 0, computed exactly
/// inside the span of A_J.
Umbrella compute_umbrella(const MatrixA& A, const std::vector<size_t>& J, const WeightL& w);

/// Values r > 1 where r -> umbrella(L_r) jumps, for K against the columns
/// J: candidate r from mixed supporting systems, then verified by comparing
/// umbrellas across each candidate.
std::vector<Rat> critical_slopes(const MatrixA& A, const std::vector<size_t>& J,
                                 const std::vector<size_t>& K);

struct SlopeEntry {
  Rat s;
  std::vector<size_t> components;  // which relevant components contribute s
};

/// Union of the per-component jump values over the relevant toral
/// components. Throws NotHolonomic.
std::vector<SlopeEntry> slopes_of_module(const Problem& p, const std::vector<size_t>& K,
                                         const GroebnerOptions& opts = {});

}  // namespace bdm

#endif
