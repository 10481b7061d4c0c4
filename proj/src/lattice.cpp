#include "bdm/lattice.hpp"

#include "bdm/errors.hpp"
#include "bdm/linsolve.hpp"

namespace bdm {

Lattice::Lattice(size_t ambient, const std::vector<IntVec>& gens)
    : ambient_(ambient), basis_(0, ambient) {
  if (gens.empty()) return;
  IntMatrix g = IntMatrix::from_rows(gens, ambient);
  HnfResult h = hermite_normal_form(g);
  size_t r = 0;
  for (size_t i = 0; i < h.H.rows(); ++i) {
    bool nonzero = false;
    for (size_t j = 0; j < ambient; ++j)
      if (h.H.at(i, j) != 0) nonzero = true;
    if (nonzero) ++r;
  }
  // HNF puts zero rows last.
  basis_ = IntMatrix(r, ambient);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < ambient; ++j) basis_.at(i, j) = h.H.at(i, j);
}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("dim mismatch");
  // Solve c * basis = v by back substitution along the echelon pivots.
  IntVec rem = v;
  IntVec coords(rank());
  for (size_t i = 0; i < rank(); ++i) {
    size_t p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    if (p == ambient_) return std::nullopt;  // cannot happen: basis rows nonzero
    if (rem[p] % basis_.at(i, p) != 0) return std::nullopt;
    Int c = rem[p] / basis_.at(i, p);
    coords[i] = c;
    for (size_t j = 0; j < ambient_; ++j) rem[j] -= c * basis_.at(i, j);
  }
  for (size_t j = 0; j < ambient_; ++j)
    if (rem[j] != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

Lattice kernel_lattice(const IntMatrix& M) {
  // Column-style HNF of M: M * V = H' with V unimodular; columns of V over
  // the zero columns of H' form a saturated kernel basis.
  HnfResult h = hermite_normal_form(M.transpose());
  // h.H = h.U * M^T, so M * h.U^T = h.H^T; zero rows of h.H give kernel rows of h.U.
  std::vector<IntVec> gens;
  for (size_t i = 0; i < h.H.rows(); ++i) {
    bool zero = true;
    for (size_t j = 0; j < h.H.cols(); ++j)
      if (h.H.at(i, j) != 0) zero = false;
    if (zero) gens.push_back(h.U.row(i));
  }
  return Lattice(M.cols(), gens);
}

Lattice saturate(const Lattice& L) {
  if (L.rank() == 0) return L;
  // QL ∩ Z^n = kernel of the orthogonal-complement lattice of L.
  Lattice orth = kernel_lattice(L.basis());  // {x : basis * x = 0}
  if (orth.rank() == 0) return full_lattice(L.ambient());
  return kernel_lattice(orth.basis());
}

std::optional<Int> lattice_index(const Lattice& sub, const Lattice& super) {
  if (sub.ambient() != super.ambient()) throw std::invalid_argument("ambient mismatch");
  // Containment check: every sub basis vector must have rational coordinates
  // in the super basis, and those coordinates must be integers.
  std::vector<IntVec> coords;
  RatMatrix superT(super.basis().transpose());
  for (size_t i = 0; i < sub.rank(); ++i) {
    RatVec v = to_rat(sub.basis_vector(i));
    auto s = solve_rational(superT, v);
    if (!s) throw NotSublattice("basis vector outside the super lattice span");
    IntVec c(super.rank());
    for (size_t j = 0; j < super.rank(); ++j) {
      Rat x = s->particular[j];
      x.canonicalize();
      if (x.get_den() != 1) throw NotSublattice("basis vector has fractional coordinates");
      c[j] = x.get_num();
    }
    coords.push_back(c);
  }
  if (sub.rank() < super.rank()) return std::nullopt;  // infinite index
  IntMatrix C = IntMatrix::from_rows(coords, super.rank());
  Int d = det(C);
  if (d < 0) d = -d;
  if (d == 0) throw InternalError("sublattice of equal rank with zero determinant");
  return d;
}

}  // namespace bdm
