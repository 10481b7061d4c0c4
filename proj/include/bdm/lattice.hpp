#ifndef BDM_LATTICE_HPP
#define BDM_LATTICE_HPP

#include <optional>

#include "bdm/matrix.hpp"
#include "bdm/normalform.hpp"

namespace bdm {

/// Sublattice of Z^n. The basis is kept in canonical row-HNF form, so two
/// equal lattices have identical representations.
class Lattice {
 public:
  explicit Lattice(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  // Rows of `gens` generate the lattice; dependent generators are dropped
  // by the HNF reduction.
  Lattice(size_t ambient, const std::vector<IntVec>& gens);

  size_t ambient() const { return ambient_; }
  size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  IntVec basis_vector(size_t i) const { return basis_.row(i); }

  bool contains(const IntVec& v) const;
  // Integer coordinates of v in the basis, or nullopt when v is not in the
  // lattice.
  std::optional<IntVec> coordinates(const IntVec& v) const;

  bool operator==(const Lattice& o) const = default;

 private:
  size_t ambient_;
  IntMatrix basis_;  // rank x ambient, canonical HNF
};

/// {u in Z^cols : M u = 0}; saturated by construction.
Lattice kernel_lattice(const IntMatrix& M);

/// QL  ∩ Z^n.
Lattice saturate(const Lattice& L);

/// [super : sub]; nullopt encodes infinite index (rank drop).
/// Throws NotSublattice when sub is not contained in super.
std::optional<Int> lattice_index(const Lattice& sub, const Lattice& super);

inline Lattice full_lattice(size_t n) {
  std::vector<IntVec> rows;
  for (size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    rows.push_back(e);
  }
  return Lattice(n, rows);
}

}  // namespace bdm

#endif
