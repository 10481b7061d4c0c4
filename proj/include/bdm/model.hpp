#ifndef BDM_MODEL_HPP
#define BDM_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "bdm/groebner.hpp"
#include "bdm/lattice.hpp"
#include "bdm/matrix.hpp"

namespace bdm {

/// Polynomial with at most two monomial terms; trailing term optional.
struct Binomial {
  Exponent lead_exp;
  Rat lead_coeff;
  std::optional<Exponent> trail_exp;
  Rat trail_coeff;  // zero iff trail absent

  bool is_monomial() const { return !trail_exp.has_value(); }
};

/// rho : Lambda -> Q*, given by one nonzero value per basis vector of the
/// (HNF-canonical) lattice basis.
struct PartialCharacter {
  Lattice lattice;
  RatVec values;

  PartialCharacter() : lattice(0) {}
  PartialCharacter(Lattice l, RatVec v) : lattice(std::move(l)), values(std::move(v)) {}

  /// rho(u); throws if u is not in the lattice.
  Rat evaluate(const IntVec& u) const;

  bool operator==(const PartialCharacter& o) const = default;
};

/// One primary component C = I_rho + B, with face set J (0-based internally,
/// 1-based at the I/O boundary).
struct PrimaryComponent {
  std::vector<size_t> J;  // sorted, 0-based
  PartialCharacter character;
  std::vector<Binomial> B_gens;
  std::optional<Int> mu_hint;
};

struct MatrixA {
  IntMatrix data;  // d x n
  size_t d = 0, n = 0;
  Int span_index = 1;  // [Z^d : ZA]; 1 when the columns span Z^d

  IntVec column(size_t j) const { return data.col(j); }
  IntVec degree(const Exponent& e) const;  // A * e
};

struct Problem {
  MatrixA A;
  std::vector<Binomial> ideal_gens;
  std::vector<PrimaryComponent> components;
  std::optional<RatVec> beta;  // nullopt encodes GENERIC
  // The intersection of the components is trusted, not verified; only
  // I ⊆ C is checked per component.
  bool intersection_trusted = true;

  bool generic_beta() const { return !beta.has_value(); }
};

/// Parses and fully validates a problem document (JSON, schema in README).
/// Throws ParseError / ValidationError.
Problem parse_problem(const std::string& text);

/// Serialization; parse(print(p)) round-trips to an equal problem.
std::string print_problem(const Problem& p);

/// True iff the associated prime I_{rho,J} is homogeneous for the standard
/// Z-grading: the saturated lattice lies in the coordinate-sum-zero
/// hyperplane.
bool is_standard_homogeneous_prime(const PrimaryComponent& c);

/// Canonical representation of the associated prime I_{rho,J} = I_rho + m_J.
struct BinomialPrime {
  std::vector<size_t> J;
  Lattice lattice;  // saturated
  RatVec values;

  bool operator==(const BinomialPrime& o) const = default;
};

/// Requires the component's lattice to be saturated (throws ValidationError
/// with reason LatticeNotSaturated otherwise).
BinomialPrime prime_of(const PrimaryComponent& c);

}  // namespace bdm

#endif
