#ifndef BDM_STRATIFY_HPP
#define BDM_STRATIFY_HPP

#include <vector>

#include "bdm/model.hpp"

namespace bdm {

/// Affine translate offset + span of a linear subspace of Q^d (read: C^d;
/// all data is rational). Canonical form: span rows in RREF, offset reduced
/// to zero on the pivot columns, so equality of translates is equality of
/// representations.
struct AffineTranslate {
  RatVec offset;
  std::vector<RatVec> span;  // RREF rows, sorted by pivot column

  size_t dim() const { return span.size(); }
  bool is_full(size_t d) const { return span.size() == d; }
  bool contains_point(const RatVec& x) const;
  bool contains_translate(const AffineTranslate& o) const;  // o subset of this

  bool operator==(const AffineTranslate& o) const = default;
};

AffineTranslate make_translate(RatVec offset, const std::vector<RatVec>& directions);

/// Arrangement entry with provenance: which components produced it.
struct TaggedTranslate {
  AffineTranslate translate;
  std::vector<size_t> components;  // sorted 0-based indices
};

struct AffineArrangement {
  std::vector<TaggedTranslate> translates;

  // Deduplicates exactly equal translates, merging provenance. Strictly
  // contained translates are kept: membership patterns distinguish them.
  void add(const AffineTranslate& t, size_t component);
  bool contains_point(const RatVec& x) const;
  bool has_full(size_t d) const;
  bool empty() const { return translates.empty(); }
};

struct ComponentClass {
  bool toral;
  size_t krull_dim;  // |J| - rank(Lambda)
  size_t rank_AJ;
};

ComponentClass classify(const PrimaryComponent& c, const MatrixA& A);

/// qdeg(R/C) as a merged list of translates of C A_sigma: one per standard
/// pair (u, sigma) of in(I_rho + B), offset -A u, then contained translates
/// dropped.
std::vector<AffineTranslate> qdeg_component(const PrimaryComponent& c, const MatrixA& A,
                                            const TermOrder& ord = TermOrder::grevlex(),
                                            const GroebnerOptions& opts = {});

AffineArrangement andean_arrangement(const Problem& p, const GroebnerOptions& opts = {});

/// Rational beta: -beta off the Andean arrangement. GENERIC: the Andean
/// arrangement is not all of C^d.
bool is_holonomic(const Problem& p, const GroebnerOptions& opts = {});

/// Indices of components with -beta in qdeg(R/C); under GENERIC, those whose
/// qdeg is all of C^d. Throws NotHolonomic.
std::vector<size_t> relevant_components(const Problem& p, const GroebnerOptions& opts = {});

enum class RegularityVerdict { Regular, Irregular, NotHolonomic };

struct RegularityResult {
  RegularityVerdict verdict;
  std::vector<size_t> witnesses;  // relevant components with non-homogeneous prime
};

RegularityResult is_regular(const Problem& p, const GroebnerOptions& opts = {});

/// Andean arrangement together with the quasidegrees of components whose
/// associated prime is not standard-homogeneous.
AffineArrangement nonregular_arrangement(const Problem& p, const GroebnerOptions& opts = {});

struct Stratum {
  std::vector<bool> pattern;  // membership over arrangement translates
  RatVec sample_beta;         // rational point with this exact pattern for -beta
  std::vector<size_t> relevant;
};

struct Stratification {
  AffineArrangement arrangement;  // qdeg translates of all components
  std::vector<Stratum> strata;
};

/// Strata = realizable membership patterns of -beta over the qdeg
/// arrangement, each with an exact sample parameter.
Stratification stratify_parameters(const Problem& p, const GroebnerOptions& opts = {});

}  // namespace bdm

#endif
