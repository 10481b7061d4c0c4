#ifndef BDM_GROEBNER_HPP
#define BDM_GROEBNER_HPP

#include <optional>
#include <vector>

#include "bdm/numeric.hpp"

namespace bdm {

using Exponent = std::vector<int>;  // one entry per variable, >= 0

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);  // a | b
Exponent exp_lcm(const Exponent& a, const Exponent& b);
Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& a, const Exponent& b);  // requires a >= b

enum class OrderKind { Lex, GrevLex, WeightGrevLex };

struct TermOrder {
  OrderKind kind = OrderKind::GrevLex;
  RatVec weight;  // primary key for WeightGrevLex

  // -1 if a < b, 0 if equal, 1 if a > b.
  int compare(const Exponent& a, const Exponent& b) const;

  static TermOrder lex() { return {OrderKind::Lex, {}}; }
  static TermOrder grevlex() { return {OrderKind::GrevLex, {}}; }
  static TermOrder weighted(RatVec w) { return {OrderKind::WeightGrevLex, std::move(w)}; }
};

struct Term {
  Exponent exp;
  Rat coeff;
};

/// Polynomial over Q: terms sorted strictly descending under the active
/// order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<Term> terms, const TermOrder& ord);

  static Poly monomial(Exponent e, Rat c);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }

  Poly scaled(const Rat& c) const;
  // this + c * x^shift * o, re-normalized under ord.
  Poly add_scaled(const Poly& o, const Rat& c, const Exponent& shift, const TermOrder& ord) const;

  bool operator==(const Poly& o) const;

 private:
  std::vector<Term> terms_;
};

struct GroebnerOptions {
  size_t max_pairs = 20000;
  int max_degree = 200;  // cap on S-pair lcm total degree
};

/// Reduced Groebner basis (monic leads). Throws ResourceLimit past the caps.
std::vector<Poly> buchberger(std::vector<Poly> gens, const TermOrder& ord,
                             const GroebnerOptions& opts = {});

Poly normal_form(const Poly& p, const std::vector<Poly>& gb, const TermOrder& ord);

bool in_ideal(const Poly& p, const std::vector<Poly>& gb, const TermOrder& ord);

/// Minimal generators of the monomial ideal generated by `gens`.
std::vector<Exponent> minimalize_monomials(std::vector<Exponent> gens);

/// Leading exponents of a GB, minimalized: the initial monomial ideal.
std::vector<Exponent> initial_ideal(const std::vector<Poly>& gb);

struct StandardPair {
  Exponent root;               // root_j = 0 for j in free
  std::vector<size_t> free;    // 0-based variable indices
};

/// Cover of the standard monomials of the monomial ideal by root + N^free
/// orbits; pairs contained in other pairs are pruned. Exact union coverage,
/// overlaps allowed.
std::vector<StandardPair> standard_pairs(const std::vector<Exponent>& min_gens, size_t nvars);

/// Number of standard monomials of in(ideal), restricted to `vars`: all
/// generators must only involve `vars`. nullopt = infinite (not Artinian).
std::optional<Int> artinian_colength(const std::vector<Poly>& gens, const std::vector<size_t>& vars,
                                     const TermOrder& ord, const GroebnerOptions& opts = {});

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& ord);

}  // namespace bdm

#endif
