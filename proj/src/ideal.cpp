#include "bdm/ideal.hpp"

#include <algorithm>

#include "bdm/errors.hpp"

namespace bdm {

Poly binomial_to_poly(const Binomial& b, const TermOrder& ord) {
  std::vector<Term> ts;
  ts.push_back({b.lead_exp, b.lead_coeff});
  if (b.trail_exp) ts.push_back({*b.trail_exp, b.trail_coeff});
  return Poly(std::move(ts), ord);
}

std::vector<Poly> lattice_ideal_gens(const PartialCharacter& rho, size_t n,
                                     const TermOrder& ord, const GroebnerOptions& opts) {
  const Lattice& L = rho.lattice;
  if (L.rank() == 0) return {};

  // Support of the lattice.
  std::vector<bool> supp(n, false);
  for (size_t i = 0; i < L.rank(); ++i) {
    IntVec u = L.basis_vector(i);
    for (size_t j = 0; j < n; ++j)
      if (u[j] != 0) supp[j] = true;
  }

  // Work in n+1 variables with the auxiliary variable t first, so lex
  // elimination of t yields the saturation (I : (prod d_j)^infty).
  TermOrder lex = TermOrder::lex();
  std::vector<Poly> gens;
  for (size_t i = 0; i < L.rank(); ++i) {
    IntVec u = L.basis_vector(i);
    Exponent plus(n + 1, 0), minus(n + 1, 0);
    for (size_t j = 0; j < n; ++j) {
      long uj = u[j].get_si();
      if (uj > 0) plus[j + 1] = int(uj);
      if (uj < 0) minus[j + 1] = int(-uj);
    }
    Rat val = rho.evaluate(u);
    std::vector<Term> ts{{plus, Rat(1)}, {minus, -val}};
    gens.push_back(Poly(std::move(ts), lex));
  }
  // t * prod_{j in supp} d_j - 1
  Exponent tm(n + 1, 0);
  tm[0] = 1;
  for (size_t j = 0; j < n; ++j)
    if (supp[j]) tm[j + 1] = 1;
  std::vector<Term> sat{{tm, Rat(1)}, {Exponent(n + 1, 0), Rat(-1)}};
  gens.push_back(Poly(std::move(sat), lex));

  std::vector<Poly> gb = buchberger(gens, lex, opts);

  std::vector<Poly> out;
  for (const auto& g : gb) {
    bool t_free = true;
    for (const auto& t : g.terms())
      if (t.exp[0] != 0) t_free = false;
    if (!t_free) continue;
    std::vector<Term> ts;
    for (const auto& t : g.terms())
      ts.push_back({Exponent(t.exp.begin() + 1, t.exp.end()), t.coeff});
    out.push_back(Poly(std::move(ts), ord));
  }
  return out;
}

std::vector<Poly> component_ideal_gens(const PrimaryComponent& c, size_t n,
                                       const TermOrder& ord, const GroebnerOptions& opts) {
  std::vector<Poly> gens = lattice_ideal_gens(c.character, n, ord, opts);
  for (const auto& b : c.B_gens) gens.push_back(binomial_to_poly(b, ord));
  return gens;
}

std::vector<Poly> mJ_gens(const std::vector<size_t>& J, size_t n) {
  std::vector<bool> inJ(n, false);
  for (size_t j : J) inJ[j] = true;
  std::vector<Poly> out;
  for (size_t j = 0; j < n; ++j) {
    if (inJ[j]) continue;
    Exponent e(n, 0);
    e[j] = 1;
    out.push_back(Poly::monomial(e, Rat(1)));
  }
  return out;
}

}  // namespace bdm
