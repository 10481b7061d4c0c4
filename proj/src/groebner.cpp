#include "bdm/groebner.hpp"

#include <algorithm>
#include <map>

#include "bdm/errors.hpp"

namespace bdm {

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  if (kind == OrderKind::WeightGrevLex) {
    Rat wa(0), wb(0);
    for (size_t i = 0; i < a.size(); ++i) {
      wa += weight[i] * a[i];
      wb += weight[i] * b[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (kind == OrderKind::Lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // grevlex tiebreak: last nonzero of a - b negative means a > b
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

Poly::Poly(std::vector<Term> terms, const TermOrder& ord) {
  std::map<Exponent, Rat> acc;
  for (auto& t : terms) acc[t.exp] += t.coeff;
  for (auto& [e, c] : acc) {
    c.canonicalize();
    if (c != 0) terms_.push_back({e, c});
  }
  std::sort(terms_.begin(), terms_.end(),
            [&ord](const Term& x, const Term& y) { return ord.compare(x.exp, y.exp) > 0; });
}

Poly Poly::monomial(Exponent e, Rat c) {
  Poly p;
  c.canonicalize();
  if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

Poly Poly::scaled(const Rat& c) const {
  Poly p;
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) {
    t.coeff *= c;
    t.coeff.canonicalize();
  }
  return p;
}

Poly Poly::add_scaled(const Poly& o, const Rat& c, const Exponent& shift,
                      const TermOrder& ord) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  out = terms_;
  for (const auto& t : o.terms_) out.push_back({exp_add(t.exp, shift), t.coeff * c});
  return Poly(std::move(out), ord);
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& gb, const TermOrder& ord) {
  Poly rem = p;
  std::vector<Term> tail;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    bool reduced = false;
    for (const auto& g : gb) {
      if (g.is_zero()) continue;
      if (divides(g.lead().exp, lt.exp)) {
        Rat f = -lt.coeff / g.lead().coeff;
        rem = rem.add_scaled(g, f, exp_sub(lt.exp, g.lead().exp), ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Move the irreducible lead into the remainder tail.
      tail.push_back(lt);
      std::vector<Term> rest(rem.terms().begin() + 1, rem.terms().end());
      Poly q;
      q = Poly(std::move(rest), ord);
      rem = q;
    }
  }
  return Poly(std::move(tail), ord);
}

bool in_ideal(const Poly& p, const std::vector<Poly>& gb, const TermOrder& ord) {
  return normal_form(p, gb, ord).is_zero();
}

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& ord) {
  Exponent l = exp_lcm(f.lead().exp, g.lead().exp);
  Poly a = Poly::monomial(exp_sub(l, f.lead().exp), Rat(1) / f.lead().coeff);
  Poly b = Poly::monomial(exp_sub(l, g.lead().exp), Rat(1) / g.lead().coeff);
  // f/lt(f)*lcm - g/lt(g)*lcm
  Poly s = Poly();
  s = s.add_scaled(f, a.lead().coeff, a.lead().exp, ord);
  s = s.add_scaled(g, -b.lead().coeff, b.lead().exp, ord);
  return s;
}

std::vector<Poly> buchberger(std::vector<Poly> gens, const TermOrder& ord,
                             const GroebnerOptions& opts) {
  std::vector<Poly> basis;
  for (auto& g : gens) {
    // Re-sort under the active order.
    std::vector<Term> ts = g.terms();
    Poly p(std::move(ts), ord);
    if (!p.is_zero()) basis.push_back(std::move(p));
  }

  struct Pair {
    size_t i, j;
    Exponent lcm;
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    int c = total_degree(a.lcm) - total_degree(b.lcm);
    if (c != 0) return c > 0;  // process small degrees first (min-heap via sort)
    return ord.compare(a.lcm, b.lcm) > 0;
  };

  std::vector<Pair> pairs;
  auto push_pairs_for = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      Exponent l = exp_lcm(basis[i].lead().exp, basis[k].lead().exp);
      // Buchberger's coprimality criterion.
      if (l == exp_add(basis[i].lead().exp, basis[k].lead().exp)) continue;
      pairs.push_back({i, k, std::move(l)});
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };
  for (size_t k = 0; k < basis.size(); ++k) push_pairs_for(k);

  size_t processed = 0;
  while (!pairs.empty()) {
    Pair pr = pairs.back();
    pairs.pop_back();
    if (++processed > opts.max_pairs) throw ResourceLimit("Buchberger pair cap exceeded");
    if (total_degree(pr.lcm) > opts.max_degree)
      throw ResourceLimit("Buchberger degree cap exceeded");
    Poly s = s_polynomial(basis[pr.i], basis[pr.j], ord);
    Poly r = normal_form(s, basis, ord);
    if (!r.is_zero()) {
      basis.push_back(std::move(r));
      push_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < basis.size() && keep; ++j) {
      if (i == j) continue;
      if (divides(basis[j].lead().exp, basis[i].lead().exp)) {
        if (basis[j].lead().exp != basis[i].lead().exp || j < i) keep = false;
      }
    }
    if (keep) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails and normalize to monic.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.scaled(Rat(1) / r.lead().coeff));
  }
  std::sort(reduced.begin(), reduced.end(), [&ord](const Poly& a, const Poly& b) {
    return ord.compare(a.lead().exp, b.lead().exp) < 0;
  });
  return reduced;
}

std::vector<Exponent> minimalize_monomials(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j)
      if (i != j && divides(gens[j], gens[i]) && gens[j] != gens[i]) keep = false;
    if (keep) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Exponent> initial_ideal(const std::vector<Poly>& gb) {
  std::vector<Exponent> lead;
  for (const auto& g : gb)
    if (!g.is_zero()) lead.push_back(g.lead().exp);
  return minimalize_monomials(std::move(lead));
}

namespace {

bool pair_contained(const StandardPair& a, const StandardPair& b) {
  // a's orbit inside b's orbit?
  std::vector<bool> bfree(a.root.size(), false);
  for (size_t j : b.free) bfree[j] = true;
  for (size_t j : a.free)
    if (!bfree[j]) return false;
  for (size_t j = 0; j < a.root.size(); ++j) {
    if (bfree[j]) {
      if (a.root[j] < b.root[j]) return false;
    } else {
      if (a.root[j] != b.root[j]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<StandardPair> standard_pairs(const std::vector<Exponent>& min_gens, size_t nvars) {
  // Bound for root entries: past the largest generator degree in a variable,
  // divisibility no longer depends on that entry.
  std::vector<int> bound(nvars, 0);
  for (const auto& g : min_gens)
    for (size_t j = 0; j < nvars; ++j) bound[j] = std::max(bound[j], g[j]);

  std::vector<StandardPair> pairs;
  for (size_t mask = 0; mask < (size_t(1) << nvars); ++mask) {
    std::vector<size_t> free;
    std::vector<size_t> fixed;
    for (size_t j = 0; j < nvars; ++j)
      (mask >> j & 1) ? free.push_back(j) : fixed.push_back(j);

    // Enumerate roots over the box of fixed variables.
    Exponent root(nvars, 0);
    auto admissible = [&]() {
      // root + N^free avoids M iff every generator exceeds root somewhere
      // outside `free`.
      for (const auto& g : min_gens) {
        bool escapes = false;
        for (size_t j : fixed)
          if (root[j] < g[j]) {
            escapes = true;
            break;
          }
        if (!escapes) return false;
      }
      return true;
    };
    for (;;) {
      if (admissible()) pairs.push_back({root, free});
      // advance odometer over fixed coordinates
      size_t idx = 0;
      for (; idx < fixed.size(); ++idx) {
        size_t j = fixed[idx];
        if (root[j] + 1 < bound[j]) {
          ++root[j];
          break;
        }
        root[j] = 0;
      }
      if (idx == fixed.size()) break;
    }
  }

  // Prune pairs contained in others.
  std::vector<StandardPair> out;
  for (size_t i = 0; i < pairs.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < pairs.size() && keep; ++j) {
      if (i == j) continue;
      if (pair_contained(pairs[i], pairs[j])) {
        if (!pair_contained(pairs[j], pairs[i]) || j < i) keep = false;
      }
    }
    if (keep) out.push_back(pairs[i]);
  }
  return out;
}

std::optional<Int> artinian_colength(const std::vector<Poly>& gens, const std::vector<size_t>& vars,
                                     const TermOrder& ord, const GroebnerOptions& opts) {
  std::vector<Poly> gb = buchberger(gens, ord, opts);
  if (gb.size() == 1 && total_degree(gb[0].lead().exp) == 0) return Int(0);  // unit ideal
  std::vector<Exponent> in = initial_ideal(gb);

  // Artinian (on `vars`) iff every variable has a pure power among the
  // minimal generators.
  size_t nvars = in.empty() ? 0 : in[0].size();
  std::vector<int> power(vars.size(), -1);
  for (const auto& g : in) {
    int support = -1;
    bool pure = true;
    for (size_t j = 0; j < g.size(); ++j) {
      if (g[j] > 0) {
        if (support >= 0) pure = false;
        support = int(j);
      }
    }
    if (!pure || support < 0) continue;
    for (size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == size_t(support)) power[k] = g[size_t(support)];
  }
  for (int p : power)
    if (p < 0) return std::nullopt;

  // Count standard monomials in the finite box.
  Int count = 0;
  Exponent e(nvars, 0);
  std::vector<size_t> idx(vars.size(), 0);
  for (;;) {
    bool standard = true;
    for (const auto& g : in)
      if (divides(g, e)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    size_t k = 0;
    for (; k < vars.size(); ++k) {
      size_t j = vars[k];
      if (e[j] + 1 < power[k]) {
        ++e[j];
        break;
      }
      e[j] = 0;
    }
    if (k == vars.size()) break;
  }
  return count;
}

}  // namespace bdm
