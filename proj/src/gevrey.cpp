#include "bdm/gevrey.hpp"

#include <algorithm>
#include <map>

#include "bdm/errors.hpp"
#include "bdm/ideal.hpp"
#include "bdm/linsolve.hpp"
#include "bdm/umbrella.hpp"

namespace bdm {

namespace {

Rat falling(const Rat& a, int k) {
  Rat out(1);
  for (int i = 0; i < k; ++i) out *= a - i;
  return out;
}

// Enumerate u in the row lattice of the echelon basis B (rows r x m) with
// |u|_inf <= N, by triangular back-substitution over the pivot columns.
void enum_window_rec(const IntMatrix& B, int N, size_t row, IntVec& acc,
                     std::vector<IntVec>& out) {
  const size_t m = B.cols();
  if (row == B.rows()) {
    for (size_t j = 0; j < m; ++j)
      if (acc[j] > N || acc[j] < -N) return;
    out.push_back(acc);
    return;
  }
  size_t p = 0;
  while (p < m && B.at(row, p) == 0) ++p;
  Int b = B.at(row, p);  // positive pivot
  // |acc[p] + c*b| <= N
  Int lo = -(Int(N) + acc[p]);
  Int hi = Int(N) - acc[p];
  // c in [ceil(lo/b), floor(hi/b)]
  Int cmin, cmax;
  mpz_cdiv_q(cmin.get_mpz_t(), lo.get_mpz_t(), b.get_mpz_t());
  mpz_fdiv_q(cmax.get_mpz_t(), hi.get_mpz_t(), b.get_mpz_t());
  for (Int c = cmin; c <= cmax; ++c) {
    for (size_t j = 0; j < m; ++j) acc[j] += c * B.at(row, j);
    enum_window_rec(B, N, row + 1, acc, out);
    for (size_t j = 0; j < m; ++j) acc[j] -= c * B.at(row, j);
  }
}

std::vector<IntVec> lattice_window(const Lattice& L, const std::vector<size_t>& J, int N) {
  // Basis restricted to the J coordinates (supported there by validation).
  IntMatrix B(L.rank(), J.size());
  for (size_t i = 0; i < L.rank(); ++i) {
    IntVec u = L.basis_vector(i);
    for (size_t t = 0; t < J.size(); ++t) B.at(i, t) = u[J[t]];
  }
  std::vector<IntVec> out;
  IntVec acc(J.size(), Int(0));
  enum_window_rec(B, N, 0, acc, out);
  return out;
}

IntVec embed(const IntVec& uJ, const std::vector<size_t>& J, size_t n) {
  IntVec u(n, Int(0));
  for (size_t t = 0; t < J.size(); ++t) u[J[t]] = uJ[t];
  return u;
}

}  // namespace

PhiSeries phi_series(const MatrixA& A, const std::vector<size_t>& J, const PartialCharacter& rho,
                     const RatVec& v, int N) {
  PhiSeries phi;
  phi.v = v;
  for (const IntVec& u : lattice_window(rho.lattice, J, N)) {
    Rat num(1), den(1);
    for (size_t t = 0; t < J.size(); ++t) {
      long ut = u[t].get_si();
      if (ut < 0) num *= falling(v[t], int(-ut));
      if (ut > 0) den *= falling(v[t] + Rat(u[t]), int(ut));
    }
    if (num == 0) continue;
    if (den == 0) throw PochhammerPole("vanishing Pochhammer denominator in the window");
    Rat coeff = rho.evaluate(embed(u, J, A.n)) * num / den;
    phi.terms.push_back({u, std::move(coeff)});
  }
  std::sort(phi.terms.begin(), phi.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return phi;
}

std::vector<ExponentCandidate> exponent_candidates(const PrimaryComponent& c, const MatrixA& A,
                                                   const RatVec& beta_prime, size_t direction,
                                                   int N) {
  const std::vector<size_t>& J = c.J;
  IntrinsicCols ic = intrinsic_columns(A, J);
  const size_t k = ic.rank;
  if (k > 2)
    throw UnsupportedRank("automatic base-exponent search covers rank <= 2; supply v explicitly");

  constexpr int kMax = 12;
  std::vector<ExponentCandidate> out;

  auto known = [&](const RatVec& v) {
    for (const auto& e : out) {
      IntVec diff(A.n, Int(0));
      bool integral = true;
      for (size_t t = 0; t < J.size() && integral; ++t) {
        Rat d = v[t] - e.v[t];
        if (d.get_den() != 1) integral = false;
        diff[J[t]] = d.get_num();
      }
      if (integral && c.character.lattice.contains(diff)) return true;
    }
    return false;
  };

  // Square support subsets sigma of J \ {direction}.
  std::vector<size_t> pool;
  for (size_t t = 0; t < J.size(); ++t)
    if (J[t] != direction) pool.push_back(t);

  for (size_t mask = 0; mask < (size_t(1) << pool.size()); ++mask) {
    std::vector<size_t> sigma;  // positions in J
    for (size_t t = 0; t < pool.size(); ++t)
      if (mask >> t & 1) sigma.push_back(pool[t]);
    if (sigma.size() != k) continue;
    RatMatrix M(A.d, k);
    for (size_t i = 0; i < A.d; ++i)
      for (size_t s = 0; s < k; ++s) M.at(i, s) = Rat(A.data.at(i, J[sigma[s]]));

    std::vector<size_t> freev;  // positions in J outside sigma
    for (size_t t = 0; t < J.size(); ++t)
      if (std::find(sigma.begin(), sigma.end(), t) == sigma.end()) freev.push_back(t);

    // Enumerate natural exponents on the free positions.
    std::vector<int> kv(freev.size(), 0);
    for (;;) {
      RatVec rhs(A.d);
      for (size_t i = 0; i < A.d; ++i) {
        rhs[i] = beta_prime[i];
        for (size_t f = 0; f < freev.size(); ++f)
          rhs[i] -= Rat(kv[f]) * Rat(A.data.at(i, J[freev[f]]));
      }
      auto sol = solve_rational(M, rhs);
      if (sol && sol->kernel.empty()) {
        RatVec v(J.size(), Rat(0));
        for (size_t s = 0; s < k; ++s) v[sigma[s]] = sol->particular[s];
        for (size_t f = 0; f < freev.size(); ++f) v[freev[f]] = kv[f];
        if (!known(v)) {
          bool pole_free = true;
          try {
            phi_series(A, J, c.character, v, std::min(N, 10));
          } catch (const PochhammerPole&) {
            pole_free = false;
          }
          std::vector<size_t> sigma_cols;
          for (size_t s : sigma) sigma_cols.push_back(J[s]);
          std::sort(sigma_cols.begin(), sigma_cols.end());
          if (pole_free) out.push_back({std::move(v), std::move(sigma_cols)});
        }
      }
      // advance odometer
      size_t f = 0;
      for (; f < freev.size(); ++f) {
        if (kv[f] + 1 <= kMax) {
          ++kv[f];
          break;
        }
        kv[f] = 0;
      }
      if (f == freev.size()) break;
    }
  }
  return out;
}

std::vector<std::pair<size_t, int>> monomial_socle(const PrimaryComponent& c, const MatrixA& A,
                                                   int cap, const GroebnerOptions& opts) {
  TermOrder ord = TermOrder::grevlex();
  std::vector<Poly> gb = buchberger(component_ideal_gens(c, A.n, ord, opts), ord, opts);
  std::vector<std::pair<size_t, int>> out;
  for (size_t j = 0; j < A.n; ++j) {
    if (std::find(c.J.begin(), c.J.end(), j) != c.J.end()) continue;
    int p = -1;
    for (int e = 1; e <= cap; ++e) {
      Exponent m(A.n, 0);
      m[j] = e;
      if (in_ideal(Poly::monomial(m, Rat(1)), gb, ord)) {
        p = e;
        break;
      }
    }
    if (p < 0) throw CapExceeded("no power of a socle variable found below the cap");
    out.push_back({j, p});
  }
  return out;
}

GevreyBasis gevrey_basis(const PrimaryComponent& c, const MatrixA& A, const RatVec& beta,
                         size_t direction, int N, const GroebnerOptions& opts) {
  const std::vector<size_t>& J = c.J;
  GevreyBasis gb;
  gb.N = N;

  // Socle and its standard monomials (the gamma staircase).
  std::vector<std::pair<size_t, int>> socle = monomial_socle(c, A, 40, opts);

  // Operators to apply: B generators outside the socle ideal.
  auto in_socle = [&](const Exponent& e) {
    for (const auto& [j, p] : socle)
      if (e[j] >= p) return true;
    return false;
  };
  std::vector<Binomial> ops;
  int maxdeg = 0;
  for (const auto& g : c.B_gens) {
    bool inside = in_socle(g.lead_exp) && (!g.trail_exp || in_socle(*g.trail_exp));
    if (inside) continue;
    ops.push_back(g);
    maxdeg = std::max(maxdeg, total_degree(g.lead_exp));
    if (g.trail_exp) maxdeg = std::max(maxdeg, total_degree(*g.trail_exp));
  }
  if (N < 2 * maxdeg)
    throw TruncationTooSmall("truncation order below twice the operator degree");

  // Unknowns: one per (gamma, candidate).
  std::vector<Exponent> gammas;
  {
    Exponent g(A.n, 0);
    for (;;) {
      gammas.push_back(g);
      size_t t = 0;
      for (; t < socle.size(); ++t) {
        auto [j, p] = socle[t];
        if (g[j] + 1 < p) {
          ++g[j];
          break;
        }
        g[j] = 0;
      }
      if (t == socle.size()) break;
    }
  }
  std::vector<PhiSeries> phis;
  for (const Exponent& g : gammas) {
    RatVec bp(A.d);
    IntVec Ag = A.degree(g);
    for (size_t i = 0; i < A.d; ++i) bp[i] = beta[i] - Rat(Ag[i]);
    std::vector<ExponentCandidate> cands = exponent_candidates(c, A, bp, direction, N);
    for (size_t k = 0; k < cands.size(); ++k) {
      gb.unknowns.push_back({g, k, cands[k].v, cands[k].sigma});
      phis.push_back(phi_series(A, J, c.character, cands[k].v, N));
    }
  }
  const size_t U = gb.unknowns.size();

  // Apply the operators; group contributions by output exponent.
  std::map<RatVec, RatVec> eqs;  // output exponent -> coefficient per unknown
  auto add_contrib = [&](const RatVec& key, size_t unk, const Rat& coeff) {
    auto it = eqs.find(key);
    if (it == eqs.end()) it = eqs.emplace(key, RatVec(U, Rat(0))).first;
    it->second[unk] += coeff;
  };
  auto full_exponent = [&](size_t unk, const IntVec& u) {
    RatVec e(A.n, Rat(0));
    for (size_t j = 0; j < A.n; ++j) e[j] = Rat(gb.unknowns[unk].gamma[j]);
    for (size_t t = 0; t < J.size(); ++t) e[J[t]] = gb.unknowns[unk].v[t] + Rat(u[t]);
    return e;
  };
  for (size_t unk = 0; unk < U; ++unk) {
    for (const auto& [u, coeff] : phis[unk].terms) {
      RatVec e = full_exponent(unk, u);
      for (const auto& op : ops) {
        auto apply = [&](const Exponent& a, const Rat& opc) {
          Rat f = opc * coeff;
          RatVec out = e;
          for (size_t j = 0; j < A.n; ++j) {
            if (a[j] == 0) continue;
            f *= falling(e[j], a[j]);
            out[j] = e[j] - a[j];
          }
          if (f != 0) add_contrib(out, unk, f);
        };
        apply(op.lead_exp, op.lead_coeff);
        if (op.trail_exp) apply(*op.trail_exp, op.trail_coeff);
      }
    }
  }

  // Keep only equations every potential contributor of which lies inside
  // the truncation window.
  auto interior = [&](const RatVec& key) {
    for (const auto& op : ops) {
      auto probe = [&](const Exponent& a) {
        for (size_t unk = 0; unk < U; ++unk) {
          // contributor exponent e = key + a from unknown unk?
          bool match = true;
          IntVec u(A.n, Int(0));
          IntVec uJ(J.size(), Int(0));
          for (size_t j = 0; j < A.n && match; ++j) {
            bool inJ = std::find(J.begin(), J.end(), j) != J.end();
            Rat ej = key[j] + Rat(a[j]);
            if (!inJ) {
              if (ej != Rat(gb.unknowns[unk].gamma[j])) match = false;
            }
          }
          if (!match) continue;
          for (size_t t = 0; t < J.size() && match; ++t) {
            Rat d = key[J[t]] + Rat(a[J[t]]) - gb.unknowns[unk].v[t];
            if (d.get_den() != 1) match = false;
            else {
              uJ[t] = d.get_num();
              u[J[t]] = uJ[t];
            }
          }
          if (!match || !c.character.lattice.contains(u)) continue;
          for (size_t t = 0; t < J.size(); ++t)
            if (uJ[t] > N || uJ[t] < -N) return false;
        }
        return true;
      };
      if (!probe(op.lead_exp)) return false;
      if (op.trail_exp && !probe(*op.trail_exp)) return false;
    }
    return true;
  };

  std::vector<RatVec> rows;
  for (const auto& [key, row] : eqs) {
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (nonzero && interior(key)) rows.push_back(row);
  }
  if (rows.empty() && !ops.empty() && U > 0)
    throw TruncationTooSmall("no fully determined equations inside the window");

  // Exact solve: RREF, relations, free unknowns.
  std::vector<RatVec> rref;
  for (RatVec r : rows) {
    for (const auto& b : rref) {
      size_t p = 0;
      while (b[p] == 0) ++p;
      if (r[p] != 0) {
        Rat f = r[p];
        for (size_t j = 0; j < U; ++j) r[j] -= f * b[j];
      }
    }
    size_t p = 0;
    while (p < U && r[p] == 0) ++p;
    if (p == U) continue;
    Rat f = r[p];
    for (auto& x : r) x /= f;
    for (auto& b : rref) {
      if (b[p] != 0) {
        Rat g = b[p];
        for (size_t j = 0; j < U; ++j) b[j] -= g * r[j];
      }
    }
    rref.push_back(std::move(r));
  }
  std::sort(rref.begin(), rref.end(), [](const RatVec& a, const RatVec& b) {
    size_t pa = 0, pb = 0;
    while (a[pa] == 0) ++pa;
    while (b[pb] == 0) ++pb;
    return pa < pb;
  });

  std::vector<bool> is_pivot(U, false);
  for (const auto& r : rref) {
    size_t p = 0;
    while (r[p] == 0) ++p;
    is_pivot[p] = true;
    std::vector<std::pair<size_t, Rat>> rel;
    size_t nonzeros = 0;
    for (size_t j = 0; j < U; ++j)
      if (r[j] != 0) {
        rel.push_back({j, r[j]});
        ++nonzeros;
      }
    if (nonzeros == 1) gb.forced_zero.push_back(p);
    gb.relations.push_back(std::move(rel));
  }
  gb.dimension = U - rref.size();

  // One basis element per free unknown.
  for (size_t f = 0; f < U; ++f) {
    if (is_pivot[f]) continue;
    RatVec lambda(U, Rat(0));
    lambda[f] = 1;
    for (const auto& r : rref) {
      size_t p = 0;
      while (r[p] == 0) ++p;
      lambda[p] = -r[f];
    }
    std::map<RatVec, Rat> terms;
    for (size_t unk = 0; unk < U; ++unk) {
      if (lambda[unk] == 0) continue;
      for (const auto& [u, coeff] : phis[unk].terms) terms[full_exponent(unk, u)] += lambda[unk] * coeff;
    }
    std::vector<std::pair<RatVec, Rat>> tl;
    for (auto& [e, cf] : terms)
      if (cf != 0) tl.push_back({e, cf});
    gb.solutions.push_back(std::move(lambda));
    gb.series.push_back(std::move(tl));
  }

  // Slope tag: smallest jump at which the supports of the candidates enter
  // the umbrella; 1 when they already support at the F-filtration.
  gb.slope_tag = 1;
  {
    std::vector<Rat> jumps = critical_slopes(A, J, {direction});
    for (const Rat& s : jumps) {
      Rat probe = s + 1;
      for (const Rat& t : jumps)
        if (t > s) {
          probe = (s + t) / 2;
          break;
        }
      Umbrella u = compute_umbrella(A, J, {{direction}, probe});
      bool covers = true;
      for (const auto& unk : gb.unknowns) covers = covers && u.has_face(unk.sigma);
      if (covers) {
        gb.slope_tag = s;
        break;
      }
    }
  }
  return gb;
}

VerifyReport verify_solution(const GevreyBasis& basis, size_t series_index,
                             const PrimaryComponent& c, const MatrixA& A, const RatVec& beta) {
  VerifyReport rep;
  const auto& terms = basis.series.at(series_index);

  // Euler operators act term-wise: (E_i - beta_i) x^e = ((A e)_i - beta_i) x^e.
  rep.euler_exact = true;
  for (const auto& [e, coeff] : terms) {
    for (size_t i = 0; i < A.d; ++i) {
      Rat deg(0);
      for (size_t j = 0; j < A.n; ++j) deg += Rat(A.data.at(i, j)) * e[j];
      if (deg != beta[i]) rep.euler_exact = false;
    }
  }

  // Binomial generators of C on the truncation-interior window.
  TermOrder ord = TermOrder::grevlex();
  std::vector<Poly> cgens = component_ideal_gens(c, A.n, ord);
  std::vector<Binomial> ops;
  for (const auto& g : cgens) {
    Binomial b;
    b.lead_exp = g.terms()[0].exp;
    b.lead_coeff = g.terms()[0].coeff;
    if (g.terms().size() > 1) {
      b.trail_exp = g.terms()[1].exp;
      b.trail_coeff = g.terms()[1].coeff;
    } else {
      b.trail_coeff = 0;
    }
    ops.push_back(std::move(b));
  }

  auto falling_prod = [&](const RatVec& e, const Exponent& a, Rat& f, RatVec& out) {
    out = e;
    for (size_t j = 0; j < A.n; ++j) {
      if (a[j] == 0) continue;
      f *= falling(e[j], a[j]);
      out[j] = e[j] - a[j];
    }
  };

  rep.interior_zero = true;
  for (const auto& op : ops) {
    std::map<RatVec, Rat> res;
    for (const auto& [e, coeff] : terms) {
      Rat f1 = op.lead_coeff * coeff;
      RatVec o1;
      falling_prod(e, op.lead_exp, f1, o1);
      if (f1 != 0) res[o1] += f1;
      if (op.trail_exp) {
        Rat f2 = op.trail_coeff * coeff;
        RatVec o2;
        falling_prod(e, *op.trail_exp, f2, o2);
        if (f2 != 0) res[o2] += f2;
      }
    }
    for (const auto& [key, val] : res) {
      // Interior iff every potential contributor is inside the window: for
      // each operator monomial a, the J-part of key + a differs from every
      // candidate base by either a non-lattice vector or one within N.
      auto inside = [&](const Exponent& a) {
        for (const auto& unk : basis.unknowns) {
          bool match = true;
          IntVec u(A.n, Int(0));
          for (size_t j = 0; j < A.n && match; ++j) {
            bool inJ = std::find(c.J.begin(), c.J.end(), j) != c.J.end();
            if (!inJ && key[j] + Rat(a[j]) != Rat(unk.gamma[j])) match = false;
          }
          if (!match) continue;
          for (size_t t = 0; t < c.J.size() && match; ++t) {
            Rat d = key[c.J[t]] + Rat(a[c.J[t]]) - unk.v[t];
            if (d.get_den() != 1) match = false;
            else u[c.J[t]] = d.get_num();
          }
          if (!match || !c.character.lattice.contains(u)) continue;
          for (size_t t = 0; t < c.J.size(); ++t)
            if (u[c.J[t]] > basis.N || u[c.J[t]] < -basis.N) return false;
        }
        return true;
      };
      bool interior = inside(op.lead_exp) && (!op.trail_exp || inside(*op.trail_exp));
      if (!interior) {
        ++rep.boundary_terms;
      } else {
        ++rep.interior_checked;
        if (val != 0) rep.interior_zero = false;
      }
    }
  }
  return rep;
}

}  // namespace bdm
