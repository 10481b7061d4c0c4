#include "bdm/irregularity.hpp"

#include <algorithm>
#include <random>

#include "bdm/errors.hpp"
#include "bdm/ideal.hpp"
#include "bdm/linsolve.hpp"
#include "bdm/stratify.hpp"
#include "bdm/umbrella.hpp"

namespace bdm {

namespace {

// Primitive integer vector parallel to a rational one.
IntVec primitive(const RatVec& v) {
  Int lcm(1);
  for (const auto& x : v) {
    Rat y = x;
    y.canonicalize();
    lcm = lcm * y.get_den() / gcd(lcm, Int(y.get_den()));
  }
  IntVec out(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    Rat y = v[i] * Rat(lcm);
    y.canonicalize();
    out[i] = y.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

Rat dot(const IntVec& a, const IntVec& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rat(s);
}

}  // namespace

Int lattice_normalized_volume(const std::vector<IntVec>& pts0, size_t m) {
  if (m == 0) return 1;
  std::vector<IntVec> P = pts0;
  P.push_back(IntVec(m, Int(0)));
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  const IntVec& b = P[0];

  struct Facet {
    IntVec h;
    Int c;
    std::vector<IntVec> pts;
  };
  std::vector<Facet> facets;

  if (P.size() < m + 1) return 0;
  // Candidate supporting hyperplanes from size-m subsets.
  std::vector<size_t> idx(m);
  for (size_t i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    // affine hull normal of P[idx...]
    RatMatrix M(m - 1 == 0 ? 0 : m - 1, m);
    for (size_t r = 0; r + 1 < m; ++r)
      for (size_t j = 0; j < m; ++j) M.at(r, j) = Rat(P[idx[r + 1]][j] - P[idx[0]][j]);
    std::vector<RatVec> ker = rational_kernel(M);
    if (ker.size() == 1) {
      IntVec h = primitive(ker[0]);
      Int c;
      {
        Rat cc = dot(h, P[idx[0]]);
        c = cc.get_num();  // denominator 1: integer dot
      }
      bool above = false, below = false;
      for (const auto& p : P) {
        Rat v = dot(h, p);
        if (v > Rat(c)) above = true;
        if (v < Rat(c)) below = true;
      }
      if (!(above && below)) {
        if (above) {
          for (auto& x : h) x = -x;
          c = -c;
        }
        Facet f;
        f.h = h;
        f.c = c;
        for (const auto& p : P)
          if (dot(h, p) == Rat(c)) f.pts.push_back(p);
        bool dup = false;
        for (const auto& g : facets)
          if (g.h == f.h && g.c == f.c) dup = true;
        if (!dup) facets.push_back(std::move(f));
      }
    }
    // next combination
    size_t t = m;
    while (t > 0 && idx[t - 1] == P.size() - m + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (size_t j = t; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }

  Int vol(0);
  for (const auto& f : facets) {
    Rat hb = dot(f.h, b);
    Int height = f.c - hb.get_num();
    if (height == 0) continue;  // b on the facet: zero-volume cone
    if (height < 0) height = -height;
    if (m == 1) {
      vol += height;
      continue;
    }
    // Map facet points into the hyperplane lattice {x : h.x = 0}.
    IntMatrix H(1, m);
    for (size_t j = 0; j < m; ++j) H.at(0, j) = f.h[j];
    Lattice hl = kernel_lattice(H);
    std::vector<IntVec> sub;
    for (const auto& p : f.pts) {
      IntVec rel(m);
      for (size_t j = 0; j < m; ++j) rel[j] = p[j] - f.pts[0][j];
      auto co = hl.coordinates(rel);
      if (!co) throw InternalError("facet point off the facet lattice");
      sub.push_back(std::move(*co));
    }
    vol += height * lattice_normalized_volume(sub, m - 1);
  }
  return vol;
}

Int normalized_volume(const MatrixA& A, const std::vector<size_t>& J,
                      const std::vector<size_t>& tau) {
  IntrinsicCols ic = intrinsic_columns(A, J);
  const size_t k = ic.rank;

  std::vector<IntVec> pts;
  for (size_t t = 0; t < J.size(); ++t)
    if (std::find(tau.begin(), tau.end(), J[t]) != tau.end()) pts.push_back(ic.cols[t]);
  if (pts.empty()) return 1;

  // Lattice L = ZA_J ∩ span(tau), inside the intrinsic Z^k.
  std::vector<IntVec> grows = ic.cols;
  Lattice G(k, grows);  // ZA_J in intrinsic coordinates, full rank k
  RatMatrix S(pts.size(), k);
  for (size_t r = 0; r < pts.size(); ++r)
    for (size_t j = 0; j < k; ++j) S.at(r, j) = Rat(pts[r][j]);
  std::vector<RatVec> normals = rational_kernel(S);
  Lattice L(k);
  if (normals.empty()) {
    L = G;
  } else {
    IntMatrix E(normals.size(), k);
    for (size_t r = 0; r < normals.size(); ++r) {
      IntVec h = primitive(normals[r]);
      for (size_t j = 0; j < k; ++j) E.at(r, j) = h[j];
    }
    // x = B_G^T z with E x = 0  <=>  (E B_G^T) z = 0.
    IntMatrix EB = E * G.basis().transpose();
    Lattice Z = kernel_lattice(EB);
    std::vector<IntVec> lrows;
    for (size_t i = 0; i < Z.rank(); ++i) {
      IntVec z = Z.basis_vector(i);
      IntVec x(k, Int(0));
      for (size_t t = 0; t < G.basis().rows(); ++t)
        for (size_t j = 0; j < k; ++j) x[j] += z[t] * G.basis().at(t, j);
      lrows.push_back(std::move(x));
    }
    L = Lattice(k, lrows);
  }
  Lattice Lsat = saturate(L);
  auto idx = lattice_index(L, Lsat);
  if (!idx) throw InternalError("saturation changed the rank of a lattice");

  std::vector<IntVec> mpts;
  for (const auto& p : pts) {
    auto co = Lsat.coordinates(p);
    if (!co) throw InternalError("face point outside the saturated face lattice");
    mpts.push_back(std::move(*co));
  }
  Int nv = lattice_normalized_volume(mpts, Lsat.rank());
  if (nv % *idx != 0) throw InternalError("volume not divisible by the lattice index");
  return nv / *idx;
}

Multiplicity multiplicity(const PrimaryComponent& c, const MatrixA& A, uint64_t seed,
                          const GroebnerOptions& opts) {
  prime_of(c);  // enforces a saturated lattice
  const std::vector<size_t>& J = c.J;
  const size_t nJ = J.size();
  IntrinsicCols ic = intrinsic_columns(A, J);

  // Lattice basis restricted to the J coordinates.
  const Lattice& Lam = c.character.lattice;
  const size_t r = Lam.rank();
  IntMatrix B(r, nJ);
  for (size_t i = 0; i < r; ++i) {
    IntVec u = Lam.basis_vector(i);
    for (size_t t = 0; t < nJ; ++t) B.at(i, t) = u[J[t]];
  }

  // Integer right inverse N of B (exists since the lattice is saturated):
  // with B = U^{-1} [I 0] V^{-1}, take N = V[:, :r] U.
  IntMatrix N(nJ, r);
  if (r > 0) {
    SnfResult snf = smith_normal_form(B);
    for (size_t i = 0; i < r; ++i)
      if (snf.S.at(i, i) != 1 && snf.S.at(i, i) != -1)
        throw InternalError("saturated lattice with nontrivial invariant factors");
    std::vector<size_t> firstr(r);
    for (size_t i = 0; i < r; ++i) firstr[i] = i;
    IntMatrix Vr = snf.V.select_cols(firstr);
    // fix signs so that B * (Vr U) = I
    for (size_t i = 0; i < r; ++i)
      if (snf.S.at(i, i) == -1)
        for (size_t t = 0; t < nJ; ++t) Vr.at(t, i) = -Vr.at(t, i);
    N = Vr * snf.U;
  }

  auto rat_pow = [](const Rat& b, const Int& e) {
    Rat base = e >= 0 ? b : Rat(1) / b;
    long k = std::abs(e.get_si());
    Rat out(1);
    for (long i = 0; i < k; ++i) out *= base;
    out.canonicalize();
    return out;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(2, 7919);

  auto specialize_once = [&]() -> std::pair<std::optional<Int>, RatVec> {
    RatVec tv(ic.rank);
    for (auto& t : tv) t = Rat(dist(rng));
    // Torus point: p_t = c_t * prod_i tv_i^{coord_i(a_{J_t})}, where
    // c^B = rho on the lattice basis.
    RatVec p(nJ, Rat(1));
    for (size_t t = 0; t < nJ; ++t) {
      for (size_t i = 0; i < r; ++i) p[t] *= rat_pow(c.character.values[i], N.at(t, i));
      for (size_t i = 0; i < ic.rank; ++i) p[t] *= rat_pow(tv[i], ic.cols[t][i]);
      p[t].canonicalize();
    }
    // Substitute into the B generators; J variables become constants.
    TermOrder ord = TermOrder::grevlex();
    std::vector<Poly> gens;
    for (const auto& g : c.B_gens) {
      std::vector<Term> ts;
      auto push = [&](const Exponent& e, Rat coeff) {
        Exponent out(A.n, 0);
        for (size_t j = 0; j < A.n; ++j) out[j] = e[j];
        for (size_t t = 0; t < nJ; ++t) {
          for (int q = 0; q < e[J[t]]; ++q) coeff *= p[t];
          out[J[t]] = 0;
        }
        coeff.canonicalize();
        ts.push_back({std::move(out), std::move(coeff)});
      };
      push(g.lead_exp, g.lead_coeff);
      if (g.trail_exp) push(*g.trail_exp, g.trail_coeff);
      Poly pg(std::move(ts), ord);
      if (!pg.is_zero()) gens.push_back(std::move(pg));
    }
    std::vector<size_t> vars;
    for (size_t j = 0; j < A.n; ++j)
      if (std::find(J.begin(), J.end(), j) == J.end()) vars.push_back(j);
    return {artinian_colength(gens, vars, ord, opts), p};
  };

  Multiplicity result;
  result.method = "specialization";
  std::optional<Int> agreed;
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto [len, pt] = specialize_once();
    if (!len) throw NotArtinian("specialized component ideal has infinite colength");
    result.points.push_back(pt);
    if (attempt == 0) {
      agreed = len;
    } else if (*agreed != *len) {
      throw SpecializationUnstable("independent torus points give different colengths");
    }
    if (attempt >= 1) break;  // two agreeing points suffice
  }
  result.mu = *agreed;
  if (c.mu_hint && *c.mu_hint != result.mu)
    throw ValidationError("MuHintMismatch", "computed multiplicity " + result.mu.get_str() +
                                                " does not match the supplied hint");
  return result;
}

Int holonomic_rank_generic(const Problem& p, uint64_t seed, const GroebnerOptions& opts) {
  if (!p.generic_beta())
    throw AssumptionViolated("the rank formula is stated for generic parameters");
  Int total(0);
  for (size_t k : relevant_components(p, opts)) {
    const PrimaryComponent& c = p.components[k];
    ComponentClass cc = classify(c, p.A);
    if (!cc.toral || cc.krull_dim != p.A.d)
      throw AssumptionViolated("a relevant component is not toral of full dimension");
    Multiplicity mu = multiplicity(c, p.A, seed + k, opts);
    total += mu.mu * normalized_volume(p.A, c.J, c.J);
  }
  return total;
}

IrrResult dim_irr_stalk(const Problem& p, size_t i, const Rat& s, uint64_t seed,
                        const GroebnerOptions& opts) {
  if (!p.generic_beta())
    throw AssumptionViolated("the irregularity dimension formula is stated for generic beta");
  if (!(s > 1)) throw AssumptionViolated("the order s must exceed 1");

  IrrResult res;
  res.total = 0;
  std::vector<size_t> K{i};
  for (size_t k : relevant_components(p, opts)) {
    const PrimaryComponent& c = p.components[k];
    if (std::find(c.J.begin(), c.J.end(), i) == c.J.end()) {
      res.per_component.push_back({k, Int(0)});
      continue;
    }
    ComponentClass cc = classify(c, p.A);
    if (!cc.toral || cc.krull_dim != p.A.d)
      throw AssumptionViolated("a relevant component is not toral of full dimension");

    std::vector<Rat> jumps = critical_slopes(p.A, c.J, K);
    Rat s_plus = s + 1;
    for (const Rat& j : jumps)
      if (j > s) {
        s_plus = (s + j) / 2;
        break;
      }
    Rat one_plus = jumps.empty() ? Rat(2) : (Rat(1) + jumps.front()) / 2;
    s_plus.canonicalize();
    one_plus.canonicalize();

    Umbrella us = compute_umbrella(p.A, c.J, {K, s_plus});
    Umbrella u1 = compute_umbrella(p.A, c.J, {K, one_plus});

    Int sum(0);
    for (const auto& f : us.faces) {
      if (f.cols.empty() || u1.has_face(f.cols)) continue;
      if (std::find(f.cols.begin(), f.cols.end(), i) != f.cols.end()) continue;
      sum += normalized_volume(p.A, c.J, f.cols);
    }
    Multiplicity mu = multiplicity(c, p.A, seed + k, opts);
    Int dim = mu.mu * sum;
    res.total += dim;
    res.per_component.push_back({k, std::move(dim)});
  }
  return res;
}

}  // namespace bdm
