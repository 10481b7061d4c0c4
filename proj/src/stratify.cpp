#include "bdm/stratify.hpp"

#include <algorithm>

#include "bdm/errors.hpp"
#include "bdm/ideal.hpp"
#include "bdm/linsolve.hpp"

namespace bdm {

namespace {

// Row-reduce `rows` to RREF with unit pivots, dropping zero rows; rows come
// back sorted by pivot column.
std::vector<RatVec> rref_rows(std::vector<RatVec> rows) {
  std::vector<RatVec> basis;
  for (auto& r : rows) {
    for (const auto& b : basis) {
      size_t p = 0;
      while (b[p] == 0) ++p;
      if (r[p] != 0) {
        Rat f = r[p];
        for (size_t j = 0; j < r.size(); ++j) {
          r[j] -= f * b[j];
          r[j].canonicalize();
        }
      }
    }
    size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) continue;
    Rat f = r[p];
    for (auto& x : r) {
      x /= f;
      x.canonicalize();
    }
    // clear this pivot in the existing basis
    for (auto& b : basis) {
      if (b[p] != 0) {
        Rat g = b[p];
        for (size_t j = 0; j < r.size(); ++j) {
          b[j] -= g * r[j];
          b[j].canonicalize();
        }
      }
    }
    basis.push_back(std::move(r));
  }
  std::sort(basis.begin(), basis.end(), [](const RatVec& a, const RatVec& b) {
    size_t pa = 0, pb = 0;
    while (a[pa] == 0) ++pa;
    while (b[pb] == 0) ++pb;
    return pa < pb;
  });
  return basis;
}

// Reduce x by the RREF rows; residual is zero iff x is in their span.
RatVec reduce_by(const std::vector<RatVec>& basis, RatVec x) {
  for (const auto& b : basis) {
    size_t p = 0;
    while (b[p] == 0) ++p;
    if (x[p] != 0) {
      Rat f = x[p];
      for (size_t j = 0; j < x.size(); ++j) {
        x[j] -= f * b[j];
        x[j].canonicalize();
      }
    }
  }
  return x;
}

}  // namespace

AffineTranslate make_translate(RatVec offset, const std::vector<RatVec>& directions) {
  AffineTranslate t;
  t.span = rref_rows(directions);
  t.offset = reduce_by(t.span, std::move(offset));
  return t;
}

bool AffineTranslate::contains_point(const RatVec& x) const {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    r[i] = x[i] - offset[i];
    r[i].canonicalize();
  }
  return is_zero(reduce_by(span, std::move(r)));
}

bool AffineTranslate::contains_translate(const AffineTranslate& o) const {
  if (!contains_point(o.offset)) return false;
  for (const auto& v : o.span)
    if (!is_zero(reduce_by(span, v))) return false;
  return true;
}

void AffineArrangement::add(const AffineTranslate& t, size_t component) {
  for (auto& e : translates) {
    if (e.translate == t) {
      if (!std::binary_search(e.components.begin(), e.components.end(), component)) {
        e.components.push_back(component);
        std::sort(e.components.begin(), e.components.end());
      }
      return;
    }
  }
  translates.push_back({t, {component}});
}

bool AffineArrangement::contains_point(const RatVec& x) const {
  for (const auto& e : translates)
    if (e.translate.contains_point(x)) return true;
  return false;
}

bool AffineArrangement::has_full(size_t d) const {
  for (const auto& e : translates)
    if (e.translate.is_full(d)) return true;
  return false;
}

ComponentClass classify(const PrimaryComponent& c, const MatrixA& A) {
  ComponentClass cc;
  cc.krull_dim = c.J.size() - c.character.lattice.rank();
  cc.rank_AJ = c.J.empty() ? 0 : rank(A.data.select_cols(c.J));
  cc.toral = cc.krull_dim == cc.rank_AJ;
  return cc;
}

std::vector<AffineTranslate> qdeg_component(const PrimaryComponent& c, const MatrixA& A,
                                            const TermOrder& ord, const GroebnerOptions& opts) {
  std::vector<Poly> gb = buchberger(component_ideal_gens(c, A.n, ord, opts), ord, opts);
  std::vector<Exponent> in = initial_ideal(gb);
  std::vector<StandardPair> pairs = standard_pairs(in, A.n);

  std::vector<AffineTranslate> out;
  for (const auto& sp : pairs) {
    IntVec deg = A.degree(sp.root);
    RatVec offset(A.d);
    for (size_t i = 0; i < A.d; ++i) offset[i] = Rat(-deg[i]);
    std::vector<RatVec> dirs;
    for (size_t j : sp.free) {
      RatVec col(A.d);
      for (size_t i = 0; i < A.d; ++i) col[i] = Rat(A.data.at(i, j));
      dirs.push_back(std::move(col));
    }
    AffineTranslate t = make_translate(std::move(offset), dirs);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  // Drop translates contained in others.
  std::vector<AffineTranslate> merged;
  for (size_t i = 0; i < out.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < out.size() && keep; ++j)
      if (i != j && out[j].contains_translate(out[i]) && !(out[i] == out[j])) keep = false;
    if (keep) merged.push_back(out[i]);
  }
  return merged;
}

AffineArrangement andean_arrangement(const Problem& p, const GroebnerOptions& opts) {
  AffineArrangement arr;
  for (size_t k = 0; k < p.components.size(); ++k) {
    if (classify(p.components[k], p.A).toral) continue;
    for (const auto& t : qdeg_component(p.components[k], p.A, TermOrder::grevlex(), opts))
      arr.add(t, k);
  }
  return arr;
}

bool is_holonomic(const Problem& p, const GroebnerOptions& opts) {
  AffineArrangement andean = andean_arrangement(p, opts);
  if (p.generic_beta()) return !andean.has_full(p.A.d);
  RatVec mb(p.A.d);
  for (size_t i = 0; i < p.A.d; ++i) {
    mb[i] = -(*p.beta)[i];
    mb[i].canonicalize();
  }
  return !andean.contains_point(mb);
}

std::vector<size_t> relevant_components(const Problem& p, const GroebnerOptions& opts) {
  if (!is_holonomic(p, opts)) throw NotHolonomic("-beta lies on the Andean arrangement");
  std::vector<size_t> out;
  for (size_t k = 0; k < p.components.size(); ++k) {
    std::vector<AffineTranslate> q = qdeg_component(p.components[k], p.A, TermOrder::grevlex(), opts);
    bool rel = false;
    if (p.generic_beta()) {
      for (const auto& t : q) rel = rel || t.is_full(p.A.d);
    } else {
      RatVec mb(p.A.d);
      for (size_t i = 0; i < p.A.d; ++i) {
        mb[i] = -(*p.beta)[i];
        mb[i].canonicalize();
      }
      for (const auto& t : q) rel = rel || t.contains_point(mb);
    }
    if (rel) out.push_back(k);
  }
  return out;
}

RegularityResult is_regular(const Problem& p, const GroebnerOptions& opts) {
  if (!is_holonomic(p, opts)) return {RegularityVerdict::NotHolonomic, {}};
  RegularityResult r{RegularityVerdict::Regular, {}};
  for (size_t k : relevant_components(p, opts))
    if (!is_standard_homogeneous_prime(p.components[k])) r.witnesses.push_back(k);
  if (!r.witnesses.empty()) r.verdict = RegularityVerdict::Irregular;
  return r;
}

AffineArrangement nonregular_arrangement(const Problem& p, const GroebnerOptions& opts) {
  AffineArrangement arr;
  for (size_t k = 0; k < p.components.size(); ++k) {
    bool andean = !classify(p.components[k], p.A).toral;
    if (!andean && is_standard_homogeneous_prime(p.components[k])) continue;
    for (const auto& t : qdeg_component(p.components[k], p.A, TermOrder::grevlex(), opts))
      arr.add(t, k);
  }
  return arr;
}

Stratification stratify_parameters(const Problem& p, const GroebnerOptions& opts) {
  Stratification st;
  for (size_t k = 0; k < p.components.size(); ++k)
    for (const auto& t : qdeg_component(p.components[k], p.A, TermOrder::grevlex(), opts))
      st.arrangement.add(t, k);

  const size_t m = st.arrangement.translates.size();
  const size_t d = p.A.d;
  if (m > 20) throw ResourceLimit("too many distinct quasidegree translates to stratify");

  // Equation form of each translate: rows h with h . x = h . offset.
  struct Eqns {
    std::vector<RatVec> rows;
    RatVec rhs;
  };
  std::vector<Eqns> eq(m);
  for (size_t i = 0; i < m; ++i) {
    const AffineTranslate& t = st.arrangement.translates[i].translate;
    RatMatrix S(t.span.size(), d);
    for (size_t r = 0; r < t.span.size(); ++r)
      for (size_t j = 0; j < d; ++j) S.at(r, j) = t.span[r][j];
    for (const auto& h : rational_kernel(S)) {
      Rat rhs(0);
      for (size_t j = 0; j < d; ++j) rhs += h[j] * t.offset[j];
      rhs.canonicalize();
      eq[i].rows.push_back(h);
      eq[i].rhs.push_back(rhs);
    }
  }

  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    // X = intersection of the selected translates.
    std::vector<RatVec> rows;
    RatVec rhs;
    for (size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      rows.insert(rows.end(), eq[i].rows.begin(), eq[i].rows.end());
      rhs.insert(rhs.end(), eq[i].rhs.begin(), eq[i].rhs.end());
    }
    RatVec particular(d, Rat(0));
    std::vector<RatVec> kernel;
    if (rows.empty()) {
      for (size_t j = 0; j < d; ++j) {
        RatVec e(d, Rat(0));
        e[j] = 1;
        kernel.push_back(std::move(e));
      }
    } else {
      RatMatrix M(rows.size(), d);
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < d; ++j) M.at(r, j) = rows[r][j];
      auto sol = solve_rational(M, rhs);
      if (!sol) continue;  // empty intersection
      particular = sol->particular;
      kernel = sol->kernel;
    }

    // The pattern is realizable iff X is not covered by any excluded
    // translate (X is an affine subspace, hence irreducible).
    bool feasible = true;
    std::vector<size_t> excluded;
    for (size_t i = 0; i < m && feasible; ++i) {
      if (mask >> i & 1) continue;
      const AffineTranslate& t = st.arrangement.translates[i].translate;
      bool inside = t.contains_point(particular);
      for (const auto& v : kernel)
        inside = inside && is_zero(reduce_by(t.span, v));
      if (inside)
        feasible = false;
      else
        excluded.push_back(i);
    }
    if (!feasible) continue;

    // Moment-curve search for a point of X off every excluded translate.
    RatVec y;
    bool found = false;
    size_t tries = m * kernel.size() + 2;
    for (size_t tv = 0; tv < tries && !found; ++tv) {
      RatVec cand = particular;
      Rat t(tv);
      Rat pw = t;
      for (const auto& v : kernel) {
        for (size_t j = 0; j < d; ++j) {
          cand[j] += pw * v[j];
          cand[j].canonicalize();
        }
        pw *= t;
      }
      bool ok = true;
      for (size_t i : excluded)
        ok = ok && !st.arrangement.translates[i].translate.contains_point(cand);
      if (ok) {
        y = std::move(cand);
        found = true;
      }
    }
    if (!found) throw InternalError("stratum sample search exhausted its bound");

    Stratum s;
    s.pattern.assign(m, false);
    std::vector<size_t> rel;
    for (size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      s.pattern[i] = true;
      for (size_t c : st.arrangement.translates[i].components) rel.push_back(c);
    }
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    s.relevant = std::move(rel);
    s.sample_beta.resize(d);
    for (size_t j = 0; j < d; ++j) {
      s.sample_beta[j] = -y[j];
      s.sample_beta[j].canonicalize();
    }
    st.strata.push_back(std::move(s));
  }

  std::sort(st.strata.begin(), st.strata.end(), [](const Stratum& a, const Stratum& b) {
    size_t ca = std::count(a.pattern.begin(), a.pattern.end(), true);
    size_t cb = std::count(b.pattern.begin(), b.pattern.end(), true);
    if (ca != cb) return ca < cb;
    return a.pattern < b.pattern;
  });
  return st;
}

}  // namespace bdm
