#include "bdm/umbrella.hpp"

#include <algorithm>
#include <map>

#include "bdm/errors.hpp"
#include "bdm/feasible.hpp"
#include "bdm/linsolve.hpp"
#include "bdm/stratify.hpp"

namespace bdm {

bool Umbrella::same_faces(const Umbrella& o) const {
  if (faces.size() != o.faces.size()) return false;
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].cols != o.faces[i].cols) return false;
  return true;
}

bool Umbrella::has_face(const std::vector<size_t>& cols) const {
  for (const auto& f : faces)
    if (f.cols == cols) return true;
  return false;
}

IntrinsicCols intrinsic_columns(const MatrixA& A, const std::vector<size_t>& J) {
  IntrinsicCols ic{0, {}, Lattice(A.d), Lattice(A.d)};
  std::vector<IntVec> gens;
  for (size_t j : J) gens.push_back(A.column(j));
  ic.zaj = Lattice(A.d, gens);
  ic.sat = saturate(ic.zaj);
  ic.rank = ic.sat.rank();
  for (size_t j : J) {
    auto c = ic.sat.coordinates(A.column(j));
    if (!c) throw InternalError("column outside the saturation of its own span");
    ic.cols.push_back(std::move(*c));
  }
  return ic;
}

Umbrella compute_umbrella(const MatrixA& A, const std::vector<size_t>& J, const WeightL& w) {
  if (w.r < 1) throw AssumptionViolated("umbrella parameter r must be >= 1");
  IntrinsicCols ic = intrinsic_columns(A, J);
  const size_t k = ic.rank;
  const size_t m = J.size();

  std::vector<bool> inK(A.n, false);
  for (size_t j : w.K) inK[j] = true;

  // Scaled points q_j = a_j / v_j in intrinsic coordinates.
  std::vector<RatVec> q(m);
  for (size_t t = 0; t < m; ++t) {
    Rat v = inK[J[t]] ? w.r : Rat(1);
    q[t].resize(k);
    for (size_t i = 0; i < k; ++i) {
      q[t][i] = Rat(ic.cols[t][i]) / v;
      q[t][i].canonicalize();
    }
  }

  Umbrella u;
  u.intrinsic_rank = k;
  u.faces.push_back({{}, RatVec(k, Rat(0))});  // empty face, h = 0

  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    std::vector<size_t> tau;
    for (size_t t = 0; t < m; ++t)
      if (mask >> t & 1) tau.push_back(t);

    // Supporting functional: h . q_j = 1 on tau.
    RatMatrix M(tau.size(), k);
    RatVec one(tau.size(), Rat(1));
    for (size_t r = 0; r < tau.size(); ++r)
      for (size_t i = 0; i < k; ++i) M.at(r, i) = q[tau[r]][i];
    auto sol = solve_rational(M, one);
    if (!sol) continue;

    // Strict side condition for the complement, over the solution space
    // h = h0 + sum t_i w_i.
    std::vector<LinConstraint> cons;
    bool direct_ok = true;
    for (size_t t = 0; t < m; ++t) {
      if (mask >> t & 1) continue;
      Rat base(0);
      for (size_t i = 0; i < k; ++i) base += sol->particular[i] * q[t][i];
      base.canonicalize();
      if (sol->kernel.empty()) {
        if (!(base < 1)) direct_ok = false;
      } else {
        LinConstraint c;
        c.a.resize(sol->kernel.size());
        for (size_t w2 = 0; w2 < sol->kernel.size(); ++w2) {
          Rat dot(0);
          for (size_t i = 0; i < k; ++i) dot += sol->kernel[w2][i] * q[t][i];
          dot.canonicalize();
          c.a[w2] = dot;
        }
        c.c = Rat(1) - base;
        c.strict = true;
        cons.push_back(std::move(c));
      }
    }
    bool ok = direct_ok;
    if (ok && !sol->kernel.empty()) ok = feasible(std::move(cons), sol->kernel.size());
    if (!ok) continue;

    std::vector<size_t> cols;
    for (size_t t : tau) cols.push_back(J[t]);
    u.faces.push_back({std::move(cols), sol->particular});
  }

  std::sort(u.faces.begin(), u.faces.end(),
            [](const UmbrellaFace& a, const UmbrellaFace& b) { return a.cols < b.cols; });
  return u;
}

std::vector<Rat> critical_slopes(const MatrixA& A, const std::vector<size_t>& J,
                                 const std::vector<size_t>& K) {
  IntrinsicCols ic = intrinsic_columns(A, J);
  const size_t k = ic.rank;
  const size_t m = J.size();

  std::vector<bool> inK(A.n, false);
  for (size_t j : K) inK[j] = true;

  // Candidate r values from mixed supporting systems
  //   h . a_j = 1 (j in tau, j not in K),  h . a_j = r (j in tau and K),
  // in the unknowns (h, r).
  std::vector<Rat> cand;
  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    bool hasK = false, hasF = false;
    for (size_t t = 0; t < m; ++t)
      if (mask >> t & 1) (inK[J[t]] ? hasK : hasF) = true;
    if (!hasK || !hasF) continue;

    std::vector<size_t> tau;
    for (size_t t = 0; t < m; ++t)
      if (mask >> t & 1) tau.push_back(t);
    RatMatrix M(tau.size(), k + 1);
    RatVec rhs(tau.size());
    for (size_t r = 0; r < tau.size(); ++r) {
      for (size_t i = 0; i < k; ++i) M.at(r, i) = Rat(ic.cols[tau[r]][i]);
      if (inK[J[tau[r]]]) {
        M.at(r, k) = Rat(-1);
        rhs[r] = 0;
      } else {
        M.at(r, k) = 0;
        rhs[r] = 1;
      }
    }
    auto sol = solve_rational(M, rhs);
    if (!sol) continue;
    bool r_unique = true;
    for (const auto& v : sol->kernel)
      if (v[k] != 0) r_unique = false;
    if (!r_unique) continue;
    Rat r = sol->particular[k];
    r.canonicalize();
    if (r > 1 && std::find(cand.begin(), cand.end(), r) == cand.end()) cand.push_back(r);
  }
  std::sort(cand.begin(), cand.end());

  // Keep only values where the umbrella actually changes.
  std::vector<Rat> out;
  for (size_t i = 0; i < cand.size(); ++i) {
    Rat lo = i == 0 ? Rat(1) : cand[i - 1];
    Rat left = (lo + cand[i]) / 2;
    Rat right = i + 1 < cand.size() ? Rat((cand[i] + cand[i + 1]) / 2) : Rat(cand[i] + 1);
    left.canonicalize();
    right.canonicalize();
    Umbrella ul = compute_umbrella(A, J, {K, left});
    Umbrella um = compute_umbrella(A, J, {K, cand[i]});
    Umbrella ur = compute_umbrella(A, J, {K, right});
    if (!(ul.same_faces(um) && um.same_faces(ur))) out.push_back(cand[i]);
  }
  return out;
}

std::vector<SlopeEntry> slopes_of_module(const Problem& p, const std::vector<size_t>& K,
                                         const GroebnerOptions& opts) {
  std::vector<size_t> rel = relevant_components(p, opts);
  std::map<Rat, std::vector<size_t>> merged;
  for (size_t c : rel) {
    if (!classify(p.components[c], p.A).toral) continue;
    for (const Rat& s : critical_slopes(p.A, p.components[c].J, K)) merged[s].push_back(c);
  }
  std::vector<SlopeEntry> out;
  for (auto& [s, comps] : merged) out.push_back({s, std::move(comps)});
  return out;
}

}  // namespace bdm
