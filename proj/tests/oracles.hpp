#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library:
// brute-force hull enumeration for umbrellas, shoelace areas for normalized
// volumes, divisibility scans for standard monomials. Deliberately written
// with different algorithms than src/.

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "bdm/irregularity.hpp"
#include "bdm/linsolve.hpp"
#include "bdm/model.hpp"
#include "bdm/umbrella.hpp"

namespace oracles {

using namespace bdm;

inline Problem load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

// All faces of conv({0} ∪ {a_j / v_j}) avoiding the origin, as sorted global
// column sets, via exhaustive hyperplane enumeration and intersection
// closure. Returns the empty face as {}.
inline std::set<std::vector<size_t>> hull_umbrella(const MatrixA& A, const std::vector<size_t>& J,
                                                   const std::vector<size_t>& K, const Rat& r) {
  IntrinsicCols ic = intrinsic_columns(A, J);
  const size_t k = ic.rank, m = J.size();
  std::vector<bool> inK(A.n, false);
  for (size_t j : K) inK[j] = true;

  std::vector<RatVec> P;  // P[0] = origin, P[t+1] = q_{J[t]}
  P.push_back(RatVec(k, Rat(0)));
  for (size_t t = 0; t < m; ++t) {
    RatVec q(k);
    Rat v = inK[J[t]] ? r : Rat(1);
    for (size_t i = 0; i < k; ++i) {
      q[i] = Rat(ic.cols[t][i]) / v;
      q[i].canonicalize();
    }
    P.push_back(q);
  }
  const size_t M = P.size();

  // Facet supporting hyperplanes h.x = c from every k-subset of points.
  std::set<std::set<size_t>> facets;
  for (size_t mask = 0; mask < (size_t(1) << M); ++mask) {
    if (size_t(__builtin_popcountll(mask)) != k) continue;
    RatMatrix eq(k, k + 1);
    size_t row = 0;
    for (size_t i = 0; i < M; ++i) {
      if (!(mask >> i & 1)) continue;
      for (size_t c = 0; c < k; ++c) eq.at(row, c) = P[i][c];
      eq.at(row, k) = Rat(-1);  // h.p - c = 0
      ++row;
    }
    std::vector<RatVec> ker = rational_kernel(eq);
    if (ker.size() != 1) continue;
    RatVec h(ker[0].begin(), ker[0].begin() + k);
    Rat c = ker[0][k];
    bool all_zero = true;
    for (const auto& x : h)
      if (x != 0) all_zero = false;
    if (all_zero) continue;

    bool above = false, below = false;
    for (size_t i = 0; i < M; ++i) {
      Rat d(0);
      for (size_t t = 0; t < k; ++t) d += h[t] * P[i][t];
      d.canonicalize();
      if (d > c) above = true;
      if (d < c) below = true;
    }
    if (above && below) continue;
    std::set<size_t> f;
    for (size_t i = 0; i < M; ++i) {
      Rat d(0);
      for (size_t t = 0; t < k; ++t) d += h[t] * P[i][t];
      if (d == c) f.insert(i);
    }
    if (f.size() < M) facets.insert(f);
  }

  // Faces = intersections of facets.
  std::set<std::set<size_t>> faces(facets);
  faces.insert(std::set<size_t>{});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<size_t>> cur(faces.begin(), faces.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        std::set<size_t> inter;
        std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(), cur[b].end(),
                              std::inserter(inter, inter.begin()));
        if (faces.insert(inter).second) grew = true;
      }
  }

  std::set<std::vector<size_t>> out;
  for (const auto& f : faces) {
    if (f.count(0)) continue;  // face through the origin
    std::vector<size_t> cols;
    for (size_t i : f) cols.push_back(J[i - 1]);
    std::sort(cols.begin(), cols.end());
    out.insert(cols);
  }
  out.insert({});
  return out;
}

inline std::set<std::vector<size_t>> module_umbrella(const MatrixA& A,
                                                     const std::vector<size_t>& J,
                                                     const std::vector<size_t>& K, const Rat& r) {
  Umbrella u = compute_umbrella(A, J, {K, r});
  std::set<std::vector<size_t>> out;
  for (const auto& f : u.faces) out.insert(f.cols);
  return out;
}

// Twice the Euclidean area of the convex hull (Andrew monotone chain +
// shoelace); equals the Z^2-normalized volume of conv({0} ∪ pts).
inline Int shoelace_volume(std::vector<IntVec> pts) {
  pts.push_back(IntVec{0, 0});
  std::sort(pts.begin(), pts.end(), [](const IntVec& a, const IntVec& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) -> Int {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<IntVec> hull(2 * pts.size());
  size_t h = 0;
  for (const auto& p : pts) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], p) <= 0) --h;
    hull[h++] = p;
  }
  size_t lower = h + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], *it) <= 0) --h;
    hull[h++] = *it;
  }
  hull.resize(h - 1);
  Int area2(0);
  for (size_t i = 0; i < hull.size(); ++i) {
    const IntVec& a = hull[i];
    const IntVec& b = hull[(i + 1) % hull.size()];
    area2 += a[0] * b[1] - a[1] * b[0];
  }
  return area2 < 0 ? Int(-area2) : area2;
}

inline bool is_standard(const Exponent& mono, const std::vector<Exponent>& gens) {
  for (const auto& g : gens) {
    bool div = true;
    for (size_t j = 0; j < g.size(); ++j)
      if (mono[j] < g[j]) div = false;
    if (div) return false;
  }
  return true;
}

}  // namespace oracles

#endif
