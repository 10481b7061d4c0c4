#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bdm/errors.hpp"
#include "bdm/feasible.hpp"
#include "bdm/lattice.hpp"
#include "bdm/linsolve.hpp"
#include "bdm/normalform.hpp"

using namespace bdm;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

// Cofactor expansion, independent of the Bareiss elimination in det().
Int det_cofactor(const IntMatrix& m) {
  size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Int sum(0);
  for (size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Int term = m.at(0, j) * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

TEST_CASE("hermite normal form invariants on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    IntMatrix M = random_matrix(rng, r, c, -9, 9);
    HnfResult h = hermite_normal_form(M);
    // H = U * M and U unimodular.
    CHECK(h.H == h.U * M);
    if (r <= 4) {
      Int du = det_cofactor(h.U);
      CHECK((du == 1 || du == -1));
    }
    // Echelon: pivots positive, strictly right of previous, entries above
    // each pivot reduced into [0, pivot).
    size_t prev = 0;
    bool seen_zero_row = false;
    for (size_t i = 0; i < h.H.rows(); ++i) {
      size_t p = 0;
      while (p < c && h.H.at(i, p) == 0) ++p;
      if (p == c) {
        seen_zero_row = true;
        continue;
      }
      CHECK(!seen_zero_row);  // zero rows come last
      CHECK(h.H.at(i, p) > 0);
      if (i > 0) CHECK(p > prev);
      prev = p;
      for (size_t k = 0; k < i; ++k) {
        CHECK(h.H.at(k, p) >= 0);
        CHECK(h.H.at(k, p) < h.H.at(i, p));
      }
    }
    // Same row lattice both ways.
    Lattice lm(c, [&] {
      std::vector<IntVec> rows;
      for (size_t i = 0; i < r; ++i) rows.push_back(M.row(i));
      return rows;
    }());
    for (size_t i = 0; i < h.H.rows(); ++i) CHECK(lm.contains(h.H.row(i)));
    Lattice lh(c, [&] {
      std::vector<IntVec> rows;
      for (size_t i = 0; i < h.H.rows(); ++i) rows.push_back(h.H.row(i));
      return rows;
    }());
    for (size_t i = 0; i < r; ++i) CHECK(lh.contains(M.row(i)));
  }
}

TEST_CASE("hermite normal form handles non-divisible entries") {
  // Column (2, -1): the gcd loop must terminate with pivot 1.
  IntMatrix M{{2}, {-1}};
  HnfResult h = hermite_normal_form(M);
  CHECK(h.H.at(0, 0) == 1);
  CHECK(h.H.at(1, 0) == 0);
}

TEST_CASE("smith normal form invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    IntMatrix M = random_matrix(rng, r, c, -6, 6);
    SnfResult s = smith_normal_form(M);
    CHECK(s.S == s.U * M * s.V);
    Int du = det_cofactor(s.U), dv = det_cofactor(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    size_t n = std::min(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.S.at(i, j) == 0);
    for (size_t t = 0; t + 1 < n; ++t) {
      CHECK(s.S.at(t, t) >= 0);
      if (s.S.at(t, t) != 0 && s.S.at(t + 1, t + 1) != 0)
        CHECK(s.S.at(t + 1, t + 1) % s.S.at(t, t) == 0);
      if (s.S.at(t, t) == 0) CHECK(s.S.at(t + 1, t + 1) == 0);
    }
    if (r == c) {
      Int prod(1);
      for (size_t t = 0; t < n; ++t) prod *= s.S.at(t, t);
      CHECK(abs(prod) == abs(det_cofactor(M)));
    }
  }
}

TEST_CASE("rank of the 2x4 doubled-column matrix is 2") {
  IntMatrix A{{1, 2, 2, 0}, {1, 2, 0, 2}};
  CHECK(rank(A) == 2);
}

TEST_CASE("kernel lattice is the saturated integer kernel") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + trial % 3, c = 2 + trial % 4;
    IntMatrix M = random_matrix(rng, r, c, -5, 5);
    Lattice K = kernel_lattice(M);
    CHECK(K.rank() == c - rank(M));
    for (size_t i = 0; i < K.rank(); ++i) {
      IntVec v = K.basis_vector(i);
      IntVec Mv = M * v;
      for (const auto& x : Mv) CHECK(x == 0);
    }
    CHECK(saturate(K) == K);
  }
}

TEST_CASE("kernel of the columns (1,0),(0,1),(3,3)") {
  IntMatrix M{{1, 0, 3}, {0, 1, 3}};
  Lattice K = kernel_lattice(M);
  REQUIRE(K.rank() == 1);
  IntVec g = K.basis_vector(0);
  if (g[2] > 0)
    for (auto& x : g) x = -x;
  CHECK(g == IntVec{3, 3, -1});
}

TEST_CASE("saturation divides out content") {
  Lattice L(2, {IntVec{2, 4}});
  Lattice s = saturate(L);
  REQUIRE(s.rank() == 1);
  CHECK(s.basis_vector(0) == IntVec{1, 2});
  CHECK(*lattice_index(L, s) == 2);
}

TEST_CASE("lattice index") {
  CHECK(*lattice_index(Lattice(1, {IntVec{2}}), full_lattice(1)) == 2);
  Lattice two(2, {IntVec{2, 0}, IntVec{0, 2}});
  CHECK(*lattice_index(two, full_lattice(2)) == 4);
  // Rank drop: infinite index.
  CHECK(!lattice_index(Lattice(2, {IntVec{1, 0}}), full_lattice(2)).has_value());
  CHECK_THROWS_AS(lattice_index(full_lattice(1), Lattice(1, {IntVec{2}})), NotSublattice);
}

TEST_CASE("lattice coordinates round-trip") {
  Lattice L(4, {IntVec{2, -1, 0, 0}, IntVec{0, 0, 3, -1}});
  IntVec v{4, -2, -3, 1};  // 2*g1 - g2
  auto c = L.coordinates(v);
  REQUIRE(c.has_value());
  IntVec back(4, 0);
  for (size_t i = 0; i < L.rank(); ++i) {
    IntVec b = L.basis_vector(i);
    for (size_t j = 0; j < 4; ++j) back[j] += (*c)[i] * b[j];
  }
  CHECK(back == v);
  CHECK(!L.contains(IntVec{1, 0, 0, 0}));
}

TEST_CASE("rational solve round-trips on random systems") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    IntMatrix M = random_matrix(rng, r, c, -4, 4);
    // Build a solvable rhs from a random x.
    RatVec x(c);
    for (auto& xi : x) xi = Rat(d(rng), 1 + (d(rng) & 1));
    RatVec b = RatMatrix(M) * x;
    auto sol = solve_rational(M, b);
    REQUIRE(sol.has_value());
    RatVec bx = RatMatrix(M) * sol->particular;
    for (size_t i = 0; i < r; ++i) {
      Rat diff = bx[i] - b[i];
      diff.canonicalize();
      CHECK(diff == 0);
    }
    for (const auto& k : sol->kernel) {
      RatVec z = RatMatrix(M) * k;
      for (const auto& zi : z) CHECK(zi == 0);
    }
    CHECK(sol->kernel.size() == c - rank(M));
  }
}

TEST_CASE("insolvable system returns nullopt") {
  IntMatrix M{{1, 1}, {1, 1}};
  auto sol = solve_rational(M, RatVec{Rat(0), Rat(1)});
  CHECK(!sol.has_value());
}

TEST_CASE("rational kernel of an empty constraint set is the full space") {
  RatMatrix M(0, 3);
  CHECK(rational_kernel(M).size() == 3);
}

TEST_CASE("feasibility of strict systems") {
  // Constraints read a.x < c (strict) / a.x <= c.
  // 0 < x < 1: feasible.
  std::vector<LinConstraint> ok;
  ok.push_back({{Rat(-1)}, Rat(0), true});
  ok.push_back({{Rat(1)}, Rat(1), true});
  CHECK(feasible(ok, 1));
  // x < 0 and -x < 0: infeasible.
  std::vector<LinConstraint> bad;
  bad.push_back({{Rat(1)}, Rat(0), true});
  bad.push_back({{Rat(-1)}, Rat(0), true});
  CHECK(!feasible(bad, 1));
  // x + y > 2, x < 1, y < 1: infeasible.
  std::vector<LinConstraint> bad2;
  bad2.push_back({{Rat(-1), Rat(-1)}, Rat(-2), true});
  bad2.push_back({{Rat(1), Rat(0)}, Rat(1), true});
  bad2.push_back({{Rat(0), Rat(1)}, Rat(1), true});
  CHECK(!feasible(bad2, 2));
  // Non-strict boundary point: x <= 0 and -x <= 0 is feasible at 0.
  std::vector<LinConstraint> edge;
  edge.push_back({{Rat(1)}, Rat(0), false});
  edge.push_back({{Rat(-1)}, Rat(0), false});
  CHECK(feasible(edge, 1));
}
