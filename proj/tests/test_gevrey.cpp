#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bdm/errors.hpp"
#include "bdm/gevrey.hpp"
#include "oracles.hpp"

using namespace bdm;
using oracles::load_fixture;

namespace {

// All series tests run on the one-row example A = (2 3 2 2) with the
// component J = {1,2}, lattice Z(3,-2,0,0), trivial character and
// B = <d3^2 - d1 d4, d4^2>.
Problem worked() { return load_fixture("series_slope_three_halves.json"); }

std::optional<Rat> coeff_at(const PhiSeries& phi, const IntVec& u) {
  for (const auto& [uu, c] : phi.terms)
    if (uu == u) return c;
  return std::nullopt;
}

}  // namespace

TEST_CASE("series coefficients are falling-factorial ratios") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  PhiSeries phi = phi_series(p.A, c.J, c.character, RatVec{Rat(1, 6), Rat(0)}, 12);
  // Window |u|_inf <= 12 meets the lattice in multiples m(3,-2), m = -4..4;
  // positive m dies on the numerator (v_2 = 0), so five terms survive.
  CHECK(phi.terms.size() == 5);
  auto c0 = coeff_at(phi, IntVec{0, 0});
  REQUIRE(c0.has_value());
  CHECK(*c0 == Rat(1));
  // u = (-3, 2): (1/6)(1/6 - 1)(1/6 - 2) / (2 * 1) = 55/432.
  auto c1 = coeff_at(phi, IntVec{-3, 2});
  REQUIRE(c1.has_value());
  CHECK(*c1 == Rat(55, 432));
  // u = (-6, 4) continues the same pattern with four denominator factors.
  auto c2 = coeff_at(phi, IntVec{-6, 4});
  REQUIRE(c2.has_value());
  Rat num(1);
  for (int i = 0; i < 6; ++i) num *= Rat(1, 6) - i;
  CHECK(*c2 == num / Rat(24));
}

TEST_CASE("vanishing numerator terms are dropped, not poles") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  // v = (0, 0): every nonzero lattice step kills the numerator.
  PhiSeries phi = phi_series(p.A, c.J, c.character, RatVec{Rat(0), Rat(0)}, 12);
  CHECK(phi.terms.size() == 1);
  CHECK(phi.terms[0].first == IntVec{0, 0});
}

TEST_CASE("denominator poles are reported") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  // v = (-1, 1/2): at u = (3, -2) the numerator (1/2)(-1/2) survives but the
  // denominator (v_1 + 3)(v_1 + 2)(v_1 + 1) hits zero.
  CHECK_THROWS_AS(phi_series(p.A, c.J, c.character, RatVec{Rat(-1), Rat(1, 2)}, 12),
                  PochhammerPole);
}

TEST_CASE("base exponents split into two lattice classes") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  auto cands = exponent_candidates(c, p.A, RatVec{Rat(1, 3)}, 1, 12);
  REQUIRE(cands.size() == 2);
  std::set<RatVec> vs;
  for (const auto& e : cands) {
    CHECK(e.sigma == std::vector<size_t>{0});
    vs.insert(e.v);
  }
  CHECK(vs == std::set<RatVec>{RatVec{Rat(1, 6), Rat(0)}, RatVec{Rat(-4, 3), Rat(1)}});
  // Every candidate solves A_J v = beta'.
  for (const auto& e : cands) CHECK(Rat(2) * e.v[0] + Rat(3) * e.v[1] == Rat(1, 3));
}

TEST_CASE("automatic exponent search refuses faces of rank three") {
  Problem p = load_fixture("six_strata.json");
  const PrimaryComponent& c = p.components[0];  // J of rank 3
  CHECK_THROWS_AS(
      exponent_candidates(c, p.A, RatVec{Rat(1, 2), Rat(1, 3), Rat(1, 5)}, 5, 12),
      UnsupportedRank);
}

TEST_CASE("monomial socle of the worked component") {
  Problem p = worked();
  auto socle = monomial_socle(p.components[0], p.A);
  REQUIRE(socle.size() == 2);
  // d3^2 = d1 d4 and d4^2 = 0 force d3^4 = d1^2 d4^2 into the ideal.
  CHECK(socle[0] == std::pair<size_t, int>{2, 4});
  CHECK(socle[1] == std::pair<size_t, int>{3, 2});
}

TEST_CASE("solution space of the worked example") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  RatVec beta{Rat(1, 3)};
  GevreyBasis gb = gevrey_basis(c, p.A, beta, 1, 12);

  // 8 standard monomials of <d3^4, d4^2> times 2 exponent classes.
  CHECK(gb.unknowns.size() == 16);
  CHECK(gb.dimension == 8);
  CHECK(gb.slope_tag == Rat(3, 2));
  CHECK(gb.solutions.size() == 8);
  CHECK(gb.series.size() == 8);

  // The top corner of the staircase is forced to vanish: gamma with
  // d3^2 d4 and d3^3 d4, in both exponent classes.
  REQUIRE(gb.forced_zero.size() == 4);
  std::multiset<std::pair<int, int>> corners;
  for (size_t u : gb.forced_zero) {
    const Exponent& g = gb.unknowns[u].gamma;
    corners.insert({g[2], g[3]});
  }
  CHECK(corners == std::multiset<std::pair<int, int>>{{2, 1}, {2, 1}, {3, 1}, {3, 1}});

  // Relations hold on every reported solution.
  for (const RatVec& lambda : gb.solutions)
    for (const auto& rel : gb.relations) {
      Rat acc(0);
      for (const auto& [u, coeff] : rel) acc += coeff * lambda[u];
      CHECK(acc == 0);
    }

  // Each basis element is an exact Euler solution and is annihilated by the
  // component ideal away from the truncation boundary.
  for (size_t i = 0; i < gb.series.size(); ++i) {
    VerifyReport rep = verify_solution(gb, i, c, p.A, beta);
    CHECK(rep.euler_exact);
    CHECK(rep.interior_zero);
    CHECK(rep.interior_checked > 0);
  }
}

TEST_CASE("solution space is stable under doubling the truncation") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  RatVec beta{Rat(1, 3)};
  GevreyBasis a = gevrey_basis(c, p.A, beta, 1, 12);
  GevreyBasis b = gevrey_basis(c, p.A, beta, 1, 24);
  CHECK(a.dimension == b.dimension);
  CHECK(a.slope_tag == b.slope_tag);
  CHECK(a.unknowns.size() == b.unknowns.size());
  std::set<size_t> fa(a.forced_zero.begin(), a.forced_zero.end());
  std::set<size_t> fb(b.forced_zero.begin(), b.forced_zero.end());
  CHECK(fa == fb);
}

TEST_CASE("a second parameter value gives the same dimension") {
  Problem p = worked();
  const PrimaryComponent& c = p.components[0];
  RatVec beta{Rat(5, 7)};
  GevreyBasis gb = gevrey_basis(c, p.A, beta, 1, 12);
  CHECK(gb.unknowns.size() == 16);
  CHECK(gb.dimension == 8);
  CHECK(gb.slope_tag == Rat(3, 2));
  for (size_t i = 0; i < gb.series.size(); ++i) {
    VerifyReport rep = verify_solution(gb, i, c, p.A, beta);
    CHECK(rep.euler_exact);
    CHECK(rep.interior_zero);
  }
}

TEST_CASE("too small a truncation is refused") {
  Problem p = worked();
  CHECK_THROWS_AS(gevrey_basis(p.components[0], p.A, RatVec{Rat(1, 3)}, 1, 3),
                  TruncationTooSmall);
}
