#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bdm/errors.hpp"
#include "bdm/groebner.hpp"
#include "oracles.hpp"

using namespace bdm;

namespace {

Poly make(std::vector<std::pair<Exponent, long>> terms, const TermOrder& ord) {
  std::vector<Term> ts;
  for (auto& [e, c] : terms) ts.push_back({e, Rat(c)});
  return Poly(std::move(ts), ord);
}

}  // namespace

TEST_CASE("term order comparisons") {
  TermOrder lex = TermOrder::lex();
  TermOrder grl = TermOrder::grevlex();
  // Lex: x > y^5.
  CHECK(lex.compare({1, 0}, {0, 5}) == 1);
  // Grevlex: degree first.
  CHECK(grl.compare({1, 0}, {0, 5}) == -1);
  CHECK(grl.compare({2, 1}, {1, 2}) == 1);
  CHECK(grl.compare({1, 1}, {1, 1}) == 0);
}

TEST_CASE("groebner basis is reduced and closes under S-polynomials") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(0, 3), nc(1, 3), sign(0, 1);
  TermOrder ord = TermOrder::grevlex();
  for (int trial = 0; trial < 30; ++trial) {
    size_t nv = 2 + trial % 2;
    std::vector<Poly> gens;
    size_t ngens = 2 + trial % 2;
    for (size_t g = 0; g < ngens; ++g) {
      Exponent a(nv), b(nv);
      for (size_t j = 0; j < nv; ++j) {
        a[j] = e(rng);
        b[j] = e(rng);
      }
      if (a == b) continue;
      gens.push_back(make({{a, nc(rng)}, {b, sign(rng) ? -1 : 1}}, ord));
    }
    if (gens.empty()) continue;
    std::vector<Poly> gb = buchberger(gens, ord);
    for (const auto& g : gens) CHECK(in_ideal(g, gb, ord));
    for (size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].lead().coeff == 1);  // monic
      for (size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero());
      // Reduced: no term of gb[i] divisible by another lead.
      for (size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb[i].terms()) CHECK(!divides(gb[j].lead().exp, t.exp));
      }
    }
  }
}

TEST_CASE("normal form is idempotent and a remainder") {
  TermOrder ord = TermOrder::grevlex();
  std::vector<Poly> gens = {make({{{2, 0}, 1}, {{0, 1}, -1}}, ord),
                            make({{{0, 2}, 1}}, ord)};
  std::vector<Poly> gb = buchberger(gens, ord);
  Poly p = make({{{3, 1}, 5}, {{1, 0}, 2}, {{0, 0}, 7}}, ord);
  Poly r = normal_form(p, gb, ord);
  CHECK(normal_form(r, gb, ord) == r);
  // p - r lies in the ideal.
  Poly diff = p.add_scaled(r, Rat(-1), Exponent(2, 0), ord);
  CHECK(in_ideal(diff, gb, ord));
  // No term of r is reducible.
  for (const auto& t : r.terms())
    for (const auto& g : gb) CHECK(!divides(g.lead().exp, t.exp));
}

TEST_CASE("colength of x^2-y, y^2 is 4") {
  TermOrder ord = TermOrder::grevlex();
  std::vector<Poly> gens = {make({{{2, 0}, 1}, {{0, 1}, -1}}, ord),
                            make({{{0, 2}, 1}}, ord)};
  auto c = artinian_colength(gens, {0, 1}, ord);
  REQUIRE(c.has_value());
  CHECK(*c == 4);
}

TEST_CASE("non-Artinian ideal has no finite colength") {
  TermOrder ord = TermOrder::grevlex();
  std::vector<Poly> gens = {make({{{1, 1}, 1}}, ord)};
  CHECK(!artinian_colength(gens, {0, 1}, ord).has_value());
}

TEST_CASE("zero ideal in zero variables has colength 1") {
  TermOrder ord = TermOrder::grevlex();
  auto c = artinian_colength({}, {}, ord);
  REQUIRE(c.has_value());
  CHECK(*c == 1);
}

TEST_CASE("minimalize monomials") {
  std::vector<Exponent> gens = {{2, 0}, {2, 1}, {0, 3}, {2, 0}};
  std::vector<Exponent> min = minimalize_monomials(gens);
  REQUIRE(min.size() == 2);
  CHECK(std::find(min.begin(), min.end(), Exponent{2, 0}) != min.end());
  CHECK(std::find(min.begin(), min.end(), Exponent{0, 3}) != min.end());
}

TEST_CASE("standard pairs cover exactly the standard monomials") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> e(0, 3), pick(0, 2);
  const int bound = 8;
  for (int trial = 0; trial < 25; ++trial) {
    size_t nv = 2 + trial % 3;
    std::vector<Exponent> gens;
    size_t ngens = 1 + trial % 4;
    for (size_t g = 0; g < ngens; ++g) {
      Exponent a(nv, 0);
      for (size_t j = 0; j < nv; ++j) a[j] = e(rng);
      if (total_degree(a) == 0) continue;
      gens.push_back(a);
    }
    if (gens.empty()) continue;
    std::vector<Exponent> min = minimalize_monomials(gens);
    std::vector<StandardPair> pairs = standard_pairs(min, nv);

    auto covered = [&](const Exponent& m) {
      for (const auto& p : pairs) {
        bool ok = true;
        for (size_t j = 0; j < nv; ++j) {
          bool freev = std::find(p.free.begin(), p.free.end(), j) != p.free.end();
          if (freev ? m[j] < p.root[j] : m[j] != p.root[j]) ok = false;
        }
        if (ok) return true;
      }
      return false;
    };

    // Walk the full degree box.
    Exponent m(nv, 0);
    for (;;) {
      CHECK(covered(m) == oracles::is_standard(m, min));
      size_t j = 0;
      while (j < nv && m[j] == bound) {
        m[j] = 0;
        ++j;
      }
      if (j == nv) break;
      ++m[j];
    }
  }
}

TEST_CASE("groebner caps raise a resource error") {
  TermOrder ord = TermOrder::lex();
  // x^2 - y z, y^2 - x z, z^2 - x y under lex is small, but a tiny pair cap
  // still trips.
  std::vector<Poly> gens = {make({{{2, 0, 0}, 1}, {{0, 1, 1}, -1}}, ord),
                            make({{{0, 2, 0}, 1}, {{1, 0, 1}, -1}}, ord),
                            make({{{0, 0, 2}, 1}, {{1, 1, 0}, -1}}, ord)};
  GroebnerOptions tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(gens, ord, tiny), ResourceLimit);
}
