#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bdm/errors.hpp"
#include "bdm/stratify.hpp"
#include "oracles.hpp"

using namespace bdm;
using oracles::load_fixture;

namespace {

// Andean component: A = [[1,1,0],[0,0,1]], J = {1,2} with the zero lattice
// (Krull dimension 2 > rank A_J = 1), C = <d3>.
const char* kAndean = R"({
  "A": [[1, 1, 0], [0, 0, 1]],
  "ideal": [{"plus": {"coeff": "1", "exp": [0, 0, 1]}}],
  "components": [
    {"J": [1, 2], "lattice": [], "character": [], "B": [{"plus": {"coeff": "1", "exp": [0, 0, 1]}}]}
  ],
  "beta": "generic"
})";

std::set<std::vector<size_t>> relevant_sets(const Stratification& st) {
  std::set<std::vector<size_t>> out;
  for (const auto& s : st.strata) out.insert(s.relevant);
  return out;
}

}  // namespace

TEST_CASE("component classification") {
  Problem p = load_fixture("irregular_on_line.json");
  for (const auto& c : p.components) CHECK(classify(c, p.A).toral);
  CHECK(classify(p.components[2], p.A).krull_dim == 2);  // J={1,3,4}, rank 1 lattice
  CHECK(classify(p.components[2], p.A).rank_AJ == 2);

  Problem a = parse_problem(kAndean);
  ComponentClass cc = classify(a.components[0], a.A);
  CHECK(!cc.toral);
  CHECK(cc.krull_dim == 2);
  CHECK(cc.rank_AJ == 1);
}

TEST_CASE("quasidegrees of the fixture components") {
  Problem p = load_fixture("irregular_on_line.json");
  // R/I_2: the line C(1,1).
  auto q2 = qdeg_component(p.components[1], p.A);
  REQUIRE(q2.size() == 1);
  CHECK(q2[0].dim() == 1);
  CHECK(q2[0].contains_point(RatVec{Rat(5), Rat(5)}));
  CHECK(!q2[0].contains_point(RatVec{Rat(1), Rat(0)}));
  // R/I_3: all of C^2.
  auto q3 = qdeg_component(p.components[2], p.A);
  REQUIRE(q3.size() == 1);
  CHECK(q3[0].dim() == 2);

  Problem big = load_fixture("six_strata.json");
  // R/I_4: the line C(1,1,1).
  auto q4 = qdeg_component(big.components[3], big.A);
  REQUIRE(q4.size() == 1);
  CHECK(q4[0].dim() == 1);
  CHECK(q4[0].contains_point(RatVec{Rat(3), Rat(3), Rat(3)}));
  // R/I_2 and R/I_3: the plane {y1 = 0}.
  for (size_t i : {size_t(1), size_t(2)}) {
    auto q = qdeg_component(big.components[i], big.A);
    REQUIRE(q.size() == 1);
    CHECK(q[0].dim() == 2);
    CHECK(q[0].contains_point(RatVec{Rat(0), Rat(7), Rat(-2)}));
    CHECK(!q[0].contains_point(RatVec{Rat(1), Rat(0), Rat(0)}));
  }
  // R/I_5 and R/I_6: the plane {y2 = y3}.
  for (size_t i : {size_t(4), size_t(5)}) {
    auto q = qdeg_component(big.components[i], big.A);
    REQUIRE(q.size() == 1);
    CHECK(q[0].contains_point(RatVec{Rat(9), Rat(4), Rat(4)}));
    CHECK(!q[0].contains_point(RatVec{Rat(0), Rat(1), Rat(0)}));
  }
}

TEST_CASE("quasidegrees are term-order independent") {
  for (const char* f : {"irregular_on_line.json", "six_strata.json", "three_slopes.json",
                        "series_slope_three_halves.json"}) {
    Problem p = load_fixture(f);
    for (const auto& c : p.components) {
      auto a = qdeg_component(c, p.A, TermOrder::grevlex());
      auto b = qdeg_component(c, p.A, TermOrder::lex());
      CHECK(a == b);
    }
  }
}

TEST_CASE("andean arrangement and holonomicity") {
  Problem p = load_fixture("irregular_on_line.json");
  CHECK(andean_arrangement(p).empty());
  CHECK(is_holonomic(p));
  p.beta = RatVec{Rat(3), Rat(-1)};
  CHECK(is_holonomic(p));

  Problem big = load_fixture("six_strata.json");
  CHECK(andean_arrangement(big).empty());

  Problem a = parse_problem(kAndean);
  AffineArrangement arr = andean_arrangement(a);
  REQUIRE(arr.translates.size() == 1);
  CHECK(arr.translates[0].translate.dim() == 1);  // the line C(1,0)
  // GENERIC beta misses the line.
  CHECK(is_holonomic(a));
  // -beta on the Andean line: not holonomic.
  a.beta = RatVec{Rat(-2), Rat(0)};
  CHECK(!is_holonomic(a));
  CHECK_THROWS_AS(relevant_components(a), NotHolonomic);
  CHECK(is_regular(a).verdict == RegularityVerdict::NotHolonomic);
  // Off the line: holonomic again.
  a.beta = RatVec{Rat(-2), Rat(1)};
  CHECK(is_holonomic(a));
}

TEST_CASE("relevant components of the two-line example") {
  Problem p = load_fixture("irregular_on_line.json");
  p.beta = RatVec{Rat(1), Rat(0)};
  CHECK(relevant_components(p) == std::vector<size_t>{2});
  p.beta = RatVec{Rat(1), Rat(1)};
  CHECK(relevant_components(p) == std::vector<size_t>{0, 1, 2});
  p.beta = std::nullopt;
  CHECK(relevant_components(p) == std::vector<size_t>{2});
}

TEST_CASE("regularity verdicts") {
  Problem p = load_fixture("irregular_on_line.json");
  p.beta = RatVec{Rat(1), Rat(0)};
  CHECK(is_regular(p).verdict == RegularityVerdict::Regular);
  p.beta = RatVec{Rat(1), Rat(1)};
  RegularityResult r = is_regular(p);
  CHECK(r.verdict == RegularityVerdict::Irregular);
  CHECK(r.witnesses == std::vector<size_t>{1});

  Problem reg = load_fixture("regular_primary.json");
  for (const Rat& b : {Rat(0), Rat(1), Rat(7, 3)}) {
    reg.beta = RatVec{b};
    CHECK(is_regular(reg).verdict == RegularityVerdict::Regular);
  }
  reg.beta = std::nullopt;
  CHECK(is_regular(reg).verdict == RegularityVerdict::Regular);
  CHECK(nonregular_arrangement(reg).empty());
}

TEST_CASE("non-regular arrangement of the two-line example is C(1,1)") {
  Problem p = load_fixture("irregular_on_line.json");
  AffineArrangement arr = nonregular_arrangement(p);
  REQUIRE(arr.translates.size() == 1);
  const AffineTranslate& t = arr.translates[0].translate;
  CHECK(t.dim() == 1);
  CHECK(t.contains_point(RatVec{Rat(4), Rat(4)}));
  CHECK(!t.contains_point(RatVec{Rat(1), Rat(0)}));
  CHECK(arr.translates[0].components == std::vector<size_t>{1});
}

TEST_CASE("two strata on and off the line") {
  Problem p = load_fixture("irregular_on_line.json");
  Stratification st = stratify_parameters(p);
  CHECK(st.strata.size() == 2);
  CHECK(relevant_sets(st) ==
        std::set<std::vector<size_t>>{{2}, {0, 1, 2}});
}

TEST_CASE("six strata with the expected relevant sets") {
  Problem p = load_fixture("six_strata.json");
  Stratification st = stratify_parameters(p);
  CHECK(st.strata.size() == 6);
  CHECK(relevant_sets(st) == std::set<std::vector<size_t>>{{0},
                                                           {0, 1, 2},
                                                           {0, 4, 5},
                                                           {0, 3, 4, 5},
                                                           {0, 1, 2, 4, 5},
                                                           {0, 1, 2, 3, 4, 5}});
  // Each sample parameter reproduces its stratum's relevant set directly.
  for (const auto& s : st.strata) {
    Problem q = p;
    q.beta = s.sample_beta;
    CHECK(relevant_components(q) == s.relevant);
  }
}

TEST_CASE("relevance only grows towards deeper strata") {
  Problem p = load_fixture("six_strata.json");
  Stratification st = stratify_parameters(p);
  for (const auto& a : st.strata)
    for (const auto& b : st.strata) {
      // b lies in the closure of a when b's membership pattern contains a's.
      bool closure = true;
      for (size_t i = 0; i < a.pattern.size(); ++i)
        if (a.pattern[i] && !b.pattern[i]) closure = false;
      if (!closure) continue;
      CHECK(std::includes(b.relevant.begin(), b.relevant.end(), a.relevant.begin(),
                          a.relevant.end()));
    }
}
