#include "bdm/model.hpp"

#include <algorithm>

#include <json.hpp>

#include "bdm/errors.hpp"
#include "bdm/feasible.hpp"
#include "bdm/ideal.hpp"
#include "bdm/linsolve.hpp"
#include "bdm/normalform.hpp"

namespace bdm {

using json = nlohmann::ordered_json;

namespace {

Rat rat_pow(const Rat& base, long e) {
  Rat r(1);
  Rat b = e >= 0 ? base : Rat(1) / base;
  long k = e >= 0 ? e : -e;
  for (long i = 0; i < k; ++i) r *= b;
  r.canonicalize();
  return r;
}

Rat parse_rat_field(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a \"p/q\" string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Exponent parse_exp(const json& j, size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(what + " must be an array of " + std::to_string(n) + " integers");
  Exponent e(n);
  for (size_t i = 0; i < n; ++i) {
    if (!j[i].is_number_integer() || j[i].get<long>() < 0)
      throw ParseError(what + " entries must be nonnegative integers");
    e[i] = int(j[i].get<long>());
  }
  return e;
}

Binomial parse_binomial(const json& j, size_t n, const std::string& what) {
  if (!j.is_object() || !j.contains("plus")) throw ParseError(what + " must have a \"plus\" term");
  Binomial b;
  b.lead_exp = parse_exp(j["plus"]["exp"], n, what + ".plus.exp");
  b.lead_coeff = parse_rat_field(j["plus"]["coeff"], what + ".plus.coeff");
  if (b.lead_coeff == 0) throw ParseError(what + ".plus.coeff must be nonzero");
  if (j.contains("minus") && !j["minus"].is_null()) {
    b.trail_exp = parse_exp(j["minus"]["exp"], n, what + ".minus.exp");
    b.trail_coeff = parse_rat_field(j["minus"]["coeff"], what + ".minus.coeff");
    if (b.trail_coeff == 0) throw ParseError(what + ".minus.coeff must be nonzero");
  } else {
    b.trail_coeff = 0;
  }
  return b;
}

json exp_to_json(const Exponent& e) {
  json a = json::array();
  for (int x : e) a.push_back(x);
  return a;
}

json binomial_to_json(const Binomial& b) {
  json j;
  j["plus"] = {{"coeff", rat_to_string(b.lead_coeff)}, {"exp", exp_to_json(b.lead_exp)}};
  if (b.trail_exp)
    j["minus"] = {{"coeff", rat_to_string(b.trail_coeff)}, {"exp", exp_to_json(*b.trail_exp)}};
  return j;
}

void check_graded(const MatrixA& A, const Binomial& b, const std::string& what) {
  if (!b.trail_exp) return;  // monomials are A-graded
  if (A.degree(b.lead_exp) != A.degree(*b.trail_exp))
    throw ValidationError("NotAGraded", what + " has terms of different A-degree");
}

// Integer coordinates of v in the row space of G (rows independent);
// nullopt if v is not an integer combination.
std::optional<IntVec> integer_coords(const std::vector<IntVec>& G, const IntVec& v) {
  size_t n = v.size();
  RatMatrix M(n, G.size());
  for (size_t j = 0; j < G.size(); ++j)
    for (size_t i = 0; i < n; ++i) M.at(i, j) = Rat(G[j][i]);
  RatVec b(n);
  for (size_t i = 0; i < n; ++i) b[i] = Rat(v[i]);
  auto sol = solve_rational(M, b);
  if (!sol) return std::nullopt;
  IntVec c(G.size());
  for (size_t j = 0; j < G.size(); ++j) {
    Rat x = sol->particular[j];
    x.canonicalize();
    if (x.get_den() != 1) return std::nullopt;
    c[j] = x.get_num();
  }
  return c;
}

}  // namespace

Rat PartialCharacter::evaluate(const IntVec& u) const {
  auto c = lattice.coordinates(u);
  if (!c) throw InternalError("character evaluated outside its lattice");
  Rat r(1);
  for (size_t i = 0; i < c->size(); ++i) r *= rat_pow(values[i], (*c)[i].get_si());
  r.canonicalize();
  return r;
}

IntVec MatrixA::degree(const Exponent& e) const {
  IntVec deg(d, Int(0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < n; ++j) deg[i] += data.at(i, j) * e[j];
  return deg;
}

Problem parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("A") || !doc.contains("ideal") ||
      !doc.contains("components") || !doc.contains("beta"))
    throw ParseError("top level must have keys A, ideal, components, beta");

  Problem p;

  // --- matrix A ---
  const json& jA = doc["A"];
  if (!jA.is_array() || jA.empty() || !jA[0].is_array() || jA[0].empty())
    throw ParseError("A must be a nonempty array of nonempty integer rows");
  p.A.d = jA.size();
  p.A.n = jA[0].size();
  p.A.data = IntMatrix(p.A.d, p.A.n);
  for (size_t i = 0; i < p.A.d; ++i) {
    if (!jA[i].is_array() || jA[i].size() != p.A.n) throw ParseError("A rows have unequal length");
    for (size_t j = 0; j < p.A.n; ++j) {
      if (!jA[i][j].is_number_integer()) throw ParseError("A entries must be integers");
      p.A.data.at(i, j) = Int(jA[i][j].get<long>());
    }
  }
  if (rank(p.A.data) != p.A.d)
    throw ValidationError("ColumnsDoNotSpan", "columns of A do not span a full-rank lattice");
  {
    // Pointedness: some h with h·a_j >= 1 for all j.
    std::vector<LinConstraint> cons;
    for (size_t j = 0; j < p.A.n; ++j) {
      LinConstraint c;
      c.a.assign(p.A.d, Rat(0));
      for (size_t i = 0; i < p.A.d; ++i) c.a[i] = Rat(-p.A.data.at(i, j));
      c.c = Rat(-1);
      cons.push_back(std::move(c));
    }
    if (!feasible(std::move(cons), p.A.d))
      throw ValidationError("ConeNotPointed", "the cone over the columns of A contains a line");
  }
  {
    SnfResult snf = smith_normal_form(p.A.data);
    Int idx(1);
    for (size_t i = 0; i < p.A.d; ++i) idx *= snf.S.at(i, i);
    p.A.span_index = abs(idx);
  }

  // --- ideal generators ---
  if (!doc["ideal"].is_array()) throw ParseError("ideal must be an array of binomials");
  for (size_t k = 0; k < doc["ideal"].size(); ++k) {
    Binomial b = parse_binomial(doc["ideal"][k], p.A.n, "ideal[" + std::to_string(k) + "]");
    check_graded(p.A, b, "ideal generator " + std::to_string(k + 1));
    p.ideal_gens.push_back(std::move(b));
  }

  // --- components ---
  if (!doc["components"].is_array()) throw ParseError("components must be an array");
  TermOrder ord = TermOrder::grevlex();
  for (size_t k = 0; k < doc["components"].size(); ++k) {
    const json& jc = doc["components"][k];
    std::string tag = "components[" + std::to_string(k) + "]";
    if (!jc.is_object() || !jc.contains("J") || !jc.contains("lattice") ||
        !jc.contains("character") || !jc.contains("B"))
      throw ParseError(tag + " must have keys J, lattice, character, B");

    PrimaryComponent c;
    for (const auto& v : jc["J"]) {
      if (!v.is_number_integer() || v.get<long>() < 1 || size_t(v.get<long>()) > p.A.n)
        throw ParseError(tag + ".J entries must be 1-based column indices");
      c.J.push_back(size_t(v.get<long>()) - 1);
    }
    std::sort(c.J.begin(), c.J.end());
    c.J.erase(std::unique(c.J.begin(), c.J.end()), c.J.end());
    std::vector<bool> inJ(p.A.n, false);
    for (size_t j : c.J) inJ[j] = true;

    std::vector<IntVec> gens;
    for (const auto& jv : jc["lattice"]) {
      if (!jv.is_array() || jv.size() != p.A.n)
        throw ParseError(tag + ".lattice vectors must have length n");
      IntVec u(p.A.n);
      for (size_t j = 0; j < p.A.n; ++j) {
        if (!jv[j].is_number_integer()) throw ParseError(tag + ".lattice entries must be integers");
        u[j] = Int(jv[j].get<long>());
      }
      for (size_t j = 0; j < p.A.n; ++j)
        if (!inJ[j] && u[j] != 0)
          throw ValidationError("LatticeNotInKernel",
                                tag + " lattice vector is not supported on J");
      IntVec Au = p.A.data * u;
      for (const auto& x : Au)
        if (x != 0)
          throw ValidationError("LatticeNotInKernel", tag + " lattice vector is not in ker A");
      gens.push_back(std::move(u));
    }
    Lattice L(p.A.n, gens);
    if (L.rank() != gens.size())
      throw ParseError(tag + ".lattice generators must be independent");
    if (!jc["character"].is_array() || jc["character"].size() != gens.size())
      throw ParseError(tag + ".character needs one value per lattice generator");
    RatVec given(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
      given[i] = parse_rat_field(jc["character"][i], tag + ".character[" + std::to_string(i) + "]");
      if (given[i] == 0) throw ParseError(tag + ".character values must be nonzero");
    }
    // Transport the values onto the canonical basis.
    RatVec values(L.rank());
    for (size_t i = 0; i < L.rank(); ++i) {
      auto coords = integer_coords(gens, L.basis_vector(i));
      if (!coords) throw InternalError("canonical lattice basis outside generator span");
      Rat v(1);
      for (size_t j = 0; j < gens.size(); ++j) v *= rat_pow(given[j], (*coords)[j].get_si());
      v.canonicalize();
      values[i] = v;
    }
    c.character = PartialCharacter(L, values);

    for (size_t b = 0; b < jc["B"].size(); ++b) {
      Binomial bb = parse_binomial(jc["B"][b], p.A.n, tag + ".B[" + std::to_string(b) + "]");
      check_graded(p.A, bb, tag + " B generator " + std::to_string(b + 1));
      auto in_mJ = [&](const Exponent& e) {
        for (size_t j = 0; j < p.A.n; ++j)
          if (!inJ[j] && e[j] > 0) return true;
        return false;
      };
      if (!in_mJ(bb.lead_exp) || (bb.trail_exp && !in_mJ(*bb.trail_exp)))
        throw ValidationError("BNotInMJ", tag + " B generator has a monomial outside m_J");
      c.B_gens.push_back(std::move(bb));
    }
    if (jc.contains("mu") && !jc["mu"].is_null()) {
      if (!jc["mu"].is_number_integer() || jc["mu"].get<long>() < 1)
        throw ParseError(tag + ".mu must be a positive integer");
      c.mu_hint = Int(jc["mu"].get<long>());
    }

    // Containment checks against C = I_rho + B.
    std::vector<Poly> cg = component_ideal_gens(c, p.A.n, ord);
    std::vector<Poly> gb = buchberger(cg, ord);
    for (size_t g = 0; g < p.ideal_gens.size(); ++g) {
      if (!in_ideal(binomial_to_poly(p.ideal_gens[g], ord), gb, ord))
        throw ValidationError("ComponentDoesNotContainIdeal",
                              tag + " does not contain ideal generator " + std::to_string(g + 1));
    }
    // Some power of every variable outside J must lie in C, so that
    // m_J^r ⊆ C.
    constexpr int kNilpotencyCap = 50;
    for (size_t j = 0; j < p.A.n; ++j) {
      if (inJ[j]) continue;
      bool nilpotent = false;
      for (int e = 1; e <= kNilpotencyCap && !nilpotent; ++e) {
        Exponent m(p.A.n, 0);
        m[j] = e;
        if (in_ideal(Poly::monomial(m, Rat(1)), gb, ord)) nilpotent = true;
      }
      if (!nilpotent)
        throw ValidationError("BNotInMJ",
                              tag + " contains no power of variable " + std::to_string(j + 1) +
                                  "; no power of m_J lies in the component");
    }

    p.components.push_back(std::move(c));
  }

  // --- beta ---
  const json& jb = doc["beta"];
  if (jb.is_string() && jb.get<std::string>() == "generic") {
    p.beta = std::nullopt;
  } else if (jb.is_array()) {
    if (jb.size() != p.A.d) throw ParseError("beta must have one entry per row of A");
    RatVec beta(p.A.d);
    for (size_t i = 0; i < p.A.d; ++i)
      beta[i] = parse_rat_field(jb[i], "beta[" + std::to_string(i) + "]");
    p.beta = std::move(beta);
  } else {
    throw ParseError("beta must be an array of rationals or the string \"generic\"");
  }

  return p;
}

std::string print_problem(const Problem& p) {
  json doc;
  json jA = json::array();
  for (size_t i = 0; i < p.A.d; ++i) {
    json row = json::array();
    for (size_t j = 0; j < p.A.n; ++j) row.push_back(p.A.data.at(i, j).get_si());
    jA.push_back(row);
  }
  doc["A"] = jA;
  doc["ideal"] = json::array();
  for (const auto& b : p.ideal_gens) doc["ideal"].push_back(binomial_to_json(b));
  doc["components"] = json::array();
  for (const auto& c : p.components) {
    json jc;
    jc["J"] = json::array();
    for (size_t j : c.J) jc["J"].push_back(j + 1);
    jc["lattice"] = json::array();
    for (size_t i = 0; i < c.character.lattice.rank(); ++i) {
      json v = json::array();
      IntVec u = c.character.lattice.basis_vector(i);
      for (const auto& x : u) v.push_back(x.get_si());
      jc["lattice"].push_back(v);
    }
    jc["character"] = json::array();
    for (const auto& v : c.character.values) jc["character"].push_back(rat_to_string(v));
    jc["B"] = json::array();
    for (const auto& b : c.B_gens) jc["B"].push_back(binomial_to_json(b));
    if (c.mu_hint) jc["mu"] = c.mu_hint->get_si();
    doc["components"].push_back(jc);
  }
  if (p.beta) {
    json jb = json::array();
    for (const auto& x : *p.beta) jb.push_back(rat_to_string(x));
    doc["beta"] = jb;
  } else {
    doc["beta"] = "generic";
  }
  return doc.dump(2);
}

bool is_standard_homogeneous_prime(const PrimaryComponent& c) {
  Lattice L = saturate(c.character.lattice);
  for (size_t i = 0; i < L.rank(); ++i) {
    IntVec u = L.basis_vector(i);
    Int s(0);
    for (const auto& x : u) s += x;
    if (s != 0) return false;
  }
  return true;
}

BinomialPrime prime_of(const PrimaryComponent& c) {
  if (saturate(c.character.lattice) != c.character.lattice)
    throw ValidationError("LatticeNotSaturated",
                          "component lattice is not saturated; supply the associated "
                          "prime's lattice");
  return BinomialPrime{c.J, c.character.lattice, c.character.values};
}

}  // namespace bdm
