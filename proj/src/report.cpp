#include "bdm/report.hpp"

#include <algorithm>

#include "bdm/errors.hpp"

namespace bdm {

const char* kToolVersion = "bdma 0.1.0";

namespace {

Json ratvec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

Json indices_1based(const std::vector<size_t>& v) {
  Json a = Json::array();
  for (size_t x : v) a.push_back(x + 1);
  return a;
}

Json beta_json(const Problem& p) {
  if (p.generic_beta()) return "generic";
  return ratvec_json(*p.beta);
}

Json label_json(const AnsatzUnknown& u, const std::vector<size_t>& J, size_t n) {
  Json g = Json::array();
  for (size_t j = 0; j < n; ++j)
    if (std::find(J.begin(), J.end(), j) == J.end()) g.push_back(u.gamma[j]);
  return Json{{"gamma", g}, {"k", u.k}};
}

}  // namespace

Json translate_json(const AffineTranslate& t) {
  Json j;
  j["offset"] = ratvec_json(t.offset);
  Json span = Json::array();
  for (const auto& v : t.span) span.push_back(ratvec_json(v));
  j["span"] = span;
  j["dim"] = t.dim();
  return j;
}

Json arrangement_json(const AffineArrangement& arr) {
  Json a = Json::array();
  for (const auto& e : arr.translates) {
    Json j = translate_json(e.translate);
    j["components"] = indices_1based(e.components);
    a.push_back(std::move(j));
  }
  return a;
}

Json validate_report(const Problem& p) {
  Json j;
  j["version"] = kToolVersion;
  j["valid"] = true;
  j["d"] = p.A.d;
  j["n"] = p.A.n;
  j["span_index"] = p.A.span_index.get_si();
  if (p.A.span_index != 1)
    j["warnings"] = Json::array({"columns of A span a finite-index sublattice of the "
                                 "integer row space"});
  j["intersection_verified"] = false;  // only I within each component is checked
  Json comps = Json::array();
  for (const auto& c : p.components) {
    ComponentClass cc = classify(c, p.A);
    Json cj;
    cj["J"] = indices_1based(c.J);
    cj["class"] = cc.toral ? "toral" : "andean";
    cj["krull_dim"] = cc.krull_dim;
    cj["rank_AJ"] = cc.rank_AJ;
    cj["lattice_rank"] = c.character.lattice.rank();
    cj["homogeneous"] = is_standard_homogeneous_prime(c);
    if (c.mu_hint) cj["mu"] = c.mu_hint->get_si();
    comps.push_back(std::move(cj));
  }
  j["components"] = comps;
  j["beta"] = beta_json(p);
  return j;
}

Json analyze_report(const Problem& p, uint64_t seed, const GroebnerOptions& opts) {
  Json j;
  j["version"] = kToolVersion;
  j["seed"] = seed;
  j["beta"] = beta_json(p);
  Json comps = Json::array();
  for (const auto& c : p.components) {
    ComponentClass cc = classify(c, p.A);
    comps.push_back(Json{{"J", indices_1based(c.J)},
                         {"class", cc.toral ? "toral" : "andean"},
                         {"homogeneous", is_standard_homogeneous_prime(c)}});
  }
  j["components"] = comps;
  j["andean_arrangement"] = arrangement_json(andean_arrangement(p, opts));
  j["nonregular_arrangement"] = arrangement_json(nonregular_arrangement(p, opts));
  bool holo = is_holonomic(p, opts);
  j["holonomic"] = holo;
  RegularityResult reg = is_regular(p, opts);
  j["regular"] = reg.verdict == RegularityVerdict::Regular      ? "regular"
                 : reg.verdict == RegularityVerdict::Irregular  ? "irregular"
                                                                : "not_holonomic";
  j["witnesses"] = indices_1based(reg.witnesses);
  if (holo) j["relevant_components"] = indices_1based(relevant_components(p, opts));

  Stratification st = stratify_parameters(p, opts);
  j["arrangement"] = arrangement_json(st.arrangement);
  Json strata = Json::array();
  for (const auto& s : st.strata) {
    Json sj;
    sj["pattern"] = s.pattern;
    sj["sample_beta"] = ratvec_json(s.sample_beta);
    sj["relevant"] = indices_1based(s.relevant);
    // Slope table at the sample parameter, per coordinate hyperplane.
    Problem q = p;
    q.beta = s.sample_beta;
    Json slopes = Json::object();
    for (size_t k = 0; k < p.A.n; ++k) {
      try {
        std::vector<SlopeEntry> se = slopes_of_module(q, {k}, opts);
        if (se.empty()) continue;
        Json sl = Json::array();
        for (const auto& e : se)
          sl.push_back(Json{{"s", rat_to_string(e.s)}, {"components", indices_1based(e.components)}});
        slopes["x" + std::to_string(k + 1)] = std::move(sl);
      } catch (const NotHolonomic&) {
        slopes["x" + std::to_string(k + 1)] = "not_holonomic";
      }
    }
    sj["slopes"] = std::move(slopes);
    strata.push_back(std::move(sj));
  }
  j["strata"] = strata;
  return j;
}

Json slopes_report(const Problem& p, const std::vector<size_t>& K, const GroebnerOptions& opts) {
  Json j;
  j["version"] = kToolVersion;
  j["beta"] = beta_json(p);
  j["K"] = indices_1based(K);
  Json sl = Json::array();
  for (const auto& e : slopes_of_module(p, K, opts))
    sl.push_back(Json{{"s", rat_to_string(e.s)}, {"components", indices_1based(e.components)}});
  j["slopes"] = sl;
  return j;
}

Json rank_report(const Problem& p, uint64_t seed, const GroebnerOptions& opts) {
  Json j;
  j["version"] = kToolVersion;
  j["seed"] = seed;
  Problem q = p;
  q.beta = std::nullopt;  // the rank formula applies to generic parameters
  Json per = Json::array();
  Int total(0);
  for (size_t k : relevant_components(q, opts)) {
    const PrimaryComponent& c = q.components[k];
    ComponentClass cc = classify(c, q.A);
    if (!cc.toral || cc.krull_dim != q.A.d)
      throw AssumptionViolated("a relevant component is not toral of full dimension");
    Multiplicity mu = multiplicity(c, q.A, seed + k, opts);
    Int vol = normalized_volume(q.A, c.J, c.J);
    per.push_back(Json{{"component", k + 1},
                       {"mu", mu.mu.get_si()},
                       {"volume", vol.get_si()},
                       {"contribution", Int(mu.mu * vol).get_si()}});
    total += mu.mu * vol;
  }
  j["per_component"] = per;
  j["rank"] = total.get_si();
  return j;
}

Json irregularity_report(const Problem& p, size_t i, const Rat& s, uint64_t seed,
                         const GroebnerOptions& opts) {
  Json j;
  j["version"] = kToolVersion;
  j["seed"] = seed;
  j["hyperplane"] = i + 1;
  j["s"] = rat_to_string(s);
  IrrResult res = dim_irr_stalk(p, i, s, seed, opts);
  Json per = Json::array();
  for (const auto& e : res.per_component)
    per.push_back(Json{{"component", e.component + 1}, {"dim", e.dim.get_si()}});
  j["per_component"] = per;
  j["total"] = res.total.get_si();
  return j;
}

Json gevrey_report(const Problem& p, size_t component, size_t direction, int N,
                   const GroebnerOptions& opts) {
  if (p.generic_beta())
    throw AssumptionViolated("series construction needs a rational beta (use --beta)");
  const PrimaryComponent& c = p.components.at(component);
  GevreyBasis gb = gevrey_basis(c, p.A, *p.beta, direction, N, opts);

  Json j;
  j["version"] = kToolVersion;
  j["component"] = component + 1;
  j["direction"] = direction + 1;
  j["order"] = N;
  j["slope"] = rat_to_string(gb.slope_tag);
  Json unknowns = Json::array();
  for (const auto& u : gb.unknowns) unknowns.push_back(label_json(u, c.J, p.A.n));
  j["unknowns"] = unknowns;
  j["dimension"] = gb.dimension;
  Json fz = Json::array();
  for (size_t u : gb.forced_zero) fz.push_back(label_json(gb.unknowns[u], c.J, p.A.n));
  j["forced_zero"] = fz;
  Json rels = Json::array();
  for (const auto& r : gb.relations) {
    Json row = Json::array();
    for (const auto& [u, cf] : r) {
      Json t = label_json(gb.unknowns[u], c.J, p.A.n);
      t["coeff"] = rat_to_string(cf);
      row.push_back(std::move(t));
    }
    rels.push_back(std::move(row));
  }
  j["relations"] = rels;
  Json ver = Json::array();
  for (size_t sidx = 0; sidx < gb.series.size(); ++sidx) {
    VerifyReport vr = verify_solution(gb, sidx, c, p.A, *p.beta);
    ver.push_back(Json{{"euler_exact", vr.euler_exact},
                       {"interior_zero", vr.interior_zero},
                       {"interior_checked", vr.interior_checked},
                       {"boundary_terms", vr.boundary_terms},
                       {"terms", gb.series[sidx].size()}});
  }
  j["series"] = ver;
  return j;
}

std::string render_markdown(const Json& j, int level) {
  std::string out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured())) {
        out += std::string(level, '#') + " " + k + "\n" + render_markdown(v, level + 1);
      } else {
        out += "- " + k + ": " + v.dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) {
      out += std::string(level, '#') + " [" + std::to_string(i) + "]\n" +
             render_markdown(j[i], level + 1);
    }
  } else {
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace bdm
