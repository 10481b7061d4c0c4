#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bdm/errors.hpp"
#include "bdm/gevrey.hpp"
#include "bdm/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bdm::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bdm::RatVec parse_rat_list(const std::string& s) {
  bdm::RatVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(bdm::parse_rat(tok));
    } catch (const std::invalid_argument& e) {
      throw bdm::ParseError("bad rational '" + tok + "'");
    }
  }
  if (out.empty()) throw bdm::ParseError("empty rational list");
  return out;
}

std::vector<size_t> parse_index_list(const std::string& s, size_t n, const char* what) {
  std::vector<size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    long v = 0;
    try {
      v = std::stol(tok);
    } catch (...) {
      throw bdm::ParseError(std::string("bad ") + what + " index '" + tok + "'");
    }
    if (v < 1 || size_t(v) > n)
      throw bdm::ValidationError("IndexOutOfRange",
                                 std::string(what) + " index " + tok + " not in 1.." +
                                     std::to_string(n));
    out.push_back(size_t(v) - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw bdm::ParseError(std::string("empty ") + what + " list");
  return out;
}

struct Common {
  std::string input;
  std::string beta_override;
  bool pretty = false;
  uint64_t seed = 1;
  bdm::GroebnerOptions opts;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "problem document (JSON)")->required();
  cmd->add_option("--beta", c.beta_override, "override the parameter: 'generic' or p/q,...");
  cmd->add_option("--seed", c.seed, "seed for randomized specialization");
  cmd->add_option("--max-pairs", c.opts.max_pairs, "Groebner S-pair cap");
  cmd->add_option("--max-degree", c.opts.max_degree, "Groebner lcm degree cap");
  cmd->add_flag("--pretty", c.pretty, "render the report as markdown instead of JSON");
}

bdm::Problem load(const Common& c) {
  bdm::Problem p = bdm::parse_problem(slurp(c.input));
  if (!c.beta_override.empty()) {
    if (c.beta_override == "generic") {
      p.beta = std::nullopt;
    } else {
      bdm::RatVec b = parse_rat_list(c.beta_override);
      if (b.size() != p.A.d)
        throw bdm::ValidationError("BetaDimension", "--beta needs " + std::to_string(p.A.d) +
                                                        " entries");
      p.beta = std::move(b);
    }
  }
  return p;
}

void emit(const bdm::Json& j, bool pretty) {
  if (pretty)
    std::cout << bdm::render_markdown(j);
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analyzer for A-graded binomial systems"};
  app.set_version_flag("--version", bdm::kToolVersion);
  app.require_subcommand(1);

  Common c;
  std::string subspace, hyperplane, s_str = "2", v_str;
  size_t component = 1, direction = 1;
  int order = 12;

  CLI::App* validate = app.add_subcommand("validate", "parse and structurally validate a problem");
  add_common(validate, c);

  CLI::App* analyze =
      app.add_subcommand("analyze", "classification, arrangements, regularity, strata");
  add_common(analyze, c);

  CLI::App* slopes = app.add_subcommand("slopes", "slopes along a coordinate subspace");
  add_common(slopes, c);
  slopes->add_option("--subspace", subspace, "1-based variable indices, comma separated")
      ->required();

  CLI::App* rank = app.add_subcommand("rank", "generic holonomic rank");
  add_common(rank, c);

  CLI::App* irr = app.add_subcommand("irregularity", "irregularity stalk dimensions");
  add_common(irr, c);
  irr->add_option("--hyperplane", hyperplane, "1-based variable index")->required();
  irr->add_option("--s", s_str, "order s > 1 (rational)");

  CLI::App* gevrey = app.add_subcommand("gevrey", "formal series solutions along a hyperplane");
  add_common(gevrey, c);
  gevrey->add_option("--component", component, "1-based component index");
  gevrey->add_option("--direction", direction, "1-based variable index")->required();
  gevrey->add_option("--order", order, "truncation window |u| <= N");
  gevrey->add_option("--v", v_str,
                     "explicit base exponent on the face (p/q,...): emit its series only");

  CLI11_PARSE(app, argc, argv);

  try {
    bdm::Problem p = load(c);
    bdm::Json j;
    if (*validate) {
      j = bdm::validate_report(p);
    } else if (*analyze) {
      j = bdm::analyze_report(p, c.seed, c.opts);
    } else if (*slopes) {
      j = bdm::slopes_report(p, parse_index_list(subspace, p.A.n, "variable"), c.opts);
    } else if (*rank) {
      j = bdm::rank_report(p, c.seed, c.opts);
    } else if (*irr) {
      size_t i = parse_index_list(hyperplane, p.A.n, "variable").at(0);
      bdm::Rat s;
      try {
        s = bdm::parse_rat(s_str);
      } catch (const std::invalid_argument&) {
        throw bdm::ParseError("bad rational '" + s_str + "' for --s");
      }
      j = bdm::irregularity_report(p, i, s, c.seed, c.opts);
    } else if (*gevrey) {
      if (component < 1 || component > p.components.size())
        throw bdm::ValidationError("IndexOutOfRange", "component index out of range");
      size_t dir = parse_index_list(std::to_string(direction), p.A.n, "variable").at(0);
      if (!v_str.empty()) {
        if (p.generic_beta())
          throw bdm::AssumptionViolated("series construction needs a rational beta");
        const bdm::PrimaryComponent& comp = p.components[component - 1];
        bdm::RatVec v = parse_rat_list(v_str);
        if (v.size() != comp.J.size())
          throw bdm::ValidationError("BetaDimension",
                                     "--v needs one entry per face variable");
        bdm::PhiSeries phi = bdm::phi_series(p.A, comp.J, comp.character, v, order);
        j["version"] = bdm::kToolVersion;
        j["component"] = component;
        j["v"] = bdm::Json::array();
        for (const auto& x : phi.v) j["v"].push_back(bdm::rat_to_string(x));
        bdm::Json terms = bdm::Json::array();
        for (const auto& [u, cf] : phi.terms) {
          bdm::Json uu = bdm::Json::array();
          for (const auto& ui : u) uu.push_back(ui.get_si());
          terms.push_back(bdm::Json{{"u", uu}, {"coeff", bdm::rat_to_string(cf)}});
        }
        j["terms"] = terms;
      } else {
        j = bdm::gevrey_report(p, component - 1, dir, order, c.opts);
      }
    }
    emit(j, c.pretty);
    return 0;
  } catch (const bdm::ValidationError& e) {
    std::cerr << bdm::Json{{"error", e.what()}, {"reason", e.reason}}.dump() << "\n";
    return 2;
  } catch (const bdm::ParseError& e) {
    std::cerr << bdm::Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const bdm::NotHolonomic& e) {
    std::cerr << bdm::Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const bdm::NotSublattice& e) {
    std::cerr << bdm::Json{{"error", e.what()}}.dump() << "\n";
    return 4;
  } catch (const bdm::InternalError& e) {
    std::cerr << bdm::Json{{"error", e.what()}}.dump() << "\n";
    return 4;
  } catch (const bdm::Error& e) {
    // ResourceLimit, CapExceeded, NotArtinian, SpecializationUnstable,
    // AssumptionViolated, TruncationTooSmall, UnsupportedRank, PochhammerPole.
    std::cerr << bdm::Json{{"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << bdm::Json{{"error", std::string("unexpected: ") + e.what()}}.dump() << "\n";
    return 4;
  }
}
