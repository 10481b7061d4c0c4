#ifndef BDM_REPORT_HPP
#define BDM_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bdm/gevrey.hpp"
#include "bdm/irregularity.hpp"
#include "bdm/model.hpp"
#include "bdm/stratify.hpp"
#include "bdm/umbrella.hpp"

namespace bdm {

using Json = nlohmann::ordered_json;

extern const char* kToolVersion;

Json translate_json(const AffineTranslate& t);
Json arrangement_json(const AffineArrangement& arr);

/// validate: echo + per-component classification.
Json validate_report(const Problem& p);

/// analyze: classification, arrangements, holonomic/regular verdicts,
/// strata table.
Json analyze_report(const Problem& p, uint64_t seed, const GroebnerOptions& opts = {});

/// slopes along {x_k = 0 : k in K} with provenance (1-based components).
Json slopes_report(const Problem& p, const std::vector<size_t>& K,
                   const GroebnerOptions& opts = {});

Json rank_report(const Problem& p, uint64_t seed, const GroebnerOptions& opts = {});

Json irregularity_report(const Problem& p, size_t i, const Rat& s, uint64_t seed,
                         const GroebnerOptions& opts = {});

Json gevrey_report(const Problem& p, size_t component, size_t direction, int N,
                   const GroebnerOptions& opts = {});

/// Plain-text rendering of a report for --pretty.
std::string render_markdown(const Json& j, int level = 1);

}  // namespace bdm

#endif
