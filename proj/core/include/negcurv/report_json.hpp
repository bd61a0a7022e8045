#pragma once

#include <nlohmann/json.hpp>

#include "negcurv/hyperbolicity.hpp"
#include "negcurv/kahler.hpp"
#include "negcurv/lipschitz.hpp"
#include "negcurv/radial_analysis.hpp"

namespace negcurv {

// Key order is fixed so that identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const ConditionReport& r);
Json to_json(const CompletenessQuadrature& q);
/// Summary rows only; pass with_samples to include every sampled value.
Json to_json(const CurvatureReport& r, bool with_samples = false);
Json to_json(const HyperbolicityReport& r, Combiner combiner);
Json to_json(const InequalityViolation& v);
Json to_json(const SchwarzReport& r);
Json to_json(const KeyLemmaReport& r);

}  // namespace negcurv
