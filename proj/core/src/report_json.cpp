#include "negcurv/report_json.hpp"

namespace negcurv {

Json to_json(const CompletenessQuadrature& q) {
  Json j;
  j["r_max"] = q.r_max;
  j["value"] = q.integral;
  j["error_estimate"] = q.error_estimate;
  j["tail_exponent"] = q.tail_exponent;
  j["classification"] = to_string(q.classification);
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["potential"] = r.potential;
  j["grid"] = r.grid;
  Json m;
  m["a"] = r.margin_a;
  m["c"] = r.margin_c;
  m["d"] = r.margin_d;
  m["e"] = r.margin_e;
  j["margins"] = std::move(m);
  Json v;
  v["a"] = r.pass_a;
  v["c"] = r.pass_c;
  v["d"] = r.pass_d;
  v["e"] = r.pass_e;
  if (r.completeness) v["b"] = r.completeness->classification == CompletenessClass::divergent;
  v["all"] = r.all_pass();
  j["verdicts"] = std::move(v);
  j["completeness"] = r.completeness ? to_json(*r.completeness) : Json(nullptr);
  return j;
}

Json to_json(const CurvatureReport& r, bool with_samples) {
  Json j;
  j["potential"] = r.potential;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["planes_per_point"] = r.planes_per_point;
  Json rows = Json::array();
  for (const CurvatureRow& row : r.rows) {
    Json o;
    o["r"] = row.r;
    o["K_min"] = row.K_min;
    o["K_max"] = row.K_max;
    o["H_min"] = row.H_min;
    o["H_max"] = row.H_max;
    o["B_min"] = row.B_min;
    o["B_max"] = row.B_max;
    o["ricci_lower"] = row.ricci_lower;
    if (with_samples) {
      o["K_samples"] = row.K_samples;
      o["H_samples"] = row.H_samples;
      o["B_samples"] = row.B_samples;
    }
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const HyperbolicityReport& r, Combiner combiner) {
  Json j;
  j["space"] = r.space;
  j["combiner"] = to_string(combiner);
  j["scale"] = r.scale;
  j["n_quadruples"] = r.n_quadruples;
  j["seed"] = r.seed;
  j["delta_estimate"] = r.delta_estimate;
  Json q = Json::array();
  if (r.n_quadruples > 0) {
    for (const Point& p : r.worst_quadruple) q.push_back(p);
  }
  j["worst_quadruple"] = std::move(q);
  return j;
}

Json to_json(const InequalityViolation& v) {
  Json j;
  j["pair"] = v.pair_index;
  if (v.inequality > 0) j["inequality"] = v.inequality;
  j["p"] = v.p;
  j["q"] = v.q;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  j["slack"] = v.slack;
  return j;
}

namespace {

Json violations_json(const std::vector<InequalityViolation>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

}  // namespace

Json to_json(const SchwarzReport& r) {
  Json j;
  j["pairs"] = r.pairs;
  j["L"] = r.L;
  j["violations"] = violations_json(r.violations);
  j["max_slack"] = r.max_slack;
  j["min_slack"] = r.min_slack;
  return j;
}

Json to_json(const KeyLemmaReport& r) {
  Json j;
  j["pairs"] = r.pairs;
  j["L"] = r.L;
  j["violations"] = violations_json(r.violations);
  j["max_slack_1"] = r.max_slack_1;
  j["max_slack_2"] = r.max_slack_2;
  return j;
}

}  // namespace negcurv
