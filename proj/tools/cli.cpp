#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "negcurv/errors.hpp"
#include "negcurv/geodesic.hpp"
#include "negcurv/hyperbolicity.hpp"
#include "negcurv/kahler.hpp"
#include "negcurv/lipschitz.hpp"
#include "negcurv/radial_analysis.hpp"
#include "negcurv/realified.hpp"
#include "negcurv/report_json.hpp"

namespace negcurv::cli {

namespace {

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (c.command == "conditions") {
    j["potential"] = c.potential;
    j["rmax"] = c.r_max;
    j["grid_points"] = c.grid_points;
  } else if (c.command == "curvature") {
    j["potential"] = c.potential;
    j["dim"] = c.dim;
    j["radii"] = c.radii;
    j["planes"] = c.planes;
    j["samples"] = c.with_samples;
  } else if (c.command == "hyperbolicity") {
    j["space"] = c.space;
    j["combiner"] = c.combiner;
    j["scale"] = c.scale;
    j["quadruples"] = c.quadruples;
    j["samples_per_side"] = c.samples_per_side;
  } else if (c.command == "keylemma") {
    j["pairs"] = c.pairs;
    j["radius"] = c.radius;
    j["L"] = c.L_override > 0.0 ? Json(c.L_override) : Json(nullptr);
  } else if (c.command == "geodesic") {
    j["potential"] = c.potential;
    j["dim"] = c.dim;
    j["from"] = c.from;
    j["dir"] = c.dir;
    j["time"] = c.time;
    j["steps"] = c.steps;
    j["drift_tol"] = c.drift_tol;
  }
  j["seed"] = c.seed;
  return j;
}

void emit_json(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(cfg.json_path);
  if (!f) throw DomainError("cannot open " + cfg.json_path + " for writing");
  f << j.dump(2) << '\n';
}

}  // namespace

int cmd_conditions(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RadialPotential p = RadialPotential::parse(cfg.potential);
  if (!(cfg.r_max > 1e-3)) throw DomainError("--rmax must exceed 1e-3");
  if (cfg.grid_points < 2) throw DomainError("--grid must be at least 2");
  const auto grid = default_grid(cfg.r_max, static_cast<std::size_t>(cfg.grid_points));
  ConditionReport rep = check_conditions(p, grid);
  std::string completeness_error;
  // The length density is only real where condition (a) holds.
  if (rep.pass_a) {
    try {
      rep.completeness = completeness_integral(p, cfg.r_max);
    } catch (const QuadratureError& e) {
      completeness_error = e.what();
    }
  } else {
    completeness_error = "condition (a) fails, radial length density undefined";
  }
  Json j;
  j["config"] = config_json(cfg);
  Json r = to_json(rep);
  if (!completeness_error.empty()) {
    r["verdicts"]["b"] = false;
    r["completeness_error"] = completeness_error;
  }
  const bool pass = rep.all_pass() && rep.completeness.has_value();
  r["verdicts"]["all"] = pass;
  j["report"] = std::move(r);
  emit_json(j, cfg, out);
  if (!pass) err << "conditions: not all conditions hold for " << p.spec() << '\n';
  return pass ? kPass : kFail;
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RadialPotential p = RadialPotential::parse(cfg.potential);
  if (cfg.dim < 1) throw DomainError("--dim must be at least 1");
  if (cfg.planes < 1) throw DomainError("--planes must be at least 1");
  if (cfg.radii.empty()) throw DomainError("--radii must name at least one radius");
  const CurvatureReport rep = curvature_range_report(p, cfg.dim, cfg.radii, cfg.planes, cfg.seed);
  bool negative = true;
  for (const CurvatureRow& row : rep.rows) negative = negative && row.K_max < 0.0;
  Json j;
  j["config"] = config_json(cfg);
  j["report"] = to_json(rep, cfg.with_samples);
  j["report"]["all_negative"] = negative;
  emit_json(j, cfg, out);
  if (!negative) err << "curvature: some sampled plane has K >= 0\n";
  return negative ? kPass : kFail;
}

int cmd_hyperbolicity(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Combiner comb = parse_combiner(cfg.combiner);
  const MetricSpaceHandle space = spaces::by_name(cfg.space, cfg.scale, comb);
  if (cfg.samples_per_side < 2) throw DomainError("--samples-per-side must be at least 2");
  const HyperbolicityReport rep = four_point_delta(space, cfg.quadruples, cfg.seed);

  Json j;
  j["config"] = config_json(cfg);
  j["report"] = to_json(rep, comb);
  if (cfg.space == "product-rays" && comb == Combiner::l1) {
    const MetricSpaceHandle r1 = spaces::ray(cfg.scale);
    const TriangleSpec tri = lemma_not_triangle(cfg.scale, r1, r1);
    const ThinnessWitness w = thin_triangle_witness(lemma_not_space(r1, r1), tri, cfg.samples_per_side);
    j["report"]["thin_triangle"] = {{"construction", "lemma_not"},
                                    {"n", cfg.scale},
                                    {"perimeter", tri.perimeter()},
                                    {"defect", w.defect},
                                    {"witness", {{"side", w.side}, {"point", w.point}}}};
  } else if (space.geodesic) {
    // Vertices come from a stream no quadruple index can reach.
    CounterRng rng(cfg.seed, std::numeric_limits<std::uint64_t>::max());
    const Point a = space.sampler(rng);
    const Point b = space.sampler(rng);
    const Point c = space.sampler(rng);
    const TriangleSpec tri = geodesic_triangle(space, a, b, c);
    const ThinnessWitness w = thin_triangle_witness(space, tri, cfg.samples_per_side);
    j["report"]["thin_triangle"] = {{"construction", "sampled"},
                                    {"vertices", {a, b, c}},
                                    {"perimeter", tri.perimeter()},
                                    {"defect", w.defect},
                                    {"witness", {{"side", w.side}, {"point", w.point}}}};
  }
  emit_json(j, cfg, out);
  return kPass;
}

int cmd_keylemma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.radius > 0.0)) throw DomainError("--radius must be positive");
  if (cfg.L_override < 0.0) throw DomainError("--L must be positive");
  const bool override_L = cfg.L_override > 0.0;
  const ProductSpace P = disc_product(cfg.radius);
  const MetricSpaceHandle domain = P.handle();

  // Projections of the product onto a -4 disc: c = d = -4, L = 1.
  const SchwarzConstants proj =
      override_L ? SchwarzConstants::with_lipschitz(-4.0, cfg.L_override) : SchwarzConstants::make(-4.0, -4.0);
  const SchwarzReport s1 = schwarz_bound_check(first_projection(P), domain, P.first, proj, cfg.pairs, cfg.seed);
  const SchwarzReport s2 = schwarz_bound_check(second_projection(P), domain, P.second, proj, cfg.pairs, cfg.seed);

  // Product harness: holomorphic sectional <= -2, Ricci >= -4.
  const SchwarzConstants lemma =
      override_L ? SchwarzConstants::with_lipschitz(-4.0, cfg.L_override) : SchwarzConstants::make(-2.0, -4.0);
  const KeyLemmaReport kl = key_lemma_check(P, lemma, cfg.pairs, cfg.seed);

  Json sv = Json::array();
  for (const auto* rep : {&s1, &s2}) {
    const int which = rep == &s1 ? 1 : 2;
    for (const auto& v : rep->violations) {
      Json o = to_json(v);
      o["map"] = which == 1 ? "pi_1" : "pi_2";
      sv.push_back(std::move(o));
    }
  }
  Json j;
  j["config"] = config_json(cfg);
  j["schwarz"] = {{"pairs", cfg.pairs},
                  {"L", proj.L()},
                  {"violations", std::move(sv)},
                  {"max_slack_1", s1.max_slack},
                  {"max_slack_2", s2.max_slack}};
  j["key_lemma"] = to_json(kl);
  const std::size_t total = s1.violations.size() + s2.violations.size() + kl.violations.size();
  j["total_violations"] = total;
  emit_json(j, cfg, out);
  if (total > 0) err << "keylemma: " << total << " violations\n";
  return total == 0 ? kPass : kFail;
}

int cmd_geodesic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RadialPotential p = RadialPotential::parse(cfg.potential);
  if (cfg.dim < 1) throw DomainError("--dim must be at least 1");
  const RealifiedMetric metric(p, cfg.dim);
  const int n = metric.dim();
  RVector x0 = RVector::Zero(n);
  RVector v0 = RVector::Zero(n);
  v0[0] = 1.0;
  if (!cfg.from.empty()) {
    if (static_cast<int>(cfg.from.size()) != n) throw DomainError("--from needs 2*dim coordinates");
    x0 = Eigen::Map<const RVector>(cfg.from.data(), n);
  }
  if (!cfg.dir.empty()) {
    if (static_cast<int>(cfg.dir.size()) != n) throw DomainError("--dir needs 2*dim coordinates");
    v0 = Eigen::Map<const RVector>(cfg.dir.data(), n);
  }
  GeodesicOptions opt;
  opt.steps = cfg.steps;
  opt.max_drift = cfg.drift_tol;
  opt.allow_exit = true;
  GeodesicPath path;
  try {
    path = integrate_geodesic(metric, x0, unit_speed(metric, x0, v0), cfg.time, opt);
  } catch (const StepTooLarge& e) {
    err << "geodesic: " << e.what() << '\n';
    return kFail;
  }

  if (cfg.csv_path.empty()) {
    write_trace_csv(out, path);
  } else {
    std::ofstream f(cfg.csv_path);
    if (!f) throw DomainError("cannot open " + cfg.csv_path + " for writing");
    write_trace_csv(f, path);
  }
  if (!cfg.json_path.empty()) {
    Json j;
    j["config"] = config_json(cfg);
    j["t_end"] = path.t.back();
    j["endpoint"] = std::vector<double>(path.end().data(), path.end().data() + n);
    j["max_speed_drift"] = path.max_speed_drift;
    j["exited_domain"] = path.exited_domain;
    emit_json(j, cfg, out);
  }
  if (path.exited_domain) {
    err << "geodesic: left the domain after t = " << path.t.back() << " (requested " << cfg.time << ")\n";
    return kUsage;
  }
  return kPass;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for negatively curved radial Kahler metrics and product spaces", "negcurv"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for every sampled quantity");
    sub->add_option("--json", cfg.json_path, "Write the JSON report here instead of stdout");
  };
  const auto add_potential = [&](CLI::App* sub) {
    sub->add_option("--potential", cfg.potential, "exp, linear, log_ball, fubini or poly:c1,c2,...");
  };

  CLI::App* cond = app.add_subcommand("conditions", "Pointwise curvature conditions and completeness");
  add_potential(cond);
  cond->add_option("--rmax", cfg.r_max, "Largest radius of the grid");
  cond->add_option("--grid", cfg.grid_points, "Number of grid radii");
  add_common(cond);

  CLI::App* curv = app.add_subcommand("curvature", "Sampled sectional, holomorphic and Ricci curvature");
  add_potential(curv);
  curv->add_option("--dim", cfg.dim, "Complex dimension n");
  curv->add_option("--radii", cfg.radii, "Radii r of the sample points r e_1")->delimiter(',');
  curv->add_option("--planes", cfg.planes, "Sampled planes per radius");
  curv->add_flag("--samples", cfg.with_samples, "Include every sampled value");
  add_common(curv);

  CLI::App* hyp = app.add_subcommand("hyperbolicity", "Four-point and thin-triangle delta estimates");
  hyp->add_option("--space", cfg.space, "line, ray, plane, disc4, product-rays or product-discs");
  hyp->add_option("--combiner", cfg.combiner, "Product combiner, l1 or l2");
  hyp->add_option("--scale", cfg.scale, "Sampling scale");
  hyp->add_option("--quadruples", cfg.quadruples, "Number of quadruples");
  hyp->add_option("--samples-per-side", cfg.samples_per_side, "Samples per triangle side");
  add_common(hyp);

  CLI::App* key = app.add_subcommand("keylemma", "Schwarz bound and product inequalities on two -4 discs");
  key->add_option("--pairs", cfg.pairs, "Sampled pairs");
  key->add_option("--radius", cfg.radius, "Sampling radius in each disc");
  key->add_option("--L", cfg.L_override, "Override the Lipschitz constant");
  add_common(key);

  CLI::App* geo = app.add_subcommand("geodesic", "Integrate a unit-speed geodesic and write a CSV trace");
  add_potential(geo);
  geo->add_option("--dim", cfg.dim, "Complex dimension n");
  geo->add_option("--from", cfg.from, "Start point, 2n reals")->delimiter(',');
  geo->add_option("--dir", cfg.dir, "Initial direction, 2n reals")->delimiter(',');
  geo->add_option("--time", cfg.time, "Integration time");
  geo->add_option("--steps", cfg.steps, "RK4 steps, 0 for automatic");
  geo->add_option("--drift-tol", cfg.drift_tol, "Allowed relative speed drift");
  geo->add_option("--csv", cfg.csv_path, "Write the trace here instead of stdout");
  add_common(geo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*cond) {
      cfg.command = "conditions";
      return cmd_conditions(cfg, out, err);
    }
    if (*curv) {
      cfg.command = "curvature";
      return cmd_curvature(cfg, out, err);
    }
    if (*hyp) {
      cfg.command = "hyperbolicity";
      return cmd_hyperbolicity(cfg, out, err);
    }
    if (*key) {
      cfg.command = "keylemma";
      return cmd_keylemma(cfg, out, err);
    }
    cfg.command = "geodesic";
    return cmd_geodesic(cfg, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotPositiveDefinite& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "failed: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace negcurv::cli
