#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace negcurv::cli {

/// Everything that determines a run. Serialized into the "config" member of
/// every JSON report.
struct RunConfig {
  std::string command;
  std::string potential = "exp";
  int dim = 1;
  double r_max = 5.0;
  int grid_points = 500;
  std::vector<double> radii{1.0, 2.0, 3.0};
  int planes = 200;
  bool with_samples = false;
  std::string space = "disc4";
  std::string combiner = "l1";
  double scale = 10.0;
  std::size_t quadruples = 1000;
  int samples_per_side = 101;
  std::size_t pairs = 10000;
  double radius = 10.0;
  double L_override = 0.0;
  std::vector<double> from;
  std::vector<double> dir;
  double time = 1.0;
  int steps = 0;
  double drift_tol = 1e-4;
  std::uint64_t seed = 0;
  std::string json_path;
  std::string csv_path;
};

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Parses argv and runs one subcommand. Reports go to `out` (or the --json /
/// --csv files), diagnostics to `err`. Returns 0 pass, 1 fail, 2 usage or
/// input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_conditions(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_curvature(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_hyperbolicity(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_keylemma(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_geodesic(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace negcurv::cli
