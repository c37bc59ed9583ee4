// Command-line front end: computes rho-radii, decides w_rho orthogonality
// and parallelism with optional brute-force cross-checks, and emits JSON
// report envelopes on stdout. Diagnostics go to stderr.
//
// Exit codes
//   radius:     0 ok, 2 malformed file, 3 invalid rho
//   orthogonal: 0 orthogonal, 1 not orthogonal, 2 malformed file,
//               3 invalid rho, 4 dimension mismatch
//   parallel:   0 parallel, 1 not parallel, same error codes
//   selftest:   0 all properties pass, 1 a property failed, 3 invalid trials

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "oprad/matrix_io.hpp"

namespace {

constexpr int kExitBadFile = 2;
constexpr int kExitBadParam = 3;
constexpr int kExitDimension = 4;
constexpr int kExitInternal = 5;

struct CommonOpts {
  double rho = 2.0;
  double tol = 0.0;  // 0 = module default
  int theta_samples = 16;
  bool cross_check = false;
  int grid_radial = 64;
  int grid_angular = 128;
};

void emit(const oprad::Json& envelope) { std::cout << envelope.dump(2) << "\n"; }

int run_radius(const std::string& path, double rho_v, double tol) {
  const oprad::MatrixFile mf = oprad::read_matrix_file(path);
  const oprad::RhoParam rho(rho_v);
  const double eff_tol = tol > 0.0 ? tol : 1e-9;
  const oprad::RadiusCertificate cert =
      oprad::rho_radius(mf.matrix, rho, eff_tol);

  oprad::Json env;
  env["command"] = "radius";
  env["inputs"] = oprad::Json::array(
      {oprad::Json{{"path", path}, {"label", mf.label}}});
  env["rho"] = rho_v;
  env["tolerance"] = eff_tol;
  env["result"] = oprad::to_json(cert);
  emit(env);
  return 0;
}

int run_orthogonal(const std::string& path_a, const std::string& path_b,
                   const CommonOpts& opt) {
  const oprad::MatrixFile fa = oprad::read_matrix_file(path_a);
  const oprad::MatrixFile fb = oprad::read_matrix_file(path_b);
  const oprad::RhoParam rho(opt.rho);
  const double tol = opt.tol > 0.0 ? opt.tol : 1e-7;

  const oprad::OrthogonalityReport rep = oprad::is_orthogonal(
      fa.matrix, fb.matrix, rho, tol, opt.theta_samples);

  oprad::Json env;
  env["command"] = "orthogonal";
  env["inputs"] = oprad::Json::array(
      {oprad::Json{{"path", path_a}, {"label", fa.label}},
       oprad::Json{{"path", path_b}, {"label", fb.label}}});
  env["rho"] = opt.rho;
  env["tolerance"] = tol;
  env["theta_samples"] = opt.theta_samples;
  env["result"] = oprad::to_json(rep);
  if (opt.cross_check) {
    oprad::GridSpec grid;
    grid.radial_points = opt.grid_radial;
    grid.angular_points = opt.grid_angular;
    env["oracle"] = oprad::to_json(oprad::cross_check(
        fa.matrix, fb.matrix, rho, oprad::CheckMode::orthogonal, grid));
  }
  emit(env);
  return rep.orthogonal ? 0 : 1;
}

int run_parallel(const std::string& path_a, const std::string& path_b,
                 const CommonOpts& opt) {
  const oprad::MatrixFile fa = oprad::read_matrix_file(path_a);
  const oprad::MatrixFile fb = oprad::read_matrix_file(path_b);
  const oprad::RhoParam rho(opt.rho);
  const double tol = opt.tol > 0.0 ? opt.tol : 1e-7;

  const oprad::ParallelismReport rep =
      oprad::is_parallel(fa.matrix, fb.matrix, rho, tol);

  oprad::Json env;
  env["command"] = "parallel";
  env["inputs"] = oprad::Json::array(
      {oprad::Json{{"path", path_a}, {"label", fa.label}},
       oprad::Json{{"path", path_b}, {"label", fb.label}}});
  env["rho"] = opt.rho;
  env["tolerance"] = tol;
  env["result"] = oprad::to_json(rep);
  if (opt.cross_check) {
    oprad::GridSpec grid;
    grid.radial_points = opt.grid_radial;
    grid.angular_points = opt.grid_angular;
    env["oracle"] = oprad::to_json(oprad::cross_check(
        fa.matrix, fb.matrix, rho, oprad::CheckMode::parallel, grid));
  }
  emit(env);
  return rep.parallel ? 0 : 1;
}

int run_selftest(std::uint64_t seed, int trials) {
  const oprad::SelfTestReport rep = oprad::run_selftest(seed, trials);

  oprad::Json env;
  env["command"] = "selftest";
  env["inputs"] = oprad::Json::array();
  env["seed"] = seed;
  env["trials"] = trials;
  env["result"] = oprad::to_json(rep);
  emit(env);

  for (const oprad::PropertyResult& p : rep.properties)
    std::cerr << (p.failures == 0 ? "[pass] " : "[FAIL] ") << p.name << " ("
              << p.trials << " trials, worst discrepancy "
              << p.worst_discrepancy << ")\n";
  return rep.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator radius geometry toolkit"};
  app.require_subcommand(1);

  std::string path_a, path_b;
  CommonOpts opt;
  std::uint64_t seed = 42;
  int trials = 50;

  CLI::App* radius = app.add_subcommand("radius", "compute w_rho with certificate");
  radius->add_option("matrix", path_a, "matrix JSON file")->required();
  radius->add_option("--rho", opt.rho, "rho parameter in [1e-3, 2]");
  radius->add_option("--tol", opt.tol, "radius tolerance (default 1e-9)");

  CLI::App* orth = app.add_subcommand("orthogonal",
                                      "decide w_rho Birkhoff-James orthogonality");
  orth->add_option("matrixA", path_a, "left matrix JSON file")->required();
  orth->add_option("matrixB", path_b, "right matrix JSON file")->required();
  orth->add_option("--rho", opt.rho, "rho parameter in [1e-3, 2]");
  orth->add_option("--tol", opt.tol, "decision tolerance (default 1e-7, relative)");
  orth->add_option("--theta-samples", opt.theta_samples,
                   "witness theta grid size (default 16)");
  orth->add_flag("--cross-check", opt.cross_check, "run the grid oracle too");
  orth->add_option("--grid-radial", opt.grid_radial, "oracle radial points");
  orth->add_option("--grid-angular", opt.grid_angular, "oracle angular points");

  CLI::App* par = app.add_subcommand("parallel", "decide w_rho parallelism");
  par->add_option("matrixA", path_a, "left matrix JSON file")->required();
  par->add_option("matrixB", path_b, "right matrix JSON file")->required();
  par->add_option("--rho", opt.rho, "rho parameter in [1e-3, 2]");
  par->add_option("--tol", opt.tol, "decision tolerance (default 1e-7, relative)");
  par->add_flag("--cross-check", opt.cross_check, "run the grid oracle too");
  par->add_option("--grid-radial", opt.grid_radial, "oracle radial points");
  par->add_option("--grid-angular", opt.grid_angular, "oracle angular points");

  CLI::App* st = app.add_subcommand("selftest",
                                    "run the invariant and oracle suites");
  st->add_option("--seed", seed, "RNG seed (default 42)");
  st->add_option("--trials", trials, "trials per property (default 50)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (radius->parsed()) return run_radius(path_a, opt.rho, opt.tol);
    if (orth->parsed()) return run_orthogonal(path_a, path_b, opt);
    if (par->parsed()) return run_parallel(path_a, path_b, opt);
    if (st->parsed()) return run_selftest(seed, trials);
  } catch (const oprad::matrix_file_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  } catch (const oprad::rho_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParam;
  } catch (const oprad::dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const oprad::value_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParam;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
