// gaplab — finite-n gap probabilities for the Gaussian and Laguerre unitary
// ensembles, with verification subcommands for every identity the library
// implements.
//
// Exit codes: 0 all checks within tolerance, 1 a verification failed (the
// report is still written), 2 configuration or numerical-infrastructure
// error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "gaplab/commands.hpp"
#include "gaplab/verify.hpp"

namespace {

using gaplab::RunConfig;

std::string resolve_output(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("GAPLAB_OUT_DIR");
  if (!dir || !*dir) return path;
  return (std::filesystem::path(dir) / p).string();
}

int emit(const gaplab::CommandResult& res, const RunConfig& cfg) {
  std::string out = resolve_output(cfg.output);
  if (out.empty()) {
    std::cout << res.body;
  } else {
    gaplab::write_text_file(out, res.body);
    for (const auto& [suffix, content] : res.extra_files)
      gaplab::write_text_file(out + suffix, content);
  }
  return res.exit_code;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--ensemble", cfg.ensemble, "gue | lue");
  sub->add_option("--alpha", cfg.alpha, "Laguerre weight exponent (> 0)");
  sub->add_option("--digits", cfg.digits, "working precision in decimal digits (>= 30)");
  sub->add_option("--output", cfg.output, "output file (default: stdout)");
  sub->add_option("--format", cfg.format, "csv | json");
  sub->add_option("--tol", cfg.tol, "override the pass/fail tolerance");
}

void add_window(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--a", cfg.a, "window lower endpoint");
  sub->add_option("--b", cfg.b, "window upper endpoint");
  sub->add_flag("--whole-support", cfg.whole_support, "use the full support instead of a window");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gap probabilities, Hankel determinants and verification reports for the "
      "Gaussian and Laguerre unitary ensembles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string chosen;

  auto* moments = app.add_subcommand("moments", "truncated moments with a quadrature self-check");
  add_common(moments, cfg);
  add_window(moments, cfg);
  moments->add_option("--jmax", cfg.jmax, "highest moment order");

  auto* recurrence =
      app.add_subcommand("recurrence", "orthogonal-polynomial data by both construction routes");
  add_common(recurrence, cfg);
  add_window(recurrence, cfg);
  recurrence->add_option("--n-max", cfg.n_max, "highest polynomial degree");
  recurrence->add_option("--nodes", cfg.nodes, "quadrature nodes for the Stieltjes route");

  auto* compat = app.add_subcommand("compat", "difference-identity residual report");
  add_common(compat, cfg);
  add_window(compat, cfg);
  compat->add_option("--n", cfg.n, "degree under test");

  auto* surf = app.add_subcommand("surface", "gap-probability surface over a window grid");
  add_common(surf, cfg);
  surf->add_option("--n", cfg.n, "matrix dimension");
  surf->add_option("--a-grid", cfg.a_grid, "lower endpoints, start:end:count");
  surf->add_option("--b-grid", cfg.b_grid, "upper endpoints, start:end:count");

  auto* pde_g = app.add_subcommand("pde-gue", "Gaussian master-PDE residual at a window");
  add_common(pde_g, cfg);
  add_window(pde_g, cfg);
  pde_g->add_option("--n", cfg.n, "matrix dimension");
  pde_g->add_option("--fd-step", cfg.fd_step, "finite-difference step");
  pde_g->add_option("--scheme", cfg.scheme, "central2 | richardson4");

  auto* pde_l = app.add_subcommand("pde-lue", "Laguerre master-PDE residual at a window");
  add_common(pde_l, cfg);
  add_window(pde_l, cfg);
  pde_l->add_option("--n", cfg.n, "matrix dimension");
  pde_l->add_option("--fd-step", cfg.fd_step, "finite-difference step");
  pde_l->add_option("--scheme", cfg.scheme, "central2 | richardson4");

  auto* toda = app.add_subcommand("toda", "recurrence-coefficient flow residuals");
  add_common(toda, cfg);
  add_window(toda, cfg);
  toda->add_option("--n", cfg.n, "degree under test");
  toda->add_option("--fd-step", cfg.fd_step, "finite-difference step");
  toda->add_option("--scheme", cfg.scheme, "central2 | richardson4");

  auto* sigma = app.add_subcommand("sigma-ode", "one-sided sigma-form ODE reduction residuals");
  add_common(sigma, cfg);
  sigma->add_option("--n", cfg.n, "matrix dimension");
  sigma->add_option("--z-grid", cfg.a_grid, "free endpoints, start:end:count");
  sigma->add_option("--fd-step", cfg.fd_step, "finite-difference step");

  auto* tw = app.add_subcommand("tw", "limiting edge distribution table");
  add_common(tw, cfg);
  tw->add_option("--smin", cfg.smin, "grid start");
  tw->add_option("--smax", cfg.smax, "grid end");
  tw->add_option("--points", cfg.points, "grid size");
  tw->add_option("--nodes", cfg.nystrom_nodes, "Nystrom nodes");
  tw->add_flag("--crosscheck", cfg.crosscheck, "also verify against the ODE route");

  auto* scaling = app.add_subcommand("scaling-limit", "edge profiles and limiting-PDE residuals");
  add_common(scaling, cfg);
  scaling->add_option("--c", cfg.c, "edge-scaling constant (> 0)");
  scaling->add_option("--beta", cfg.beta, "Laguerre alpha = beta n (> 0)");
  scaling->add_option("--x-grid", cfg.x_grid, "left-edge grid, start:end:count");
  scaling->add_option("--y-grid", cfg.y_grid, "right-edge grid, start:end:count");
  scaling->add_option("--n", cfg.n, "nominal dimension for the scaling map");

  auto* indep = app.add_subcommand("independence", "joint-vs-product factorization evidence");
  add_common(indep, cfg);
  indep->add_option("--c", cfg.c, "edge-scaling constant (> 0)");
  indep->add_option("--beta", cfg.beta, "Laguerre alpha = beta n (> 0)");
  indep->add_option("--n-list", cfg.n_list, "increasing dimensions, e.g. 4,8,16");
  indep->add_option("--x-grid", cfg.x_grid, "left-edge grid, start:end:count");
  indep->add_option("--y-grid", cfg.y_grid, "right-edge grid, start:end:count");

  auto* mc = app.add_subcommand("mc", "matrix-model Monte Carlo gap probability");
  add_common(mc, cfg);
  add_window(mc, cfg);
  mc->add_option("--n", cfg.n, "matrix dimension");
  mc->add_option("--trials", cfg.trials, "number of sampled matrices");
  mc->add_option("--seed", cfg.seed, "RNG seed (results are seed-deterministic)");

  auto* quad = app.add_subcommand("quad-oracle", "direct joint-density quadrature (n <= 3)");
  add_common(quad, cfg);
  add_window(quad, cfg);
  quad->add_option("--n", cfg.n, "matrix dimension (1..3)");
  quad->add_option("--nodes", cfg.nodes, "quadrature nodes per axis");

  auto* selftest = app.add_subcommand("selftest", "fast subset of the acceptance suite");
  bool inject_tol_zero = false;
  selftest->add_flag("--inject-tol-zero", inject_tol_zero)->group("");  // harness sanity hook

  for (auto* sub : {moments, recurrence, compat, surf, pde_g, pde_l, toda, sigma, tw, scaling,
                    indep, mc, quad, selftest})
    sub->callback([&chosen, sub]() { chosen = sub->get_name(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  }

  try {
    gaplab::CommandResult res;
    if (chosen == "moments") res = gaplab::cmd::run_moments(cfg);
    else if (chosen == "recurrence") res = gaplab::cmd::run_recurrence(cfg);
    else if (chosen == "compat") res = gaplab::cmd::run_compat(cfg);
    else if (chosen == "surface") res = gaplab::cmd::run_surface(cfg);
    else if (chosen == "pde-gue") res = gaplab::cmd::run_pde(cfg, true);
    else if (chosen == "pde-lue") res = gaplab::cmd::run_pde(cfg, false);
    else if (chosen == "toda") res = gaplab::cmd::run_toda(cfg);
    else if (chosen == "sigma-ode") res = gaplab::cmd::run_sigma_ode(cfg);
    else if (chosen == "tw") res = gaplab::cmd::run_tw(cfg);
    else if (chosen == "scaling-limit") res = gaplab::cmd::run_scaling_limit(cfg);
    else if (chosen == "independence") res = gaplab::cmd::run_independence(cfg);
    else if (chosen == "mc") res = gaplab::cmd::run_mc(cfg);
    else if (chosen == "quad-oracle") res = gaplab::cmd::run_quad_oracle(cfg);
    else if (chosen == "selftest") {
      gaplab::verify::Options opt;
      opt.fast = true;
      opt.show_timing = false;
      if (inject_tol_zero) opt.tol_scale = 0.0;
      return gaplab::verify::run_suite(opt, std::cout);
    } else {
      std::cerr << "invalid config: subcommand: unknown '" << chosen << "'\n";
      return 2;
    }
    return emit(res, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
