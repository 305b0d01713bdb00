#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

using namespace ijt::cli;

int main(int argc, char** argv) {
  CLI::App app{"sparse recovery via iterative jumping thresholding"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* cmd_g = app.add_subcommand("gen", "generate a seeded recovery instance");
  cmd_g->add_option("--N", gen.N, "signal length");
  cmd_g->add_option("--M", gen.M, "measurement count");
  cmd_g->add_option("--k", gen.k, "sparsity of the true signal");
  cmd_g->add_option("--variance", gen.variance, "entry variance of A");
  cmd_g->add_flag("--var-inv-M", gen.var_inv_m, "use variance 1/M");
  cmd_g->add_option("--amp", gen.amplitude, "amplitude model: stdnormal|pm1");
  cmd_g->add_option("--seed", gen.seed, "PRNG seed");
  cmd_g->add_option("--out", gen.out, "output directory");
  cmd_g->add_option("--stem", gen.stem, "file stem for the instance files");

  std::string config;
  CommonFlags common;
  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config)
      cmd->add_option("--config", config, "JSON run config")->required();
    cmd->add_option("--out", common.out, "override the output directory");
    cmd->add_option("--seed", common.seed, "override the instance seed");
    cmd->add_option("--emit", common.emit, "outputs to write: csv,svg");
    cmd->add_option("--jobs", common.jobs, "worker threads for independent solves");
  };

  auto* cmd_s = app.add_subcommand("solve", "run one solver on one instance");
  add_common(cmd_s, true);

  int grid = 100;
  auto* cmd_m = app.add_subcommand("sweep-mu", "solve across a uniform grid of step sizes");
  add_common(cmd_m, true);
  cmd_m->add_option("--grid", grid, "number of mu values");

  std::vector<int> sizes = {250, 500, 750, 1000, 1250, 1500};
  auto* cmd_b = app.add_subcommand("bench", "time ijt/irls/irl1 across problem sizes");
  add_common(cmd_b, true);
  cmd_b->add_option("--sizes", sizes, "signal lengths N (M = N/5)")->delimiter(',');

  ProxTableFlags prox;
  auto* cmd_p = app.add_subcommand("prox-table", "sample a thresholding function to CSV");
  cmd_p->add_option("--family", prox.family, "penalty family: power|log-power");
  cmd_p->add_option("--q", prox.q, "penalty exponent in (0,1)");
  cmd_p->add_option("--lambda", prox.lambda, "regularization weight");
  cmd_p->add_option("--mu", prox.mu, "step size");
  cmd_p->add_option("--zmin", prox.zmin, "left end of the sampled range");
  cmd_p->add_option("--zmax", prox.zmax, "right end of the sampled range");
  cmd_p->add_option("--samples", prox.samples, "number of uniform samples");
  cmd_p->add_option("--algo", prox.algo, "rule: ijt|soft|hard");
  cmd_p->add_option("--out", prox.out, "output directory");
  cmd_p->add_flag("--svg", prox.emit_svg, "also draw the curve");

  CheckFlags check;
  auto* cmd_c = app.add_subcommand("check", "diagnostics report for a solution file");
  cmd_c->add_option("--A", check.a_file, "matrix file")->required();
  cmd_c->add_option("--y", check.y_file, "observation file")->required();
  cmd_c->add_option("--solution", check.solution_file, "solution vector file")->required();
  cmd_c->add_option("--xtrue", check.xtrue_file, "ground-truth vector file");
  cmd_c->add_option("--loss", check.loss, "least-squares|logistic");
  cmd_c->add_option("--family", check.family, "penalty family");
  cmd_c->add_option("--q", check.q, "penalty exponent");
  cmd_c->add_option("--lambda", check.lambda, "regularization weight");
  cmd_c->add_option("--mu", check.mu, "absolute step size");
  cmd_c->add_option("--mu-frac", check.mu_frac, "step size as a fraction of 1/L");
  cmd_c->add_option("--last-step-norm", check.last_step_norm,
                    "step norm for the posteriori bound");
  cmd_c->add_option("--oracle", check.oracle_samples,
                    "cross-check this many prox values against the grid oracle");
  cmd_c->add_option("--out", check.out, "also write check.json here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_g->parsed()) return cmd_gen(gen);
    if (cmd_s->parsed()) return cmd_solve(config, common);
    if (cmd_m->parsed()) return cmd_sweep_mu(config, grid, common);
    if (cmd_b->parsed()) return cmd_bench(config, sizes, common);
    if (cmd_p->parsed()) return cmd_prox_table(prox);
    if (cmd_c->parsed()) return cmd_check(check);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
