#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include <nlohmann/json.hpp>

#include "ijt/diagnostics.hpp"
#include "ijt/io.hpp"
#include "ijt/linalg.hpp"
#include "ijt/prox.hpp"
#include "ijt/testkit.hpp"
#include "svg_chart.hpp"

namespace ijt::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIters: return "max_iters";
    case SolveStatus::Diverged: return "diverged";
  }
  return "?";
}

void apply_overrides(RunConfig& cfg, const CommonFlags& common) {
  if (common.out) cfg.output = *common.out;
  if (common.seed) {
    if (!cfg.instance.inline_spec)
      throw ConfigError("--seed only applies to inline (generated) instances");
    cfg.instance.inline_spec->seed = *common.seed;
  }
  if (common.emit) {
    cfg.emit_csv = false;
    cfg.emit_svg = false;
    std::stringstream ss(*common.emit);
    std::string kind;
    while (std::getline(ss, kind, ',')) {
      if (kind == "csv") cfg.emit_csv = true;
      else if (kind == "svg") cfg.emit_svg = true;
      else throw ConfigError("--emit entries must be csv or svg");
    }
  }
}

double mse_against(const Vector& x, const Vector& x_true) {
  return (x - x_true).squaredNorm() / static_cast<double>(x.size());
}

ordered_json summary_json(Algo algo, const SolveResult& res,
                          const std::optional<Vector>& x_true, double mu_report,
                          const Problem& prob, const PenaltySpec& penalty,
                          double lambda) {
  ordered_json j;
  j["algo"] = algo_name(algo);
  j["status"] = status_name(res.status);
  j["iterations"] = res.iterations;
  j["wall_time_s"] = res.wall_time_total;
  if (x_true) j["mse"] = mse_against(res.x_final, *x_true);
  if (res.support_freeze_iter) j["support_freeze_iter"] = *res.support_freeze_iter;
  if (res.sign_freeze_iter) j["sign_freeze_iter"] = *res.sign_freeze_iter;
  j["lambda"] = lambda;
  j["mu"] = mu_report;
  j["warnings"] = res.warnings;

  const double last_step =
      res.trace.step_norm.empty() ? 0.0 : res.trace.step_norm.back();
  const DiagnosticsReport report =
      make_report(prob, penalty, lambda, mu_report, res.x_final, last_step);
  j["diagnostics"] = ordered_json::parse(to_json(report));
  return j;
}

void write_json(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
}

SolveResult run_algo(const RunConfig& cfg, const Problem& prob,
                     const StepObserver& step_obs, const OuterObserver& outer_obs) {
  switch (cfg.algo) {
    case Algo::Ijt:
      return ijt_solve(prob, cfg.penalty, cfg.solver, step_obs);
    case Algo::Soft:
      return soft_solve(prob, cfg.solver, step_obs);
    case Algo::Hard:
      return hard_solve(prob, cfg.solver, step_obs);
    case Algo::Irls:
      return irls_solve(prob, cfg.baseline, outer_obs);
    case Algo::Irl1:
      return irl1_solve(prob, cfg.baseline, outer_obs);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int cmd_gen(const GenFlags& flags) {
  InstanceSpec spec;
  spec.N = flags.N;
  spec.M = flags.M;
  spec.k = flags.k;
  spec.variance = (flags.var_inv_m || flags.variance <= 0.0)
                      ? 1.0 / flags.M
                      : flags.variance;
  if (flags.amplitude == "stdnormal") spec.amplitude_model = AmplitudeModel::StdNormal;
  else if (flags.amplitude == "pm1") spec.amplitude_model = AmplitudeModel::PlusMinusOne;
  else throw ConfigError("--amp must be stdnormal or pm1");
  spec.seed = flags.seed;

  Instance inst;
  try {
    inst = gen_instance(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  fs::create_directories(flags.out);
  write_matrix(flags.out / (flags.stem + ".A.txt"), inst.A);
  write_vector(flags.out / (flags.stem + ".xtrue.txt"), inst.x_true);
  write_vector(flags.out / (flags.stem + ".y.txt"), inst.y);

  ordered_json manifest;
  manifest["N"] = spec.N;
  manifest["M"] = spec.M;
  manifest["k"] = spec.k;
  manifest["variance"] = spec.variance;
  manifest["amplitude"] =
      spec.amplitude_model == AmplitudeModel::StdNormal ? "stdnormal" : "pm1";
  manifest["seed"] = spec.seed;
  manifest["files"] = {{"A", flags.stem + ".A.txt"},
                       {"x_true", flags.stem + ".xtrue.txt"},
                       {"y", flags.stem + ".y.txt"}};
  write_json(flags.out / (flags.stem + ".manifest.json"), manifest);
  return 0;
}

int cmd_solve(const fs::path& config_path, const CommonFlags& common) {
  RunConfig cfg = load_config(config_path);
  apply_overrides(cfg, common);
  LoadedInstance inst = load_instance(cfg.instance);
  const Problem& prob = inst.problem;

  // iteration-error series for the convergence chart
  std::vector<double> err_iters, err_values;
  StepObserver step_obs;
  OuterObserver outer_obs;
  if (inst.x_true && cfg.emit_svg) {
    step_obs = [&](int n, const Vector&, const Vector&, const Vector& x_next) {
      err_iters.push_back(n);
      err_values.push_back((x_next - *inst.x_true).norm());
    };
    outer_obs = [&](int n, const Vector& x, double) {
      err_iters.push_back(n);
      err_values.push_back((x - *inst.x_true).norm());
    };
  }

  const SolveResult res = run_algo(cfg, prob, step_obs, outer_obs);
  const double mu_report = res.mu_resolved > 0.0
                               ? res.mu_resolved
                               : resolve_mu(cfg.solver, prob.lipschitz());

  fs::create_directories(cfg.output);
  if (cfg.emit_csv) write_trace_csv(cfg.output / "trace.csv", res.trace);
  write_vector(cfg.output / "solution.txt", res.x_final);
  write_json(cfg.output / "summary.json",
             summary_json(cfg.algo, res, inst.x_true, mu_report, prob, cfg.penalty,
                          cfg.solver.lambda));
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';

  const bool drawable = std::any_of(err_values.begin(), err_values.end(),
                                    [](double e) { return e > 0.0; });
  if (cfg.emit_svg && drawable) {
    svg::ChartOptions opt;
    opt.title = "iteration error, " + algo_name(cfg.algo);
    opt.x_label = "iteration";
    opt.y_label = "||x^n - x*||";
    opt.log_y = true;
    svg::write_line_chart(cfg.output / "error.svg",
                          {{algo_name(cfg.algo), err_iters, err_values}}, opt);
  }
  return res.status == SolveStatus::Converged ? 0 : 2;
}

int cmd_sweep_mu(const fs::path& config_path, int grid, const CommonFlags& common) {
  if (grid < 1) throw ConfigError("--grid must be positive");
  RunConfig cfg = load_config(config_path);
  apply_overrides(cfg, common);
  if (cfg.algo != Algo::Ijt)
    throw ConfigError("sweep-mu runs the ijt algorithm; set algo accordingly");
  LoadedInstance inst = load_instance(cfg.instance);
  const Problem& prob = inst.problem;
  if (prob.kind() != LossKind::LeastSquares)
    throw ConfigError("sweep-mu requires a least-squares instance");
  if (!inst.x_true) throw ConfigError("sweep-mu needs x_true for the MSE column");

  const double lip = prob.lipschitz();

  // resolve the initialization once; it does not depend on mu
  Vector x0;
  switch (cfg.solver.init) {
    case InitKind::Zero: x0 = Vector::Zero(prob.dim()); break;
    case InitKind::Vector: x0 = cfg.solver.init_vector; break;
    case InitKind::L1Solution: {
      const double l1_lambda =
          0.01 * (prob.matrix().transpose() * prob.rhs()).cwiseAbs().maxCoeff();
      x0 = fista_l1(prob, l1_lambda, 1e-8, 20000).x;
      break;
    }
  }

  struct Row {
    double mu = 0.0, mse = 0.0;
    int iterations = 0;
    SolveStatus status = SolveStatus::MaxIters;
  };
  std::vector<Row> rows(static_cast<std::size_t>(grid));
  parallel_for(common.jobs, grid, [&](int j) {
    SolverConfig run = cfg.solver;
    run.mu = (j + 0.5) / grid / lip;  // uniform in (0, 1/L), endpoints excluded
    run.mu_frac.reset();
    run.init = InitKind::Vector;
    run.init_vector = x0;
    run.trace = TraceLevel::Light;
    const SolveResult r = ijt_solve(prob, cfg.penalty, run);
    rows[static_cast<std::size_t>(j)] =
        Row{*run.mu, mse_against(r.x_final, *inst.x_true), r.iterations, r.status};
  });

  fs::create_directories(cfg.output);
  if (cfg.emit_csv) {
    CsvWriter csv({"mu", "iterations", "mse", "status"});
    for (const auto& row : rows)
      csv.add_row({CsvWriter::cell(row.mu), CsvWriter::cell(row.iterations),
                   CsvWriter::cell(row.mse), status_name(row.status)});
    csv.write(cfg.output / "sweep_mu.csv");
  }
  if (cfg.emit_svg) {
    std::vector<double> mus, iters, mses;
    for (const auto& row : rows) {
      mus.push_back(row.mu);
      iters.push_back(row.iterations);
      mses.push_back(row.mse);
    }
    svg::ChartOptions it_opt{"iterations vs step size", "mu", "iterations", true};
    svg::write_line_chart(cfg.output / "sweep_iterations.svg",
                          {{"iterations", mus, iters}}, it_opt);
    svg::ChartOptions mse_opt{"recovery error vs step size", "mu", "mse", true};
    svg::write_line_chart(cfg.output / "sweep_mse.svg", {{"mse", mus, mses}}, mse_opt);
  }

  const bool any_ok = std::any_of(rows.begin(), rows.end(), [](const Row& r) {
    return r.status == SolveStatus::Converged;
  });
  return any_ok ? 0 : 2;
}

int cmd_bench(const fs::path& config_path, const std::vector<int>& sizes,
              const CommonFlags& common) {
  if (sizes.empty()) throw ConfigError("--sizes must name at least one N");
  RunConfig cfg = load_config(config_path);
  apply_overrides(cfg, common);
  if (!cfg.instance.inline_spec)
    throw ConfigError("bench generates its instances; use an inline instance section");

  struct Cell {
    std::string algo;
    int n = 0;
    double wall = 0.0, mse = 0.0;
    int iterations = 0;
    SolveStatus status = SolveStatus::MaxIters;
  };
  const std::vector<std::string> algos = {"ijt-q1/2", "ijt-q2/3", "irls", "irl1"};
  std::vector<Cell> cells(sizes.size() * algos.size());

  const int jobs = std::max(1, common.jobs);
  parallel_for(jobs, static_cast<int>(sizes.size()), [&](int si) {
    const int n = sizes[static_cast<std::size_t>(si)];
    InstanceSpec spec = *cfg.instance.inline_spec;
    spec.N = n;
    spec.M = std::max(1, n / 5);
    spec.variance = 1.0 / spec.M;
    spec.seed = cfg.instance.inline_spec->seed + static_cast<std::uint64_t>(si);
    const Instance inst = gen_instance(spec);
    const Problem prob = Problem::least_squares(inst.A, inst.y);

    for (std::size_t ai = 0; ai < algos.size(); ++ai) {
      SolveResult r;
      if (ai <= 1) {
        const PenaltySpec p{PenaltyFamily::Power, ai == 0 ? 0.5 : 2.0 / 3.0};
        SolverConfig run = cfg.solver;
        run.trace = TraceLevel::Light;
        r = ijt_solve(prob, p, run);
      } else {
        BaselineConfig b = cfg.baseline;
        b.q = 0.5;
        r = ai == 2 ? irls_solve(prob, b) : irl1_solve(prob, b);
      }
      cells[static_cast<std::size_t>(si) * algos.size() + ai] =
          Cell{algos[ai], n, r.wall_time_total, mse_against(r.x_final, inst.x_true),
               r.iterations, r.status};
    }
  });

  fs::create_directories(cfg.output);
  if (cfg.emit_csv) {
    CsvWriter csv({"algo", "N", "wall_time_s", "mse", "iterations", "status",
                   "time_ratio_vs_ijt_q12"});
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      const double base = cells[si * algos.size()].wall;
      for (std::size_t ai = 0; ai < algos.size(); ++ai) {
        const Cell& c = cells[si * algos.size() + ai];
        csv.add_row({c.algo, CsvWriter::cell(c.n), CsvWriter::cell(c.wall),
                     CsvWriter::cell(c.mse), CsvWriter::cell(c.iterations),
                     status_name(c.status),
                     CsvWriter::cell(base > 0.0 ? c.wall / base : 0.0)});
      }
    }
    csv.write(cfg.output / "bench.csv");
  }
  if (cfg.emit_svg) {
    std::vector<svg::Series> series;
    for (std::size_t ai = 0; ai < algos.size(); ++ai) {
      svg::Series s;
      s.label = algos[ai];
      for (std::size_t si = 0; si < sizes.size(); ++si) {
        s.x.push_back(sizes[si]);
        s.y.push_back(cells[si * algos.size() + ai].wall);
      }
      series.push_back(std::move(s));
    }
    svg::ChartOptions opt{"solver wall time vs problem size", "N", "seconds", true};
    svg::write_line_chart(cfg.output / "bench_time.svg", series, opt);
  }

  const bool any_failed = std::any_of(cells.begin(), cells.end(), [](const Cell& c) {
    return c.status != SolveStatus::Converged;
  });
  return any_failed ? 2 : 0;
}

int cmd_prox_table(const ProxTableFlags& flags) {
  if (flags.samples < 2) throw ConfigError("--samples must be at least 2");
  if (!(flags.lambda > 0.0 && flags.mu > 0.0))
    throw ConfigError("--lambda and --mu must be positive");
  if (!(flags.zmax > flags.zmin)) throw ConfigError("need zmax > zmin");

  PenaltySpec p;
  try {
    p.family = family_from_name(flags.family);
    p.q = flags.q;
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  double tau;
  std::function<double(double)> rule;
  if (flags.algo == "ijt") {
    const ThresholdPair t = thresholds(p, flags.lambda, flags.mu);
    tau = t.tau;
    rule = [p, t](double z) { return prox_scalar(p, t, z); };
  } else if (flags.algo == "soft") {
    const double thr = flags.lambda * flags.mu;
    tau = thr;
    rule = [thr](double z) { return prox_soft(thr, z); };
  } else if (flags.algo == "hard") {
    const double lm = flags.lambda * flags.mu;
    tau = std::sqrt(2.0 * lm);
    rule = [lm](double z) { return prox_hard(lm, z); };
  } else {
    throw ConfigError("--algo must be ijt, soft or hard");
  }

  std::vector<double> zs;
  zs.reserve(static_cast<std::size_t>(flags.samples) + 2);
  for (int i = 0; i < flags.samples; ++i)
    zs.push_back(flags.zmin + (flags.zmax - flags.zmin) * i / (flags.samples - 1));
  zs.push_back(tau * (1.0 - 1e-9));  // straddle the jump
  zs.push_back(tau * (1.0 + 1e-9));
  std::sort(zs.begin(), zs.end());

  fs::create_directories(flags.out);
  CsvWriter csv({"z", "prox"});
  std::vector<double> ys;
  ys.reserve(zs.size());
  for (double z : zs) {
    const double v = rule(z);
    ys.push_back(v);
    csv.add_row({CsvWriter::cell(z), CsvWriter::cell(v)});
  }
  csv.write(flags.out / "prox_table.csv");

  if (flags.emit_svg) {
    svg::ChartOptions opt{"thresholding function (" + flags.algo + ")", "z", "prox(z)",
                          false};
    svg::write_line_chart(flags.out / "prox_table.svg", {{flags.algo, zs, ys}}, opt);
  }
  return 0;
}

int cmd_check(const CheckFlags& flags) {
  PenaltySpec p;
  Problem prob = [&] {
    try {
      p.family = family_from_name(flags.family);
      p.q = flags.q;
      validate(p);
      Matrix a = read_matrix(flags.a_file);
      Vector y = read_vector(flags.y_file);
      const LossKind kind = flags.loss == "logistic" ? LossKind::Logistic
                                                     : LossKind::LeastSquares;
      return Problem(kind, std::move(a), std::move(y));
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }();

  Vector x;
  try {
    x = read_vector(flags.solution_file);
    if (x.size() != prob.dim())
      throw ConfigError("solution length does not match the matrix");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  SolverConfig mu_cfg;
  mu_cfg.mu = flags.mu;
  mu_cfg.mu_frac = flags.mu_frac;
  if (!mu_cfg.mu && !mu_cfg.mu_frac) mu_cfg.mu_frac = 0.99;
  if (mu_cfg.mu && mu_cfg.mu_frac)
    throw ConfigError("give at most one of --mu, --mu-frac");
  const double mu = resolve_mu(mu_cfg, prob.lipschitz());

  const DiagnosticsReport report =
      make_report(prob, p, flags.lambda, mu, x, flags.last_step_norm);
  ordered_json j = ordered_json::parse(to_json(report));

  if (flags.xtrue_file) {
    const Vector xtrue = read_vector(*flags.xtrue_file);
    if (xtrue.size() == x.size()) j["mse"] = mse_against(x, xtrue);
  }
  if (flags.oracle_samples > 0) {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> uz(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < flags.oracle_samples; ++i) {
      const double z = uz(rng);
      worst = std::max(worst, std::abs(prox_scalar(p, flags.lambda, mu, z) -
                                       prox_oracle(p, flags.lambda, mu, z, 2.0, 20000)));
    }
    j["oracle_samples"] = flags.oracle_samples;
    j["oracle_max_dev"] = worst;
  }

  std::cout << j.dump(2) << '\n';
  if (flags.out) {
    fs::create_directories(*flags.out);
    write_json(*flags.out / "check.json", j);
  }
  return 0;
}

}  // namespace ijt::cli
