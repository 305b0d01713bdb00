#include "run_config.hpp"

#include <fstream>

#include "ijt/io.hpp"

namespace ijt::cli {

Algo algo_from_name(const std::string& name) {
  if (name == "ijt") return Algo::Ijt;
  if (name == "irls") return Algo::Irls;
  if (name == "irl1") return Algo::Irl1;
  if (name == "soft") return Algo::Soft;
  if (name == "hard") return Algo::Hard;
  throw ConfigError("unknown algo: " + name + " (expected ijt|irls|irl1|soft|hard)");
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::Ijt: return "ijt";
    case Algo::Irls: return "irls";
    case Algo::Irl1: return "irl1";
    case Algo::Soft: return "soft";
    case Algo::Hard: return "hard";
  }
  return "?";
}

void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key))
      throw ConfigError("unknown key \"" + key + "\" in " + where);
}

namespace {

double get_number(const nlohmann::json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ConfigError(key + " must be a number");
  return obj[key].get<double>();
}

InstanceSource parse_instance(const nlohmann::json& j) {
  InstanceSource src;
  require_keys(j, {"N", "M", "k", "variance", "var_inv_m", "amplitude", "seed",
                   "files", "loss"},
               "instance");

  if (j.contains("loss")) {
    const std::string kind = j["loss"].get<std::string>();
    if (kind == "least-squares") src.loss = LossKind::LeastSquares;
    else if (kind == "logistic") src.loss = LossKind::Logistic;
    else throw ConfigError("instance.loss must be least-squares or logistic");
  }

  const bool has_files = j.contains("files");
  const bool has_inline = j.contains("N") || j.contains("M") || j.contains("k") ||
                          j.contains("variance") || j.contains("var_inv_m") ||
                          j.contains("amplitude") || j.contains("seed");
  if (has_files == has_inline)
    throw ConfigError("instance: give exactly one of inline fields or \"files\"");

  if (has_files) {
    const auto& f = j["files"];
    require_keys(f, {"A", "y", "x_true"}, "instance.files");
    if (!f.contains("A") || !f.contains("y"))
      throw ConfigError("instance.files needs \"A\" and \"y\"");
    src.a_file = f["A"].get<std::string>();
    src.y_file = f["y"].get<std::string>();
    if (f.contains("x_true")) src.xtrue_file = f["x_true"].get<std::string>();
    return src;
  }

  InstanceSpec spec;
  if (!j.contains("N") || !j.contains("M"))
    throw ConfigError("instance needs N and M");
  spec.N = j["N"].get<int>();
  spec.M = j["M"].get<int>();
  spec.k = j.contains("k") ? j["k"].get<int>() : 0;
  if (j.contains("variance") && j.contains("var_inv_m"))
    throw ConfigError("instance: variance and var_inv_m are mutually exclusive");
  if (j.contains("var_inv_m") && j["var_inv_m"].get<bool>())
    spec.variance = 1.0 / spec.M;
  else
    spec.variance = get_number(j, "variance", 1.0 / spec.M);
  if (j.contains("amplitude")) {
    const std::string amp = j["amplitude"].get<std::string>();
    if (amp == "stdnormal") spec.amplitude_model = AmplitudeModel::StdNormal;
    else if (amp == "pm1") spec.amplitude_model = AmplitudeModel::PlusMinusOne;
    else throw ConfigError("instance.amplitude must be stdnormal or pm1");
  }
  spec.seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : 0;
  src.inline_spec = spec;
  return src;
}

PenaltySpec parse_penalty(const nlohmann::json& j) {
  require_keys(j, {"family", "q"}, "penalty");
  PenaltySpec p;
  if (j.contains("family")) p.family = family_from_name(j["family"].get<std::string>());
  p.q = get_number(j, "q", 0.5);
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return p;
}

SolverConfig parse_solver(const nlohmann::json& j) {
  require_keys(j, {"lambda", "mu", "mu_frac", "init", "init_file", "tol_rel_change",
                   "max_iters", "stop_on_posteriori"},
               "solver");
  SolverConfig cfg;
  cfg.lambda = get_number(j, "lambda", 1e-3);
  if (j.contains("mu")) cfg.mu = j["mu"].get<double>();
  if (j.contains("mu_frac")) cfg.mu_frac = j["mu_frac"].get<double>();
  if (!cfg.mu && !cfg.mu_frac) cfg.mu_frac = 0.99;
  if (cfg.mu && cfg.mu_frac)
    throw ConfigError("solver: mu and mu_frac are mutually exclusive");

  if (j.contains("init")) {
    const std::string init = j["init"].get<std::string>();
    if (init == "zero") cfg.init = InitKind::Zero;
    else if (init == "l1") cfg.init = InitKind::L1Solution;
    else if (init == "vector") cfg.init = InitKind::Vector;
    else throw ConfigError("solver.init must be zero, l1 or vector");
  }
  if (cfg.init == InitKind::Vector) {
    if (!j.contains("init_file"))
      throw ConfigError("solver.init = vector requires init_file");
    cfg.init_vector = read_vector(j["init_file"].get<std::string>());
  } else if (j.contains("init_file")) {
    throw ConfigError("solver.init_file only applies when init = vector");
  }

  cfg.tol_rel_change = get_number(j, "tol_rel_change", 1e-10);
  cfg.max_iters = j.contains("max_iters") ? j["max_iters"].get<int>() : 100000;
  if (cfg.max_iters < 1) throw ConfigError("solver.max_iters must be positive");

  if (j.contains("stop_on_posteriori")) {
    const auto& s = j["stop_on_posteriori"];
    require_keys(s, {"rho", "target"}, "solver.stop_on_posteriori");
    if (!s.contains("rho") || !s.contains("target"))
      throw ConfigError("stop_on_posteriori needs rho and target");
    cfg.posteriori_rho = s["rho"].get<double>();
    cfg.stop_on_posteriori = s["target"].get<double>();
    if (!(*cfg.posteriori_rho > 0.0 && *cfg.posteriori_rho < 1.0))
      throw ConfigError("stop_on_posteriori.rho must lie in (0,1)");
  }
  return cfg;
}

BaselineConfig parse_baseline(const nlohmann::json& j, double lambda, double q) {
  require_keys(j, {"epsilon0", "decay", "floor", "outer_max", "inner_tol", "inner_max"},
               "baseline");
  BaselineConfig cfg;
  cfg.lambda = lambda;
  cfg.q = q;
  cfg.epsilon0 = get_number(j, "epsilon0", cfg.epsilon0);
  cfg.epsilon_decay = get_number(j, "decay", cfg.epsilon_decay);
  cfg.epsilon_floor = get_number(j, "floor", cfg.epsilon_floor);
  cfg.outer_max = j.contains("outer_max") ? j["outer_max"].get<int>() : cfg.outer_max;
  cfg.inner_tol = get_number(j, "inner_tol", cfg.inner_tol);
  cfg.inner_max = j.contains("inner_max") ? j["inner_max"].get<int>() : cfg.inner_max;
  return cfg;
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }

  require_keys(j, {"instance", "penalty", "solver", "baseline", "algo", "output", "emit"},
               "config root");
  RunConfig cfg;
  if (!j.contains("instance")) throw ConfigError("config needs an instance section");
  cfg.instance = parse_instance(j["instance"]);
  if (j.contains("penalty")) cfg.penalty = parse_penalty(j["penalty"]);
  if (j.contains("solver")) cfg.solver = parse_solver(j["solver"]);
  cfg.baseline = parse_baseline(j.contains("baseline") ? j["baseline"] : nlohmann::json::object(),
                                cfg.solver.lambda, cfg.penalty.q);
  if (j.contains("algo")) cfg.algo = algo_from_name(j["algo"].get<std::string>());
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("emit")) {
    cfg.emit_csv = false;
    cfg.emit_svg = false;
    for (const auto& e : j["emit"]) {
      const std::string kind = e.get<std::string>();
      if (kind == "csv") cfg.emit_csv = true;
      else if (kind == "svg") cfg.emit_svg = true;
      else throw ConfigError("emit entries must be csv or svg");
    }
  }
  return cfg;
}

LoadedInstance load_instance(const InstanceSource& src) {
  try {
    if (src.inline_spec) {
      if (src.loss != LossKind::LeastSquares)
        throw ConfigError("generated instances are least-squares only");
      Instance inst = gen_instance(*src.inline_spec);
      return {Problem(src.loss, std::move(inst.A), std::move(inst.y)),
              std::move(inst.x_true)};
    }
    Matrix a = read_matrix(*src.a_file);
    Vector y = read_vector(*src.y_file);
    std::optional<Vector> xtrue;
    if (src.xtrue_file) xtrue = read_vector(*src.xtrue_file);
    return {Problem(src.loss, std::move(a), std::move(y)), std::move(xtrue)};
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace ijt::cli
