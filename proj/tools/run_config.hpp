#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "ijt/baselines.hpp"
#include "ijt/loss.hpp"
#include "ijt/penalty.hpp"
#include "ijt/probgen.hpp"
#include "ijt/solver.hpp"

namespace ijt::cli {

/// Thrown on malformed configs / flags; the driver maps it to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Algo { Ijt, Irls, Irl1, Soft, Hard };
Algo algo_from_name(const std::string& name);
std::string algo_name(Algo a);

struct InstanceSource {
  std::optional<InstanceSpec> inline_spec;     // generate on the fly
  std::optional<std::filesystem::path> a_file; // or load from disk
  std::optional<std::filesystem::path> y_file;
  std::optional<std::filesystem::path> xtrue_file;
  LossKind loss = LossKind::LeastSquares;
};

struct RunConfig {
  InstanceSource instance;
  PenaltySpec penalty;
  SolverConfig solver;
  BaselineConfig baseline;
  Algo algo = Algo::Ijt;
  std::filesystem::path output = "out";
  bool emit_csv = true;
  bool emit_svg = false;
};

// Parses a config file, rejecting unknown keys at every level.
RunConfig load_config(const std::filesystem::path& path);

// Materializes the configured instance. x_true is present for generated
// instances and when an x_true file is given.
struct LoadedInstance {
  Problem problem;
  std::optional<Vector> x_true;
};
LoadedInstance load_instance(const InstanceSource& src);

void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                  const std::string& where);

}  // namespace ijt::cli
