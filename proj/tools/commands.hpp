#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace ijt::cli {

// Shared command-line overrides applied on top of the config file.
struct CommonFlags {
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> emit;  // comma-separated subset of csv,svg
  int jobs = 1;
};

struct GenFlags {
  int N = 500, M = 250, k = 15;
  double variance = 0.0;  // 0 means "use 1/M"
  bool var_inv_m = false;
  std::string amplitude = "stdnormal";
  std::uint64_t seed = 0;
  std::filesystem::path out = "out";
  std::string stem = "instance";
};

struct ProxTableFlags {
  std::string family = "power";
  double q = 0.5;
  double lambda = 1.0;
  double mu = 1.0;
  double zmin = -3.0, zmax = 3.0;
  int samples = 601;
  std::string algo = "ijt";  // ijt | soft | hard
  std::filesystem::path out = "out";
  bool emit_svg = false;
};

struct CheckFlags {
  std::filesystem::path a_file, y_file, solution_file;
  std::optional<std::filesystem::path> xtrue_file;
  std::string loss = "least-squares";
  std::string family = "power";
  double q = 0.5;
  double lambda = 1e-3;
  std::optional<double> mu;
  std::optional<double> mu_frac;
  std::optional<double> last_step_norm;
  int oracle_samples = 0;
  std::optional<std::filesystem::path> out;
};

int cmd_gen(const GenFlags& flags);
int cmd_solve(const std::filesystem::path& config_path, const CommonFlags& common);
int cmd_sweep_mu(const std::filesystem::path& config_path, int grid,
                 const CommonFlags& common);
int cmd_bench(const std::filesystem::path& config_path, const std::vector<int>& sizes,
              const CommonFlags& common);
int cmd_prox_table(const ProxTableFlags& flags);
int cmd_check(const CheckFlags& flags);

}  // namespace ijt::cli
