#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ijt/solver.hpp"
#include "ijt/types.hpp"

namespace ijt {

// Renders a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

// Text matrix format: first line "M N", then M lines of N space-separated
// decimal floats. Vectors are stored as L x 1 matrices.
void write_matrix(const std::filesystem::path& path, const Matrix& a);
Matrix read_matrix(const std::filesystem::path& path);
void write_vector(const std::filesystem::path& path, const Vector& v);
Vector read_vector(const std::filesystem::path& path);

/// Minimal CSV emitter. All floats go through format_double so identical
/// data produces identical bytes.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  void write(const std::filesystem::path& path) const;

  static std::string cell(double v) { return format_double(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(long v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(const std::string& v) { return v; }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Per-iteration trace export with columns
// iter,objective,step_norm,support_size,support_changed,sign_changed,wall_time_s.
// Requires a Full trace.
void write_trace_csv(const std::filesystem::path& path, const IterTrace& trace);

}  // namespace ijt
