#include "ijt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ijt {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return in;
}

}  // namespace

void write_matrix(const std::filesystem::path& path, const Matrix& a) {
  auto out = open_out(path);
  out << a.rows() << ' ' << a.cols() << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(a(i, j));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Matrix read_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1)
    throw std::runtime_error("malformed matrix header in " + path.string());
  Matrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!(in >> a(i, j)))
        throw std::runtime_error("truncated matrix data in " + path.string());
  return a;
}

void write_vector(const std::filesystem::path& path, const Vector& v) {
  Matrix m(v.size(), 1);
  m.col(0) = v;
  write_matrix(path, m);
}

Vector read_vector(const std::filesystem::path& path) {
  const Matrix m = read_matrix(path);
  if (m.cols() != 1)
    throw std::runtime_error("expected a column vector in " + path.string());
  return m.col(0);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size())
    throw std::invalid_argument("CsvWriter: row width mismatch");
  rows_.push_back(std::move(cells));
}

void CsvWriter::write(const std::filesystem::path& path) const {
  auto out = open_out(path);
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_trace_csv(const std::filesystem::path& path, const IterTrace& trace) {
  if (trace.support.size() != trace.size())
    throw std::logic_error("write_trace_csv: requires a Full trace");
  CsvWriter csv({"iter", "objective", "step_norm", "support_size",
                 "support_changed", "sign_changed", "wall_time_s"});
  for (std::size_t n = 0; n < trace.size(); ++n) {
    csv.add_row({CsvWriter::cell(n), CsvWriter::cell(trace.objective[n]),
                 CsvWriter::cell(trace.step_norm[n]),
                 CsvWriter::cell(trace.support[n].size()),
                 std::to_string(static_cast<int>(trace.support_changed[n])),
                 std::to_string(static_cast<int>(trace.sign_changed[n])),
                 CsvWriter::cell(trace.wall_time[n])});
  }
  csv.write(path);
}

}  // namespace ijt
