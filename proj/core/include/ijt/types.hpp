#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace ijt {

using Vector = Eigen::VectorXd;
// Dense, row-major, double precision throughout.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Support sets are sorted 0-based column/component indices.
using IndexSet = std::vector<int>;

inline IndexSet support_of(const Vector& x) {
  IndexSet s;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0.0) s.push_back(i);
  return s;
}

inline std::vector<std::int8_t> sign_of(const Vector& x) {
  std::vector<std::int8_t> s(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i)
    s[static_cast<std::size_t>(i)] = x[i] > 0.0 ? 1 : (x[i] < 0.0 ? -1 : 0);
  return s;
}

}  // namespace ijt
