#pragma once

#include <cstdint>

#include "ijt/types.hpp"

namespace ijt {

enum class AmplitudeModel { StdNormal, PlusMinusOne };

/// Recipe for a random recovery instance: an M x N matrix with i.i.d.
/// Normal(0, variance) entries and a k-sparse signal with y = A x_true.
struct InstanceSpec {
  int N = 500;
  int M = 250;
  int k = 15;
  double variance = 1.0 / 250.0;
  AmplitudeModel amplitude_model = AmplitudeModel::StdNormal;
  std::uint64_t seed = 0;
};

struct Instance {
  Matrix A;
  Vector x_true;
  Vector y;
};

// Deterministic for a fixed spec within one build: mt19937_64 stream,
// Box-Muller normals, matrix filled row-major, then support positions by
// partial Fisher-Yates, then amplitudes.
Instance gen_instance(const InstanceSpec& spec);

}  // namespace ijt
