#include "ijt/probgen.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ijt {

namespace {

// Box-Muller over explicitly constructed uniforms, so the stream depends
// only on mt19937_64 and not on libstdc++ distribution internals.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

  double uniform01() {  // [0, 1)
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng_()) * n) >> 64);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace

Instance gen_instance(const InstanceSpec& spec) {
  if (spec.N < 1 || spec.M < 1)
    throw std::invalid_argument("gen_instance: N and M must be positive");
  if (spec.k < 0 || spec.k > spec.N)
    throw std::invalid_argument("gen_instance: need 0 <= k <= N");
  if (!(spec.variance > 0.0))
    throw std::invalid_argument("gen_instance: variance must be positive");

  NormalSource rng(spec.seed);
  const double sd = std::sqrt(spec.variance);

  Instance inst;
  inst.A.resize(spec.M, spec.N);
  for (int i = 0; i < spec.M; ++i)
    for (int j = 0; j < spec.N; ++j) inst.A(i, j) = sd * rng.normal();

  inst.x_true = Vector::Zero(spec.N);
  std::vector<int> idx(static_cast<std::size_t>(spec.N));
  for (int i = 0; i < spec.N; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < spec.k; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.N - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  for (int i = 0; i < spec.k; ++i) {
    double amp;
    if (spec.amplitude_model == AmplitudeModel::StdNormal) {
      do { amp = rng.normal(); } while (amp == 0.0);  // keep x_true exactly k-sparse
    } else {
      amp = rng.below(2) == 0 ? 1.0 : -1.0;
    }
    inst.x_true[idx[static_cast<std::size_t>(i)]] = amp;
  }

  inst.y = inst.A * inst.x_true;
  return inst;
}

}  // namespace ijt
