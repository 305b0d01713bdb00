#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ijt/prox.hpp"
#include "ijt/testkit.hpp"

using namespace ijt;

namespace {
const PenaltySpec kPowHalf{PenaltyFamily::Power, 0.5};
const PenaltySpec kPowTwoThirds{PenaltyFamily::Power, 2.0 / 3.0};
const PenaltySpec kLogHalf{PenaltyFamily::LogPower, 0.5};
}  // namespace

TEST_CASE("rho map") {
  CHECK(rho(kPowHalf, 1.0, 1.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(rho(kPowHalf, 1.0, 4.0) == doctest::Approx(4.25).epsilon(1e-14));
  CHECK(rho(kLogHalf, 2.0, 4.0) == doctest::Approx(4.0 + 2.0 * 0.25 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(rho(kPowHalf, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rho(kPowHalf, 1.0, -1.0), std::domain_error);
}

TEST_CASE("psi examples") {
  CHECK(psi(kPowHalf, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(psi(kPowHalf, 4.0) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(psi(kPowTwoThirds, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(psi(kPowHalf, 0.0), std::domain_error);
}

TEST_CASE("threshold pair, power closed forms") {
  const auto t = thresholds(kPowHalf, 1.0, 1.0);
  CHECK(t.eta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t.tau == doctest::Approx(1.5).epsilon(1e-14));

  const auto t23 = thresholds(kPowTwoThirds, 1.0, 1.0);
  const double eta23 = std::pow(2.0 / 3.0, 0.75);
  CHECK(t23.eta == doctest::Approx(eta23).epsilon(1e-12));
  CHECK(t23.tau == doctest::Approx(2.0 * eta23).epsilon(1e-12));
}

TEST_CASE("threshold pair, log-power by inversion") {
  const auto t = thresholds(kLogHalf, 1.0, 1.0);
  CHECK(psi(kLogHalf, t.eta) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.tau == doctest::Approx(rho(kLogHalf, 1.0, t.eta)).epsilon(1e-12));
  CHECK(t.eta > 0.0);
  CHECK(t.eta < t.tau);
}

TEST_CASE("threshold invariants over random settings") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uq(0.05, 0.95), ul(-3, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const double q = uq(rng);
    const double lambda = std::pow(10.0, ul(rng));
    const double mu = std::pow(10.0, ul(rng));
    for (auto fam : {PenaltyFamily::Power, PenaltyFamily::LogPower}) {
      const PenaltySpec p{fam, q};
      const auto t = thresholds(p, lambda, mu);
      CHECK(t.eta > 0.0);
      CHECK(t.eta < t.tau);
      CHECK(t.tau == doctest::Approx(rho(p, lambda * mu, t.eta)).epsilon(1e-10));
      // generic inversion agrees with the dispatch route
      const auto tg = thresholds_by_inversion(p, lambda, mu);
      CHECK(tg.eta == doctest::Approx(t.eta).epsilon(1e-8));
      CHECK(tg.tau == doctest::Approx(t.tau).epsilon(1e-8));
      if (fam == PenaltyFamily::Power) {
        const double eta_closed = std::pow(2.0 * lambda * mu * (1.0 - q), 1.0 / (2.0 - q));
        CHECK(t.eta == doctest::Approx(eta_closed).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("pathological lambda*mu fails to bracket and says so") {
  // the bracket search doubles/halves at most 200 times from z = 1
  CHECK_THROWS_AS(thresholds_by_inversion(kPowHalf, 1e308, 1.0), std::runtime_error);
}

TEST_CASE("prox scalar: examples frozen against the grid oracle") {
  CHECK(prox_scalar(kPowHalf, 1.0, 1.0, 1.4) == 0.0);
  // root of v + 0.5 v^{-1/2} = 2.5 on [1, 2.5]
  CHECK(prox_scalar(kPowHalf, 1.0, 1.0, 2.5) == doctest::Approx(2.1597753).epsilon(1e-6));
  CHECK(prox_scalar(kPowHalf, 1.0, 1.0, -2.5) == doctest::Approx(-2.1597753).epsilon(1e-6));
  CHECK(prox_scalar(kPowHalf, 1.0, 1.0, 2.5) ==
        doctest::Approx(prox_oracle(kPowHalf, 1.0, 1.0, 2.5)).epsilon(1e-7));
  // just past the jump: output lands at (about) eta
  CHECK(prox_scalar(kPowHalf, 1.0, 1.0, 1.5 * (1.0 + 1e-9)) >= 0.999999);
  // tie at the jump goes to zero
  CHECK(prox_scalar(kPowHalf, 1.0, 1.0, 1.5) == 0.0);
  CHECK_THROWS_AS(prox_scalar(kPowHalf, 1.0, 1.0, std::nan("")), std::domain_error);
}

TEST_CASE("prox vector") {
  Vector x(3);
  x << 0.0, 1.4, 2.5;
  const Vector out = prox_vector(kPowHalf, 1.0, 1.0, x);
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);
  CHECK(out[2] == doctest::Approx(2.1597753).epsilon(1e-6));

  CHECK(prox_vector(kLogHalf, 1.0, 1.0, Vector::Zero(5)).isZero());

  Vector neg(1);
  neg << -2.5;
  CHECK(prox_vector(kPowHalf, 1.0, 1.0, neg)[0] == doctest::Approx(-2.1597753).epsilon(1e-6));

  Vector bad(2);
  bad << 1.0, std::numeric_limits<double>::infinity();
  CHECK_THROWS_WITH_AS(prox_vector(kPowHalf, 1.0, 1.0, bad),
                       doctest::Contains("component 1"), std::domain_error);
}

TEST_CASE("soft and hard rules") {
  CHECK(prox_soft(1.0, 3.0) == 2.0);
  CHECK(prox_soft(1.0, 0.5) == 0.0);
  CHECK(prox_soft(1.0, -3.0) == -2.0);
  CHECK(prox_hard(0.5, 1.5) == 1.5);
  CHECK(prox_hard(0.5, 0.9) == 0.0);
  CHECK(prox_hard(0.5, -1.5) == -1.5);
  CHECK(prox_hard(0.5, 1.0) == 0.0);  // tie at sqrt(2*0.5) stays zero
  CHECK_THROWS_AS(prox_soft(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(prox_hard(-1.0, 1.0), std::domain_error);
}

TEST_CASE("prox properties: symmetry, range, monotonicity, jump") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uz(-10.0, 10.0), ul(-3.0, 1.0);
  const double qs[] = {0.3, 0.5, 2.0 / 3.0, 0.9};
  for (int trial = 0; trial < 400; ++trial) {
    const PenaltySpec p{trial % 2 ? PenaltyFamily::Power : PenaltyFamily::LogPower,
                        qs[(trial / 2) % 4]};
    const double lm = std::pow(10.0, ul(rng));
    const auto t = thresholds(p, lm, 1.0);
    const double z = uz(rng);

    const double v = prox_scalar(p, t, z);
    CHECK(prox_scalar(p, t, -z) == -v);               // odd, exactly
    if (v != 0.0) CHECK(std::abs(v) >= t.eta - 1e-10); // range {0} u [eta, inf)

    const double z2 = std::abs(z) + 0.5;
    if (std::abs(z) > t.tau)
      CHECK(prox_scalar(p, t, z2) >= prox_scalar(p, t, std::abs(z)));

    // jump of height ~eta at tau
    const double above = prox_scalar(p, t, t.tau * (1.0 + 1e-9));
    const double below = prox_scalar(p, t, t.tau * (1.0 - 1e-9));
    CHECK(above - below >= 0.99 * t.eta);
  }
}

TEST_CASE("prox agrees with the brute-force oracle") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uz(-10.0, 10.0), ul(-3.0, 1.0);
  const double qs[] = {0.3, 0.5, 2.0 / 3.0, 0.9};
  for (int trial = 0; trial < 200; ++trial) {
    const PenaltySpec p{trial % 2 ? PenaltyFamily::Power : PenaltyFamily::LogPower,
                        qs[(trial / 2) % 4]};
    const double lm = std::pow(10.0, ul(rng));
    const double z = uz(rng);
    const double got = prox_scalar(p, lm, 1.0, z);
    const double want = prox_oracle(p, lm, 1.0, z, 2.0, 20000);
    REQUIRE(std::abs(got - want) <= 1e-6);
  }
}
