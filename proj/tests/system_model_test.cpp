// Copyright 2026 The qdgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdgate/system_model.hpp"

#include <functional>
#include <random>

#include "gtest/gtest.h"

namespace qdgate {
namespace {

constexpr double kPi = units::kPi;

TEST(Hamiltonian, UndrivenDetunedExciton) {
  EXPECT_EQ(build_hamiltonian({0.0, 1.0}), OperatorMatrix::diagonal(0.0, 0.0, 1.0));
}

TEST(Hamiltonian, Resonance) {
  const OperatorMatrix h = build_hamiltonian({1.0, 0.0});
  EXPECT_EQ(h(kOne, kTrion), Complex(0.5));
  EXPECT_EQ(h(kTrion, kOne), Complex(0.5));
  for (std::size_t i = 0; i < kDim; ++i) EXPECT_EQ(h(i, i), Complex(0.0));
  for (std::size_t i = 0; i < kDim; ++i) {
    EXPECT_EQ(h(kZero, i), Complex(0.0));
    EXPECT_EQ(h(i, kZero), Complex(0.0));
  }
}

TEST(Hamiltonian, SpectrumAtOmega1Delta2) {
  const auto ev = eigvals_hermitian(build_hamiltonian({1.0, 2.0}));
  EXPECT_NEAR(ev[0], 0.5 * (2.0 - std::sqrt(5.0)), 1e-14);
  EXPECT_NEAR(ev[1], 0.0, 1e-14);
  EXPECT_NEAR(ev[2], 0.5 * (2.0 + std::sqrt(5.0)), 1e-14);
}

TEST(DressedFrame, WeakDriveTendsToBareState) {
  const DressedFrame f = dressed_frame({1e-12, 3.0});
  EXPECT_NEAR(f.theta, 0.0, 1e-12);
  const OperatorMatrix u = dressed_transform(dressed_frame({0.0, 3.0}).theta);
  EXPECT_EQ(u, OperatorMatrix::identity());
}

TEST(DressedFrame, ResonanceIsEqualSuperposition) {
  const DressedFrame f = dressed_frame({1.0, 0.0});
  EXPECT_DOUBLE_EQ(f.theta, kPi / 4);
  EXPECT_DOUBLE_EQ(f.e_minus, -0.5);
  const OperatorMatrix u = dressed_transform(f.theta);
  EXPECT_NEAR(std::norm(u(kOne, 1)), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(u(kTrion, 1)), 0.5, 1e-15);
}

TEST(DressedFrame, OmegaEqualsDelta) {
  const DressedFrame f = dressed_frame({1.0, 1.0});
  EXPECT_NEAR(f.theta, kPi / 8, 1e-15);
  EXPECT_NEAR(f.lambda, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(f.e_minus, 0.5 * (1.0 - std::sqrt(2.0)), 1e-15);
  EXPECT_DOUBLE_EQ(f.lam_minus, f.e_minus);
}

TEST(DressedFrame, UndefinedAtOrigin) { EXPECT_THROW(dressed_frame({0.0, 0.0}), UndefinedFrameError); }

TEST(DressedFrame, ThetaContinuousThroughResonance) {
  double prev = dressed_frame({1.0, 10.0}).theta;
  for (double delta = 10.0; delta >= -10.0; delta -= 0.01) {
    const double theta = dressed_frame({1.0, delta}).theta;
    EXPECT_LT(std::abs(theta - prev), 0.01);
    EXPECT_GE(theta, 0.0);
    EXPECT_LT(theta, kPi / 2);
    prev = theta;
  }
}

TEST(DressedFrame, SignsOfEigenenergies) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const DressedFrame f = dressed_frame({u(rng), u(rng)});
    EXPECT_LE(f.lam_minus, 0.0);
    EXPECT_GE(f.lam_plus, 0.0);
  }
}

TEST(DressedFrame, ExactShiftAtResonance) {
  for (double omega : {0.1, 1.0, 3.7}) EXPECT_EQ(energy_shift({omega, 0.0}), -omega / 2);
}

TEST(DressedTransform, IdentityAtZero) { EXPECT_EQ(dressed_transform(0.0), OperatorMatrix::identity()); }

TEST(DressedTransform, Unitary) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (int i = 0; i < 20; ++i) {
    const OperatorMatrix u = dressed_transform(a(rng));
    EXPECT_LT(max_abs(dagger(u) * u - OperatorMatrix::identity()), 1e-15);
  }
}

TEST(DressedTransform, MinusColumnStructure) {
  const double theta = 0.37;
  const OperatorMatrix u = dressed_transform(theta);
  EXPECT_EQ(u(kZero, 1), Complex(0.0));
  EXPECT_EQ(u(kOne, 1), Complex(std::cos(theta)));
  EXPECT_EQ(u(kTrion, 1), Complex(-std::sin(theta)));
}

TEST(DressedTransform, DiagonalizesHamiltonian) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> om(0.01, 5.0), de(-20.0, 20.0);
  for (int i = 0; i < 50; ++i) {
    const DriveParams p{om(rng), de(rng)};
    const DressedFrame f = dressed_frame(p);
    const OperatorMatrix u = dressed_transform(f.theta);
    const OperatorMatrix d = dagger(u) * build_hamiltonian(p) * u;
    const OperatorMatrix expected = OperatorMatrix::diagonal(0.0, f.lam_minus, f.lam_plus);
    EXPECT_LT(max_abs(d - expected), 1e-12) << p.omega << " " << p.delta;
    // The closed-form energies agree with the numerical spectrum.
    const auto ev = eigvals_hermitian(build_hamiltonian(p));
    std::array<double, 3> closed{0.0, f.lam_minus, f.lam_plus};
    std::sort(closed.begin(), closed.end());
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(ev[k], closed[k], 1e-12);
  }
}

TEST(RadiativeRates, GammaMinus) {
  EXPECT_EQ(gamma_minus(0.0, 0.01), 0.0);
  EXPECT_NEAR(gamma_minus(kPi / 2, 0.01), 0.01, 1e-18);
  EXPECT_NEAR(gamma_minus(kPi / 4, 0.01), 0.005, 1e-17);
}

TEST(RadiativeRates, SumOfTwoProcesses) {
  for (double theta = 0.0; theta < kPi / 2; theta += 0.01) {
    const double s = std::sin(theta), c = std::cos(theta);
    const double gamma0 = 0.013;
    EXPECT_NEAR(gamma0 * s * s * c * c + gamma0 * s * s * s * s, gamma_minus(theta, gamma0), 1e-15 * gamma0);
  }
}

TEST(RadiativeRates, Expansion) {
  EXPECT_EQ(gamma_minus_expansion({0.0, 2.0}, 0.01), 0.0);
  EXPECT_NEAR(gamma_minus_expansion({0.2, 2.0}, 0.01), 2.5e-5, 1e-19);
  for (double x = 0.01; x <= 0.3; x += 0.01) {
    const DriveParams p{x * 5.0, 5.0};
    const double exact = gamma_minus(dressed_frame(p).theta, 0.01);
    EXPECT_LT(std::abs(gamma_minus_expansion(p, 0.01) - exact) / exact, x * x) << x;
  }
}

// log-log slope of the relative truncation error is the order of the first
// neglected term relative to the kept one.
double error_order(const std::function<double(double)>& rel_err) {
  const double x1 = 1e-2, x2 = 1e-1;
  return std::log(rel_err(x2) / rel_err(x1)) / std::log(x2 / x1);
}

TEST(RadiativeRates, ExpansionOrder) {
  const double order = error_order([](double x) {
    const DriveParams p{x, 1.0};
    const double exact = gamma_minus(dressed_frame(p).theta, 1.0);
    return std::abs(gamma_minus_expansion(p, 1.0) - exact) / exact;
  });
  EXPECT_GE(order, 1.95);
}

TEST(EnergyShift, Expansion) {
  EXPECT_EQ(e_minus_expansion({0.0, 2.0}), 0.0);
  EXPECT_NEAR(std::abs(e_minus_expansion({1.0, 10.0})), 0.025, 1e-17);
  for (double x = 0.01; x <= 0.3; x += 0.01) {
    const DriveParams p{x * 4.0, 4.0};
    const double exact = energy_shift(p);
    EXPECT_LE(exact, 0.0);
    EXPECT_LT(std::abs(e_minus_expansion(p) - exact) / std::abs(exact), x * x);
  }
  const double order = error_order([](double x) {
    const DriveParams p{x, 1.0};
    return std::abs(e_minus_expansion(p) - energy_shift(p)) / std::abs(energy_shift(p));
  });
  EXPECT_GE(order, 1.95);
}

TEST(EnergyShift, CancellationFreeFormMatchesDefinition) {
  for (double delta : {0.1, 1.0, 7.0})
    for (double omega : {0.01, 0.5, 3.0}) {
      const double direct = 0.5 * (delta - std::sqrt(delta * delta + omega * omega));
      EXPECT_NEAR(energy_shift({omega, delta}), direct, 1e-14);
    }
}

TEST(ExpectedDecays, Dynamic) {
  EXPECT_EQ(expected_decays_dynamic(0.1, 0.0), 0.0);
  // pi * 0.01 / (0.1 meV / hbar) with hbar = 0.6582119569 meV ps.
  EXPECT_NEAR(expected_decays_dynamic(0.1, 0.01), 0.20678, 1e-5);
  EXPECT_NEAR(expected_decays_dynamic(0.2, 0.01), 0.5 * expected_decays_dynamic(0.1, 0.01), 1e-16);
}

TEST(ExpectedDecays, Adiabatic) {
  EXPECT_NEAR(expected_decays_adiabatic(2.0, 0.01), 0.010339, 1e-6);
  EXPECT_EQ(expected_decays_adiabatic(2.0, 0.0), 0.0);
}

}  // namespace
}  // namespace qdgate
