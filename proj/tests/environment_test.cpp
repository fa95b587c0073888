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

#include "qdgate/environment.hpp"

#include "gtest/gtest.h"

namespace qdgate {
namespace {

const SpectralModel& gaas() {
  static const SpectralModel m = build_spectral_model(MaterialParams{});
  return m;
}

// Frozen output of tools/spectral_oracle.py (pure SI, CODATA 2018).
TEST(SpectralModel, GaAsWidthsAndCutoffs) {
  const SpectralModel& m = gaas();
  EXPECT_NEAR(m.d_e, 2.1646, 1e-3);
  EXPECT_NEAR(m.d_h, 1.4422, 1e-3);
  EXPECT_NEAR(m.w_e, 2.0642, 1e-3);
  EXPECT_NEAR(m.w_eh, 2.4293, 1e-3);
  EXPECT_NEAR(m.w_h, 3.0981, 1e-3);
  EXPECT_NEAR(m.prefactor, 6.7366, 1e-3);
  EXPECT_NEAR(m.hole_ratio, 4.8 / 14.6, 1e-15);
}

TEST(SpectralModel, WidthsFollowMassScaling) {
  // d ~ m^{-1/4}, so d_e / d_h = (m_h / m_e)^{1/4}.
  EXPECT_NEAR(gaas().d_e / gaas().d_h, std::pow(0.34 / 0.067, 0.25), 1e-12);
  // The mixed cutoff lies between the two single-carrier cutoffs.
  EXPECT_GT(gaas().w_eh, gaas().w_e);
  EXPECT_LT(gaas().w_eh, gaas().w_h);
}

TEST(SpectralModel, RejectsNonPositiveMaterial) {
  MaterialParams p;
  p.sound_speed = 0.0;
  EXPECT_THROW(build_spectral_model(p), ConfigError);
  p = {};
  p.m_h_eff = -0.1;
  EXPECT_THROW(build_spectral_model(p), ConfigError);
}

TEST(SpectralDensity, VanishesAtZero) {
  EXPECT_EQ(spectral_density(gaas(), 0.0), 0.0);
  EXPECT_EQ(spectral_density(gaas(), -1.0), 0.0);
}

TEST(SpectralDensity, CubicAtLowFrequency) {
  // Below the cutoffs the bracket tends to (1 - D_h/D_e)^2.
  const double bracket0 = std::pow(1.0 - gaas().hole_ratio, 2);
  for (double w : {1e-3, 1e-2}) EXPECT_NEAR(spectral_density(gaas(), w) / (gaas().prefactor * w * w * w), bracket0, 1e-4);
}

TEST(SpectralDensity, NonNegative) {
  // The bracket is a perfect square only up to the mixed cutoff, which is
  // not the geometric mean of the single-carrier ones; allow rounding.
  for (double w = 0.0; w <= 40.0; w += 0.01) EXPECT_GE(spectral_density(gaas(), w), -1e-12) << w;
}

TEST(SpectralDensity, SuppressedAtHighFrequency) {
  double peak = 0.0;
  for (double w = 0.0; w <= 20.0; w += 0.01) peak = std::max(peak, spectral_density(gaas(), w));
  EXPECT_GT(peak, 0.0);
  for (double w = 15.0; w <= 40.0; w += 0.5) EXPECT_LT(spectral_density(gaas(), w), 1e-6 * peak) << w;
}

TEST(SpectralDensity, PiezoChannelScalesWithPrefactor) {
  EXPECT_EQ(spectral_density_piezo(gaas(), 1.0, 0.0), 0.0);
  EXPECT_NEAR(spectral_density_piezo(gaas(), 1.5, 2.0), 2.0 * spectral_density_piezo(gaas(), 1.5, 1.0), 1e-15);
  EXPECT_GT(spectral_density_piezo(gaas(), 1.5, 1.0), 0.0);
}

TEST(Bose, ReferenceValues) {
  // omega = kT gives 1 / (e - 1).
  EXPECT_NEAR(bose_occupation(units::kBoltzmann * 10.0, 10.0), 1.0 / (std::exp(1.0) - 1.0), 1e-14);
  EXPECT_NEAR(bose_occupation(units::kBoltzmann * 10.0, 10.0), 0.58198, 1e-5);
  EXPECT_NEAR(bose_occupation(1.0, 5.0), 0.10887, 1e-5);
}

TEST(Bose, ZeroTemperatureAndLimits) {
  EXPECT_EQ(bose_occupation(1.0, 0.0), 0.0);
  EXPECT_EQ(bose_occupation(100.0, 0.01), 0.0);
  EXPECT_THROW(bose_occupation(0.0, 5.0), Error);
  // Classical limit: N ~ kT / omega.
  EXPECT_NEAR(bose_occupation(1e-4, 10.0) * 1e-4 / (units::kBoltzmann * 10.0), 1.0, 1e-4);
}

TEST(Bose, DetailedBalance) {
  for (double t : {1.0, 5.0, 10.0, 50.0})
    for (double w : {0.1, 1.0, 3.0}) {
      const double n = bose_occupation(w, t);
      EXPECT_NEAR((n + 1.0) / n, std::exp(w / (units::kBoltzmann * t)), 1e-9 * std::exp(w / (units::kBoltzmann * t)));
    }
}

TEST(Bose, Monotonic) {
  for (double w = 0.1; w < 5.0; w += 0.1) {
    EXPECT_GT(bose_occupation(w, 5.0), bose_occupation(w + 0.1, 5.0));
    EXPECT_LT(bose_occupation(w, 5.0), bose_occupation(w, 6.0));
  }
}

}  // namespace
}  // namespace qdgate
