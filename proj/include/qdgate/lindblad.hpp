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

// Combined radiative + phonon master equation in the bare rotating frame.
//
//   d rho/dt = -i [H(t), rho] + gamma0 D[|1><X|] rho
//              + J(Lambda) { (N(Lambda) + 1) D[P(t)] + N(Lambda) D[P(t)^dagger] } rho
//
// P(t) = -sin(theta) cos(theta) |-(t)><+(t)| lowers the instantaneous dressed
// pair; D[L] rho = L rho L^dagger - {L^dagger L, rho} / 2. The equation is
// integrated with an embedded Dormand-Prince 5(4) pair.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qdgate/environment.hpp"
#include "qdgate/errors.hpp"
#include "qdgate/operator.hpp"
#include "qdgate/pulse.hpp"
#include "qdgate/system_model.hpp"
#include "qdgate/units.hpp"

namespace qdgate {

struct GeneratorContext {
  PulseSchedule pulse;
  double gamma0 = 0.0;  // 1/ps
  SpectralModel spectral = build_spectral_model(MaterialParams{});
  double temperature = 0.0;  // K
  Channels channels;
  double scale_multiplier = 1.0;  // applied to the phonon spectral densities
  double piezo_prefactor = 0.0;   // 1/ps per meV^3
  // false drops the L rho L^dagger recycling term of the radiative channel,
  // leaving the conditional no-emission evolution.
  bool radiative_recycling = true;
};

/// D[L] rho
inline OperatorMatrix dissipator(const OperatorMatrix& l, const OperatorMatrix& rho) {
  const OperatorMatrix ld = dagger(l);
  const OperatorMatrix ldl = ld * l;
  return l * rho * ld - 0.5 * (ldl * rho + rho * ldl);
}

/// Dressed lowering operator -sin cos |-><+| in the bare basis.
inline OperatorMatrix phonon_lowering(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::array<double, kDim> minus{0.0, c, -s};
  const std::array<double, kDim> plus{0.0, s, c};
  OperatorMatrix p;
  for (std::size_t i = 1; i < kDim; ++i)
    for (std::size_t j = 1; j < kDim; ++j) p(i, j) = -s * c * minus[i] * plus[j];
  return p;
}

/// Combined phonon spectral density seen by the dressed transition at lambda.
inline double phonon_rate_prefactor(const GeneratorContext& ctx, double lambda) {
  double j = 0.0;
  if (ctx.channels.phonon) j += spectral_density(ctx.spectral, lambda);
  if (ctx.channels.piezo) j += spectral_density_piezo(ctx.spectral, lambda, ctx.piezo_prefactor);
  return ctx.scale_multiplier * j;
}

/// Generator at a given instantaneous coupling omega (meV).
inline OperatorMatrix liouvillian_apply_at(const GeneratorContext& ctx, double omega, const OperatorMatrix& rho) {
  const double delta = ctx.pulse.delta;
  const OperatorMatrix h = build_hamiltonian({omega, delta}) * (1.0 / units::kHbar);
  OperatorMatrix out = commutator(h, rho) * Complex(0.0, -1.0);

  if (ctx.channels.radiative && ctx.gamma0 > 0.0) {
    // Specialized D[|1><X|]: L^dagger L = |X><X|.
    const double g = ctx.gamma0;
    if (ctx.radiative_recycling) out(kOne, kOne) += g * rho(kTrion, kTrion);
    for (std::size_t k = 0; k < kDim; ++k) {
      out(kTrion, k) -= 0.5 * g * rho(kTrion, k);
      out(k, kTrion) -= 0.5 * g * rho(k, kTrion);
    }
  }

  if ((ctx.channels.phonon || ctx.channels.piezo) && omega > 0.0) {
    const double lambda = std::hypot(delta, omega);
    const double j = phonon_rate_prefactor(ctx, lambda);
    if (j > 0.0) {
      const double n = bose_occupation(lambda, ctx.temperature);
      const OperatorMatrix p = phonon_lowering(mixing_angle({omega, delta}));
      out += dissipator(p, rho) * (j * (n + 1.0));
      if (n > 0.0) out += dissipator(dagger(p), rho) * (j * n);
    }
  }
  return out;
}

/// d rho/dt at time t (ps).
inline OperatorMatrix liouvillian_apply(const GeneratorContext& ctx, double t, const OperatorMatrix& rho) {
  return liouvillian_apply_at(ctx, omega_at(ctx.pulse, t), rho);
}

/// Observables recorded at each sample point.
struct Sample {
  double t = 0.0;  // ps
  double pop0 = 0.0;
  double pop1 = 0.0;
  double popx = 0.0;
  Complex coh01;
  double purity = 0.0;
  double theta = 0.0;      // rad
  double lambda = 0.0;     // meV
  double adiabaticity = 0.0;
  double decay_integral = 0.0;  // gamma0 * integral of popX dt
};

struct Trajectory {
  std::vector<OperatorMatrix> states;
  std::vector<Sample> samples;
  double gamma0 = 0.0;
  long steps = 0;
  long rejected = 0;

  const OperatorMatrix& final_state() const { return states.back(); }
};

inline Sample make_sample(const GeneratorContext& ctx, double t, double omega, const OperatorMatrix& rho,
                          double decay) {
  Sample s;
  s.t = t;
  s.pop0 = rho(kZero, kZero).real();
  s.pop1 = rho(kOne, kOne).real();
  s.popx = rho(kTrion, kTrion).real();
  s.coh01 = rho(kZero, kOne);
  double p = 0.0;
  for (const auto& x : rho.data()) p += std::norm(x);
  s.purity = p;
  if (omega != 0.0 || ctx.pulse.delta != 0.0) {
    s.theta = mixing_angle({omega, ctx.pulse.delta});
    s.lambda = std::hypot(ctx.pulse.delta, omega);
  }
  s.adiabaticity = ctx.pulse.kind == PulseKind::kSquare
                       ? 0.0
                       : adiabaticity_parameter(omega, omega_rate_at(ctx.pulse, t), ctx.pulse.delta, 0.0);
  s.decay_integral = decay;
  return s;
}

namespace detail {

struct OdeState {
  OperatorMatrix rho;
  double decay = 0.0;
};

// Dormand-Prince 5(4) coefficients.
struct DormandPrince {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                          b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
};

template <std::size_t N>
inline OdeState combine(const OdeState& y, double h, const std::array<const OdeState*, N>& k,
                        const std::array<double, N>& w) {
  OdeState out = y;
  for (std::size_t i = 0; i < N; ++i) {
    if (w[i] == 0.0) continue;
    const double hw = h * w[i];
    for (std::size_t e = 0; e < kDim * kDim; ++e) out.rho.data()[e] += hw * k[i]->rho.data()[e];
    out.decay += hw * k[i]->decay;
  }
  return out;
}

}  // namespace detail

/// Integrates the master equation over [t0, t1] and samples `opts.samples`
/// equally spaced points (both ends included). Square-pulse edges inside the
/// window split the integration. Trace is not renormalized.
inline Trajectory integrate(const GeneratorContext& ctx, const OperatorMatrix& rho0, double t0, double t1,
                            const SolverOptions& opts = {}) {
  using detail::OdeState;
  using DP = detail::DormandPrince;

  if (!density_health(rho0).ok()) throw InvalidOperatorError("integrate: initial state is not a density matrix");
  if (!(t1 > t0)) throw SolverError("integrate: empty time window", t0);
  if (opts.samples < 2) throw SolverError("integrate: need at least two samples", t0);

  const bool square = ctx.pulse.kind == PulseKind::kSquare;
  std::vector<double> sample_times;
  sample_times.reserve(opts.samples);
  for (int i = 0; i < opts.samples; ++i)
    sample_times.push_back(i + 1 == opts.samples ? t1 : t0 + (t1 - t0) * i / (opts.samples - 1));
  // Square-pulse edges are extra integration stops that are not recorded.
  std::vector<double> stops = sample_times;
  if (square) {
    for (double edge : {ctx.pulse.t_start, ctx.pulse.t_end})
      if (edge > t0 && edge < t1) stops.push_back(edge);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  }

  Trajectory traj;
  traj.gamma0 = ctx.gamma0;
  traj.states.reserve(opts.samples);
  traj.samples.reserve(opts.samples);

  auto record = [&](double t, const OdeState& y) {
    DensityHealth health = density_health(y.rho);
    // Without recycling the evolution is conditional and loses trace by design.
    if (!ctx.radiative_recycling) health.trace_error = 0.0;
    if (!health.ok(1e-6)) {
      std::ostringstream os;
      os << "integrate: density-matrix health violation at t = " << t << " ps (trace error "
         << health.trace_error << ", hermiticity error " << health.hermiticity_error << ", min eigenvalue "
         << health.min_eigenvalue << ")";
      throw SolverError(os.str(), t);
    }
    traj.states.push_back(y.rho);
    traj.samples.push_back(make_sample(ctx, t, omega_at(ctx.pulse, t), y.rho, y.decay));
  };

  OdeState y{rho0, 0.0};
  double t = t0;
  std::size_t next_sample = 0;
  record(t, y);
  ++next_sample;

  const double lambda_max = std::hypot(ctx.pulse.delta, ctx.pulse.omega0);
  double h = 0.05 / (units::to_angular(lambda_max) + ctx.gamma0 + 1.0 / (t1 - t0));

  for (std::size_t seg = 1; seg < stops.size(); ++seg) {
    const double seg_end = stops[seg];
    // Square pulses are constant inside each segment; evaluate on its interior side.
    const double frozen_omega = square ? omega_at(ctx.pulse, 0.5 * (t + seg_end)) : 0.0;
    auto f = [&](double time, const OdeState& s) {
      const double omega = square ? frozen_omega : omega_at(ctx.pulse, time);
      OdeState d;
      d.rho = liouvillian_apply_at(ctx, omega, s.rho);
      d.decay = ctx.gamma0 * s.rho(kTrion, kTrion).real();
      return d;
    };

    OdeState k1 = f(t, y);
    while (t < seg_end) {
      if (++traj.steps > opts.max_steps) throw SolverError("integrate: step budget exhausted", t);
      const double remaining = seg_end - t;
      const bool last = h >= remaining;
      const double step = last ? remaining : h;
      if (step < 1e-14 * std::max(1.0, std::abs(t))) throw SolverError("integrate: step size underflow", t);

      const OdeState y2 = detail::combine<1>(y, step, {&k1}, {DP::a21});
      const OdeState k2 = f(t + DP::c2 * step, y2);
      const OdeState y3 = detail::combine<2>(y, step, {&k1, &k2}, {DP::a31, DP::a32});
      const OdeState k3 = f(t + DP::c3 * step, y3);
      const OdeState y4 = detail::combine<3>(y, step, {&k1, &k2, &k3}, {DP::a41, DP::a42, DP::a43});
      const OdeState k4 = f(t + DP::c4 * step, y4);
      const OdeState y5 =
          detail::combine<4>(y, step, {&k1, &k2, &k3, &k4}, {DP::a51, DP::a52, DP::a53, DP::a54});
      const OdeState k5 = f(t + DP::c5 * step, y5);
      const OdeState y6 = detail::combine<5>(y, step, {&k1, &k2, &k3, &k4, &k5},
                                             {DP::a61, DP::a62, DP::a63, DP::a64, DP::a65});
      const OdeState k6 = f(t + step, y6);
      const OdeState y_new = detail::combine<5>(y, step, {&k1, &k3, &k4, &k5, &k6},
                                                {DP::b1, DP::b3, DP::b4, DP::b5, DP::b6});
      const OdeState k7 = f(t + step, y_new);

      const OdeState err = detail::combine<6>(OdeState{}, step, {&k1, &k3, &k4, &k5, &k6, &k7},
                                              {DP::e1, DP::e3, DP::e4, DP::e5, DP::e6, DP::e7});
      double sum = 0.0;
      for (std::size_t e = 0; e < kDim * kDim; ++e) {
        const Complex& a = y.rho.data()[e];
        const Complex& b = y_new.rho.data()[e];
        const double sc_re = opts.tol_abs + opts.tol_rel * std::max(std::abs(a.real()), std::abs(b.real()));
        const double sc_im = opts.tol_abs + opts.tol_rel * std::max(std::abs(a.imag()), std::abs(b.imag()));
        const Complex& d = err.rho.data()[e];
        sum += (d.real() / sc_re) * (d.real() / sc_re) + (d.imag() / sc_im) * (d.imag() / sc_im);
      }
      const double sc_q = opts.tol_abs + opts.tol_rel * std::max(std::abs(y.decay), std::abs(y_new.decay));
      sum += (err.decay / sc_q) * (err.decay / sc_q);
      const double norm = std::sqrt(sum / (2 * kDim * kDim + 1));
      if (!std::isfinite(norm)) throw SolverError("integrate: non-finite error estimate", t);

      const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
      if (norm <= 1.0) {
        t = last ? seg_end : t + step;
        y = y_new;
        k1 = k7;
        // A step shortened to land on a stop does not shrink the next proposal.
        h = last ? std::max(h, step * factor) : step * factor;
      } else {
        ++traj.rejected;
        h = step * std::max(factor, 0.1);
      }
    }

    while (next_sample < sample_times.size() && sample_times[next_sample] <= seg_end) {
      record(sample_times[next_sample], y);
      ++next_sample;
    }
  }
  return traj;
}

/// Expected number of radiative decays, gamma0 * integral of popX dt,
/// per unit of initial |1> population (only |1> feeds |X>).
inline double expected_decays_numeric(const Trajectory& traj) {
  const double pop1 = traj.samples.front().pop1;
  if (pop1 <= 0.0) return 0.0;
  return traj.samples.back().decay_integral / pop1;
}

using StateVector = std::array<Complex, kDim>;

inline const StateVector kPsiPlus{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 0.0};
inline const StateVector kPsiMinus{1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2, 0.0};

/// <target| rho |target>
inline double fidelity_to(const OperatorMatrix& rho, const StateVector& target) {
  double norm = 0.0;
  for (const auto& a : target) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) throw InvalidOperatorError("fidelity_to: target state is not normalized");
  Complex f{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) f += std::conj(target[i]) * rho(i, j) * target[j];
  if (std::abs(f.imag()) > 1e-10) throw InvalidOperatorError("fidelity_to: complex expectation value");
  return f.real();
}

}  // namespace qdgate
