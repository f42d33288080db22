#pragma once

#include <functional>
#include <vector>

#include "mcsh/dynamics.hpp"
#include "mcsh/gauge.hpp"

namespace mcsh {

/// One row of a diagnostics time series.
struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;
  double energy_drift_rel = 0.0;
  double lorenz_l2 = 0.0;
  double gauss_l2 = 0.0;
  double v_l2 = 0.0;
  double hs_norm_phi = 0.0;
  double hs_norm_a = 0.0;
  double hs_norm_n = 0.0;
  double max_field_abs = 0.0;
};

/// Sobolev exponents reported in records, and the energy convention.
struct DiagnosticsConfig {
  double s_phi = 1.0;
  double s_a = 1.0;
  double s_n = 1.0;
  PotentialMode mode = PotentialMode::Consistent;
};

/// Evaluates a record; the drift is taken relative to `reference_energy`
/// (absolute drift when the reference is zero).
DiagnosticsRecord diagnose(const SystemState& s, const PhysicalParams& p,
                           const DiagnosticsConfig& cfg, double reference_energy);

struct EvolveOptions {
  double t_final = 1.0;
  double dt = 1e-3;
  int sample_every = 1;
  RhsOptions rhs{};
  DiagnosticsConfig diagnostics{};
  /// Called at every sample (t = 0 included) with the record and the state.
  std::function<void(const DiagnosticsRecord&, const SystemState&)> on_sample;
};

struct EvolveResult {
  std::vector<DiagnosticsRecord> records;
  HalfWaveState final_state;
};

/// Number of steps used to reach t_final: ceil(t_final / dt) up to rounding;
/// the last step is shortened when dt does not divide t_final.
long step_count(double t_final, double dt);

/// Repeated `step` from h0 to t_final, sampling diagnostics every
/// `sample_every` steps and at the final time. Throws BlowUpError (carrying
/// the failure time) after delivering the samples taken so far.
EvolveResult evolve(const HalfWaveState& h0, const PhysicalParams& p, const EvolveOptions& opts);

}  // namespace mcsh
