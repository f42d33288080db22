#include "mcsh/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "mcsh/datagen.hpp"

namespace mcsh {

DiagnosticsRecord diagnose(const SystemState& s, const PhysicalParams& p,
                           const DiagnosticsConfig& cfg, double reference_energy) {
  DiagnosticsRecord r;
  r.t = s.t;
  r.energy = energy(s, p, cfg.mode);
  const double diff = r.energy - reference_energy;
  r.energy_drift_rel = reference_energy != 0.0 ? std::abs(diff / reference_energy) : std::abs(diff);
  const ConstraintResiduals c = verify_constraints(s, p);
  r.lorenz_l2 = c.lorenz_l2;
  r.gauss_l2 = c.gauss_l2;
  r.v_l2 = c.v_l2;
  r.hs_norm_phi = sobolev_norm(s.u[kPhi], cfg.s_phi);
  r.hs_norm_a = std::sqrt(std::pow(sobolev_norm(s.u[kA0], cfg.s_a), 2) +
                          std::pow(sobolev_norm(s.u[kA1], cfg.s_a), 2) +
                          std::pow(sobolev_norm(s.u[kA2], cfg.s_a), 2));
  r.hs_norm_n = sobolev_norm(s.u[kN], cfg.s_n);
  for (const auto& f : s.u)
    for (const auto& v : f.to_physical()) r.max_field_abs = std::max(r.max_field_abs, std::abs(v));
  return r;
}

long step_count(double t_final, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  if (!(t_final >= 0.0)) throw std::invalid_argument("evolve: t_final must be non-negative");
  const double ratio = t_final / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)) return static_cast<long>(nearest);
  return static_cast<long>(std::ceil(ratio));
}

EvolveResult evolve(const HalfWaveState& h0, const PhysicalParams& p, const EvolveOptions& opts) {
  if (opts.sample_every < 1) throw std::invalid_argument("evolve: sample_every must be >= 1");
  const long steps = step_count(opts.t_final, opts.dt);
  const double t0 = h0.t;

  EvolveResult result;
  double e0 = 0.0;
  auto sample = [&](const HalfWaveState& h, bool first) {
    const SystemState s = from_halfwave(h);
    if (first) e0 = energy(s, p, opts.diagnostics.mode);
    DiagnosticsRecord rec = diagnose(s, p, opts.diagnostics, e0);
    result.records.push_back(rec);
    if (opts.on_sample) opts.on_sample(rec, s);
  };

  HalfWaveState h = h0;
  sample(h, true);
  for (long k = 1; k <= steps; ++k) {
    const double target = k == steps ? t0 + opts.t_final : t0 + static_cast<double>(k) * opts.dt;
    h = step(h, target - h.t, p, opts.rhs);
    h.t = target;
    if (k % opts.sample_every == 0 || k == steps) sample(h, false);
  }
  result.final_state = std::move(h);
  return result;
}

}  // namespace mcsh
