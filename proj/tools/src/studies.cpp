#include "mcsh/cli/studies.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace mcsh::cli {

namespace {

constexpr Sign kSigns[] = {Sign::Plus, Sign::Minus};

double rel(const SpectralField& a, const SpectralField& b) {
  const double scale = l2_norm(b);
  return scale > 0.0 ? l2_norm(a - b) / scale : l2_norm(a - b);
}

const SpectralField& component(const HalfWaveState& h, std::size_t f, Sign s) {
  return s == Sign::Plus ? h.plus[f] : h.minus[f];
}

// Zeroes every mode with |k| > cutoff (integer wave vectors).
SpectralField lowpass(SpectralField f, double cutoff) {
  const int n = f.grid().n;
  auto c = f.coefficients();
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      if (std::hypot(wavenumber_of_index(i1, n), wavenumber_of_index(i2, n)) > cutoff)
        c[static_cast<std::size_t>(i1) * n + i2] = 0.0;
  return f;
}

double state_distance_sq(const SystemState& a, const SystemState& b) {
  double d = 0.0;
  for (std::size_t f = 0; f < kNumFields; ++f)
    d += std::pow(l2_norm(a.u[f] - b.u[f]), 2) + std::pow(l2_norm(a.du[f] - b.du[f]), 2);
  return d;
}

double state_norm_sq(const SystemState& a) {
  double d = 0.0;
  for (std::size_t f = 0; f < kNumFields; ++f) d += std::pow(l2_norm(a.u[f]), 2) + std::pow(l2_norm(a.du[f]), 2);
  return d;
}

std::vector<double> log2_ratios(const std::vector<double>& v) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(std::log2(v[i] / v[i + 1]));
  return out;
}

}  // namespace

DecompositionStudy decomposition_study(const GridSpec& grid, int pairs, std::uint64_t seed) {
  DecompositionStudy out;
  out.pairs = pairs;
  for (int i = 0; i < pairs; ++i) {
    const auto base = seed + 2 * static_cast<std::uint64_t>(i);
    const SpectralField a1 = random_hs_field(grid, 0.5, 1.0, base, FieldKind::Real);
    const SpectralField a2 = random_hs_field(grid, 0.5, 1.0, base + 1, FieldKind::Real);
    const DfCfSplit d = df_cf_decompose(a1, a2);
    const double err = std::hypot(l2_norm(d.df1 + d.cf1 + d.rem1 - a1), l2_norm(d.df2 + d.cf2 + d.rem2 - a2));
    out.max_rel_error = std::max(out.max_rel_error, err / std::hypot(l2_norm(a1), l2_norm(a2)));
  }
  return out;
}

NullFormIdentityStudy nullform_identity_study(const DataRecipe& base, int states) {
  NullFormIdentityStudy out;
  out.states = states;
  for (int i = 0; i < states; ++i) {
    DataRecipe r = base;
    r.seed = base.seed + static_cast<std::uint64_t>(i);
    const SystemState s = make_compatible_data(r);
    const HalfWaveState h = to_halfwave(s);
    const SpectralField& phi = s.u[kPhi];
    const SpectralField phi1 = derivative(phi, 1), phi2 = derivative(phi, 2);
    const DfCfSplit d = df_cf_decompose(s.u[kA1], s.u[kA2]);

    const SpectralField lhs12 = dealiased_product(d.df1, phi1) + dealiased_product(d.df2, phi2);
    SpectralField rhs12(phi.grid(), FieldKind::Complex);
    SpectralField rhs_tilde(phi.grid(), FieldKind::Complex);
    for (Sign s1 : kSigns) {
      const SpectralField x = riesz(component(h, kA2, s1), 1) - riesz(component(h, kA1, s1), 2);
      for (Sign s2 : kSigns) {
        const SpectralField v = apply_bessel(component(h, kPhi, s2), 1.0);
        rhs12 += nullform_q12(x, v, s1, s2);
        rhs_tilde += nullform_qtilde(component(h, kA0, s1), v, s1, s2);
      }
    }
    rhs_tilde = Complex(0.0, 1.0) * rhs_tilde;
    const SpectralField lhs_tilde =
        dealiased_product(s.u[kA0], s.du[kPhi]) - dealiased_product(d.cf1, phi1) - dealiased_product(d.cf2, phi2);

    const SpectralField a0_diff = h.plus[kA0] - h.minus[kA0];
    const SpectralField cf1 = Complex(0.0, -1.0) * riesz(a0_diff, 1);
    const SpectralField cf2 = Complex(0.0, -1.0) * riesz(a0_diff, 2);
    const double cf_err = std::hypot(l2_norm(cf1 - d.cf1), l2_norm(cf2 - d.cf2)) /
                          std::hypot(l2_norm(d.cf1), l2_norm(d.cf2));

    out.max_rel_q12 = std::max(out.max_rel_q12, rel(rhs12, lhs12));
    out.max_rel_qtilde = std::max(out.max_rel_qtilde, rel(rhs_tilde, lhs_tilde));
    out.max_rel_cf = std::max(out.max_rel_cf, cf_err);
  }
  return out;
}

NullFormSample draw_symbol_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };
  const auto log_uniform = [&](double lo, double hi) { return std::pow(10.0, uniform(lo, hi)); };
  const auto random_sign = [&] { return unit(rng) < 0.5 ? -1.0 : 1.0; };
  constexpr double pi = std::numbers::pi;

  NullFormSample s;
  const double mx = log_uniform(-3.0, 3.0), my = log_uniform(-3.0, 3.0);
  const double ax = uniform(0.0, 2.0 * pi);
  const double mode = unit(rng);
  double ay = 0.0;
  if (mode < 0.15)
    ay = ax + random_sign() * log_uniform(-9.0, -2.0);
  else if (mode < 0.3)
    ay = ax + pi + random_sign() * log_uniform(-9.0, -2.0);
  else
    ay = uniform(0.0, 2.0 * pi);
  s.xi = {mx * std::cos(ax), mx * std::sin(ax)};
  s.eta = {my * std::cos(ay), my * std::sin(ay)};
  s.sign1 = unit(rng) < 0.5 ? Sign::Plus : Sign::Minus;
  s.sign2 = unit(rng) < 0.5 ? Sign::Plus : Sign::Minus;
  // Half of the temporal frequencies sit near the cones tau = +/-1 |xi|, lambda = +/-2 |eta|.
  s.tau = unit(rng) < 0.5 ? sign_value(s.sign1) * mx + random_sign() * log_uniform(-3.0, 2.0)
                          : random_sign() * log_uniform(-3.0, 3.0);
  s.lambda = unit(rng) < 0.5 ? sign_value(s.sign2) * my + random_sign() * log_uniform(-3.0, 2.0)
                             : random_sign() * log_uniform(-3.0, 3.0);
  return s;
}

SymbolStudy symbol_study(long samples, std::uint64_t seed) {
  SymbolStudy out;
  out.samples = samples;
  const long head = std::max(1L, samples / 10);
  std::mt19937_64 rng(seed);
  for (long i = 0; i < samples; ++i) {
    const NullFormSample s = draw_symbol_sample(rng);
    const double theta = angle(s);
    const double bx = bracket(s.xi), by = bracket(s.eta);
    const double nx = std::hypot(s.xi.x, s.xi.y), ny = std::hypot(s.eta.x, s.eta.y);

    const double bound1 = nx * ny / (bx * by) * theta;
    const double s1 = std::abs(sigma1(s));
    if (s1 > bound1 * (1.0 + kSigma1RoundingSlack)) ++out.sigma1_violations;
    if (bound1 > 0.0) out.sigma1_worst_ratio = std::max(out.sigma1_worst_ratio, s1 / bound1);

    const double c2 = std::abs(sigma2(s)) / (theta + 1.0 / bx + 1.0 / by);
    out.c_sigma2 = std::max(out.c_sigma2, c2);

    const AngleBound ab = angle_bound(s);
    const double ca = theta / (ab.first + ab.second);
    if (ab.second_ratio < 1.0) {
      ++out.angle_low_count;
      out.c_angle_low = std::max(out.c_angle_low, ca);
    } else {
      ++out.angle_high_count;
      out.c_angle_high = std::max(out.c_angle_high, ca);
    }
    if (i + 1 == head) {
      out.c_sigma2_head = out.c_sigma2;
      out.c_angle_low_head = out.c_angle_low;
      out.c_angle_high_head = out.c_angle_high;
    }
  }
  return out;
}

ConstraintStudy constraint_study(const SystemState& s0, const PhysicalParams& p, double t_final, double dt,
                                 int sample_every, PotentialMode mode) {
  ConstraintStudy out;
  out.dt = dt;
  EvolveOptions opts;
  opts.t_final = t_final;
  opts.dt = dt;
  opts.sample_every = sample_every;
  opts.rhs.potential = mode;
  opts.diagnostics.mode = mode;
  opts.on_sample = [&](const DiagnosticsRecord& r, const SystemState& s) {
    const ConstraintScales sc = constraint_scales(s, p);
    out.max_rel_lorenz = std::max(out.max_rel_lorenz, r.lorenz_l2 / sc.lorenz);
    out.max_rel_gauss = std::max(out.max_rel_gauss, r.gauss_l2 / sc.gauss);
    out.max_energy_drift = std::max(out.max_energy_drift, r.energy_drift_rel);
  };
  out.records = evolve(to_halfwave(s0), p, opts).records;
  return out;
}

ConvergenceStudy convergence_study(const SystemState& s0, const PhysicalParams& p, double t_final, double dt,
                                   int levels, PotentialMode mode) {
  if (levels < 2) throw std::invalid_argument("convergence_study: need at least two levels");
  ConvergenceStudy out;
  std::vector<SystemState> finals;
  for (int l = 0; l < levels; ++l) {
    const double h = dt / std::pow(2.0, l);
    EvolveOptions opts;
    opts.t_final = t_final;
    opts.dt = h;
    opts.sample_every = static_cast<int>(std::max(1L, step_count(t_final, h) / 10));
    opts.rhs.potential = mode;
    opts.diagnostics.mode = mode;
    const EvolveResult r = evolve(to_halfwave(s0), p, opts);
    double drift = 0.0;
    for (const auto& rec : r.records) drift = std::max(drift, rec.energy_drift_rel);
    out.dts.push_back(h);
    out.energy_drift.push_back(drift);
    finals.push_back(from_halfwave(r.final_state));
  }
  for (int l = 0; l + 1 < levels; ++l)
    out.self_error.push_back(std::sqrt(state_distance_sq(finals[l], finals[l + 1]) / state_norm_sq(finals[l + 1])));
  out.self_order = log2_ratios(out.self_error);
  out.drift_order = log2_ratios(out.energy_drift);
  return out;
}

PhaseStudy linear_phase_study(const GridSpec& grid, int k1, int k2, double t_final, double dt) {
  const PhysicalParams p{0.0, 0.0, 1.0};
  RhsOptions opts;
  opts.mass_shift = false;
  SystemState s = SystemState::zero(grid);
  s.u[kPhi] = SpectralField::plane_wave(grid, k1, k2, 1.0, FieldKind::Complex);
  s.u[kA1] = SpectralField::plane_wave(grid, k1, k2, 0.5, FieldKind::Real);
  s.du[kN] = SpectralField::plane_wave(grid, k1, k2, 0.5, FieldKind::Real);
  HalfWaveState h = to_halfwave(s);
  const HalfWaveState h0 = h;

  const long steps = step_count(t_final, dt);
  for (long i = 0; i < steps; ++i) h = step(h, std::min(dt, t_final - h.t), p, opts);

  const double kx = k1 * grid.wavenumber_unit(), ky = k2 * grid.wavenumber_unit();
  const double omega = std::sqrt(1.0 + kx * kx + ky * ky);
  PhaseStudy out;
  out.t_final = h.t;
  for (std::size_t f : {kPhi, kA1, kN}) {
    for (Sign sg : kSigns) {
      const Complex c0 = component(h0, f, sg).coefficient(k1, k2);
      const Complex c = component(h, f, sg).coefficient(k1, k2);
      const Complex exact = c0 * std::polar(1.0, sign_value(sg) * omega * h.t);
      const double err = std::abs(std::arg(c / exact));
      out.max_phase_error_per_time = std::max(out.max_phase_error_per_time, err / h.t);
    }
  }
  return out;
}

WaveResidualStudy wave_residual_study(const DataRecipe& recipe, double t_center, double h, int levels,
                                      double dt) {
  const PhysicalParams& p = recipe.params;
  SystemState s = make_compatible_data(recipe);
  const double cutoff = recipe.spectral_cutoff > 0.0 ? recipe.spectral_cutoff : 8.0;
  s.du[kA0] += lowpass(random_hs_field(recipe.grid, 1.0, recipe.amp_a, recipe.seed ^ 0x5eedULL, FieldKind::Real),
                       cutoff);

  const long center = std::lround(t_center / dt);
  std::vector<long> offsets;
  for (int l = 0; l < levels; ++l) {
    const long m = std::lround(h / std::pow(2.0, l) / dt);
    if (m < 1) throw std::invalid_argument("wave_residual_study: spacing below the time step");
    offsets.push_back(m);
  }
  std::map<long, SystemState> wanted;
  for (long m : offsets) {
    wanted.emplace(center - m, SystemState{});
    wanted.emplace(center + m, SystemState{});
  }
  wanted.emplace(center, SystemState{});
  if (wanted.begin()->first < 0) throw std::invalid_argument("wave_residual_study: t_center - h < 0");

  HalfWaveState hw = to_halfwave(s);
  const long last = wanted.rbegin()->first;
  for (long i = 0;; ++i) {
    if (auto it = wanted.find(i); it != wanted.end()) {
      it->second = from_halfwave(hw);
      it->second.t = static_cast<double>(i) * dt;
    }
    if (i == last) break;
    hw = step(hw, dt, p);
  }

  WaveResidualStudy out;
  out.t_center = static_cast<double>(center) * dt;
  const SystemState& mid = wanted.at(center);
  const SpectralField w = lorenz_residual(mid);
  out.w_norm = l2_norm(w);
  const SpectralField rho = dealiased_product(mid.u[kPhi], mid.u[kPhi].conj()).real_part();
  out.coupling_norm = 2.0 * p.e * p.e * l2_norm(dealiased_product(rho, w));
  for (long m : offsets) {
    const std::vector<SystemState> trio = {wanted.at(center - m), mid, wanted.at(center + m)};
    out.spacings.push_back(static_cast<double>(m) * dt);
    out.residual_printed.push_back(w_wave_residual(trio, p, WaveCouplingSign::AsPrinted).at(0));
    out.residual_derived.push_back(w_wave_residual(trio, p, WaveCouplingSign::Derived).at(0));
  }
  out.order_printed = log2_ratios(out.residual_printed);
  out.order_derived = log2_ratios(out.residual_derived);
  return out;
}

StabilityProbe stability_probe(const DataRecipe& recipe, double t_final, double dt, int samples) {
  const SystemState raw = draw_raw_data(recipe);
  GridSpec fine = recipe.grid;
  fine.n *= 2;
  const SystemState coarse0 = impose_constraints(raw, recipe.params);
  const SystemState fine0 = impose_constraints(resample(raw, fine), recipe.params);

  const long steps = step_count(t_final, dt);
  EvolveOptions opts;
  opts.t_final = t_final;
  opts.dt = dt;
  opts.sample_every = static_cast<int>(std::max(1L, steps / std::max(1, samples)));
  opts.diagnostics.s_phi = recipe.s_phi;
  opts.diagnostics.s_a = recipe.s_a;
  opts.diagnostics.s_n = recipe.s_n;

  StabilityProbe out;
  const auto rc = evolve(to_halfwave(coarse0), recipe.params, opts).records;
  const auto rf = evolve(to_halfwave(fine0), recipe.params, opts).records;
  const double n0c = rc.front().hs_norm_phi, n0f = rf.front().hs_norm_phi;
  for (std::size_t i = 0; i < std::min(rc.size(), rf.size()); ++i) {
    out.t.push_back(rc[i].t);
    out.norm_coarse.push_back(rc[i].hs_norm_phi);
    out.norm_fine.push_back(rf[i].hs_norm_phi);
    for (double g : {rc[i].hs_norm_phi / n0c, rf[i].hs_norm_phi / n0f})
      out.max_growth_factor = std::max({out.max_growth_factor, g, 1.0 / g});
    out.max_rel_difference =
        std::max(out.max_rel_difference, std::abs(rf[i].hs_norm_phi - rc[i].hs_norm_phi) / rc[i].hs_norm_phi);
  }
  return out;
}

std::vector<NormRow> norm_study(const std::vector<int>& grids, double s_data, double amplitude,
                                std::uint64_t seed, const std::vector<double>& exponents) {
  std::vector<NormRow> out;
  for (int n : grids) {
    GridSpec g;
    g.n = n;
    const SpectralField f = random_hs_field(g, s_data, amplitude, seed, FieldKind::Complex);
    for (double s : exponents) out.push_back({n, s, sobolev_norm(f, s)});
  }
  return out;
}

}  // namespace mcsh::cli
