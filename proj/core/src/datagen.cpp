#include "mcsh/datagen.hpp"

#include <cmath>

namespace mcsh {

void DataRecipe::validate() const {
  grid.validate();
  params.validate();
  for (double a : {amp_phi, amp_a, amp_n})
    if (!(a >= 0.0) || !std::isfinite(a))
      throw std::invalid_argument("recipe: amplitudes must be finite and non-negative");
  for (double s : {s_phi, s_a, s_n})
    if (!std::isfinite(s)) throw std::invalid_argument("recipe: exponents must be finite");
  if (!(spectral_cutoff >= 0.0)) throw std::invalid_argument("recipe: spectral_cutoff must be >= 0");
}

namespace {

// Slots keep the ten draws of one recipe on independent streams.
enum Slot : std::uint64_t { kPhi0 = 1, kPhi1, kN0, kN1, kA00, kA10, kA20, kA11, kA21 };

SpectralField draw(const DataRecipe& r, Slot slot, double s, double amp, FieldKind kind) {
  SpectralField f = random_hs_field(r.grid, s, amp, (r.seed << 4) ^ slot, kind);
  if (r.spectral_cutoff > 0.0) {
    const int n = r.grid.n;
    auto c = f.coefficients();
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const double k1 = wavenumber_of_index(i1, n), k2 = wavenumber_of_index(i2, n);
        if (std::hypot(k1, k2) > r.spectral_cutoff) c[static_cast<std::size_t>(i1) * n + i2] = 0.0;
      }
    }
  }
  return f;
}

// Im(phi conj(d_t phi)) + e A_0 |phi|^2
SpectralField charge(const SystemState& s, const PhysicalParams& p) {
  const auto phi = to_padded_physical(s.u[kPhi]);
  const auto phi_t = to_padded_physical(s.du[kPhi]);
  const auto a0 = to_padded_physical(s.u[kA0]);
  std::vector<Complex> j(phi.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    j[i] = std::imag(phi[i] * std::conj(phi_t[i])) + p.e * a0[i].real() * std::norm(phi[i]);
  return from_padded_physical(s.grid(), j, FieldKind::Real);
}

}  // namespace

SystemState draw_raw_data(const DataRecipe& r) {
  r.validate();
  SystemState s = SystemState::zero(r.grid);
  s.u[kPhi] = draw(r, kPhi0, r.s_phi, r.amp_phi, FieldKind::Complex);
  s.du[kPhi] = draw(r, kPhi1, r.s_phi - 1.0, r.amp_phi, FieldKind::Complex);
  s.u[kN] = draw(r, kN0, r.s_n, r.amp_n, FieldKind::Real);
  s.du[kN] = draw(r, kN1, r.s_n - 1.0, r.amp_n, FieldKind::Real);
  s.u[kA0] = draw(r, kA00, r.s_a, r.amp_a, FieldKind::Real);
  s.u[kA1] = draw(r, kA10, r.s_a, r.amp_a, FieldKind::Real);
  s.u[kA2] = draw(r, kA20, r.s_a, r.amp_a, FieldKind::Real);
  s.du[kA1] = draw(r, kA11, r.s_a - 1.0, r.amp_a, FieldKind::Real);
  s.du[kA2] = draw(r, kA21, r.s_a - 1.0, r.amp_a, FieldKind::Real);
  s.du[kA0] = derivative(s.u[kA1], 1) + derivative(s.u[kA2], 2);
  return s;
}

double gauss_mean_after_shift(const SystemState& raw, const PhysicalParams& p, double c) {
  SystemState s = raw;
  s.du[kPhi] += Complex(0.0, c) * s.u[kPhi];
  return 2.0 * p.e * mean(charge(s, p)).real();
}

SystemState make_compatible_data(const DataRecipe& r, CompatibleDataReport* report) {
  return impose_constraints(draw_raw_data(r), r.params, report);
}

SystemState impose_constraints(SystemState s, const PhysicalParams& p, CompatibleDataReport* report) {
  p.validate();
  s.validate();
  s.du[kA0] = derivative(s.u[kA1], 1) + derivative(s.u[kA2], 2);

  // Shifting phi_1 by i c phi_0 lowers Im(phi_0 conj(phi_1)) by c |phi_0|^2,
  // so the mean of the charge is affine in c.
  const double mass = std::pow(sobolev_norm(s.u[kPhi], 0.0), 2);
  double c = 0.0;
  if (p.e != 0.0 && mass > 0.0) {
    c = mean(charge(s, p)).real() / mass;
    s.du[kPhi] += Complex(0.0, c) * s.u[kPhi];
  }
  if (report != nullptr) {
    report->phase_shift = c;
    report->phi0_mean_square = mass;
  }

  // Gauss residual with the drawn (a11', a21') is R'; adding grad chi to
  // (a11', a21') adds Delta chi, so solve Delta chi = -R'.
  const SpectralField residual = gauss_residual(s, p);
  SpectralField chi;
  try {
    chi = inverse_laplacian(-residual, 1e-10);
  } catch (const std::domain_error&) {
    throw DataGenerationError("make_compatible_data: Gauss source has nonzero mean");
  }
  for (const auto& v : chi.coefficients())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DataGenerationError("make_compatible_data: non-finite elliptic solve");
  s.du[kA1] += derivative(chi, 1);
  s.du[kA2] += derivative(chi, 2);
  return s;
}

ConstraintResiduals verify_constraints(const SystemState& s, const PhysicalParams& p) {
  ConstraintResiduals r;
  r.t = s.t;
  r.lorenz_l2 = l2_norm(lorenz_residual(s));
  r.gauss_l2 = l2_norm(gauss_residual(s, p));
  r.v_l2 = l2_norm(auxiliary_v(s, p));
  return r;
}

ConstraintScales constraint_scales(const SystemState& s, const PhysicalParams& p) {
  ConstraintScales out;
  out.lorenz = l2_norm(s.du[kA0]) + l2_norm(derivative(s.u[kA1], 1) + derivative(s.u[kA2], 2));
  const Curvature F = curvature(s);
  out.gauss = l2_norm(laplacian(s.u[kA0])) +
              l2_norm(derivative(s.du[kA1], 1) + derivative(s.du[kA2], 2)) +
              std::abs(p.kappa) * l2_norm(F.f12) + 2.0 * std::abs(p.e) * l2_norm(charge(s, p));
  return out;
}

}  // namespace mcsh
