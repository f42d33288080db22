#include "mcsh/dynamics.hpp"

#include <cmath>
#include <string>

namespace mcsh {

// --- potentials --------------------------------------------------------------

Complex potential_phibar(Complex phi, double n, const PhysicalParams& p, PotentialMode mode) {
  const double rho = std::norm(phi);
  const double quartic = p.e * rho + p.kappa * n;
  const double shifted = n + p.n_shift();
  const double lead = mode == PotentialMode::Consistent ? p.e : 1.0;
  return (lead * quartic + p.e * p.e * shifted * shifted) * phi;
}

double potential_n(Complex phi, double n, const PhysicalParams& p) {
  const double rho = std::norm(phi);
  return p.kappa * (p.e * rho + p.kappa * n) + 2.0 * p.e * p.e * (n + p.n_shift()) * rho;
}

double potential_value(Complex phi, double n, const PhysicalParams& p) {
  const double rho = std::norm(phi);
  const double quartic = p.e * rho + p.kappa * n;
  const double shifted = n + p.n_shift();
  return 0.5 * quartic * quartic + p.e * p.e * shifted * shifted * rho;
}

PotentialGradients potential_gradients(const SpectralField& phi, const SpectralField& n,
                                       const PhysicalParams& p, PotentialMode mode) {
  const auto phi_x = to_padded_physical(phi);
  const auto n_x = to_padded_physical(n);
  std::vector<Complex> up(phi_x.size()), un(phi_x.size());
  for (std::size_t i = 0; i < phi_x.size(); ++i) {
    up[i] = potential_phibar(phi_x[i], n_x[i].real(), p, mode);
    un[i] = potential_n(phi_x[i], n_x[i].real(), p);
  }
  return {from_padded_physical(phi.grid(), up, FieldKind::Complex),
          from_padded_physical(phi.grid(), un, FieldKind::Real)};
}

// --- curvature and covariant derivatives ---------------------------------------

Curvature curvature(const SystemState& s) {
  return {s.du[kA1] - derivative(s.u[kA0], 1), s.du[kA2] - derivative(s.u[kA0], 2),
          derivative(s.u[kA2], 1) - derivative(s.u[kA1], 2)};
}

namespace {

SpectralField partial_phi(const SystemState& s, int mu) {
  return mu == 0 ? s.du[kPhi] : derivative(s.u[kPhi], mu);
}

void check_mu(int mu) {
  if (mu < 0 || mu > 2) throw std::invalid_argument("index mu must be 0, 1 or 2");
}

}  // namespace

SpectralField covariant_derivative(const SystemState& s, int mu, const PhysicalParams& p) {
  check_mu(mu);
  SpectralField d = partial_phi(s, mu);
  if (p.e == 0.0) return d;
  return d - Complex(0.0, p.e) * dealiased_product(s.u[mu], s.u[kPhi]);
}

ForceTerms force_terms(const SystemState& s, const PhysicalParams& p, PotentialMode mode) {
  ForceTerms ft;
  ft.curvature = curvature(s);
  const auto phi_x = to_padded_physical(s.u[kPhi]);
  for (int mu = 0; mu < 3; ++mu) {
    ft.d_phi[mu] = covariant_derivative(s, mu, p);
    // J_mu = Im(phi conj(d_mu phi)) + e A_mu |phi|^2, evaluated pointwise on
    // the padded grid so the cubic part is not truncated twice.
    const auto d_x = to_padded_physical(partial_phi(s, mu));
    const auto a_x = to_padded_physical(s.u[mu]);
    std::vector<Complex> j(phi_x.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      j[i] = std::imag(phi_x[i] * std::conj(d_x[i])) + p.e * a_x[i].real() * std::norm(phi_x[i]);
    ft.current[mu] = from_padded_physical(s.grid(), j, FieldKind::Real);
  }
  ft.potential = potential_gradients(s.u[kPhi], s.u[kN], p, mode);
  return ft;
}

// --- right-hand sides ------------------------------------------------------------

FieldSet modified_rhs(const SystemState& s, const PhysicalParams& p, const RhsOptions& opts) {
  const GridSpec& grid = s.grid();
  const double e = p.e;

  const auto a0 = to_padded_physical(s.u[kA0]);
  const auto a1 = to_padded_physical(s.u[kA1]);
  const auto a2 = to_padded_physical(s.u[kA2]);
  const auto phi = to_padded_physical(s.u[kPhi]);
  const auto phi_t = to_padded_physical(s.du[kPhi]);
  const auto phi_1 = to_padded_physical(derivative(s.u[kPhi], 1));
  const auto phi_2 = to_padded_physical(derivative(s.u[kPhi], 2));
  const auto nn = to_padded_physical(s.u[kN]);

  const std::size_t m = phi.size();
  std::vector<Complex> nl_a0(m), nl_a1(m), nl_a2(m), nl_phi(m), nl_n(m);
  const Complex two_ie(0.0, 2.0 * e);
  for (std::size_t i = 0; i < m; ++i) {
    const double A0 = a0[i].real(), A1 = a1[i].real(), A2 = a2[i].real(), N = nn[i].real();
    const Complex f = phi[i];
    const double rho = std::norm(f);
    nl_a0[i] = -2.0 * e * (std::imag(f * std::conj(phi_t[i])) + e * A0 * rho);
    nl_a1[i] = -2.0 * e * (std::imag(f * std::conj(phi_1[i])) + e * A1 * rho);
    nl_a2[i] = -2.0 * e * (std::imag(f * std::conj(phi_2[i])) + e * A2 * rho);
    nl_phi[i] = two_ie * (A0 * phi_t[i] - A1 * phi_1[i] - A2 * phi_2[i]) +
                e * e * (A0 * A0 - A1 * A1 - A2 * A2) * f - potential_phibar(f, N, p, opts.potential);
    nl_n[i] = -potential_n(f, N, p);
  }

  const Curvature F = curvature(s);
  FieldSet rhs;
  rhs[kA0] = from_padded_physical(grid, nl_a0, FieldKind::Real) - p.kappa * F.f12;
  rhs[kA1] = from_padded_physical(grid, nl_a1, FieldKind::Real) - p.kappa * F.f02;
  rhs[kA2] = from_padded_physical(grid, nl_a2, FieldKind::Real) + p.kappa * F.f01;
  rhs[kPhi] = from_padded_physical(grid, nl_phi, FieldKind::Complex);
  rhs[kN] = from_padded_physical(grid, nl_n, FieldKind::Real);
  if (opts.mass_shift)
    for (std::size_t f = 0; f < kNumFields; ++f) rhs[f] += s.u[f];
  return rhs;
}

HalfWaveRhs halfwave_rhs(const HalfWaveState& h, const PhysicalParams& p, const RhsOptions& opts) {
  const FieldSet F = modified_rhs(from_halfwave(h), p, opts);
  HalfWaveRhs out;
  for (std::size_t f = 0; f < kNumFields; ++f) {
    SpectralField g = 0.5 * apply_bessel(F[f].as_kind(FieldKind::Complex), -1.0);
    out.minus[f] = -g;
    out.plus[f] = std::move(g);
  }
  return out;
}

// --- time stepping -----------------------------------------------------------------

namespace {

// d_t u_{+/-} = +/- i <k> u_{+/-} + Nl_{+/-},  Nl_{+/-} = -i G_{+/-}.
HalfWaveState nonlinearity(const HalfWaveState& h, const PhysicalParams& p, const RhsOptions& opts) {
  HalfWaveRhs g = halfwave_rhs(h, p, opts);
  HalfWaveState out;
  out.t = h.t;
  const Complex minus_i(0.0, -1.0);
  for (std::size_t f = 0; f < kNumFields; ++f) {
    out.plus[f] = minus_i * std::move(g.plus[f]);
    out.minus[f] = minus_i * std::move(g.minus[f]);
  }
  return out;
}

// exp(+/- i <k> tau) applied to each half-wave component.
HalfWaveState propagate(const HalfWaveState& h, double tau) {
  HalfWaveState out;
  out.t = h.t + tau;
  const auto table = wave_table(h.grid());
  const std::size_t size = h.grid().size();
  std::vector<Complex> phase(size);
  for (std::size_t i = 0; i < size; ++i)
    phase[i] = std::polar(1.0, table->bracket[i] * tau);
  for (std::size_t f = 0; f < kNumFields; ++f) {
    out.plus[f] = h.plus[f];
    out.minus[f] = h.minus[f];
    auto cp = out.plus[f].coefficients();
    auto cm = out.minus[f].coefficients();
    for (std::size_t i = 0; i < size; ++i) {
      cp[i] *= phase[i];
      cm[i] *= std::conj(phase[i]);
    }
  }
  return out;
}

// a + b * w, componentwise.
HalfWaveState axpy(const HalfWaveState& a, double w, const HalfWaveState& b) {
  HalfWaveState out = a;
  for (std::size_t f = 0; f < kNumFields; ++f) {
    out.plus[f] += w * b.plus[f];
    out.minus[f] += w * b.minus[f];
  }
  return out;
}

}  // namespace

HalfWaveState step(const HalfWaveState& h, double dt, const PhysicalParams& p,
                   const RhsOptions& opts) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const double half = 0.5 * dt;

  const HalfWaveState k1 = nonlinearity(h, p, opts);
  HalfWaveState stage = propagate(axpy(h, half, k1), half);
  const HalfWaveState k2 = nonlinearity(stage, p, opts);
  const HalfWaveState h_half = propagate(h, half);
  stage = axpy(h_half, half, k2);
  const HalfWaveState k3 = nonlinearity(stage, p, opts);
  stage = axpy(propagate(h, dt), dt, propagate(k3, half));
  stage.t = h.t + dt;
  const HalfWaveState k4 = nonlinearity(stage, p, opts);

  // u_{n+1} = E u_n + dt/6 (E k1 + 2 E_{1/2} (k2 + k3) + k4)
  HalfWaveState mid = axpy(k2, 1.0, k3);
  HalfWaveState acc = axpy(propagate(k1, dt), 2.0, propagate(mid, half));
  acc = axpy(acc, 1.0, k4);
  HalfWaveState out = axpy(propagate(h, dt), dt / 6.0, acc);
  out.t = h.t + dt;
  if (!out.all_finite())
    throw BlowUpError("step: non-finite field values at t = " + std::to_string(out.t), out.t);
  return out;
}

}  // namespace mcsh
