#include "mcsh/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace mcsh {

SpectralField lorenz_residual(const SystemState& s) {
  return s.du[kA0] - derivative(s.u[kA1], 1) - derivative(s.u[kA2], 2);
}

namespace {

// J^0 = Im(phi conj(D^0 phi)) = Im(phi conj(d_t phi)) + e A_0 |phi|^2.
SpectralField charge_density(const SystemState& s, const PhysicalParams& p) {
  const auto phi = to_padded_physical(s.u[kPhi]);
  const auto phi_t = to_padded_physical(s.du[kPhi]);
  const auto a0 = to_padded_physical(s.u[kA0]);
  std::vector<Complex> j(phi.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    j[i] = std::imag(phi[i] * std::conj(phi_t[i])) + p.e * a0[i].real() * std::norm(phi[i]);
  return from_padded_physical(s.grid(), j, FieldKind::Real);
}

}  // namespace

SpectralField gauss_residual(const SystemState& s, const PhysicalParams& p) {
  const Curvature F = curvature(s);
  SpectralField r = derivative(s.du[kA1], 1) + derivative(s.du[kA2], 2) - laplacian(s.u[kA0]);
  r += p.kappa * F.f12;
  if (p.e != 0.0) r += (2.0 * p.e) * charge_density(s, p);
  return r;
}

SpectralField auxiliary_v(const SystemState& s, const PhysicalParams& p) {
  return -gauss_residual(s, p);
}

double energy(const SystemState& s, const PhysicalParams& p, PotentialMode mode) {
  const Curvature F = curvature(s);
  const auto f01 = to_padded_physical(F.f01);
  const auto f02 = to_padded_physical(F.f02);
  const auto f12 = to_padded_physical(F.f12);
  const auto a0 = to_padded_physical(s.u[kA0]);
  const auto a1 = to_padded_physical(s.u[kA1]);
  const auto a2 = to_padded_physical(s.u[kA2]);
  const auto phi = to_padded_physical(s.u[kPhi]);
  const auto phi_t = to_padded_physical(s.du[kPhi]);
  const auto phi_1 = to_padded_physical(derivative(s.u[kPhi], 1));
  const auto phi_2 = to_padded_physical(derivative(s.u[kPhi], 2));
  const auto nn = to_padded_physical(s.u[kN]);
  const auto n_t = to_padded_physical(s.du[kN]);
  const auto n_1 = to_padded_physical(derivative(s.u[kN], 1));
  const auto n_2 = to_padded_physical(derivative(s.u[kN], 2));

  const double n_weight = mode == PotentialMode::Consistent ? 0.5 : 1.0;
  const Complex ie(0.0, p.e);
  double sum = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double e01 = f01[i].real(), e02 = f02[i].real(), b = f12[i].real();
    const Complex d0 = phi_t[i] - ie * a0[i].real() * phi[i];
    const Complex d1 = phi_1[i] - ie * a1[i].real() * phi[i];
    const Complex d2 = phi_2[i] - ie * a2[i].real() * phi[i];
    const double nt = n_t[i].real(), n1 = n_1[i].real(), n2 = n_2[i].real();
    sum += 0.5 * (e01 * e01 + e02 * e02 + b * b) + std::norm(d0) + std::norm(d1) + std::norm(d2) +
           n_weight * (nt * nt + n1 * n1 + n2 * n2) + potential_value(phi[i], nn[i].real(), p);
  }
  return s.grid().area() * sum / static_cast<double>(phi.size());
}

DfCfSplit df_cf_decompose(const SpectralField& a1, const SpectralField& a2) {
  DfCfSplit out;
  const SpectralField x = riesz(a2, 1) - riesz(a1, 2);
  out.df1 = riesz(x, 2);
  out.df2 = -riesz(x, 1);
  const SpectralField d = riesz(a1, 1) + riesz(a2, 2);
  out.cf1 = -riesz(d, 1);
  out.cf2 = -riesz(d, 2);
  out.rem1 = apply_bessel(a1, -2.0);
  out.rem2 = apply_bessel(a2, -2.0);
  return out;
}

namespace {

double uniform_spacing(std::span<const SystemState> snaps) {
  if (snaps.size() < 3) throw std::invalid_argument("w_wave_residual: need at least 3 snapshots");
  const double dt = snaps[1].t - snaps[0].t;
  if (!(dt > 0.0)) throw std::invalid_argument("w_wave_residual: snapshot times must increase");
  for (std::size_t i = 1; i < snaps.size(); ++i)
    if (std::abs((snaps[i].t - snaps[i - 1].t) - dt) > 1e-9 * std::max(1.0, dt))
      throw std::invalid_argument("w_wave_residual: snapshots are not uniformly spaced");
  return dt;
}

}  // namespace

std::vector<double> w_wave_residual(std::span<const SystemState> snapshots, const PhysicalParams& p,
                                    WaveCouplingSign sign) {
  const double dt = uniform_spacing(snapshots);
  const double c = sign == WaveCouplingSign::AsPrinted ? 1.0 : -1.0;
  std::vector<SpectralField> w;
  w.reserve(snapshots.size());
  for (const auto& s : snapshots) w.push_back(lorenz_residual(s));

  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < snapshots.size(); ++i) {
    SpectralField wtt = (1.0 / (dt * dt)) * (w[i + 1] - 2.0 * w[i] + w[i - 1]);
    SpectralField r = wtt - laplacian(w[i]);
    if (p.e != 0.0) {
      const SpectralField rho = dealiased_product(snapshots[i].u[kPhi], snapshots[i].u[kPhi].conj())
                                    .real_part();
      r -= (c * 2.0 * p.e * p.e) * dealiased_product(rho, w[i]);
    }
    out.push_back(l2_norm(r));
  }
  return out;
}

std::vector<double> w_v_residual(std::span<const SystemState> snapshots, const PhysicalParams& p) {
  const double dt = uniform_spacing(snapshots);
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < snapshots.size(); ++i) {
    SpectralField wt =
        (0.5 / dt) * (lorenz_residual(snapshots[i + 1]) - lorenz_residual(snapshots[i - 1]));
    out.push_back(l2_norm(wt - auxiliary_v(snapshots[i], p)));
  }
  return out;
}

}  // namespace mcsh
