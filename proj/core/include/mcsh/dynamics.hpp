#pragma once

// Right-hand sides of the Lorenz-gauge system
//
//   (box + 1) A_mu = J-terms + A_mu,  (box + 1) phi = ...,  (box + 1) N = -U_N + N
//
// and the integrating-factor time stepper for its half-wave form.
//
// Metric diag(1, -1, -1): A^0 = A_0, A^j = -A_j, d^j = -d_j. Contractions are
// written out in lowered components wherever they appear below.

#include <functional>
#include <stdexcept>

#include "mcsh/state.hpp"

namespace mcsh {

/// Which potential gradients drive phi: the exact gradients of
/// U = (e|phi|^2 + kappa N)^2 / 2 + e^2 (N + e v^2 / kappa)^2 |phi|^2
/// (Consistent), or the printed pair without the factor e on the first term
/// of U_phibar (PaperLiteral). They agree when e = 1.
enum class PotentialMode { Consistent, PaperLiteral };

struct RhsOptions {
  PotentialMode potential = PotentialMode::Consistent;
  /// Keep the "+u" terms that compensate the mass shift box -> box + 1. With
  /// false, a decoupled (e = kappa = 0) field obeys the massive dispersion
  /// omega = <k> exactly.
  bool mass_shift = true;
};

struct Curvature {
  SpectralField f01, f02, f12;
};

/// F_0j = d_t A_j - d_j A_0, F_12 = d_1 A_2 - d_2 A_1.
Curvature curvature(const SystemState& s);

/// D_mu phi = d_mu phi - i e A_mu phi, mu in {0, 1, 2}; products dealiased.
SpectralField covariant_derivative(const SystemState& s, int mu, const PhysicalParams& p);

struct PotentialGradients {
  SpectralField u_phibar;  // complex
  SpectralField u_n;       // real
};

PotentialGradients potential_gradients(const SpectralField& phi, const SpectralField& n,
                                       const PhysicalParams& p, PotentialMode mode);

/// Pointwise versions, used by the field code and as scalar oracles.
Complex potential_phibar(Complex phi, double n, const PhysicalParams& p, PotentialMode mode);
double potential_n(Complex phi, double n, const PhysicalParams& p);
/// U(|phi|^2, N) with the shifted vacuum at the origin.
double potential_value(Complex phi, double n, const PhysicalParams& p);

/// Curvature, covariant derivatives, currents Im(phi conj(D_mu phi)) and
/// potential gradients of one state.
struct ForceTerms {
  Curvature curvature;
  std::array<SpectralField, 3> d_phi;    // D_0, D_1, D_2 phi
  std::array<SpectralField, 3> current;  // J_mu = Im(phi conj(D_mu phi))
  PotentialGradients potential;
};

ForceTerms force_terms(const SystemState& s, const PhysicalParams& p,
                       PotentialMode mode = PotentialMode::Consistent);

/// Right-hand sides F_f of (box + 1) u_f = F_f for f = A0, A1, A2, phi, N:
///   F_A0  = -kappa F_12 - 2e J_0 + A_0
///   F_A1  = -kappa F_02 - 2e J_1 + A_1
///   F_A2  = +kappa F_01 - 2e J_2 + A_2
///   F_phi = 2ie (A_0 d_t phi - A_j d_j phi) + e^2 (A_0^2 - A_j A_j) phi - U_phibar + phi
///   F_N   = -U_N + N
/// i.e. 2ie A_mu d^mu phi + e^2 A_mu A^mu phi in covariant form.
FieldSet modified_rhs(const SystemState& s, const PhysicalParams& p, const RhsOptions& opts = {});

/// Right-hand sides G_{+/-} = +/- (1/2) <nabla>^{-1} F of
/// (i d_t +/- <nabla>) u_{+/-} = G_{+/-}.
struct HalfWaveRhs {
  FieldSet plus;
  FieldSet minus;
};

HalfWaveRhs halfwave_rhs(const HalfWaveState& h, const PhysicalParams& p,
                         const RhsOptions& opts = {});

class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double t) : std::runtime_error(what), time_(t) {}
  [[nodiscard]] double time() const { return time_; }

 private:
  double time_;
};

/// One integrating-factor (Lawson) RK4 step: the linear part +/- i <k> is
/// propagated exactly per mode, RK4 acts on the interaction-picture
/// nonlinearity. Throws BlowUpError on non-finite values.
HalfWaveState step(const HalfWaveState& h, double dt, const PhysicalParams& p,
                   const RhsOptions& opts = {});

}  // namespace mcsh
