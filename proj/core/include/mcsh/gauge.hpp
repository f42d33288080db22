#pragma once

#include <span>
#include <vector>

#include "mcsh/dynamics.hpp"
#include "mcsh/state.hpp"

namespace mcsh {

// --- constraints and energy ----------------------------------------------------

/// Lorenz residual W = d_t A_0 - d_1 A_1 - d_2 A_2.
SpectralField lorenz_residual(const SystemState& s);

/// Gauss residual -Delta A_0 + d_t(d_1 A_1 + d_2 A_2) + kappa F_12 + 2e Im(phi conj(D^0 phi)),
/// with d_t A_j taken from the stored time derivatives.
SpectralField gauss_residual(const SystemState& s, const PhysicalParams& p);

/// V = Delta A_0 - kappa F_12 - 2e Im(phi conj(D^0 phi)) - d_t(d_1 A_1 + d_2 A_2),
/// the negative of the Gauss residual; d_t W = V along solutions.
SpectralField auxiliary_v(const SystemState& s, const PhysicalParams& p);

struct ConstraintResiduals {
  double lorenz_l2 = 0.0;
  double gauss_l2 = 0.0;
  double v_l2 = 0.0;
  double w_wave_residual_l2 = 0.0;
  double t = 0.0;
};

/// Energy
///   E = int 1/2 sum_i F_0i^2 + 1/2 F_12^2 + sum_mu |D_mu phi|^2
///         + 1/2 sum_mu (d_mu N)^2 + U(|phi|^2, N) dx
/// evaluated by padded-grid quadrature, exact for the band-limited integrand.
/// In PaperLiteral mode the kinetic N term carries weight 1 instead of 1/2.
double energy(const SystemState& s, const PhysicalParams& p,
              PotentialMode mode = PotentialMode::Consistent);

// --- divergence-free / curl-free split -----------------------------------------------

struct DfCfSplit {
  SpectralField df1, df2;        // A^df = (R_2 X, -R_1 X), X = R_1 A_2 - R_2 A_1
  SpectralField cf1, cf2;        // A^cf_j = -R_j (R_1 A_1 + R_2 A_2)
  SpectralField rem1, rem2;      // <nabla>^{-2} A_j
};

DfCfSplit df_cf_decompose(const SpectralField& a1, const SpectralField& a2);

// --- null forms ------------------------------------------------------------------------

/// Sign of a half-wave component, +1 or -1.
enum class Sign : int { Plus = 1, Minus = -1 };
constexpr double sign_value(Sign s) { return static_cast<int>(s); }

/// Q12(u, v) = R_2 u R_1 v - R_1 u R_2 v. The signs label the half-wave
/// pairing only: they enter the symbol sigma1(+/-1 xi, +/-2 eta) through the
/// product of signs, which cancels against the pairing, so the operator on
/// functions does not depend on them. A pair of single modes u = e^{i xi x},
/// v = e^{i eta x} maps to -sigma1(xi, eta) e^{i (xi + eta) x} (R_j carries i).
SpectralField nullform_q12(const SpectralField& u, const SpectralField& v, Sign s1, Sign s2);

/// Qtilde(u, v) = u (+/-2 v) - (+/-1 R_j u) R^j v with R^j = -R_j. Single
/// modes map to sigma2(+/-1 xi, +/-2 eta) e^{i (xi + eta) x}.
SpectralField nullform_qtilde(const SpectralField& u, const SpectralField& v, Sign s1, Sign s2);

struct Vec2 {
  double x = 0.0, y = 0.0;
};

struct NullFormSample {
  Vec2 xi, eta;
  double tau = 0.0, lambda = 0.0;
  Sign sign1 = Sign::Plus, sign2 = Sign::Plus;
};

double bracket(const Vec2& v);
double bracket(double x);

/// ((+/-1 xi_2)(+/-2 eta_1) - (+/-1 xi_1)(+/-2 eta_2)) / (<xi><eta>)
double sigma1(const NullFormSample& s);
/// (+/-2 1) - (+/-1 xi) . eta / (<xi><eta>)
double sigma2(const NullFormSample& s);
/// Angle in [0, pi] between +/-1 xi and +/-2 eta (atan2 of cross and dot).
/// Throws std::invalid_argument if either vector is zero.
double angle(const NullFormSample& s);

/// Right-hand side pieces of the angle estimate with exponent 1/2 on both terms:
///   first  = ((<-tau +/-1 |xi|> + <-lambda +/-2 |eta|>) / min(<xi>, <eta>))^{1/2}
///   second = (<|lambda + tau| - |xi + eta|> / min(<xi>, <eta>))^{1/2}
/// `second_ratio` is the base of the second term before the square root.
struct AngleBound {
  double first = 0.0;
  double second = 0.0;
  double second_ratio = 0.0;
};

AngleBound angle_bound(const NullFormSample& s);

// --- W wave equation ---------------------------------------------------------------------

/// Which sign of the |phi|^2 W coupling to test in (d_t^2 - Delta) W = c 2e^2 |phi|^2 W.
/// AsPrinted uses c = +1; Derived uses c = -1, the sign that follows from the
/// field equations by current conservation.
enum class WaveCouplingSign { AsPrinted, Derived };

/// L2 norms of (d_t^2 - Delta) W - c 2e^2 |phi|^2 W at each interior snapshot,
/// with d_t^2 W from centered differences over uniformly spaced snapshots.
/// Throws std::invalid_argument with fewer than three snapshots or nonuniform
/// spacing.
std::vector<double> w_wave_residual(std::span<const SystemState> snapshots, const PhysicalParams& p,
                                    WaveCouplingSign sign = WaveCouplingSign::AsPrinted);

/// L2 norms of d_t W - V at each interior snapshot (centered differences).
std::vector<double> w_v_residual(std::span<const SystemState> snapshots, const PhysicalParams& p);

}  // namespace mcsh
