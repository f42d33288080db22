#pragma once

// Numerical experiments shared by the command-line tool and the acceptance
// suite. Each study is deterministic given its inputs.

#include <cstdint>
#include <random>
#include <vector>

#include "mcsh/datagen.hpp"
#include "mcsh/diagnostics.hpp"

namespace mcsh::cli {

// --- null structure --------------------------------------------------------------

struct DecompositionStudy {
  int pairs = 0;
  double max_rel_error = 0.0;  // || A - (A^df + A^cf + <nabla>^{-2} A) || / ||A||
};

/// df/cf/remainder reconstruction on random real (A_1, A_2) pairs.
DecompositionStudy decomposition_study(const GridSpec& grid, int pairs, std::uint64_t seed);

struct NullFormIdentityStudy {
  int states = 0;
  double max_rel_q12 = 0.0;     // A^df_j d_j phi vs sum of Q12 terms
  double max_rel_qtilde = 0.0;  // A_0 d_t phi - A^cf_j d_j phi vs i sum of Qtilde terms
  double max_rel_cf = 0.0;      // A^cf_j vs -i R_j (A_{0,+} - A_{0,-})
};

/// Identities on `states` compatible (W = 0) states drawn from `base` with
/// seeds base.seed, base.seed + 1, ...
NullFormIdentityStudy nullform_identity_study(const DataRecipe& base, int states);

struct SymbolStudy {
  long samples = 0;
  long sigma1_violations = 0;
  double sigma1_worst_ratio = 0.0;  // max |sigma1| / (|xi||eta|/(<xi><eta>) Theta)
  double c_sigma2_head = 0.0;       // sup over the first samples/10
  double c_sigma2 = 0.0;            // sup over all samples
  long angle_low_count = 0;         // cone ratio < 1
  long angle_high_count = 0;        // cone ratio >= 1
  double c_angle_low_head = 0.0;
  double c_angle_low = 0.0;
  double c_angle_high_head = 0.0;
  double c_angle_high = 0.0;
};

/// Random samples of (xi, eta, tau, lambda, signs): log-uniform magnitudes
/// over six decades, with near-parallel, antipodal and near-cone cases.
NullFormSample draw_symbol_sample(std::mt19937_64& rng);

/// Relative slack allowed in the sigma1 bound for floating-point rounding.
inline constexpr double kSigma1RoundingSlack = 1e-12;

SymbolStudy symbol_study(long samples, std::uint64_t seed);

// --- time evolution ------------------------------------------------------------------

struct ConstraintStudy {
  double dt = 0.0;
  double max_rel_lorenz = 0.0;
  double max_rel_gauss = 0.0;
  double max_energy_drift = 0.0;
  std::vector<DiagnosticsRecord> records;
};

/// Evolves `s0` to t_final sampling every `sample_every` steps; residuals are
/// relative to constraint_scales of the sampled state.
ConstraintStudy constraint_study(const SystemState& s0, const PhysicalParams& p, double t_final,
                                 double dt, int sample_every, PotentialMode mode = PotentialMode::Consistent);

struct ConvergenceStudy {
  std::vector<double> dts;
  std::vector<double> energy_drift;  // max over the run of |E - E0| / |E0|
  std::vector<double> self_error;    // ||U(dt_i) - U(dt_{i+1})|| / ||U(dt_{i+1})||, all fields at t_final
  std::vector<double> self_order;    // log2 of successive self_error ratios
  std::vector<double> drift_order;   // log2 of successive energy_drift ratios
};

/// Runs with dt, dt/2, ..., dt/2^{levels-1}, sampling energy at ten times.
ConvergenceStudy convergence_study(const SystemState& s0, const PhysicalParams& p, double t_final,
                                   double dt, int levels, PotentialMode mode = PotentialMode::Consistent);

struct PhaseStudy {
  double t_final = 0.0;
  double max_phase_error_per_time = 0.0;  // over all four half-wave coefficients
};

/// Single Fourier mode k = (k1, k2) in the linear (e = kappa = 0) flow without
/// the mass shift, compared to the exact phase exp(-/+ i <k> t) of
/// cos/sin(<k> t) solutions.
PhaseStudy linear_phase_study(const GridSpec& grid, int k1, int k2, double t_final, double dt);

struct WaveResidualStudy {
  double t_center = 0.0;
  std::vector<double> spacings;
  std::vector<double> residual_printed;  // (d_t^2 - Delta) W - 2e^2|phi|^2 W
  std::vector<double> residual_derived;  // (d_t^2 - Delta) W + 2e^2|phi|^2 W
  std::vector<double> order_printed;
  std::vector<double> order_derived;
  double w_norm = 0.0;                   // ||W(t_center)||
  double coupling_norm = 0.0;            // ||2e^2 |phi|^2 W (t_center)||
};

/// Lorenz-violating run: compatible data with d_t A_0 perturbed by a smooth
/// field, then second differences of W at spacings h, h/2, ... around
/// t_center taken from one trajectory with time step `dt`.
WaveResidualStudy wave_residual_study(const DataRecipe& recipe, double t_center, double h,
                                      int levels, double dt);

struct StabilityProbe {
  std::vector<double> t;
  std::vector<double> norm_coarse;  // ||phi(t)||_{H^s} on the recipe grid
  std::vector<double> norm_fine;    // same data embedded in the doubled grid
  double max_growth_factor = 0.0;   // max over t and both grids of max(n/n0, n0/n)
  double max_rel_difference = 0.0;  // max |fine - coarse| / coarse
};

/// Draws raw data on recipe.grid, embeds it into the doubled grid, imposes
/// the constraints on both and evolves both to t_final.
StabilityProbe stability_probe(const DataRecipe& recipe, double t_final, double dt, int samples);

// --- data --------------------------------------------------------------------------

struct NormRow {
  int n = 0;
  double s = 0.0;
  double norm = 0.0;
};

/// ||f||_{H^s} of random_hs_field(s_data) drawn on each grid, for each s in `exponents`.
std::vector<NormRow> norm_study(const std::vector<int>& grids, double s_data, double amplitude,
                                std::uint64_t seed, const std::vector<double>& exponents);

}  // namespace mcsh::cli
