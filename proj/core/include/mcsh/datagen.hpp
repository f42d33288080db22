#pragma once

#include <cstdint>
#include <stdexcept>

#include "mcsh/gauge.hpp"
#include "mcsh/state.hpp"

namespace mcsh {

/// Seeded recipe for constraint-compatible initial data. Positions of each
/// field are drawn at their exponent s, velocities at s - 1.
struct DataRecipe {
  std::uint64_t seed = 42;
  double s_phi = 1.0;
  double s_a = 1.0;
  double s_n = 1.0;
  double amp_phi = 1.0;
  double amp_a = 1.0;
  double amp_n = 1.0;
  /// Keep only integer wave vectors with |k| <= cutoff; 0 keeps every mode.
  double spectral_cutoff = 0.0;
  GridSpec grid{};
  PhysicalParams params{};

  void validate() const;
};

class DataGenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Intermediate values of the construction, exposed for inspection.
struct CompatibleDataReport {
  double phase_shift = 0.0;  // c in phi_1 <- phi_1 + i c phi_0
  double phi0_mean_square = 0.0;
};

/// Draws the fields, imposes the Lorenz condition through d_t A_0 =
/// d_1 A_1 + d_2 A_2, restores the zero-mean solvability of the Gauss
/// constraint with phi_1 <- phi_1 + i c phi_0, and solves the constraint for
/// the gradient part of (d_t A_1, d_t A_2) by a Poisson solve.
SystemState make_compatible_data(const DataRecipe& r, CompatibleDataReport* report = nullptr);

/// The construction of make_compatible_data applied to given fields: only
/// d_t A_0, d_t phi and the gradient part of (d_t A_1, d_t A_2) change.
SystemState impose_constraints(SystemState raw, const PhysicalParams& p,
                               CompatibleDataReport* report = nullptr);

/// Fields of the recipe before any constraint is imposed.
SystemState draw_raw_data(const DataRecipe& r);

/// Spatial mean of the Gauss source 2e Im(phi conj(D^0 phi)) after the shift
/// phi_1 <- phi_1 + i c phi_0 (the other Gauss terms have zero mean).
double gauss_mean_after_shift(const SystemState& raw, const PhysicalParams& p, double c);

ConstraintResiduals verify_constraints(const SystemState& s, const PhysicalParams& p);

/// Reference magnitudes for relative residuals: the sum of the L2 norms of
/// the individual terms entering each residual.
struct ConstraintScales {
  double lorenz = 0.0;
  double gauss = 0.0;
};

ConstraintScales constraint_scales(const SystemState& s, const PhysicalParams& p);

}  // namespace mcsh
