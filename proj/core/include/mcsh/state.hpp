#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mcsh/spectral.hpp"

namespace mcsh {

/// Coupling constants: charge e, Chern-Simons constant kappa > 0, and v.
/// kappa = 0 is accepted only together with e = 0, the decoupled linear limit.
struct PhysicalParams {
  double e = 1.0;
  double kappa = 1.0;
  double v = 1.0;

  void validate() const;
  /// Vacuum shift e v^2 / kappa of the neutral scalar.
  [[nodiscard]] double n_shift() const { return e == 0.0 ? 0.0 : e * v * v / kappa; }

  friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

/// Dynamical fields, in a fixed order used by every state container.
enum FieldId : std::size_t { kA0 = 0, kA1 = 1, kA2 = 2, kPhi = 3, kN = 4 };
inline constexpr std::size_t kNumFields = 5;
const char* field_name(std::size_t id);
/// A_mu and N are real, phi is complex.
constexpr FieldKind field_kind(std::size_t id) {
  return id == kPhi ? FieldKind::Complex : FieldKind::Real;
}

using FieldSet = std::array<SpectralField, kNumFields>;

/// (A0, A1, A2, phi, N) and their time derivatives at time t.
struct SystemState {
  FieldSet u;
  FieldSet du;
  double t = 0.0;

  static SystemState zero(const GridSpec& grid);

  [[nodiscard]] const GridSpec& grid() const { return u[0].grid(); }
  /// Throws std::invalid_argument on mismatched grids or reality flags.
  void validate() const;
  /// Largest |coefficient| over all fields.
  [[nodiscard]] double scale() const;
};

/// Half-wave image u_{+/-} = (u -/+ i <nabla>^{-1} d_t u) / 2 of every field.
struct HalfWaveState {
  FieldSet plus;
  FieldSet minus;
  double t = 0.0;

  [[nodiscard]] const GridSpec& grid() const { return plus[0].grid(); }
  [[nodiscard]] bool all_finite() const;
};

/// Raised when half-wave pairs no longer reconstruct a real field.
class RealityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every field resampled onto `target` (see resample for fields).
SystemState resample(const SystemState& s, const GridSpec& target);

HalfWaveState to_halfwave(const SystemState& s);
/// u = u+ + u-, d_t u = i <nabla> (u+ - u-). Real fields are projected onto
/// their Hermitian part after checking the defect is below `reality_tol`.
SystemState from_halfwave(const HalfWaveState& h, double reality_tol = 1e-8);

/// Exponent slack added to the decay law of random_hs_field.
inline constexpr double kRegularitySlack = 0.01;

/// Random field with c(k) = amplitude <k>^{-(s + 1 + slack)} g(k), g(k)
/// standard complex Gaussians. Each g(k) is drawn from a generator keyed on
/// (seed, k), so fields on different grids share their common modes.
SpectralField random_hs_field(const GridSpec& grid, double s, double amplitude, std::uint64_t seed,
                              FieldKind kind);

}  // namespace mcsh
