#include <gtest/gtest.h>

#include <cmath>

#include "mcsh/state.hpp"

using namespace mcsh;

namespace {

GridSpec grid_of(int n) {
  GridSpec g;
  g.n = n;
  return g;
}

SystemState random_state(const GridSpec& g, std::uint64_t seed) {
  SystemState s = SystemState::zero(g);
  for (std::size_t f = 0; f < kNumFields; ++f) {
    s.u[f] = random_hs_field(g, 1.0, 1.0, seed + f, field_kind(f));
    s.du[f] = random_hs_field(g, 0.0, 1.0, seed + 100 + f, field_kind(f));
  }
  return s;
}

double state_distance(const SystemState& a, const SystemState& b) {
  double d = 0.0;
  for (std::size_t f = 0; f < kNumFields; ++f)
    d = std::max({d, sobolev_norm(a.u[f] - b.u[f], 0.0), sobolev_norm(a.du[f] - b.du[f], 0.0)});
  return d;
}

}  // namespace

TEST(PhysicalParams, Validation) {
  EXPECT_NO_THROW(PhysicalParams{}.validate());
  EXPECT_THROW((PhysicalParams{1.0, 0.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((PhysicalParams{0.0, 0.0, 1.0}.validate()));
  EXPECT_DOUBLE_EQ((PhysicalParams{2.0, 4.0, 3.0}.n_shift()), 4.5);
  EXPECT_EQ((PhysicalParams{0.0, 0.0, 1.0}.n_shift()), 0.0);
}

TEST(HalfWave, ZeroVelocitySplitsEvenly) {
  const GridSpec g = grid_of(16);
  SystemState s = SystemState::zero(g);
  s.u[kA1] = SpectralField::plane_wave(g, 1, 0, 0.5, FieldKind::Real);  // cos(x1)
  const HalfWaveState h = to_halfwave(s);
  EXPECT_NEAR(std::abs(h.plus[kA1].coefficient(1, 0) - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.minus[kA1].coefficient(1, 0) - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.plus[kA1].coefficient(-1, 0) - 0.25), 0.0, 1e-15);
}

TEST(HalfWave, ZeroPositionSplit) {
  const GridSpec g = grid_of(16);
  SystemState s = SystemState::zero(g);
  // sin(x1) = (e^{ix} - e^{-ix}) / 2i
  s.du[kN].set_coefficient(1, 0, Complex(0.0, -0.5));
  s.du[kN].set_coefficient(-1, 0, Complex(0.0, 0.5));
  const HalfWaveState h = to_halfwave(s);
  const double inv = 1.0 / std::sqrt(2.0);
  // u_+ = -(i/2) <D>^{-1} sin, u_- = +(i/2) <D>^{-1} sin
  const Complex plus_expect = Complex(0.0, -0.5) * Complex(0.0, -0.5) * inv;
  EXPECT_NEAR(std::abs(h.plus[kN].coefficient(1, 0) - plus_expect), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.minus[kN].coefficient(1, 0) + plus_expect), 0.0, 1e-15);
  const SystemState back = from_halfwave(h);
  EXPECT_NEAR(std::abs(back.du[kN].coefficient(1, 0) - Complex(0.0, -0.5)), 0.0, 1e-15);
  EXPECT_LT(sobolev_norm(back.u[kN], 0.0), 1e-15);
}

TEST(HalfWave, EqualHalvesGivePositionOnly) {
  const GridSpec g = grid_of(16);
  const SpectralField gfield = random_hs_field(g, 1.0, 1.0, 3, FieldKind::Complex);
  HalfWaveState h = to_halfwave(SystemState::zero(g));
  h.plus[kPhi] = 0.5 * gfield;
  h.minus[kPhi] = 0.5 * gfield;
  const SystemState s = from_halfwave(h);
  EXPECT_LT(sobolev_norm(s.u[kPhi] - gfield, 0.0), 1e-15);
  EXPECT_LT(sobolev_norm(s.du[kPhi], 0.0), 1e-15);
  h.minus[kPhi] = -0.5 * gfield;
  EXPECT_LT(sobolev_norm(from_halfwave(h).u[kPhi], 0.0), 1e-15);
}

TEST(HalfWave, RoundTripBothWays) {
  const GridSpec g = grid_of(32);
  const SystemState s = random_state(g, 11);
  EXPECT_LT(state_distance(from_halfwave(to_halfwave(s)), s), 1e-12 * s.scale());
  const HalfWaveState h = to_halfwave(s);
  const HalfWaveState h2 = to_halfwave(from_halfwave(h));
  for (std::size_t f = 0; f < kNumFields; ++f) {
    EXPECT_LT(sobolev_norm(h2.plus[f] - h.plus[f], 0.0), 1e-12 * s.scale());
    EXPECT_LT(sobolev_norm(h2.minus[f] - h.minus[f], 0.0), 1e-12 * s.scale());
  }
}

TEST(HalfWave, RealityViolationDetected) {
  const GridSpec g = grid_of(16);
  HalfWaveState h = to_halfwave(SystemState::zero(g));
  h.plus[kA0].set_coefficient(2, 1, Complex(0.0, 1.0));
  EXPECT_THROW(from_halfwave(h), RealityViolation);
}

TEST(RandomField, DeterministicAndSeedSensitive) {
  const GridSpec g = grid_of(32);
  const SpectralField a = random_hs_field(g, 0.5, 1.0, 9, FieldKind::Complex);
  EXPECT_EQ(a, random_hs_field(g, 0.5, 1.0, 9, FieldKind::Complex));
  EXPECT_NE(a, random_hs_field(g, 0.5, 1.0, 10, FieldKind::Complex));
}

TEST(RandomField, AmplitudeZeroIsZero) {
  const SpectralField f = random_hs_field(grid_of(16), 0.5, 0.0, 1, FieldKind::Real);
  EXPECT_EQ(f.max_abs_coefficient(), 0.0);
}

TEST(RandomField, RealKindHasRealValues) {
  const SpectralField f = random_hs_field(grid_of(32), 0.3, 1.0, 5, FieldKind::Real);
  double imag = 0.0, total = 0.0;
  for (const Complex& v : f.to_physical()) {
    imag = std::max(imag, std::abs(v.imag()));
    total = std::max(total, std::abs(v));
  }
  EXPECT_LE(imag, 1e-12 * total);
}

TEST(RandomField, LowModesSharedAcrossGrids) {
  const SpectralField a = random_hs_field(grid_of(32), 0.5, 1.0, 4, FieldKind::Complex);
  const SpectralField b = random_hs_field(grid_of(64), 0.5, 1.0, 4, FieldKind::Complex);
  EXPECT_EQ(a.coefficient(3, -7), b.coefficient(3, -7));
}

// Oracle: E||f||^2_{H^r} = 2 amp^2 sum_k <k>^{2r - 2(s+1.01)} over the retained
// modes. Coefficients are hashed per (seed, k), so each grid extends the last.
TEST(RandomField, NormTrendAcrossResolution) {
  const double s = 0.55;
  std::vector<double> low, high;
  for (int n : {64, 128, 256}) {
    const SpectralField f = random_hs_field(grid_of(n), s, 1.0, 42, FieldKind::Complex);
    low.push_back(sobolev_norm(f, s));
    high.push_back(sobolev_norm(f, 1.0));
  }
  EXPECT_LT(low[2] / low[1], low[1] / low[0] + 0.02);
  EXPECT_LT(low[2] / low[1], 1.10);
  EXPECT_GT(high[1] / high[0], 1.3);
  EXPECT_GT(high[2] / high[1], 1.3);
}
