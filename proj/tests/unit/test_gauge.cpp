#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mcsh/datagen.hpp"
#include "mcsh/dynamics.hpp"
#include "mcsh/gauge.hpp"

using namespace mcsh;

namespace {

GridSpec grid_of(int n) {
  GridSpec g;
  g.n = n;
  return g;
}

SpectralField field(const GridSpec& g, double (*f)(double, double)) {
  return SpectralField::sample(g, FieldKind::Real, [f](double x, double y) { return Complex(f(x, y)); });
}

NullFormSample sample(Vec2 xi, Vec2 eta, Sign a = Sign::Plus, Sign b = Sign::Plus) {
  NullFormSample s;
  s.xi = xi;
  s.eta = eta;
  s.sign1 = a;
  s.sign2 = b;
  return s;
}

}  // namespace

TEST(Lorenz, ResidualExamples) {
  const GridSpec g = grid_of(16);
  SystemState s = SystemState::zero(g);
  s.du[kA0] = field(g, [](double x, double) { return std::cos(x); });
  EXPECT_LT(sobolev_norm(lorenz_residual(s) - s.du[kA0], 0.0), 1e-15);
  s.u[kA1] = field(g, [](double x, double) { return std::sin(x); });
  EXPECT_LT(sobolev_norm(lorenz_residual(s), 0.0), 1e-15);
}

TEST(Gauss, VacuumAndNegativeControl) {
  const GridSpec g = grid_of(16);
  EXPECT_EQ(gauss_residual(SystemState::zero(g), {}).max_abs_coefficient(), 0.0);
  DataRecipe r;
  r.grid = g;
  const SystemState raw = draw_raw_data(r);
  EXPECT_GT(l2_norm(gauss_residual(raw, r.params)), 1e-2);
  EXPECT_LT(sobolev_norm(auxiliary_v(raw, r.params) + gauss_residual(raw, r.params), 0.0), 1e-15);
}

TEST(Energy, VacuumIsZero) {
  EXPECT_EQ(energy(SystemState::zero(grid_of(16)), {}), 0.0);
}

TEST(Energy, SingleModeClosedForm) {
  const GridSpec g = grid_of(16);
  SystemState s = SystemState::zero(g);
  s.u[kPhi] = SpectralField::plane_wave(g, 2, -1, {0.3, 0.4});
  s.du[kPhi] = SpectralField::plane_wave(g, 2, -1, {-0.1, 0.2});
  const double expect = g.area() * (0.05 + 5.0 * 0.25);
  EXPECT_NEAR(energy(s, {0.0, 0.0, 1.0}), expect, 1e-12 * expect);
}

TEST(Energy, NWeightDiffersBetweenModes) {
  const GridSpec g = grid_of(16);
  SystemState s = SystemState::zero(g);
  s.du[kN] = SpectralField::plane_wave(g, 1, 0, 0.5, FieldKind::Real);
  const PhysicalParams p{0.0, 0.0, 1.0};
  const double consistent = energy(s, p, PotentialMode::Consistent);
  EXPECT_NEAR(energy(s, p, PotentialMode::PaperLiteral), 2.0 * consistent, 1e-12);
  EXPECT_NEAR(consistent, 0.5 * g.area() * 0.5, 1e-12);
}

TEST(DfCf, ReconstructsInput) {
  const GridSpec g = grid_of(32);
  const SpectralField a1 = random_hs_field(g, 0.5, 1.0, 1, FieldKind::Real);
  const SpectralField a2 = random_hs_field(g, 0.5, 1.0, 2, FieldKind::Real);
  const DfCfSplit d = df_cf_decompose(a1, a2);
  EXPECT_LT(sobolev_norm(d.df1 + d.cf1 + d.rem1 - a1, 0.0), 1e-12 * sobolev_norm(a1, 0.0));
  EXPECT_LT(sobolev_norm(d.df2 + d.cf2 + d.rem2 - a2, 0.0), 1e-12 * sobolev_norm(a2, 0.0));
}

TEST(DfCf, GradientAndRotationalFields) {
  const GridSpec g = grid_of(32);
  const SpectralField chi = random_hs_field(g, 1.0, 1.0, 3, FieldKind::Real);
  const DfCfSplit grad = df_cf_decompose(derivative(chi, 1), derivative(chi, 2));
  EXPECT_LT(sobolev_norm(grad.df1, 0.0) + sobolev_norm(grad.df2, 0.0), 1e-12);
  const DfCfSplit rot = df_cf_decompose(-derivative(chi, 2), derivative(chi, 1));
  EXPECT_LT(sobolev_norm(rot.cf1, 0.0) + sobolev_norm(rot.cf2, 0.0), 1e-12);
}

TEST(NullForm, Q12Antisymmetry) {
  const GridSpec g = grid_of(32);
  const SpectralField u = random_hs_field(g, 1.0, 1.0, 5, FieldKind::Complex);
  EXPECT_LT(sobolev_norm(nullform_q12(u, u, Sign::Plus, Sign::Plus), 0.0), 1e-12);
  const SpectralField a = SpectralField::plane_wave(g, 2, 1, 1.0);
  const SpectralField b = SpectralField::plane_wave(g, 4, 2, 0.5);
  EXPECT_LT(sobolev_norm(nullform_q12(a, b, Sign::Plus, Sign::Minus), 0.0), 1e-12);
}

// Oracle: the bilinear symbol evaluated by hand at the two input modes.
TEST(NullForm, SingleModeSymbols) {
  const GridSpec g = grid_of(32);
  const Complex cu(0.7, -0.2), cv(0.3, 0.9);
  const SpectralField u = SpectralField::plane_wave(g, 3, -1, cu);
  const SpectralField v = SpectralField::plane_wave(g, -2, 4, cv);
  const Vec2 xi{3, -1}, eta{-2, 4};
  for (Sign a : {Sign::Plus, Sign::Minus})
    for (Sign b : {Sign::Plus, Sign::Minus}) {
      const Complex q12 = nullform_q12(u, v, a, b).coefficient(1, 3);
      const Complex qt = nullform_qtilde(u, v, a, b).coefficient(1, 3);
      EXPECT_NEAR(std::abs(q12 + sigma1(sample(xi, eta)) * cu * cv), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(qt - sigma2(sample(xi, eta, a, b)) * cu * cv), 0.0, 1e-14);
    }
  const SpectralField zero(g, FieldKind::Complex);
  EXPECT_EQ(nullform_qtilde(zero, v, Sign::Plus, Sign::Plus).max_abs_coefficient(), 0.0);
}

TEST(Symbols, HandEvaluations) {
  const NullFormSample orth = sample({1, 0}, {0, 1});
  EXPECT_DOUBLE_EQ(sigma1(orth), -0.5);
  EXPECT_DOUBLE_EQ(angle(orth), std::numbers::pi / 2);
  EXPECT_LE(std::abs(sigma1(orth)), 0.5 * angle(orth));

  const NullFormSample same = sample({1, 0}, {1, 0});
  EXPECT_DOUBLE_EQ(sigma2(same), 0.5);
  EXPECT_DOUBLE_EQ(angle(same), 0.0);
  EXPECT_DOUBLE_EQ(1.0 / bracket(same.xi) + 1.0 / bracket(same.eta), std::sqrt(2.0));

  const NullFormSample opposite = sample({1, 0}, {1, 0}, Sign::Plus, Sign::Minus);
  EXPECT_DOUBLE_EQ(sigma2(opposite), -1.5);
  EXPECT_DOUBLE_EQ(angle(opposite), std::numbers::pi);

  const NullFormSample diag = sample({2, 2}, {2, 2});
  EXPECT_NEAR(sigma2(diag), 1.0 / 9.0, 1e-15);
}

TEST(Symbols, AngleRejectsZeroVectors) {
  EXPECT_THROW(angle(sample({0, 0}, {1, 0})), std::invalid_argument);
  EXPECT_THROW(angle(sample({1, 0}, {0, 0})), std::invalid_argument);
}

TEST(Symbols, AngleBoundOnCone) {
  NullFormSample s = sample({3, 4}, {3, 4});
  s.tau = 5.0;
  s.lambda = 5.0;
  const AngleBound b = angle_bound(s);
  EXPECT_NEAR(b.first, std::sqrt(2.0 / std::sqrt(26.0)), 1e-15);
  EXPECT_NEAR(b.second_ratio, 1.0 / std::sqrt(26.0), 1e-15);
}

TEST(WaveResidual, ArgumentErrors) {
  const GridSpec g = grid_of(16);
  std::vector<SystemState> snaps(2, SystemState::zero(g));
  EXPECT_THROW(w_wave_residual(snaps, {}), std::invalid_argument);
  snaps.push_back(SystemState::zero(g));
  EXPECT_THROW(w_wave_residual(snaps, {}), std::invalid_argument);
  snaps[1].t = 0.1;
  snaps[2].t = 0.3;
  EXPECT_THROW(w_wave_residual(snaps, {}), std::invalid_argument);
  snaps[2].t = 0.2;
  EXPECT_EQ(w_wave_residual(snaps, {}).size(), 1u);
}

// Oracle: W = cos(t) cos(x) solves W_tt - Delta W = 0; the centered second
// difference has error h^2/12 |W_tttt|.
TEST(WaveResidual, FreeWaveSecondOrder) {
  const GridSpec g = grid_of(16);
  auto at = [&](double t) {
    SystemState s = SystemState::zero(g);
    s.t = t;
    s.du[kA0] = std::cos(t) * SpectralField::plane_wave(g, 1, 0, 0.5, FieldKind::Real);
    return s;
  };
  std::vector<double> r;
  for (double h : {0.1, 0.05}) {
    const std::vector<SystemState> snaps{at(0.5 - h), at(0.5), at(0.5 + h)};
    r.push_back(w_wave_residual(snaps, {0.0, 0.0, 1.0})[0]);
  }
  EXPECT_NEAR(std::log2(r[0] / r[1]), 2.0, 0.05);
}
