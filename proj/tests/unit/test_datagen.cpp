#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "mcsh/datagen.hpp"
#include "mcsh/gauge.hpp"
#include "mcsh/snapshot.hpp"

using namespace mcsh;

namespace {

DataRecipe recipe(int n, std::uint64_t seed = 42) {
  DataRecipe r;
  r.grid.n = n;
  r.seed = seed;
  return r;
}

}  // namespace

TEST(Datagen, ZeroAmplitudesGiveVacuum) {
  DataRecipe r = recipe(16);
  r.amp_phi = r.amp_a = r.amp_n = 0.0;
  const SystemState s = make_compatible_data(r);
  for (std::size_t f = 0; f < kNumFields; ++f) {
    EXPECT_EQ(s.u[f].max_abs_coefficient(), 0.0);
    EXPECT_EQ(s.du[f].max_abs_coefficient(), 0.0);
  }
  const ConstraintResiduals c = verify_constraints(s, r.params);
  EXPECT_EQ(c.lorenz_l2, 0.0);
  EXPECT_EQ(c.gauss_l2, 0.0);
}

TEST(Datagen, ResidualsAtRoundoff) {
  const DataRecipe r = recipe(128);
  const SystemState s = make_compatible_data(r);
  const ConstraintResiduals c = verify_constraints(s, r.params);
  const ConstraintScales sc = constraint_scales(s, r.params);
  EXPECT_LE(c.lorenz_l2, 1e-10 * sc.lorenz);
  EXPECT_LE(c.gauss_l2, 1e-10 * sc.gauss);
  EXPECT_EQ(c.gauss_l2, c.v_l2);
}

TEST(Datagen, Deterministic) {
  const DataRecipe r = recipe(32, 7);
  const SystemState a = make_compatible_data(r);
  const SystemState b = make_compatible_data(r);
  for (std::size_t f = 0; f < kNumFields; ++f) {
    EXPECT_EQ(a.u[f], b.u[f]);
    EXPECT_EQ(a.du[f], b.du[f]);
  }
}

TEST(Datagen, ResidualsStableUnderGridDoubling) {
  double prev = 0.0;
  for (int n : {32, 64}) {
    const DataRecipe r = recipe(n);
    const SystemState s = make_compatible_data(r);
    const double rel = verify_constraints(s, r.params).gauss_l2 / constraint_scales(s, r.params).gauss;
    if (prev > 0.0) {
      EXPECT_LT(rel, std::max(2.0 * prev, 1e-14));
    }
    prev = rel;
  }
}

TEST(Datagen, ViolatingStateNorm) {
  GridSpec g;
  g.n = 16;
  SystemState s = SystemState::zero(g);
  s.du[kA0].set_coefficient(0, 0, 1.0);
  EXPECT_NEAR(verify_constraints(s, {}).lorenz_l2, std::sqrt(g.area()), 1e-12);
}

TEST(Datagen, MeanIsAffineInShift) {
  const DataRecipe r = recipe(32);
  const SystemState raw = draw_raw_data(r);
  const double m0 = gauss_mean_after_shift(raw, r.params, 0.0);
  const double m1 = gauss_mean_after_shift(raw, r.params, 1.0);
  const double m2 = gauss_mean_after_shift(raw, r.params, 2.0);
  EXPECT_NEAR(m2 - m1, m1 - m0, 1e-12 * (std::abs(m0) + std::abs(m1) + 1.0));
  CompatibleDataReport rep;
  make_compatible_data(r, &rep);
  EXPECT_NEAR(gauss_mean_after_shift(raw, r.params, rep.phase_shift), 0.0, 1e-12 * (std::abs(m0) + 1.0));
}

TEST(Datagen, DivergenceFreePartPreserved) {
  const DataRecipe r = recipe(32);
  const SystemState raw = draw_raw_data(r);
  const SystemState s = make_compatible_data(r);
  const DfCfSplit before = df_cf_decompose(raw.du[kA1], raw.du[kA2]);
  const DfCfSplit after = df_cf_decompose(s.du[kA1], s.du[kA2]);
  EXPECT_LT(sobolev_norm(after.df1 - before.df1, 0.0), 1e-13);
  EXPECT_LT(sobolev_norm(after.df2 - before.df2, 0.0), 1e-13);
}

TEST(Datagen, ImposeOnResampledData) {
  const DataRecipe r = recipe(32);
  GridSpec fine = r.grid;
  fine.n = 64;
  const SystemState s = impose_constraints(resample(draw_raw_data(r), fine), r.params);
  const ConstraintResiduals c = verify_constraints(s, r.params);
  EXPECT_LE(c.gauss_l2, 1e-10 * constraint_scales(s, r.params).gauss);
}

TEST(Datagen, RecipeValidation) {
  DataRecipe r = recipe(16);
  r.amp_phi = -1.0;
  EXPECT_THROW(r.validate(), std::invalid_argument);
  r = recipe(16);
  r.s_a = std::nan("");
  EXPECT_THROW(r.validate(), std::invalid_argument);
}

TEST(Snapshot, BitExactRoundTrip) {
  const DataRecipe r = recipe(16, 9);
  Snapshot snap{make_compatible_data(r), {1.25, 0.5, 2.0}, 9};
  snap.state.t = 0.1 + 0.2;
  std::stringstream buf;
  write_snapshot(buf, snap);
  const Snapshot back = read_snapshot(buf);
  EXPECT_EQ(back.seed, snap.seed);
  EXPECT_EQ(back.params, snap.params);
  EXPECT_EQ(back.state.t, snap.state.t);
  for (std::size_t f = 0; f < kNumFields; ++f) {
    EXPECT_EQ(back.state.u[f], snap.state.u[f]);
    EXPECT_EQ(back.state.du[f], snap.state.du[f]);
  }
}

TEST(Snapshot, FileRoundTripAndErrors) {
  const auto path = std::filesystem::temp_directory_path() / "mcsh_unit_snapshot.snap";
  const Snapshot snap{make_compatible_data(recipe(8)), {}, 42};
  save_snapshot(path.string(), snap);
  EXPECT_EQ(load_snapshot(path.string()).state.u[kPhi], snap.state.u[kPhi]);
  std::filesystem::remove(path);
  EXPECT_THROW(load_snapshot(path.string()), std::runtime_error);
  std::stringstream bad("not a snapshot\n");
  EXPECT_THROW(read_snapshot(bad), SnapshotFormatError);
  std::stringstream good;
  write_snapshot(good, snap);
  std::string text = good.str();
  std::stringstream truncated(text.substr(0, text.size() / 2));
  EXPECT_THROW(read_snapshot(truncated), SnapshotFormatError);
}
