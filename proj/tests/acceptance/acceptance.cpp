// Acceptance suite: `mcsh_acceptance <criterion>` runs one criterion, prints a
// single PASS/FAIL line and returns 0 on pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mcsh/cli/config.hpp"
#include "mcsh/cli/run.hpp"
#include "mcsh/cli/studies.hpp"
#include "mcsh/estimates.hpp"
#include "mcsh/snapshot.hpp"

using namespace mcsh;
using namespace mcsh::cli;

namespace {

namespace fs = std::filesystem;

// --- pinned tolerances and parameters -----------------------------------------------

constexpr double kDecompositionTol = 1e-12;
constexpr double kIdentityTol = 1e-10;
constexpr long kSymbolSamples = 1000000;
constexpr std::uint64_t kSymbolSeed = 2024;
constexpr double kConstantStability = 0.10;
constexpr double kDataTol = 1e-10;
constexpr double kConstraintTol = 1e-6;
constexpr double kConstraintShrink = 10.0;
constexpr double kEnergyDriftTol = 1e-8;
constexpr double kTargetOrder = 4.0;
constexpr double kOrderTol = 0.2;
constexpr double kConvergenceDt = 0.02;
constexpr int kConvergenceLevels = 4;
constexpr double kPhaseTol = 1e-10;
constexpr double kWaveOrder = 2.0;
constexpr double kWaveOrderTol = 0.2;
constexpr double kGrowthLimit = 2.0;
constexpr double kGridChangeTol = 0.05;
constexpr double kStabilityAmplitude = 1.0;
constexpr double kStabilityDt = 1e-3;
constexpr double kCorpusSeconds = 1.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int report(int id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
  return pass ? 0 : 1;
}

GridSpec grid_of(int n) {
  GridSpec g;
  g.n = n;
  return g;
}

// 128^2, spectra cut at |k| <= 8, unit amplitudes, e = kappa = v = 1.
DataRecipe smooth_recipe() {
  DataRecipe r;
  r.grid = grid_of(128);
  r.spectral_cutoff = 8.0;
  return r;
}

bool stable(double head, double full) {
  return std::isfinite(full) && full > 0.0 && std::abs(full - head) <= kConstantStability * head;
}

// --- criteria ----------------------------------------------------------------------------

int decomposition() {
  const DecompositionStudy d = decomposition_study(grid_of(128), 100, 1);
  return report(1, d.max_rel_error <= kDecompositionTol,
                "pairs=100 grid=128 max_rel_error=" + fmt(d.max_rel_error) + " tol=" + fmt(kDecompositionTol));
}

int identities() {
  DataRecipe r;
  r.grid = grid_of(128);
  const NullFormIdentityStudy s = nullform_identity_study(r, 20);
  const bool pass = s.max_rel_q12 <= kIdentityTol && s.max_rel_qtilde <= kIdentityTol && s.max_rel_cf <= kIdentityTol;
  return report(2, pass,
                "states=20 q12=" + fmt(s.max_rel_q12) + " qtilde=" + fmt(s.max_rel_qtilde) + " cf=" +
                    fmt(s.max_rel_cf) + " tol=" + fmt(kIdentityTol));
}

int sigma1_bound() {
  const SymbolStudy s = symbol_study(kSymbolSamples, kSymbolSeed);
  return report(3, s.sigma1_violations == 0,
                "samples=" + std::to_string(s.samples) + " violations=" + std::to_string(s.sigma1_violations) +
                    " worst_ratio=" + fmt(s.sigma1_worst_ratio));
}

int sigma2_bound() {
  const SymbolStudy s = symbol_study(kSymbolSamples, kSymbolSeed);
  return report(4, stable(s.c_sigma2_head, s.c_sigma2),
                "C(1e5)=" + fmt(s.c_sigma2_head) + " C(1e6)=" + fmt(s.c_sigma2) +
                    " change=" + fmt(std::abs(s.c_sigma2 - s.c_sigma2_head) / s.c_sigma2_head));
}

int angle_bound_check() {
  const SymbolStudy s = symbol_study(kSymbolSamples, kSymbolSeed);
  const bool pass = stable(s.c_angle_low_head, s.c_angle_low) && stable(s.c_angle_high_head, s.c_angle_high);
  return report(5, pass,
                "ratio<1: C(1e5)=" + fmt(s.c_angle_low_head) + " C(1e6)=" + fmt(s.c_angle_low) + " n=" +
                    std::to_string(s.angle_low_count) + "; ratio>=1: C(1e5)=" + fmt(s.c_angle_high_head) +
                    " C(1e6)=" + fmt(s.c_angle_high) + " n=" + std::to_string(s.angle_high_count));
}

int corpus() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = verify_builtin_corpus();
  std::string failed;
  for (const CorpusResult& r : results)
    if (!r.verdict.holds) {
      failed += (failed.empty() ? "" : ",") + r.id;
      for (const Violation& v : r.verdict.violations)
        std::cout << "  " << r.id << " " << r.range << ": " << v.condition << " at " << v.witness << "\n";
    }

  EstimateParams probe{parse_param_expr("1-s"),       parse_param_expr("2*s-1/4-"), parse_param_expr("s-1"),
                       parse_param_expr("0"),         parse_param_expr("2*s-1/4--"), parse_param_expr("1/2+"),
                       parse_range("[1/2,5/8]")};
  const Verdict pv = check_conditions(probe);
  std::string probe_failed;
  for (const Violation& v : pv.violations) {
    probe_failed += (probe_failed.empty() ? "" : "; ") + v.condition;
    std::cout << "  probe s=1/2: " << v.condition << " at " << v.witness << "\n";
  }
  const bool probe_ok = pv.violations.size() == 1 && pv.violations[0].condition == "s0+s1+s2 > 3/4";
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = failed.empty() && probe_ok && seconds < kCorpusSeconds;
  return report(6, pass,
                "entries=" + std::to_string(results.size()) + " failing=[" + failed + "] probe_violations=[" +
                    probe_failed + "] seconds=" + fmt(seconds));
}

int data_compatibility() {
  const fs::path base = fs::temp_directory_path() / "mcsh_acceptance_gen";
  fs::remove_all(base);
  std::ostringstream log;
  std::string snaps[2];
  for (int i = 0; i < 2; ++i) {
    RunConfig cfg = parse_config("command = gen-data\ngrid_n = 128\nseed = 42\n");
    cfg.output = (base / std::to_string(i)).string();
    if (run(cfg, log, true) != kOk) return report(7, false, "gen-data failed: " + log.str());
    std::ifstream in(fs::path(cfg.output) / "initial_state.snap", std::ios::binary);
    snaps[i].assign(std::istreambuf_iterator<char>(in), {});
  }
  const Snapshot snap = load_snapshot((base / "0" / "initial_state.snap").string());
  fs::remove_all(base);
  const ConstraintResiduals c = verify_constraints(snap.state, snap.params);
  const ConstraintScales sc = constraint_scales(snap.state, snap.params);
  const double lorenz = c.lorenz_l2 / sc.lorenz, gauss = c.gauss_l2 / sc.gauss;
  const bool same = !snaps[0].empty() && snaps[0] == snaps[1];
  return report(7, lorenz <= kDataTol && gauss <= kDataTol && same,
                "lorenz_rel=" + fmt(lorenz) + " gauss_rel=" + fmt(gauss) + " tol=" + fmt(kDataTol) +
                    " deterministic=" + (same ? "yes" : "no"));
}

int constraint_propagation() {
  const DataRecipe r = smooth_recipe();
  const SystemState s0 = make_compatible_data(r);
  const ConstraintStudy a = constraint_study(s0, r.params, 1.0, 1e-3, 50);
  const ConstraintStudy b = constraint_study(s0, r.params, 1.0, 5e-4, 100);
  const double shrink_w = a.max_rel_lorenz / b.max_rel_lorenz;
  const double shrink_g = a.max_rel_gauss / b.max_rel_gauss;
  const bool pass = a.max_rel_lorenz <= kConstraintTol && a.max_rel_gauss <= kConstraintTol &&
                    shrink_w >= kConstraintShrink && shrink_g >= kConstraintShrink;
  return report(8, pass,
                "dt=1e-3: W_rel=" + fmt(a.max_rel_lorenz) + " gauss_rel=" + fmt(a.max_rel_gauss) +
                    "; dt=5e-4: W_rel=" + fmt(b.max_rel_lorenz) + " gauss_rel=" + fmt(b.max_rel_gauss) +
                    "; shrink W=" + fmt(shrink_w) + " gauss=" + fmt(shrink_g));
}

int energy_conservation() {
  const DataRecipe r = smooth_recipe();
  const SystemState s0 = make_compatible_data(r);
  const ConstraintStudy run = constraint_study(s0, r.params, 1.0, 1e-3, 50);
  const ConvergenceStudy c = convergence_study(s0, r.params, 1.0, kConvergenceDt, kConvergenceLevels);
  bool orders_ok = true;
  std::string orders;
  for (double o : c.self_order) {
    orders_ok = orders_ok && std::abs(o - kTargetOrder) <= kOrderTol;
    orders += (orders.empty() ? "" : ",") + fmt(o);
  }
  std::string drift_orders;
  for (double o : c.drift_order) drift_orders += (drift_orders.empty() ? "" : ",") + fmt(o);
  return report(9, run.max_energy_drift <= kEnergyDriftTol && orders_ok,
                "drift(dt=1e-3)=" + fmt(run.max_energy_drift) + " tol=" + fmt(kEnergyDriftTol) +
                    "; self_order(dt=" + fmt(kConvergenceDt) + "...)=[" + orders + "] energy_drift_order=[" +
                    drift_orders + "]");
}

int linear_exactness() {
  double worst = 0.0;
  for (auto [k1, k2] : {std::pair{1, 0}, {3, -5}, {17, 40}, {-63, 63}}) {
    const PhaseStudy p = linear_phase_study(grid_of(128), k1, k2, 10.0, 0.01);
    worst = std::max(worst, p.max_phase_error_per_time);
  }
  return report(10, worst <= kPhaseTol, "modes=4 T=10 max_phase_error_per_time=" + fmt(worst) + " tol=" + fmt(kPhaseTol));
}

int wave_residual() {
  DataRecipe r;
  r.grid = grid_of(64);
  r.spectral_cutoff = 8.0;
  const WaveResidualStudy w = wave_residual_study(r, 0.5, 0.16, 5, 1e-3);
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : ",") + fmt(x);
    return s;
  };
  bool pass = !w.order_printed.empty();
  for (double o : w.order_printed) pass = pass && std::abs(o - kWaveOrder) <= kWaveOrderTol;
  return report(11, pass,
                "|W|=" + fmt(w.w_norm) + " |2e^2|phi|^2 W|=" + fmt(w.coupling_norm) + " h=[" + join(w.spacings) +
                    "] residual=[" + join(w.residual_printed) + "] order=[" + join(w.order_printed) +
                    "]; opposite coupling sign: residual=[" + join(w.residual_derived) + "] order=[" +
                    join(w.order_derived) + "]");
}

int stability() {
  DataRecipe r;
  r.grid = grid_of(128);
  r.s_phi = 0.55;
  r.s_a = 0.35;
  r.s_n = 0.5;
  r.amp_phi = r.amp_a = r.amp_n = kStabilityAmplitude;
  const StabilityProbe p = stability_probe(r, 0.25, kStabilityDt, 25);
  const bool pass = p.max_growth_factor <= kGrowthLimit && p.max_rel_difference <= kGridChangeTol;
  return report(12, pass,
                "amp=" + fmt(kStabilityAmplitude) + " H^0.55(0)=" + fmt(p.norm_coarse.front()) + " H^0.55(T)=" +
                    fmt(p.norm_coarse.back()) + " growth=" + fmt(p.max_growth_factor) + " limit=" +
                    fmt(kGrowthLimit) + " grid_change=" + fmt(p.max_rel_difference) + " tol=" + fmt(kGridChangeTol));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mcsh_acceptance <criterion 1-12>\n";
    return 2;
  }
  const int id = std::atoi(argv[1]);
  try {
    switch (id) {
      case 1: return decomposition();
      case 2: return identities();
      case 3: return sigma1_bound();
      case 4: return sigma2_bound();
      case 5: return angle_bound_check();
      case 6: return corpus();
      case 7: return data_compatibility();
      case 8: return constraint_propagation();
      case 9: return energy_conservation();
      case 10: return linear_exactness();
      case 11: return wave_residual();
      case 12: return stability();
      default: std::cerr << "unknown criterion " << argv[1] << "\n"; return 2;
    }
  } catch (const std::exception& e) {
    return report(id, false, std::string("exception: ") + e.what());
  }
}
