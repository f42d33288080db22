#include "mcsh/cli/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mcsh/cli/studies.hpp"
#include "mcsh/estimates.hpp"
#include "mcsh/snapshot.hpp"

#ifndef MCSH_VERSION
#define MCSH_VERSION "unknown"
#endif

namespace mcsh::cli {

namespace {

namespace fs = std::filesystem;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::string& header) : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << header << '\n';
    out_.flush();
  }
  void row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      if (!std::isnan(values[i])) line += fmt(values[i]);
    }
    out_ << line << '\n';
    out_.flush();
  }
  void raw(const std::string& line) {
    out_ << line << '\n';
    out_.flush();
  }

 private:
  std::ofstream out_;
};

void write_manifest(const RunConfig& cfg) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  std::ofstream out(fs::path(cfg.output) / "manifest.txt");
  if (!out) throw std::runtime_error("cannot write manifest in " + cfg.output);
  out << "# mcsh manifest\n# version " << MCSH_VERSION << "\n# created " << stamp << "\n" << write_config(cfg);
}

SystemState initial_state(const RunConfig& cfg) {
  if (!cfg.data_file.empty()) return load_snapshot(cfg.data_file).state;
  return make_compatible_data(cfg.recipe);
}

std::vector<double> record_row(const DiagnosticsRecord& r) {
  return {r.t, r.energy, r.energy_drift_rel, r.lorenz_l2, r.gauss_l2, r.v_l2,
          r.hs_norm_phi, r.hs_norm_a, r.hs_norm_n, r.max_field_abs};
}

EvolveOptions evolve_options(const RunConfig& cfg) {
  EvolveOptions o;
  o.t_final = cfg.t_final;
  o.dt = cfg.dt;
  o.sample_every = cfg.sample_every;
  o.rhs.potential = cfg.potential;
  o.diagnostics = {cfg.recipe.s_phi, cfg.recipe.s_a, cfg.recipe.s_n, cfg.potential};
  return o;
}

int blow_up(const RunConfig& cfg, const BlowUpError& e, std::ostream& log) {
  std::ofstream(fs::path(cfg.output) / "blowup.txt") << "blow-up at t = " << fmt(e.time()) << "\n";
  log << "blow-up at t = " << fmt(e.time()) << "; partial diagnostics retained\n";
  return kBlowUp;
}

int simulate(const RunConfig& cfg, std::ostream& log, bool quiet) {
  const SystemState s0 = initial_state(cfg);
  const PhysicalParams& p = cfg.recipe.params;
  CsvWriter csv(fs::path(cfg.output) / "diagnostics.csv", diagnostics_header());
  EvolveOptions o = evolve_options(cfg);
  o.on_sample = [&](const DiagnosticsRecord& r, const SystemState&) {
    csv.row(record_row(r));
    if (!quiet) log << "t = " << fmt(r.t) << "  E = " << fmt(r.energy) << "\n";
  };
  try {
    const EvolveResult res = evolve(to_halfwave(s0), p, o);
    save_snapshot((fs::path(cfg.output) / "final_state.snap").string(),
                  {from_halfwave(res.final_state), p, cfg.recipe.seed});
  } catch (const BlowUpError& e) {
    return blow_up(cfg, e, log);
  }
  return kOk;
}

int gen_data(const RunConfig& cfg, std::ostream& log, bool quiet) {
  CompatibleDataReport rep;
  const SystemState s = make_compatible_data(cfg.recipe, &rep);
  const PhysicalParams& p = cfg.recipe.params;
  save_snapshot((fs::path(cfg.output) / "initial_state.snap").string(), {s, p, cfg.recipe.seed});
  const ConstraintResiduals c = verify_constraints(s, p);
  const ConstraintScales sc = constraint_scales(s, p);
  CsvWriter csv(fs::path(cfg.output) / "constraints.csv",
                "lorenz_l2,gauss_l2,lorenz_rel,gauss_rel,lorenz_scale,gauss_scale,phase_shift");
  const double lr = sc.lorenz > 0.0 ? c.lorenz_l2 / sc.lorenz : c.lorenz_l2;
  const double gr = sc.gauss > 0.0 ? c.gauss_l2 / sc.gauss : c.gauss_l2;
  csv.row({c.lorenz_l2, c.gauss_l2, lr, gr, sc.lorenz, sc.gauss, rep.phase_shift});
  if (!quiet) log << "lorenz_rel = " << fmt(lr) << "  gauss_rel = " << fmt(gr) << "\n";
  return kOk;
}

int check_constraints(const RunConfig& cfg, std::ostream& log, bool quiet) {
  const SystemState s0 = initial_state(cfg);
  const PhysicalParams& p = cfg.recipe.params;
  CsvWriter csv(fs::path(cfg.output) / "constraints.csv",
                "t,lorenz_l2,gauss_l2,v_l2,lorenz_rel,gauss_rel,energy_drift_rel");
  double worst = 0.0;
  const auto sample = [&](const DiagnosticsRecord& r, const SystemState& s) {
    const ConstraintScales sc = constraint_scales(s, p);
    const double lr = sc.lorenz > 0.0 ? r.lorenz_l2 / sc.lorenz : r.lorenz_l2;
    const double gr = sc.gauss > 0.0 ? r.gauss_l2 / sc.gauss : r.gauss_l2;
    worst = std::max({worst, lr, gr});
    csv.row({r.t, r.lorenz_l2, r.gauss_l2, r.v_l2, lr, gr, r.energy_drift_rel});
  };
  EvolveOptions o = evolve_options(cfg);
  o.on_sample = sample;
  try {
    evolve(to_halfwave(s0), p, o);
  } catch (const BlowUpError& e) {
    return blow_up(cfg, e, log);
  }
  const bool ok = worst <= cfg.constraint_tol;
  if (!quiet)
    log << "max relative constraint residual " << fmt(worst) << (ok ? " <= " : " > ") << fmt(cfg.constraint_tol)
        << "\n";
  return ok ? kOk : kCheckFailed;
}

int check_estimates(const RunConfig& cfg, std::ostream& log, bool quiet) {
  std::vector<CorpusResult> results;
  if (cfg.corpus_file.empty()) {
    results = verify_builtin_corpus();
  } else {
    std::ifstream in(cfg.corpus_file);
    if (!in) throw ConfigError("cannot open corpus file '" + cfg.corpus_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    results = verify_corpus(parse_corpus(buf.str()));
  }
  std::ofstream(fs::path(cfg.output) / "estimates.csv") << corpus_report_csv(results);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.verdict.holds;
    if (quiet) continue;
    log << r.id << " " << r.range << ": " << (r.verdict.holds ? "holds" : "violated") << "\n";
    for (const auto& v : r.verdict.violations) log << "    " << v.condition << " at " << v.witness << "\n";
  }
  return all ? kOk : kCheckFailed;
}

int nullform_verify(const RunConfig& cfg, std::ostream& log, bool quiet) {
  const DecompositionStudy dec = decomposition_study(cfg.recipe.grid, 100, cfg.recipe.seed);
  const NullFormIdentityStudy ids = nullform_identity_study(cfg.recipe, cfg.states);
  const SymbolStudy sym = symbol_study(cfg.samples, cfg.recipe.seed);
  CsvWriter csv(fs::path(cfg.output) / "nullform.csv", "metric,value");
  const std::vector<std::pair<std::string, double>> rows = {
      {"decomposition_max_rel_error", dec.max_rel_error},
      {"q12_identity_max_rel_error", ids.max_rel_q12},
      {"qtilde_identity_max_rel_error", ids.max_rel_qtilde},
      {"curl_free_identity_max_rel_error", ids.max_rel_cf},
      {"samples", static_cast<double>(sym.samples)},
      {"sigma1_violations", static_cast<double>(sym.sigma1_violations)},
      {"sigma1_worst_ratio", sym.sigma1_worst_ratio},
      {"sigma2_constant_head", sym.c_sigma2_head},
      {"sigma2_constant", sym.c_sigma2},
      {"angle_low_count", static_cast<double>(sym.angle_low_count)},
      {"angle_low_constant_head", sym.c_angle_low_head},
      {"angle_low_constant", sym.c_angle_low},
      {"angle_high_count", static_cast<double>(sym.angle_high_count)},
      {"angle_high_constant_head", sym.c_angle_high_head},
      {"angle_high_constant", sym.c_angle_high},
  };
  for (const auto& [name, value] : rows) {
    csv.raw(name + "," + fmt(value));
    if (!quiet) log << name << " = " << fmt(value) << "\n";
  }
  const bool ok = dec.max_rel_error <= 1e-12 && ids.max_rel_q12 <= 1e-10 && ids.max_rel_qtilde <= 1e-10 &&
                  ids.max_rel_cf <= 1e-10 && sym.sigma1_violations == 0;
  return ok ? kOk : kCheckFailed;
}

int converge(const RunConfig& cfg, std::ostream& log, bool quiet) {
  const SystemState s0 = initial_state(cfg);
  ConvergenceStudy st;
  try {
    st = convergence_study(s0, cfg.recipe.params, cfg.t_final, cfg.dt, cfg.levels, cfg.potential);
  } catch (const BlowUpError& e) {
    return blow_up(cfg, e, log);
  }
  CsvWriter csv(fs::path(cfg.output) / "convergence.csv", "dt,energy_drift,self_error,self_order,drift_order");
  const double nan = std::nan("");
  for (std::size_t i = 0; i < st.dts.size(); ++i) {
    csv.row({st.dts[i], st.energy_drift[i], i < st.self_error.size() ? st.self_error[i] : nan,
             i < st.self_order.size() ? st.self_order[i] : nan, i < st.drift_order.size() ? st.drift_order[i] : nan});
    if (!quiet) {
      log << "dt = " << fmt(st.dts[i]) << "  drift = " << fmt(st.energy_drift[i]);
      if (i < st.self_error.size()) log << "  self_error = " << fmt(st.self_error[i]);
      log << "\n";
    }
  }
  return kOk;
}

int norms(const RunConfig& cfg, std::ostream& log, bool quiet) {
  const double s = cfg.recipe.s_phi;
  const auto rows = norm_study(cfg.norm_grids, s, cfg.recipe.amp_phi, cfg.recipe.seed, {0.0, s, 1.0});
  CsvWriter csv(fs::path(cfg.output) / "norms.csv", "n,s,norm");
  for (const auto& r : rows) {
    csv.row({static_cast<double>(r.n), r.s, r.norm});
    if (!quiet) log << "n = " << r.n << "  H^" << fmt(r.s) << " norm = " << fmt(r.norm) << "\n";
  }
  return kOk;
}

}  // namespace

const std::string& diagnostics_header() {
  static const std::string h =
      "t,energy,energy_drift_rel,lorenz_l2,gauss_l2,v_l2,hs_norm_phi,hs_norm_a,hs_norm_n,max_field_abs";
  return h;
}

int run(const RunConfig& cfg, std::ostream& log, bool quiet) {
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kConfigError;
  }
  std::error_code ec;
  fs::create_directories(cfg.output, ec);
  if (ec) {
    log << "error: cannot create output directory '" << cfg.output << "': " << ec.message() << "\n";
    return kConfigError;
  }
  try {
    write_manifest(cfg);
    switch (cfg.command) {
      case Command::Simulate: return simulate(cfg, log, quiet);
      case Command::GenData: return gen_data(cfg, log, quiet);
      case Command::CheckConstraints: return check_constraints(cfg, log, quiet);
      case Command::CheckEstimates: return check_estimates(cfg, log, quiet);
      case Command::NullformVerify: return nullform_verify(cfg, log, quiet);
      case Command::Converge: return converge(cfg, log, quiet);
      case Command::Norms: return norms(cfg, log, quiet);
    }
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const SnapshotFormatError& e) {
    log << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::runtime_error& e) {
    log << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace mcsh::cli
