#include "mcsh/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace mcsh {

void PhysicalParams::validate() const {
  if (!(kappa > 0.0) && !(kappa == 0.0 && e == 0.0))
    throw std::invalid_argument("params: kappa must be positive (or zero with e = 0)");
  if (!std::isfinite(e) || !std::isfinite(kappa) || !std::isfinite(v))
    throw std::invalid_argument("params: non-finite coupling");
}

const char* field_name(std::size_t id) {
  static constexpr const char* names[] = {"A0", "A1", "A2", "phi", "N"};
  return id < kNumFields ? names[id] : "?";
}

SystemState SystemState::zero(const GridSpec& grid) {
  SystemState s;
  for (std::size_t f = 0; f < kNumFields; ++f) {
    s.u[f] = SpectralField(grid, field_kind(f));
    s.du[f] = SpectralField(grid, field_kind(f));
  }
  return s;
}

void SystemState::validate() const {
  const GridSpec& g = grid();
  for (std::size_t f = 0; f < kNumFields; ++f) {
    for (const auto* field : {&u[f], &du[f]}) {
      if (!(field->grid() == g)) throw std::invalid_argument("state: fields on different grids");
      if (field->kind() != field_kind(f))
        throw std::invalid_argument(std::string("state: wrong reality flag on ") + field_name(f));
    }
  }
}

SystemState resample(const SystemState& s, const GridSpec& target) {
  SystemState out;
  out.t = s.t;
  for (std::size_t f = 0; f < kNumFields; ++f) {
    out.u[f] = resample(s.u[f], target);
    out.du[f] = resample(s.du[f], target);
  }
  return out;
}

double SystemState::scale() const {
  double m = 0.0;
  for (std::size_t f = 0; f < kNumFields; ++f)
    m = std::max({m, u[f].max_abs_coefficient(), du[f].max_abs_coefficient()});
  return m;
}

bool HalfWaveState::all_finite() const {
  for (const auto* set : {&plus, &minus})
    for (const auto& f : *set)
      for (const auto& c : f.coefficients())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

HalfWaveState to_halfwave(const SystemState& s) {
  HalfWaveState h;
  h.t = s.t;
  for (std::size_t f = 0; f < kNumFields; ++f) {
    // i^{-1} <nabla>^{-1} d_t u = -i <nabla>^{-1} d_t u
    SpectralField w = Complex(0.0, -1.0) * apply_bessel(s.du[f], -1.0);
    SpectralField u = s.u[f].as_kind(FieldKind::Complex);
    h.plus[f] = 0.5 * (u + w);
    h.minus[f] = 0.5 * (u - w);
  }
  return h;
}

SystemState from_halfwave(const HalfWaveState& h, double reality_tol) {
  SystemState s;
  s.t = h.t;
  for (std::size_t f = 0; f < kNumFields; ++f) {
    SpectralField u = h.plus[f] + h.minus[f];
    SpectralField du = Complex(0.0, 1.0) * apply_bessel(h.plus[f] - h.minus[f], 1.0);
    if (field_kind(f) == FieldKind::Real) {
      for (const auto* g : {&u, &du}) {
        const double defect = g->hermitian_defect();
        if (!(defect <= reality_tol))
          throw RealityViolation(std::string("from_halfwave: ") + field_name(f) +
                                 " lost reality (relative defect " + std::to_string(defect) + ")");
      }
      u = u.real_part();
      du = du.real_part();
    } else {
      u = u.as_kind(FieldKind::Complex);
      du = du.as_kind(FieldKind::Complex);
    }
    s.u[f] = std::move(u);
    s.du[f] = std::move(du);
  }
  return s;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Standard complex Gaussian (E|g|^2 = 1) for mode (k1, k2).
Complex mode_gaussian(std::uint64_t seed, int k1, int k2) {
  const std::uint64_t key =
      splitmix64(splitmix64(seed) ^ splitmix64((static_cast<std::uint64_t>(static_cast<std::uint32_t>(k1)) << 32) |
                                                static_cast<std::uint32_t>(k2)));
  std::mt19937_64 gen(key);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(gen);
  const double im = normal(gen);
  return {re, im};
}

}  // namespace

SpectralField random_hs_field(const GridSpec& grid, double s, double amplitude, std::uint64_t seed,
                              FieldKind kind) {
  SpectralField f(grid, kind);
  if (amplitude == 0.0) return f;
  if (!(amplitude > 0.0)) throw std::invalid_argument("random_hs_field: amplitude must be > 0");
  const auto table = wave_table(grid);
  const double decay = -(s + 1.0 + kRegularitySlack);
  const int n = grid.n;
  auto c = f.coefficients();
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const auto idx = static_cast<std::size_t>(i1) * n + i2;
      if (table->nyquist[idx]) continue;
      int k1 = wavenumber_of_index(i1, n);
      int k2 = wavenumber_of_index(i2, n);
      const double weight = amplitude * std::pow(table->bracket[idx], decay);
      if (kind == FieldKind::Complex) {
        c[idx] = weight * mode_gaussian(seed, k1, k2);
        continue;
      }
      // Real fields: draw on the half plane (k1 > 0, or k1 == 0 and k2 >= 0)
      // and mirror by conjugation.
      const bool canonical = k1 > 0 || (k1 == 0 && k2 >= 0);
      Complex g = canonical ? mode_gaussian(seed, k1, k2) : std::conj(mode_gaussian(seed, -k1, -k2));
      if (k1 == 0 && k2 == 0) g = Complex(std::sqrt(2.0) * g.real(), 0.0);
      c[idx] = weight * g;
    }
  }
  return f;
}

}  // namespace mcsh
