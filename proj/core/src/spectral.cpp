#include "mcsh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "fft.hpp"

namespace mcsh {

void GridSpec::validate() const {
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid: n must be a power of two >= 8, got " + std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("grid: length must be positive");
  if (dealias_factor < 1) throw std::invalid_argument("grid: dealias_factor must be >= 1");
}

std::shared_ptr<const WaveVectorTable> wave_table(const GridSpec& grid) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, std::shared_ptr<const WaveVectorTable>> tables;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(grid.n, grid.length);
  if (auto it = tables.find(key); it != tables.end()) return it->second;

  auto table = std::make_shared<WaveVectorTable>();
  const int n = grid.n;
  const double unit = grid.wavenumber_unit();
  table->k1.resize(grid.size());
  table->k2.resize(grid.size());
  table->abs_k.resize(grid.size());
  table->bracket.resize(grid.size());
  table->nyquist.resize(grid.size());
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const auto idx = static_cast<std::size_t>(i1) * n + i2;
      const int m1 = wavenumber_of_index(i1, n);
      const int m2 = wavenumber_of_index(i2, n);
      const double k1 = unit * m1;
      const double k2 = unit * m2;
      table->k1[idx] = k1;
      table->k2[idx] = k2;
      table->abs_k[idx] = std::hypot(k1, k2);
      table->bracket[idx] = std::sqrt(1.0 + k1 * k1 + k2 * k2);
      table->nyquist[idx] = (m1 == -n / 2) || (m2 == -n / 2);
    }
  }
  tables.emplace(key, table);
  return table;
}

// --- SpectralField ---------------------------------------------------------

SpectralField::SpectralField(const GridSpec& grid, FieldKind kind)
    : grid_(grid), kind_(kind), coeffs_(grid.size()) {
  grid_.validate();
}

SpectralField SpectralField::from_coefficients(const GridSpec& grid, std::vector<Complex> coeffs,
                                               FieldKind kind) {
  SpectralField f(grid, kind);
  if (coeffs.size() != grid.size())
    throw std::invalid_argument("from_coefficients: expected n*n coefficients");
  f.coeffs_ = std::move(coeffs);
  f.zero_nyquist();
  return f;
}

SpectralField SpectralField::from_physical(const GridSpec& grid, std::span<const Complex> values,
                                           FieldKind kind) {
  SpectralField f(grid, kind);
  if (values.size() != grid.size())
    throw std::invalid_argument("from_physical: expected n*n grid values");
  std::copy(values.begin(), values.end(), f.coeffs_.begin());
  if (kind == FieldKind::Real)
    for (auto& v : f.coeffs_) v = Complex(v.real(), 0.0);
  detail::fft_forward(f.coeffs_, grid.n);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : f.coeffs_) c *= scale;
  f.zero_nyquist();
  return f;
}

SpectralField SpectralField::from_physical(const GridSpec& grid, std::span<const double> values) {
  std::vector<Complex> cv(values.begin(), values.end());
  return from_physical(grid, cv, FieldKind::Real);
}

SpectralField SpectralField::plane_wave(const GridSpec& grid, int k1, int k2, Complex amp,
                                        FieldKind kind) {
  SpectralField f(grid, kind);
  const int n = grid.n;
  if (k1 <= -n / 2 || k1 >= n / 2 || k2 <= -n / 2 || k2 >= n / 2)
    throw std::invalid_argument("plane_wave: wave vector outside retained modes");
  f.set_coefficient(k1, k2, amp);
  if (kind == FieldKind::Real) {
    if (k1 == 0 && k2 == 0) {
      f.set_coefficient(0, 0, Complex(amp.real(), 0.0));
    } else {
      f.set_coefficient(-k1, -k2, std::conj(amp));
    }
  }
  return f;
}

SpectralField SpectralField::sample(const GridSpec& grid, FieldKind kind,
                                    const std::function<Complex(double, double)>& fn) {
  const int n = grid.n;
  const double h = grid.length / n;
  std::vector<Complex> values(grid.size());
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      values[static_cast<std::size_t>(i1) * n + i2] = fn(h * i1, h * i2);
  return from_physical(grid, values, kind);
}

Complex SpectralField::coefficient(int k1, int k2) const {
  const int n = grid_.n;
  return coeffs_[static_cast<std::size_t>(index_of_wavenumber(k1, n)) * n +
                 index_of_wavenumber(k2, n)];
}

void SpectralField::set_coefficient(int k1, int k2, Complex c) {
  const int n = grid_.n;
  coeffs_[static_cast<std::size_t>(index_of_wavenumber(k1, n)) * n + index_of_wavenumber(k2, n)] =
      c;
}

std::vector<Complex> SpectralField::to_physical() const {
  std::vector<Complex> values = coeffs_;
  detail::fft_backward(values, grid_.n);
  if (is_real())
    for (auto& v : values) v = Complex(v.real(), 0.0);
  return values;
}

std::vector<double> SpectralField::to_physical_real() const {
  std::vector<Complex> values = coeffs_;
  detail::fft_backward(values, grid_.n);
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](Complex v) { return v.real(); });
  return out;
}

SpectralField SpectralField::as_kind(FieldKind kind) const {
  SpectralField f = *this;
  f.kind_ = kind;
  return f;
}

double SpectralField::hermitian_defect() const {
  const int n = grid_.n;
  double defect = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const int j1 = (n - i1) % n;
      const int j2 = (n - i2) % n;
      const Complex a = coeffs_[static_cast<std::size_t>(i1) * n + i2];
      const Complex b = coeffs_[static_cast<std::size_t>(j1) * n + j2];
      defect = std::max(defect, std::abs(a - std::conj(b)));
    }
  }
  const double scale = max_abs_coefficient();
  return scale > 0.0 ? defect / scale : 0.0;
}

SpectralField SpectralField::real_part() const {
  const int n = grid_.n;
  SpectralField f(grid_, FieldKind::Real);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const int j1 = (n - i1) % n;
      const int j2 = (n - i2) % n;
      const Complex a = coeffs_[static_cast<std::size_t>(i1) * n + i2];
      const Complex b = coeffs_[static_cast<std::size_t>(j1) * n + j2];
      f.coeffs_[static_cast<std::size_t>(i1) * n + i2] = 0.5 * (a + std::conj(b));
    }
  }
  f.zero_nyquist();
  return f;
}

SpectralField SpectralField::conj() const {
  // conj(f)(x) = sum conj(c(k)) e^{-ikx}, so c'(k) = conj(c(-k)).
  const int n = grid_.n;
  SpectralField f(grid_, kind_);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      f.coeffs_[static_cast<std::size_t>(i1) * n + i2] =
          std::conj(coeffs_[static_cast<std::size_t>((n - i1) % n) * n + (n - i2) % n]);
  f.zero_nyquist();
  return f;
}

void SpectralField::zero_nyquist() {
  const int n = grid_.n;
  const int h = n / 2;
  for (int i = 0; i < n; ++i) {
    coeffs_[static_cast<std::size_t>(h) * n + i] = 0.0;
    coeffs_[static_cast<std::size_t>(i) * n + h] = 0.0;
  }
}

double SpectralField::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void SpectralField::check_same_grid(const SpectralField& o) const {
  if (!(grid_ == o.grid_)) throw std::invalid_argument("spectral field: mismatched grids");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  check_same_grid(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  if (!o.is_real()) kind_ = FieldKind::Complex;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  check_same_grid(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  if (!o.is_real()) kind_ = FieldKind::Complex;
  return *this;
}

SpectralField& SpectralField::operator*=(Complex a) {
  for (auto& c : coeffs_) c *= a;
  if (a.imag() != 0.0) kind_ = FieldKind::Complex;
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& c : coeffs_) c *= a;
  return *this;
}

// --- multipliers -------------------------------------------------------------

SpectralField apply_symbol(const SpectralField& f,
                           const std::function<Complex(double, double, double, double)>& symbol,
                           bool keeps_reality) {
  const auto table = wave_table(f.grid());
  SpectralField out = f.as_kind(keeps_reality ? f.kind() : FieldKind::Complex);
  auto c = out.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] *= symbol(table->k1[i], table->k2[i], table->abs_k[i], table->bracket[i]);
  out.zero_nyquist();
  return out;
}

namespace {

void check_axis(int axis) {
  if (axis != 1 && axis != 2)
    throw std::invalid_argument("axis index must be 1 or 2, got " + std::to_string(axis));
}

// Tight loop variant of apply_symbol for the hot multipliers.
template <class Symbol>
SpectralField multiply(const SpectralField& f, Symbol&& symbol) {
  const auto table = wave_table(f.grid());
  SpectralField out = f;
  auto c = out.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= symbol(*table, i);
  out.zero_nyquist();
  return out;
}

}  // namespace

SpectralField apply_bessel(const SpectralField& f, double alpha) {
  if (alpha == 0.0) return f;
  if (alpha == 1.0) return multiply(f, [](const WaveVectorTable& t, std::size_t i) { return t.bracket[i]; });
  if (alpha == -1.0)
    return multiply(f, [](const WaveVectorTable& t, std::size_t i) { return 1.0 / t.bracket[i]; });
  return multiply(
      f, [alpha](const WaveVectorTable& t, std::size_t i) { return std::pow(t.bracket[i], alpha); });
}

SpectralField riesz(const SpectralField& f, int axis) {
  check_axis(axis);
  const auto& comp = axis == 1 ? &WaveVectorTable::k1 : &WaveVectorTable::k2;
  return multiply(f, [comp](const WaveVectorTable& t, std::size_t i) {
    return Complex(0.0, (t.*comp)[i] / t.bracket[i]);
  });
}

SpectralField derivative(const SpectralField& f, int axis) {
  check_axis(axis);
  const auto& comp = axis == 1 ? &WaveVectorTable::k1 : &WaveVectorTable::k2;
  return multiply(f, [comp](const WaveVectorTable& t, std::size_t i) {
    return Complex(0.0, (t.*comp)[i]);
  });
}

SpectralField laplacian(const SpectralField& f) {
  return multiply(f, [](const WaveVectorTable& t, std::size_t i) {
    return -(t.abs_k[i] * t.abs_k[i]);
  });
}

SpectralField inverse_laplacian(const SpectralField& f, double tol) {
  const double scale = f.max_abs_coefficient();
  if (std::abs(f.coefficient(0, 0)) > tol * std::max(scale, 1e-300) && scale > 0.0)
    throw std::domain_error("inverse_laplacian: right-hand side has nonzero mean");
  return multiply(f, [](const WaveVectorTable& t, std::size_t i) {
    const double k2 = t.abs_k[i] * t.abs_k[i];
    return k2 > 0.0 ? -1.0 / k2 : 0.0;
  });
}

// --- padded grid ---------------------------------------------------------------

std::vector<Complex> to_padded_physical(const SpectralField& f) {
  const GridSpec& g = f.grid();
  const int n = g.n;
  const int m = g.padded_n();
  std::vector<Complex> buf(static_cast<std::size_t>(m) * m);
  const auto c = f.coefficients();
  for (int i1 = 0; i1 < n; ++i1) {
    const int p1 = index_of_wavenumber(wavenumber_of_index(i1, n), m);
    for (int i2 = 0; i2 < n; ++i2) {
      const int p2 = index_of_wavenumber(wavenumber_of_index(i2, n), m);
      buf[static_cast<std::size_t>(p1) * m + p2] = c[static_cast<std::size_t>(i1) * n + i2];
    }
  }
  detail::fft_backward(buf, m);
  if (f.is_real())
    for (auto& v : buf) v = Complex(v.real(), 0.0);
  return buf;
}

SpectralField from_padded_physical(const GridSpec& grid, std::span<const Complex> values,
                                   FieldKind kind) {
  const int n = grid.n;
  const int m = grid.padded_n();
  if (values.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("from_padded_physical: expected padded_n^2 values");
  std::vector<Complex> buf(values.begin(), values.end());
  if (kind == FieldKind::Real)
    for (auto& v : buf) v = Complex(v.real(), 0.0);
  detail::fft_forward(buf, m);
  SpectralField out(grid, kind);
  auto c = out.coefficients();
  const double scale = 1.0 / (static_cast<double>(m) * m);
  for (int i1 = 0; i1 < n; ++i1) {
    const int p1 = index_of_wavenumber(wavenumber_of_index(i1, n), m);
    for (int i2 = 0; i2 < n; ++i2) {
      const int p2 = index_of_wavenumber(wavenumber_of_index(i2, n), m);
      c[static_cast<std::size_t>(i1) * n + i2] = scale * buf[static_cast<std::size_t>(p1) * m + p2];
    }
  }
  out.zero_nyquist();
  return out;
}

SpectralField dealiased_product(std::span<const SpectralField* const> factors) {
  if (factors.size() < 2 || factors.size() > 3)
    throw std::invalid_argument("dealiased_product: expects 2 or 3 factors");
  const GridSpec& grid = factors.front()->grid();
  bool all_real = true;
  for (const auto* f : factors) {
    if (!(f->grid() == grid)) throw std::invalid_argument("dealiased_product: mismatched grids");
    all_real = all_real && f->is_real();
  }
  std::vector<Complex> acc = to_padded_physical(*factors[0]);
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const auto vals = to_padded_physical(*factors[j]);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] *= vals[i];
  }
  return from_padded_physical(grid, acc, all_real ? FieldKind::Real : FieldKind::Complex);
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b) {
  const SpectralField* fs[] = {&a, &b};
  return dealiased_product(fs);
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b,
                                const SpectralField& c) {
  const SpectralField* fs[] = {&a, &b, &c};
  return dealiased_product(fs);
}

// --- norms ------------------------------------------------------------------------

double sobolev_norm(const SpectralField& f, double s) {
  const auto table = wave_table(f.grid());
  const auto c = f.coefficients();
  double sum = 0.0;
  if (s == 0.0) {
    for (const auto& v : c) sum += std::norm(v);
  } else {
    for (std::size_t i = 0; i < c.size(); ++i)
      sum += std::pow(table->bracket[i], 2.0 * s) * std::norm(c[i]);
  }
  return std::sqrt(sum);
}

double l2_norm(const SpectralField& f) { return f.grid().length * sobolev_norm(f, 0.0); }

Complex mean(const SpectralField& f) { return f.coefficient(0, 0); }

SpectralField resample(const SpectralField& f, const GridSpec& target) {
  target.validate();
  if (target.length != f.grid().length) throw std::invalid_argument("resample: grid lengths differ");
  SpectralField out(target, f.kind());
  const int n = f.grid().n, m = target.n;
  const int kmax = std::min(n, m) / 2;
  for (int k1 = -kmax + 1; k1 < kmax; ++k1)
    for (int k2 = -kmax + 1; k2 < kmax; ++k2) out.set_coefficient(k1, k2, f.coefficient(k1, k2));
  return out;
}

}  // namespace mcsh
