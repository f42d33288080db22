#pragma once

// Periodic-grid Fourier infrastructure on the torus [0, L)^2.
//
// Coefficients c(k) are stored for integer wave vectors k in [-n/2, n/2)^2 in
// FFT order (index i holds k = i for i < n/2 and k = i - n otherwise), with
// the normalization
//
//     f(x) = sum_k c(k) exp(i (2 pi / L) k . x),
//
// so that the grid mean of |f|^2 equals sum_k |c(k)|^2 exactly. The row
// k = -n/2 (either component) is kept at zero by every operator here.

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace mcsh {

using Complex = std::complex<double>;

struct GridSpec {
  int n = 128;
  double length = 2.0 * std::numbers::pi;
  int dealias_factor = 2;

  /// Throws std::invalid_argument unless n >= 8 is a power of two, length > 0
  /// and dealias_factor >= 1.
  void validate() const;

  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(n) * n; }
  [[nodiscard]] int padded_n() const { return n * dealias_factor; }
  [[nodiscard]] double wavenumber_unit() const { return 2.0 * std::numbers::pi / length; }
  [[nodiscard]] double area() const { return length * length; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Integer wave number held by FFT-ordered index i on an n-point axis.
constexpr int wavenumber_of_index(int i, int n) { return i < n / 2 ? i : i - n; }
/// Inverse of wavenumber_of_index for k in [-n/2, n/2).
constexpr int index_of_wavenumber(int k, int n) { return k >= 0 ? k : k + n; }

/// Per-mode wave-vector data for one grid, shared between fields.
struct WaveVectorTable {
  std::vector<double> k1, k2;   // physical wave-vector components
  std::vector<double> abs_k;    // |k|
  std::vector<double> bracket;  // <k> = (1 + |k|^2)^{1/2}
  std::vector<bool> nyquist;    // true on the k = -n/2 row/column
};

/// Cached table for `grid`; safe to call from several threads.
std::shared_ptr<const WaveVectorTable> wave_table(const GridSpec& grid);

enum class FieldKind { Real, Complex };

class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const GridSpec& grid, FieldKind kind);

  static SpectralField from_coefficients(const GridSpec& grid, std::vector<Complex> coeffs,
                                         FieldKind kind);
  /// Grid values in row-major order (x1 index major). Real fields drop the
  /// imaginary part of `values`.
  static SpectralField from_physical(const GridSpec& grid, std::span<const Complex> values,
                                     FieldKind kind);
  static SpectralField from_physical(const GridSpec& grid, std::span<const double> values);
  /// Single Fourier mode amp * exp(i k.x); kind Real adds the conjugate
  /// partner so the field is amp e^{ikx} + conj(amp) e^{-ikx} (k != 0).
  static SpectralField plane_wave(const GridSpec& grid, int k1, int k2, Complex amp,
                                  FieldKind kind = FieldKind::Complex);
  /// Samples `f` on the grid and transforms.
  static SpectralField sample(const GridSpec& grid, FieldKind kind,
                              const std::function<Complex(double, double)>& f);

  [[nodiscard]] const GridSpec& grid() const { return grid_; }
  [[nodiscard]] FieldKind kind() const { return kind_; }
  [[nodiscard]] bool is_real() const { return kind_ == FieldKind::Real; }
  [[nodiscard]] bool empty() const { return coeffs_.empty(); }

  [[nodiscard]] std::span<const Complex> coefficients() const { return coeffs_; }
  [[nodiscard]] std::span<Complex> coefficients() { return coeffs_; }
  [[nodiscard]] Complex coefficient(int k1, int k2) const;
  void set_coefficient(int k1, int k2, Complex c);

  [[nodiscard]] std::vector<Complex> to_physical() const;
  [[nodiscard]] std::vector<double> to_physical_real() const;

  /// Same coefficients with a different reality flag.
  [[nodiscard]] SpectralField as_kind(FieldKind kind) const;
  /// Largest |c(k) - conj(c(-k))| relative to the largest |c|; 0 for the zero field.
  [[nodiscard]] double hermitian_defect() const;
  /// Projects onto Hermitian-symmetric coefficients and marks the field real.
  [[nodiscard]] SpectralField real_part() const;
  [[nodiscard]] SpectralField conj() const;

  void zero_nyquist();
  [[nodiscard]] double max_abs_coefficient() const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(Complex a);
  SpectralField& operator*=(double a);
  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(Complex a, SpectralField b) { return b *= a; }
  friend SpectralField operator*(double a, SpectralField b) { return b *= a; }
  friend SpectralField operator-(SpectralField a) { return a *= -1.0; }

  friend bool operator==(const SpectralField&, const SpectralField&) = default;

 private:
  void check_same_grid(const SpectralField& o) const;

  GridSpec grid_{};
  FieldKind kind_ = FieldKind::Complex;
  std::vector<Complex> coeffs_;
};

/// Multiplies each coefficient by symbol(k1, k2, |k|, <k>) in physical
/// wave-vector units. `keeps_reality` states whether the symbol maps real
/// fields to real fields.
SpectralField apply_symbol(const SpectralField& f,
                           const std::function<Complex(double, double, double, double)>& symbol,
                           bool keeps_reality);

/// <nabla>^alpha.
SpectralField apply_bessel(const SpectralField& f, double alpha);
/// Modified Riesz transform R_j = <nabla>^{-1} d_j, axis in {1, 2}.
SpectralField riesz(const SpectralField& f, int axis);
/// d_j, axis in {1, 2}.
SpectralField derivative(const SpectralField& f, int axis);
SpectralField laplacian(const SpectralField& f);
/// Solves Delta u = f on zero-mean functions (zero mode of u set to 0). Throws
/// std::domain_error when the mean of f is not negligible (> tol * max|c|).
SpectralField inverse_laplacian(const SpectralField& f, double tol = 1e-12);

/// Pointwise product of 2 or 3 fields, evaluated on the dealias-padded grid
/// and truncated back to the retained modes.
SpectralField dealiased_product(std::span<const SpectralField* const> factors);
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b,
                                const SpectralField& c);

/// Same coefficients on another grid of equal length: common wave vectors are
/// copied, the rest are zero (spectral interpolation or truncation).
SpectralField resample(const SpectralField& f, const GridSpec& target);

/// Values of `f` on the padded grid (padded_n points per axis).
std::vector<Complex> to_padded_physical(const SpectralField& f);
/// Transforms padded-grid values and keeps the retained modes.
SpectralField from_padded_physical(const GridSpec& grid, std::span<const Complex> values,
                                   FieldKind kind);

/// (sum_k <k>^{2s} |c(k)|^2)^{1/2}: grid-normalized, independent of L.
double sobolev_norm(const SpectralField& f, double s);
/// (integral over the torus of |f|^2)^{1/2} = L * sobolev_norm(f, 0).
double l2_norm(const SpectralField& f);
/// Mean value over the torus (the k = 0 coefficient).
Complex mean(const SpectralField& f);

}  // namespace mcsh
