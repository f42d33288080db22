#pragma once

#include <complex>
#include <span>

namespace mcsh::detail {

// Unnormalized 2D transforms of an n x n row-major array, in place.
// forward: sum_x f(x) e^{-ikx}; backward: sum_k c(k) e^{+ikx}.
void fft_forward(std::span<std::complex<double>> data, int n);
void fft_backward(std::span<std::complex<double>> data, int n);

}  // namespace mcsh::detail
