#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mcsh::detail {
namespace {

// Plans are made once per (n, direction) on scratch storage and executed on
// caller arrays through the new-array interface, which is thread-safe.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n) * n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw: plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run(std::span<std::complex<double>> data, int n, int sign) {
  if (data.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("fft: array size does not match n*n");
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(cache().get(n, sign), buf, buf);
}

}  // namespace

void fft_forward(std::span<std::complex<double>> data, int n) { run(data, n, FFTW_FORWARD); }
void fft_backward(std::span<std::complex<double>> data, int n) { run(data, n, FFTW_BACKWARD); }

}  // namespace mcsh::detail
