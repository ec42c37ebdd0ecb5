#include "movrec/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <vector>

#include "movrec/error.hpp"

namespace movrec {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft2d::Fft2d(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::DimensionZero, "FFT size must be positive");
  }
  // Plan against a scratch buffer with FFTW_UNALIGNED so the plan can later
  // execute on any caller array via fftw_execute_dft.
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(width) * height);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_fwd_ = fftw_plan_dft_2d(height, width, buf, buf, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_inv_ = fftw_plan_dft_2d(height, width, buf, buf, FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft2d::~Fft2d() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft2d::forward(const std::complex<double>* in, std::complex<double>* out) const {
  if (in != out) std::memcpy(out, in, sizeof(std::complex<double>) * width_ * height_);
  auto* buf = reinterpret_cast<fftw_complex*>(out);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), buf, buf);
}

void Fft2d::inverse(const std::complex<double>* in, std::complex<double>* out) const {
  if (in != out) std::memcpy(out, in, sizeof(std::complex<double>) * width_ * height_);
  auto* buf = reinterpret_cast<fftw_complex*>(out);
  fftw_execute_dft(static_cast<fftw_plan>(plan_inv_), buf, buf);
  const double norm = 1.0 / (static_cast<double>(width_) * height_);
  const std::size_t n = static_cast<std::size_t>(width_) * height_;
  for (std::size_t i = 0; i < n; ++i) out[i] *= norm;
}

}  // namespace movrec
