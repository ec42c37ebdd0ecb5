#ifndef MOVREC_FFT_HPP_
#define MOVREC_FFT_HPP_

#include <complex>

namespace movrec {

// 2-D complex FFT pair backed by FFTW. A constructed plan is immutable;
// forward/inverse may be called concurrently from multiple threads on
// distinct buffers. Plan creation itself is serialized internally (the
// FFTW planner is not thread-safe).
class Fft2d {
 public:
  Fft2d(int width, int height);
  ~Fft2d();

  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  int width() const { return width_; }
  int height() const { return height_; }

  void forward(const std::complex<double>* in, std::complex<double>* out) const;
  // Normalized by 1/(width*height) so that inverse(forward(x)) == x.
  void inverse(const std::complex<double>* in, std::complex<double>* out) const;

 private:
  int width_;
  int height_;
  void* plan_fwd_;
  void* plan_inv_;
};

}  // namespace movrec

#endif  // MOVREC_FFT_HPP_
