#ifndef MOVREC_LOGGABOR_HPP_
#define MOVREC_LOGGABOR_HPP_

#include <complex>
#include <vector>

#include "movrec/image.hpp"

namespace movrec {

struct LogGaborFilterSpec {
  double f0 = 0.25;         // center frequency, cycles/pixel, (0, 0.5]
  double theta0 = 0.0;      // orientation, radians in [0, pi)
  double sigma_ratio = 0.55;  // sigma_f / f0, in (0, 1)
  double sigma_theta = 0.6;   // angular std-dev, radians, > 0
};

// Radial transfer term: Gaussian on a log frequency axis, zero at DC,
// unity at f0.
double radial_gain(double f, const LogGaborFilterSpec& spec);

// Angular Gaussian term; differences wrap modulo pi (orientations of real
// images are pi-periodic), folded into [-pi/2, pi/2].
double angular_gain(double theta, const LogGaborFilterSpec& spec);

struct FrequencyFilter {
  int width = 0;
  int height = 0;
  std::vector<double> gains;  // row-major in FFT index order, DC at (0,0)
  LogGaborFilterSpec spec;
};

struct LogGaborBankParams {
  int num_scales = 4;
  int num_orientations = 6;
  double min_wavelength = 3.0;   // pixels, >= 2
  double scale_mult = 2.1;       // wavelength ratio between scales, > 1
  double sigma_ratio = 0.55;
  double d_theta_ratio = 1.2;    // sigma_theta = d_theta_ratio * pi / num_orientations

  bool operator==(const LogGaborBankParams&) const = default;
};

struct LogGaborBank {
  std::vector<FrequencyFilter> filters;  // scale-major: s*O + o
  LogGaborBankParams params;
};

// Samples every filter on the FFT frequency grid of the given size.
// Scale s has f0 = 1/(min_wavelength * scale_mult^s); orientation o has
// theta0 = o*pi/O. The DC bin is forced to zero.
LogGaborBank build_bank(const LogGaborBankParams& params, int width, int height);
LogGaborBank build_bank_serial(const LogGaborBankParams& params, int width, int height);

struct ComplexImage {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> values;
};

// Per filter: |IFFT(FFT(frame) .* gains)|, same size as the frame, in bank
// order. The parallel and serial variants produce bit-identical output.
std::vector<GrayFrame> apply_bank(const GrayFrame& frame, const LogGaborBank& bank);
std::vector<GrayFrame> apply_bank_serial(const GrayFrame& frame, const LogGaborBank& bank);

// Complex responses before the magnitude step; linear in the input frame.
std::vector<ComplexImage> apply_bank_complex(const GrayFrame& frame, const LogGaborBank& bank);

struct FeatureVector {
  std::vector<double> values;  // maps concatenated in bank order
  int num_maps = 0;
  int pooled_h = 0;
  int pooled_w = 0;
};

// Average-pools each response over pool x pool blocks (zero-padding ragged
// edges), concatenates the pooled maps, then scales the result to unit
// Euclidean norm. Vectors with norm below 1e-12 stay all-zero.
FeatureVector extract_features(const std::vector<GrayFrame>& responses, int pool);

}  // namespace movrec

#endif  // MOVREC_LOGGABOR_HPP_
