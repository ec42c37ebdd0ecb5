#include "movrec/loggabor.hpp"

#include <algorithm>
#include <cmath>

#include "movrec/error.hpp"
#include "movrec/fft.hpp"

namespace movrec {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_params(const LogGaborBankParams& p) {
  if (p.num_scales < 1 || p.num_orientations < 1 || p.min_wavelength < 2.0 ||
      p.scale_mult <= 1.0 || p.sigma_ratio <= 0.0 || p.sigma_ratio >= 1.0 ||
      p.d_theta_ratio <= 0.0) {
    throw Error(ErrorCode::InvalidParams, "log-gabor bank parameters out of range");
  }
}

// FFT bin index -> signed frequency in cycles/pixel.
inline double bin_freq(int index, int n) {
  const int signed_idx = index < (n + 1) / 2 ? index : index - n;
  return static_cast<double>(signed_idx) / n;
}

FrequencyFilter sample_filter(const LogGaborFilterSpec& spec, int width, int height) {
  FrequencyFilter filt;
  filt.width = width;
  filt.height = height;
  filt.spec = spec;
  filt.gains.resize(static_cast<std::size_t>(width) * height);
  for (int iy = 0; iy < height; ++iy) {
    const double v = bin_freq(iy, height);
    for (int ix = 0; ix < width; ++ix) {
      const double u = bin_freq(ix, width);
      const double f = std::sqrt(u * u + v * v);
      double g = 0.0;
      if (f > 0.0) {
        double theta = std::atan2(v, u);
        if (theta < 0.0) theta += kPi;       // fold modulo pi
        if (theta >= kPi) theta -= kPi;
        g = radial_gain(f, spec) * angular_gain(theta, spec);
      }
      filt.gains[static_cast<std::size_t>(iy) * width + ix] = g;
    }
  }
  filt.gains[0] = 0.0;  // DC null
  return filt;
}

LogGaborBank make_bank_shell(const LogGaborBankParams& params, int width, int height) {
  validate_params(params);
  if (width < 4 || height < 4) {
    throw Error(ErrorCode::InvalidParams, "bank needs at least 4x4 spectrum");
  }
  if (1.0 / params.min_wavelength > 0.5) {
    throw Error(ErrorCode::CenterFrequencyTooHigh, "f0 of first scale above Nyquist");
  }
  LogGaborBank bank;
  bank.params = params;
  bank.filters.resize(static_cast<std::size_t>(params.num_scales) * params.num_orientations);
  return bank;
}

LogGaborFilterSpec spec_for(const LogGaborBankParams& params, int scale, int orientation) {
  LogGaborFilterSpec spec;
  spec.f0 = 1.0 / (params.min_wavelength * std::pow(params.scale_mult, scale));
  spec.theta0 = orientation * kPi / params.num_orientations;
  spec.sigma_ratio = params.sigma_ratio;
  spec.sigma_theta = params.d_theta_ratio * kPi / params.num_orientations;
  return spec;
}

}  // namespace

double radial_gain(double f, const LogGaborFilterSpec& spec) {
  if (f <= 0.0) return 0.0;
  const double log_ratio = std::log(f / spec.f0);
  const double log_sigma = std::log(spec.sigma_ratio);
  return std::exp(-(log_ratio * log_ratio) / (2.0 * log_sigma * log_sigma));
}

double angular_gain(double theta, const LogGaborFilterSpec& spec) {
  double d = std::fmod(theta - spec.theta0, kPi);
  if (d >= kPi / 2.0) d -= kPi;
  if (d < -kPi / 2.0) d += kPi;
  return std::exp(-(d * d) / (2.0 * spec.sigma_theta * spec.sigma_theta));
}

LogGaborBank build_bank(const LogGaborBankParams& params, int width, int height) {
  LogGaborBank bank = make_bank_shell(params, width, height);
  const int count = static_cast<int>(bank.filters.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) {
    const int s = i / params.num_orientations;
    const int o = i % params.num_orientations;
    bank.filters[i] = sample_filter(spec_for(params, s, o), width, height);
  }
  return bank;
}

LogGaborBank build_bank_serial(const LogGaborBankParams& params, int width, int height) {
  LogGaborBank bank = make_bank_shell(params, width, height);
  const int count = static_cast<int>(bank.filters.size());
  for (int i = 0; i < count; ++i) {
    const int s = i / params.num_orientations;
    const int o = i % params.num_orientations;
    bank.filters[i] = sample_filter(spec_for(params, s, o), width, height);
  }
  return bank;
}

namespace {

std::vector<std::complex<double>> frame_spectrum(const GrayFrame& frame, const Fft2d& fft) {
  std::vector<std::complex<double>> spectrum(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) spectrum[i] = frame.pixels[i];
  fft.forward(spectrum.data(), spectrum.data());
  return spectrum;
}

void check_bank_dims(const GrayFrame& frame, const LogGaborBank& bank) {
  if (bank.filters.empty()) {
    throw Error(ErrorCode::EmptyResponseList, "bank has no filters");
  }
  if (frame.width != bank.filters.front().width ||
      frame.height != bank.filters.front().height) {
    throw Error(ErrorCode::DimensionMismatch, "frame size does not match filter bank");
  }
}

// One filter's magnitude response from the shared spectrum.
GrayFrame filter_response(const std::vector<std::complex<double>>& spectrum,
                          const FrequencyFilter& filt, const Fft2d& fft,
                          std::vector<std::complex<double>>& scratch) {
  const std::size_t n = spectrum.size();
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = spectrum[i] * filt.gains[i];
  fft.inverse(scratch.data(), scratch.data());
  GrayFrame out(filt.width, filt.height);
  for (std::size_t i = 0; i < n; ++i) out.pixels[i] = std::abs(scratch[i]);
  return out;
}

}  // namespace

std::vector<GrayFrame> apply_bank(const GrayFrame& frame, const LogGaborBank& bank) {
  check_bank_dims(frame, bank);
  const Fft2d fft(frame.width, frame.height);
  const auto spectrum = frame_spectrum(frame, fft);
  std::vector<GrayFrame> responses(bank.filters.size());
  const int count = static_cast<int>(bank.filters.size());
#pragma omp parallel
  {
    std::vector<std::complex<double>> scratch;
#pragma omp for schedule(static)
    for (int i = 0; i < count; ++i) {
      responses[i] = filter_response(spectrum, bank.filters[i], fft, scratch);
    }
  }
  return responses;
}

std::vector<GrayFrame> apply_bank_serial(const GrayFrame& frame, const LogGaborBank& bank) {
  check_bank_dims(frame, bank);
  const Fft2d fft(frame.width, frame.height);
  const auto spectrum = frame_spectrum(frame, fft);
  std::vector<GrayFrame> responses(bank.filters.size());
  std::vector<std::complex<double>> scratch;
  for (std::size_t i = 0; i < bank.filters.size(); ++i) {
    responses[i] = filter_response(spectrum, bank.filters[i], fft, scratch);
  }
  return responses;
}

std::vector<ComplexImage> apply_bank_complex(const GrayFrame& frame, const LogGaborBank& bank) {
  check_bank_dims(frame, bank);
  const Fft2d fft(frame.width, frame.height);
  const auto spectrum = frame_spectrum(frame, fft);
  std::vector<ComplexImage> responses(bank.filters.size());
  std::vector<std::complex<double>> scratch;
  for (std::size_t i = 0; i < bank.filters.size(); ++i) {
    const auto& filt = bank.filters[i];
    scratch.resize(spectrum.size());
    for (std::size_t j = 0; j < spectrum.size(); ++j) scratch[j] = spectrum[j] * filt.gains[j];
    fft.inverse(scratch.data(), scratch.data());
    responses[i] = ComplexImage{filt.width, filt.height, scratch};
  }
  return responses;
}

FeatureVector extract_features(const std::vector<GrayFrame>& responses, int pool) {
  if (responses.empty()) {
    throw Error(ErrorCode::EmptyResponseList, "no responses to pool");
  }
  if (pool < 1) {
    throw Error(ErrorCode::InvalidParams, "pool factor must be >= 1");
  }
  const int w = responses.front().width;
  const int h = responses.front().height;
  for (const auto& r : responses) {
    if (r.width != w || r.height != h) {
      throw Error(ErrorCode::DimensionMismatch, "responses differ in size");
    }
  }
  const int pooled_w = (w + pool - 1) / pool;
  const int pooled_h = (h + pool - 1) / pool;

  FeatureVector fv;
  fv.num_maps = static_cast<int>(responses.size());
  fv.pooled_w = pooled_w;
  fv.pooled_h = pooled_h;
  fv.values.reserve(responses.size() * pooled_w * pooled_h);

  const double block = static_cast<double>(pool) * pool;
  for (const auto& r : responses) {
    for (int by = 0; by < pooled_h; ++by) {
      for (int bx = 0; bx < pooled_w; ++bx) {
        double sum = 0.0;
        const int y_end = std::min((by + 1) * pool, h);
        const int x_end = std::min((bx + 1) * pool, w);
        for (int y = by * pool; y < y_end; ++y) {
          for (int x = bx * pool; x < x_end; ++x) sum += r.at(x, y);
        }
        fv.values.push_back(sum / block);  // ragged edges count missing pixels as zero
      }
    }
  }

  double norm_sq = 0.0;
  for (double v : fv.values) norm_sq += v * v;
  const double norm = std::sqrt(norm_sq);
  if (norm >= 1e-12) {
    for (double& v : fv.values) v /= norm;
  } else {
    std::fill(fv.values.begin(), fv.values.end(), 0.0);
  }
  return fv;
}

}  // namespace movrec
