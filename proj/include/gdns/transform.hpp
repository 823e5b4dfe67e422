#pragma once

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "gdns/field.hpp"
#include "gdns/grid.hpp"

namespace gdns {
namespace detail {

/// Cached in-place c2c plan pair per grid size.
///
/// FFTW_ESTIMATE keeps plan selection independent of runtime measurements;
/// repeated runs of the same binary therefore produce bit-identical results,
/// which the determinism contract requires. Execution is serialized on an
/// internal buffer; callers copy in and out.
class FftPlans {
 public:
  static FftPlans& for_size(int n) {
    static std::mutex registry_mu;
    static std::map<int, std::unique_ptr<FftPlans>> registry;
    std::lock_guard lock(registry_mu);
    auto& slot = registry[n];
    if (!slot) slot.reset(new FftPlans(n));
    return *slot;
  }

  void forward(Complex* data) { execute(fwd_, data); }
  void backward(Complex* data) { execute(bwd_, data); }

  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

 private:
  explicit FftPlans(int n) : count_(static_cast<std::size_t>(n) * n * n) {
    buf_ = static_cast<fftw_complex*>(
        fftw_malloc(sizeof(fftw_complex) * count_));
    fwd_ = fftw_plan_dft_3d(n, n, n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_3d(n, n, n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  void execute(fftw_plan plan, Complex* data) {
    std::lock_guard lock(mu_);
    std::memcpy(buf_, data, sizeof(Complex) * count_);
    fftw_execute(plan);
    std::memcpy(data, buf_, sizeof(Complex) * count_);
  }

  std::size_t count_;
  fftw_complex* buf_;
  fftw_plan fwd_, bwd_;
  std::mutex mu_;
};

/// Unnormalized DFT sum in place (exp(-i k.x) kernel).
inline void dft_forward_raw(int n, Complex* data) {
  FftPlans::for_size(n).forward(data);
}

/// Unnormalized inverse sum in place (exp(+i k.x) kernel, no 1/n^3).
inline void dft_backward_raw(int n, Complex* data) {
  FftPlans::for_size(n).backward(data);
}

}  // namespace detail

/// Samples (row-major over the collocation lattice x = (i,j,l)*L/n) to
/// Fourier-series coefficients. The forward transform divides by n^3 so the
/// mean mode equals the spatial average.
inline SpectralScalar transform_forward(const Grid& g,
                                        std::span<const double> samples) {
  if (samples.size() != g.size())
    throw std::invalid_argument("transform_forward: sample count does not match grid");
  std::vector<Complex> buf(samples.begin(), samples.end());
  detail::dft_forward_raw(g.n(), buf.data());
  const double scale = 1.0 / static_cast<double>(g.size());
  for (Complex& z : buf) z *= scale;
  return SpectralScalar(g, std::move(buf));
}

/// Complex-valued inverse transform (sum of c(k) exp(i k.x), no scaling).
inline std::vector<Complex> transform_inverse_complex(const SpectralScalar& f) {
  std::vector<Complex> buf = f.coeffs();
  detail::dft_backward_raw(f.grid().n(), buf.data());
  return buf;
}

/// Physical samples of a real field: real part of the complex inverse.
inline std::vector<double> transform_inverse(const SpectralScalar& f) {
  std::vector<Complex> buf = transform_inverse_complex(f);
  std::vector<double> out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return out;
}

/// Largest imaginary part left over by the inverse transform, a measure of
/// how far the coefficients are from representing a real field.
inline double inverse_imag_residual(const SpectralScalar& f) {
  double worst = 0.0;
  for (const Complex& z : transform_inverse_complex(f)) {
    worst = std::max(worst, std::abs(z.imag()));
  }
  return worst;
}

inline std::array<std::vector<double>, 3> transform_inverse(
    const SpectralVector& u) {
  return {transform_inverse(u[0]), transform_inverse(u[1]),
          transform_inverse(u[2])};
}

/// Largest |u(x)| over the collocation grid, all components.
inline double max_velocity(const SpectralVector& u) {
  const auto phys = transform_inverse(u);
  double m = 0.0;
  for (int c = 0; c < 3; ++c)
    for (double v : phys[c]) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace gdns
