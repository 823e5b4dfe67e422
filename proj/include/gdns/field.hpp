#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gdns/grid.hpp"

namespace gdns {

using Complex = std::complex<double>;

/// Fourier-coefficient representation of a real scalar field on the torus.
///
/// Coefficients are Fourier-series coefficients: f(x) = sum_k c(k) exp(i k.x),
/// so the k = 0 entry is the spatial mean. A field that represents a real
/// quantity satisfies c(-k) = conj(c(k)) for every paired mode; the unpaired
/// -n/2 rows are zeroed on construction since they have no partner.
class SpectralScalar {
 public:
  SpectralScalar() = default;

  explicit SpectralScalar(const Grid& g) : grid_(g), c_(g.size()) {}

  SpectralScalar(const Grid& g, std::vector<Complex> coeffs)
      : grid_(g), c_(std::move(coeffs)) {
    if (c_.size() != grid_.size())
      throw std::invalid_argument(
          "SpectralScalar: coefficient count does not match grid");
    zero_nyquist_rows();
  }

  const Grid& grid() const { return grid_; }
  const std::vector<Complex>& coeffs() const { return c_; }
  std::vector<Complex>& coeffs() { return c_; }

  Complex at(int i, int j, int l) const { return c_[grid_.index(i, j, l)]; }

  /// Storage offset of the signed mode (m1, m2, m3).
  std::size_t mode(int m1, int m2, int m3) const {
    const int n = grid_.n();
    auto wrap = [n](int m) {
      if (m < -n / 2 || m > n / 2 - 1)
        throw std::out_of_range("SpectralScalar: mode index outside lattice");
      return m >= 0 ? m : m + n;
    };
    return grid_.index(wrap(m1), wrap(m2), wrap(m3));
  }

  Complex mode_value(int m1, int m2, int m3) const { return c_[mode(m1, m2, m3)]; }

  /// Sets c(k) = v and c(-k) = conj(v), the usual way tests and initial
  /// conditions populate real fields. For k = 0 the value must be real.
  void set_pair(int m1, int m2, int m3, Complex v) {
    c_[mode(m1, m2, m3)] = v;
    c_[mode(-m1, -m2, -m3)] = std::conj(v);
  }

  void zero_nyquist_rows() {
    const int n = grid_.n();
    if (n == 0) return;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          if (grid_.is_nyquist_row(i) || grid_.is_nyquist_row(j) ||
              grid_.is_nyquist_row(l))
            c_[grid_.index(i, j, l)] = Complex(0.0, 0.0);
  }

 private:
  Grid grid_;
  std::vector<Complex> c_;
};

/// Worst deviation from Hermitian symmetry, max_k |c(k) - conj(c(-k))|.
/// Nyquist rows are excluded (they are zeroed by construction).
inline double hermitian_asymmetry(const SpectralScalar& f) {
  const Grid& g = f.grid();
  const int n = g.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        if (g.is_nyquist_row(i) || g.is_nyquist_row(j) || g.is_nyquist_row(l))
          continue;
        const int mi = (n - i) % n, mj = (n - j) % n, ml = (n - l) % n;
        const Complex d =
            f.coeffs()[g.index(i, j, l)] -
            std::conj(f.coeffs()[g.index(mi, mj, ml)]);
        worst = std::max(worst, std::abs(d));
      }
  return worst;
}

/// Three spectral scalars sharing one grid, plus a divergence-free tag.
class SpectralVector {
 public:
  SpectralVector() = default;

  explicit SpectralVector(const Grid& g)
      : comp_{SpectralScalar(g), SpectralScalar(g), SpectralScalar(g)} {}

  SpectralVector(SpectralScalar u1, SpectralScalar u2, SpectralScalar u3)
      : comp_{std::move(u1), std::move(u2), std::move(u3)} {
    if (comp_[0].grid() != comp_[1].grid() || comp_[0].grid() != comp_[2].grid())
      throw std::invalid_argument("SpectralVector: components on different grids");
  }

  const Grid& grid() const { return comp_[0].grid(); }

  SpectralScalar& operator[](int i) { return comp_[i]; }
  const SpectralScalar& operator[](int i) const { return comp_[i]; }

  bool divergence_free() const { return divergence_free_; }
  void set_divergence_free(bool b) { divergence_free_ = b; }

 private:
  std::array<SpectralScalar, 3> comp_{};
  bool divergence_free_ = false;
};

/// max_k |k . u(k)|, the spectral divergence residual.
inline double max_divergence(const SpectralVector& u) {
  const Grid& g = u.grid();
  const int n = g.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = g.index(i, j, l);
        const Complex d = g.wavenumber(i) * u[0].coeffs()[idx] +
                          g.wavenumber(j) * u[1].coeffs()[idx] +
                          g.wavenumber(l) * u[2].coeffs()[idx];
        worst = std::max(worst, std::abs(d));
      }
  return worst;
}

/// Largest coefficient magnitude across all components.
inline double max_amplitude(const SpectralVector& u) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c)
    for (const Complex& z : u[c].coeffs()) m = std::max(m, std::abs(z));
  return m;
}

inline double max_amplitude(const SpectralScalar& f) {
  double m = 0.0;
  for (const Complex& z : f.coeffs()) m = std::max(m, std::abs(z));
  return m;
}

inline bool all_finite(const SpectralVector& u) {
  for (int c = 0; c < 3; ++c)
    for (const Complex& z : u[c].coeffs())
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace gdns
