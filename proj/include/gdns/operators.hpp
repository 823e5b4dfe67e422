#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "gdns/errors.hpp"
#include "gdns/field.hpp"

namespace gdns {

inline constexpr double kDefaultExponentCap = 60.0;

/// Scales every coefficient by m(|k|). The multiplier must be finite at all
/// lattice magnitudes; real radial multipliers preserve Hermitian symmetry.
template <std::invocable<double> M>
SpectralScalar apply_multiplier(const SpectralScalar& f, M&& m) {
  const Grid& g = f.grid();
  const int n = g.n();
  SpectralScalar out = f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double factor = m(g.k_mag(i, j, l));
        if (!std::isfinite(factor))
          throw numeric_error("apply_multiplier: non-finite multiplier at |k| = " +
                              std::to_string(g.k_mag(i, j, l)));
        out.coeffs()[g.index(i, j, l)] *= factor;
      }
  return out;
}

template <std::invocable<double> M>
SpectralVector apply_multiplier(const SpectralVector& u, M&& m) {
  SpectralVector out(apply_multiplier(u[0], m), apply_multiplier(u[1], m),
                     apply_multiplier(u[2], m));
  out.set_divergence_free(u.divergence_free());
  return out;
}

namespace detail {
inline void check_gevrey_args(const Grid& g, double tau, double rho,
                              double exponent_cap) {
  if (tau < 0.0) throw std::invalid_argument("gevrey_multiplier: tau must be >= 0");
  if (!(rho > 0.0) || rho > 1.0)
    throw std::invalid_argument("gevrey_multiplier: rho must lie in (0, 1]");
  const double worst = tau * std::pow(g.k_max(), rho);
  if (worst > exponent_cap)
    throw numeric_error("gevrey_multiplier: exponent " + std::to_string(worst) +
                        " exceeds cap " + std::to_string(exponent_cap) +
                        " (tau = " + std::to_string(tau) + ")");
}
}  // namespace detail

/// exp(tau |k|^rho) multiplier. rho = 1 weights by a strip of analyticity of
/// width tau; rho = 1/sigma gives the Gevrey-class weight. Guarded by an
/// exponent cap: exceeding it is a hard error, not a silent clamp.
inline SpectralScalar gevrey_multiplier(const SpectralScalar& f, double tau,
                                        double rho,
                                        double exponent_cap = kDefaultExponentCap) {
  detail::check_gevrey_args(f.grid(), tau, rho, exponent_cap);
  return apply_multiplier(
      f, [tau, rho](double r) { return std::exp(tau * std::pow(r, rho)); });
}

inline SpectralVector gevrey_multiplier(const SpectralVector& u, double tau,
                                        double rho,
                                        double exponent_cap = kDefaultExponentCap) {
  detail::check_gevrey_args(u.grid(), tau, rho, exponent_cap);
  return apply_multiplier(
      u, [tau, rho](double r) { return std::exp(tau * std::pow(r, rho)); });
}

/// d/dx_axis as the i*k_axis multiplier. Exactly antisymmetric because the
/// Nyquist rows are zero.
inline SpectralScalar derivative(const SpectralScalar& f, int axis) {
  const Grid& g = f.grid();
  const int n = g.n();
  SpectralScalar out = f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double k = axis == 0 ? g.wavenumber(i)
                       : axis == 1 ? g.wavenumber(j)
                                   : g.wavenumber(l);
        out.coeffs()[g.index(i, j, l)] *= Complex(0.0, k);
      }
  return out;
}

inline SpectralScalar divergence(const SpectralVector& u) {
  const Grid& g = u.grid();
  const int n = g.n();
  SpectralScalar out(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const std::size_t idx = g.index(i, j, l);
        const Complex d = g.wavenumber(i) * u[0].coeffs()[idx] +
                          g.wavenumber(j) * u[1].coeffs()[idx] +
                          g.wavenumber(l) * u[2].coeffs()[idx];
        out.coeffs()[idx] = Complex(0.0, 1.0) * d;
      }
  return out;
}

/// Orthogonal projection onto divergence-free fields,
/// u(k) <- u(k) - k (k.u(k)) / |k|^2, mean mode passed through unchanged.
/// Idempotent; eliminates the pressure.
inline SpectralVector leray_project(const SpectralVector& u) {
  const Grid& g = u.grid();
  const int n = g.n();
  SpectralVector out = u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double k1 = g.wavenumber(i), k2 = g.wavenumber(j),
                     k3 = g.wavenumber(l);
        const double k2sum = k1 * k1 + k2 * k2 + k3 * k3;
        if (k2sum == 0.0) continue;
        const std::size_t idx = g.index(i, j, l);
        const Complex kdotu = k1 * out[0].coeffs()[idx] +
                              k2 * out[1].coeffs()[idx] +
                              k3 * out[2].coeffs()[idx];
        const Complex s = kdotu / k2sum;
        out[0].coeffs()[idx] -= k1 * s;
        out[1].coeffs()[idx] -= k2 * s;
        out[2].coeffs()[idx] -= k3 * s;
      }
  out.set_divergence_free(true);
  return out;
}

namespace detail {
// The tie |k| = delta belongs to the high-frequency part: the low indicator
// is the strict 1_{|k| < delta}.
inline SpectralScalar frequency_part(const SpectralScalar& f, double delta,
                                     bool low) {
  if (!(delta > 0.0)) throw std::invalid_argument("frequency split: delta must be > 0");
  const Grid& g = f.grid();
  const int n = g.n();
  SpectralScalar out = f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const bool is_low = g.k_mag(i, j, l) < delta;
        if (is_low != low) out.coeffs()[g.index(i, j, l)] = Complex(0.0, 0.0);
      }
  return out;
}
}  // namespace detail

inline SpectralScalar low_pass(const SpectralScalar& f, double delta) {
  return detail::frequency_part(f, delta, true);
}

inline SpectralScalar high_pass(const SpectralScalar& f, double delta) {
  return detail::frequency_part(f, delta, false);
}

inline SpectralVector low_pass(const SpectralVector& u, double delta) {
  SpectralVector out(low_pass(u[0], delta), low_pass(u[1], delta),
                     low_pass(u[2], delta));
  out.set_divergence_free(u.divergence_free());
  return out;
}

inline SpectralVector high_pass(const SpectralVector& u, double delta) {
  SpectralVector out(high_pass(u[0], delta), high_pass(u[1], delta),
                     high_pass(u[2], delta));
  out.set_divergence_free(u.divergence_free());
  return out;
}

/// Two-thirds truncation: zeroes every mode whose signed index exceeds n/3 in
/// magnitude on any axis (3|m| > n, evaluated in integers). Idempotent.
inline SpectralScalar dealias(const SpectralScalar& f) {
  const Grid& g = f.grid();
  const int n = g.n();
  SpectralScalar out = f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const int mi = g.mode_index(i), mj = g.mode_index(j),
                  ml = g.mode_index(l);
        if (3 * std::abs(mi) > n || 3 * std::abs(mj) > n || 3 * std::abs(ml) > n)
          out.coeffs()[g.index(i, j, l)] = Complex(0.0, 0.0);
      }
  return out;
}

inline SpectralVector dealias(const SpectralVector& u) {
  SpectralVector out(dealias(u[0]), dealias(u[1]), dealias(u[2]));
  out.set_divergence_free(u.divergence_free());
  return out;
}

}  // namespace gdns
