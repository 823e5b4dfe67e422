#pragma once

#include <cmath>
#include <stdexcept>

#include "gdns/operators.hpp"
#include "gdns/transform.hpp"

namespace gdns {

/// Parameters (a, sigma, s) of the Gevrey-Sobolev weight
/// (1 + |k|^2)^s exp(2 a |k|^(1/sigma)).
struct GevreyParams {
  double a = 0.0;
  double sigma = 2.0;
  double s = 1.0;

  void validate() const {
    if (a < 0.0) throw std::invalid_argument("GevreyParams: a must be >= 0");
    if (!(sigma > 1.0))
      throw std::invalid_argument("GevreyParams: sigma must be > 1");
  }
};

enum class NormKind { L2, Hs, HsDot, Gevrey, FourierL1, Linf };

struct NormValue {
  NormKind kind;
  double value;
  operator double() const { return value; }
};

// All norms are plain lattice sums over Fourier coefficients; no continuous
// (2*pi)^3 volume factors. The homogeneous weight |k|^(2s) excludes the k = 0
// mode, so constants vanish under every HsDot norm. The one convention is
// used on both sides of every inequality in this library.

namespace detail {

template <typename W>
double weighted_l2(const SpectralScalar& f, W&& weight) {
  const Grid& g = f.grid();
  const int n = g.n();
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double w = weight(g.k_squared(i, j, l));
        if (w == 0.0) continue;
        sum += w * std::norm(f.coeffs()[g.index(i, j, l)]);
      }
  return sum;
}

template <typename W>
double weighted_l2(const SpectralVector& u, W&& weight) {
  return weighted_l2(u[0], weight) + weighted_l2(u[1], weight) +
         weighted_l2(u[2], weight);
}

template <typename W>
double weighted_inner_scalar(const SpectralScalar& u, const SpectralScalar& v,
                             W&& weight) {
  if (u.grid() != v.grid())
    throw std::invalid_argument("inner product: grid mismatch");
  const Grid& g = u.grid();
  const int n = g.n();
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double w = weight(g.k_squared(i, j, l));
        if (w == 0.0) continue;
        const std::size_t idx = g.index(i, j, l);
        sum += w * (u.coeffs()[idx] * std::conj(v.coeffs()[idx])).real();
      }
  return sum;
}

inline double sobolev_weight(double k2, double s, bool homogeneous) {
  if (homogeneous) return k2 == 0.0 ? 0.0 : std::pow(k2, s);
  return std::pow(1.0 + k2, s);
}

}  // namespace detail

template <typename F>
NormValue l2_norm(const F& f) {
  return {NormKind::L2,
          std::sqrt(detail::weighted_l2(f, [](double) { return 1.0; }))};
}

/// Sobolev norm of order s: weight (1 + |k|^2)^s, or |k|^(2s) with the zero
/// mode excluded when homogeneous.
template <typename F>
NormValue sobolev_norm(const F& f, double s, bool homogeneous) {
  const double sum = detail::weighted_l2(
      f, [s, homogeneous](double k2) {
        return detail::sobolev_weight(k2, s, homogeneous);
      });
  return {homogeneous ? NormKind::HsDot : NormKind::Hs, std::sqrt(sum)};
}

/// Gevrey-Sobolev norm. Computed as one fused lattice sum; it agrees with
/// sobolev_norm(gevrey_multiplier(f, a, 1/sigma), s, false) by construction.
template <typename F>
NormValue gevrey_sobolev_norm(const F& f, const GevreyParams& p,
                              double exponent_cap = kDefaultExponentCap) {
  p.validate();
  const double rho = 1.0 / p.sigma;
  detail::check_gevrey_args(f.grid(), p.a, rho, exponent_cap);
  const double a = p.a, s = p.s;
  const double sum = detail::weighted_l2(f, [a, rho, s](double k2) {
    return std::pow(1.0 + k2, s) * std::exp(2.0 * a * std::pow(k2, 0.5 * rho));
  });
  return {NormKind::Gevrey, std::sqrt(sum)};
}

/// H^s inner product (or homogeneous variant); real by Hermitian symmetry.
inline double sobolev_inner(const SpectralScalar& u, const SpectralScalar& v,
                            double s, bool homogeneous) {
  return detail::weighted_inner_scalar(u, v, [s, homogeneous](double k2) {
    return detail::sobolev_weight(k2, s, homogeneous);
  });
}

inline double sobolev_inner(const SpectralVector& u, const SpectralVector& v,
                            double s, bool homogeneous) {
  double sum = 0.0;
  for (int c = 0; c < 3; ++c) sum += sobolev_inner(u[c], v[c], s, homogeneous);
  return sum;
}

/// Inner product of H^s_{a,sigma}; reduces to the H^s product at a = 0.
template <typename F>
double gevrey_sobolev_inner(const F& u, const F& v, const GevreyParams& p,
                            double exponent_cap = kDefaultExponentCap) {
  p.validate();
  const double rho = 1.0 / p.sigma;
  detail::check_gevrey_args(u.grid(), p.a, rho, exponent_cap);
  const double a = p.a, s = p.s;
  auto weight = [a, rho, s](double k2) {
    return std::pow(1.0 + k2, s) * std::exp(2.0 * a * std::pow(k2, 0.5 * rho));
  };
  if constexpr (std::is_same_v<F, SpectralScalar>) {
    return detail::weighted_inner_scalar(u, v, weight);
  } else {
    double sum = 0.0;
    for (int c = 0; c < 3; ++c)
      sum += detail::weighted_inner_scalar(u[c], v[c], weight);
    return sum;
  }
}

/// sum_k |c(k)|, the Fourier L1 norm. Dominates the sup norm of the field.
inline NormValue fourier_l1(const SpectralScalar& f) {
  double sum = 0.0;
  for (const Complex& z : f.coeffs()) sum += std::abs(z);
  return {NormKind::FourierL1, sum};
}

/// Collocation-grid maximum of |f|. The oversampling gap is quantified in
/// tests; the grid max is what diagnostics use.
inline NormValue linf_norm(const SpectralScalar& f) {
  double m = 0.0;
  for (double v : transform_inverse(f)) m = std::max(m, std::abs(v));
  return {NormKind::Linf, m};
}

}  // namespace gdns
