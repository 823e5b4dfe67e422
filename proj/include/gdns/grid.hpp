#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace gdns {

/// Periodic box discretization: n modes per axis on a cube of side L.
///
/// Storage index j in [0, n) maps to the signed mode index j for j < n/2 and
/// j - n otherwise, so the per-axis lattice is {-n/2, ..., n/2 - 1}. Physical
/// wavenumbers carry the 2*pi/L factor. The -n/2 row has no conjugate partner
/// on the lattice; fields zero it on construction (see SpectralScalar).
class Grid {
 public:
  Grid() = default;

  static Grid make(int n, double box_length) {
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("Grid: n must be even and >= 4");
    if (!(box_length > 0.0))
      throw std::invalid_argument("Grid: box_length must be positive");
    return Grid(n, box_length);
  }

  int n() const { return n_; }
  double box_length() const { return box_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  /// Signed integer mode index for storage index j.
  int mode_index(int j) const { return j < n_ / 2 ? j : j - n_; }

  /// Physical wavenumber component (2*pi/L times the signed index).
  double wavenumber(int j) const { return k_unit_ * mode_index(j); }

  double k_unit() const { return k_unit_; }
  double dx() const { return box_ / n_; }

  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + l;
  }

  double k_squared(int i, int j, int l) const {
    const double a = wavenumber(i), b = wavenumber(j), c = wavenumber(l);
    return a * a + b * b + c * c;
  }

  double k_mag(int i, int j, int l) const {
    return std::sqrt(k_squared(i, j, l));
  }

  /// Largest wavenumber magnitude anywhere on the lattice (Nyquist corner).
  double k_max() const { return std::sqrt(3.0) * k_unit_ * (n_ / 2); }

  /// Dealiasing band edge: per-axis indices with 3*|m| > n are discarded.
  int dealias_band() const { return n_ / 3; }

  bool is_nyquist_row(int j) const { return mode_index(j) == -n_ / 2; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.box_ == b.box_;
  }
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

 private:
  Grid(int n, double box)
      : n_(n), box_(box), k_unit_(2.0 * std::numbers::pi / box) {}

  int n_ = 0;
  double box_ = 0.0;
  double k_unit_ = 0.0;
};

inline Grid make_grid(int n, double box_length) {
  return Grid::make(n, box_length);
}

}  // namespace gdns
