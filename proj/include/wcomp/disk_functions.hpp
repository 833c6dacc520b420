#pragma once

// Analytic functions on the unit disk: truncated power series and finite
// Blaschke products, with the arithmetic needed to build weights and
// compositions, and boundary-sampled sup-norm estimates.

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

namespace wcomp {

using cplx = std::complex<double>;

inline constexpr int kDefaultDegree = 64;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kSupNormAngles = 4096;
inline constexpr int kGoldenSteps = 40;

// Polynomial c_0 + c_1 z + ... + c_N z^N. Trailing zeros are kept so that the
// degree reflects the truncation order the caller asked for.
class TaylorPoly {
 public:
  TaylorPoly() : coeffs_{cplx{0.0}} {}
  explicit TaylorPoly(std::vector<cplx> coeffs);

  static TaylorPoly constant(cplx c, int deg = 0);
  // z, padded with zeros up to deg.
  static TaylorPoly identity(int deg = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  // Zero beyond the stored degree.
  cplx coeff(int k) const;

  cplx operator()(cplx z) const;

  // Copy truncated (or zero-padded) to exactly deg+1 coefficients.
  TaylorPoly truncated(int deg) const;

  TaylorPoly& operator+=(const TaylorPoly& rhs);
  TaylorPoly& operator-=(const TaylorPoly& rhs);
  TaylorPoly& operator*=(cplx s);

  friend TaylorPoly operator+(TaylorPoly lhs, const TaylorPoly& rhs) { return lhs += rhs; }
  friend TaylorPoly operator-(TaylorPoly lhs, const TaylorPoly& rhs) { return lhs -= rhs; }
  friend TaylorPoly operator*(TaylorPoly lhs, cplx s) { return lhs *= s; }
  friend TaylorPoly operator*(cplx s, TaylorPoly rhs) { return rhs *= s; }
  friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

 private:
  std::vector<cplx> coeffs_;
};

// B(z) = e^{i rotation} * prod_k (z - a_k) / (1 - conj(a_k) z), all |a_k| < 1.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<cplx> zeros, double rotation = 0.0);

  const std::vector<cplx>& zeros() const { return zeros_; }
  double rotation() const { return rotation_; }

  cplx operator()(cplx z) const;

  // Taylor coefficients about 0 through order deg.
  TaylorPoly to_taylor(int deg) const;

  friend bool operator==(const BlaschkeProduct&, const BlaschkeProduct&) = default;

 private:
  std::vector<cplx> zeros_;
  double rotation_;
};

using DiskFunction = std::variant<TaylorPoly, BlaschkeProduct>;

// Sample points for the disk. Interior radii and the boundary-approaching
// sequence are kept apart so that callers can treat them differently, but
// samples() walks both.
struct DiskGrid {
  std::vector<double> radii;
  std::vector<double> angles;
  std::vector<double> boundary_radii;

  // Equispaced angles, `n_interior` radii equispaced in [0, r_max), and
  // boundary radii 1 - 2^{-k} for k = 1..k_max.
  static DiskGrid make(int n_interior, int n_angles, int k_max, double r_max = 0.5);
  // Only the angle set, for boundary-circle scans.
  static DiskGrid circle(int n_angles = kSupNormAngles);
  // Interior grid with radii equispaced in [0, r_max] (r_max included).
  static DiskGrid interior(int n_radii, int n_angles, double r_max);

  // All radii in ascending order (interior followed by boundary).
  std::vector<double> all_radii() const;
  std::vector<cplx> samples() const;
  std::size_t sample_count() const { return (radii.size() + boundary_radii.size()) * angles.size(); }
  bool empty() const { return angles.empty() || (radii.empty() && boundary_radii.empty()); }

  // Throws std::invalid_argument if radii are out of [0,1) or unsorted.
  void validate() const;
};

cplx eval(const DiskFunction& f, cplx z);
TaylorPoly to_taylor(const DiskFunction& f, int deg);

// outer(inner(z)) through order deg, by Horner's scheme on series.
TaylorPoly compose(const TaylorPoly& outer, const TaylorPoly& inner, int deg);
// Cauchy product through order deg.
TaylorPoly multiply(const TaylorPoly& f, const TaylorPoly& g, int deg);
// 1/f through order deg; f(0) must be nonzero.
TaylorPoly reciprocal(const TaylorPoly& f, int deg);
// f/g through order deg; g(0) must be nonzero.
TaylorPoly divide(const TaylorPoly& f, const TaylorPoly& g, int deg);

// Largest coefficient modulus of f - g over the union of their degrees.
double coeff_distance(const TaylorPoly& f, const TaylorPoly& g);

/// Estimate of sup_{|z|<1} |f(z)|.
///
/// By the maximum-modulus principle only the unit circle is sampled, at
/// grid.angles, and the discrete argmax is refined by golden-section search
/// over the neighbouring angle interval. Every returned value is an actual
/// modulus on the closed disk, so the estimate never exceeds the true sup.
/// For a degree-N polynomial with coefficient l1-norm S the discrete scan
/// misses the sup by at most N*S*h/2 for angular spacing h; the refinement
/// recovers it to roundoff when the argmax is isolated.
double sup_norm(const DiskFunction& f, const DiskGrid& grid);
double sup_norm(const DiskFunction& f);

struct SchwarzReport {
  bool is_schwarz = false;
  double value_at_zero = 0.0;  // |f(0)|
  double sup = 0.0;
};

// |f(0)| <= tol and sup_norm(f) <= 1 + tol.
SchwarzReport is_schwarz(const DiskFunction& f, const DiskGrid& grid, double tol = kDefaultTol);
SchwarzReport is_schwarz(const DiskFunction& f, double tol = kDefaultTol);

// Deterministic random polynomial g with g(0)=0 and sup_norm(g) = 1 - margin.
// Coefficient k is a standard complex normal divided by k, then everything is rescaled.
TaylorPoly random_schwarz(std::uint64_t seed, int deg, double margin);

// Deterministic Blaschke product with a zero at 0 (hence Schwarz), n_zeros - 1
// further zeros of modulus at most max_modulus, and a random rotation.
BlaschkeProduct random_blaschke(std::uint64_t seed, int n_zeros, double max_modulus = 0.5);

}  // namespace wcomp
