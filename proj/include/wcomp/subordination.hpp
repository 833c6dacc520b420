#pragma once

// The class P_alpha of functions subordinate to h_alpha(z) = (1 + alpha z)/(1 - z),
// equivalently f(0) = 1 with f(D) inside the half-plane
// H_alpha = { w : 2 Re[(1 + conj(alpha)) w] > 1 - |alpha|^2 }.

#include <cstdint>
#include <vector>

#include "wcomp/disk_functions.hpp"

namespace wcomp {

// Class parameter with |alpha| <= 1 and alpha != -1.
class AlphaParam {
 public:
  explicit AlphaParam(cplx alpha);
  AlphaParam(double re, double im) : AlphaParam(cplx{re, im}) {}

  cplx value() const { return alpha_; }
  double re() const { return alpha_.real(); }
  double im() const { return alpha_.imag(); }
  bool is_real(double tol = 1e-12) const { return std::abs(alpha_.imag()) <= tol; }

  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

 private:
  cplx alpha_;
};

// Slack allowed on |alpha| <= 1 so that e^{i t} built in floating point is accepted.
inline constexpr double kAlphaModulusSlack = 1e-12;

struct MembershipReport {
  bool is_member = false;
  cplx value_at_zero{0.0};
  double worst_halfplane_slack = 0.0;
  cplx witness{0.0};
};

struct CoefficientBoundReport {
  // max_{n>=1} |a_n| - |1 + alpha|; nonpositive for members.
  double max_excess = 0.0;
  int worst_index = 0;
  bool holds(double tol = kDefaultTol) const { return max_excess <= tol; }
};

struct GrowthReport {
  // min over samples of |f(z)| - (1 - |alpha z|)/(1 + |z|)
  double lower_slack = 0.0;
  cplx lower_witness{0.0};
  // min over samples of (1 + |alpha z|)/(1 - |z|) - |f(z)|
  double upper_slack = 0.0;
  cplx upper_witness{0.0};
  bool holds(double tol = kDefaultTol) const { return lower_slack >= -tol && upper_slack >= -tol; }
};

cplx h_alpha(const AlphaParam& alpha, cplx z);
cplx h_alpha_inv(const AlphaParam& alpha, cplx w);

// 2 Re{(1 + conj(alpha)) w} - (1 - |alpha|^2); positive iff w lies in H_alpha.
double halfplane_contains(const AlphaParam& alpha, cplx w);

// Series of h_alpha o omega through order deg. omega must be Schwarz.
TaylorPoly member_from_schwarz(const AlphaParam& alpha, const DiskFunction& omega, int deg = kDefaultDegree);
// The unique Schwarz omega = (f - 1)/(f + alpha) with f = h_alpha o omega.
TaylorPoly schwarz_from_member(const AlphaParam& alpha, const TaylorPoly& f, int deg = kDefaultDegree);

// Grid used for sampled membership of truncated series: radii in [0, 0.9],
// where the tail of a degree-64 member series is far below the default tolerance
// for symbols bounded away from the unit circle.
DiskGrid member_grid();

MembershipReport check_membership(const AlphaParam& alpha, const TaylorPoly& f, const DiskGrid& grid,
                                  double tol = kDefaultTol);

CoefficientBoundReport coefficient_bound_check(const AlphaParam& alpha, const TaylorPoly& f);

GrowthReport growth_bound_check(const AlphaParam& alpha, const TaylorPoly& f, const DiskGrid& grid);

// f_lambda(z) = (1 + alpha lambda z)/(1 - lambda z) through order deg.
TaylorPoly extreme_point(const AlphaParam& alpha, cplx lambda, int deg = kDefaultDegree);

inline constexpr int kHardyQuadraturePoints = 2048;

// (1/2pi) int_0^{2pi} |f(r e^{it})|^p dt for each r, by the trapezoid rule.
std::vector<double> hardy_mean_profile(const TaylorPoly& f, double p, const std::vector<double>& radii);

// Deterministic draw from the closed unit disk, kept at least `gap` away from -1.
AlphaParam random_alpha(std::uint64_t seed, double gap = 0.05);

}  // namespace wcomp
