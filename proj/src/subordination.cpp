#include "wcomp/subordination.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wcomp/numerics.hpp"

namespace wcomp {

AlphaParam::AlphaParam(cplx alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw std::invalid_argument("alpha must be finite");
  }
  if (std::abs(alpha) > 1.0 + kAlphaModulusSlack) {
    std::ostringstream msg;
    msg << "alpha must satisfy |alpha| <= 1, got |alpha| = " << std::abs(alpha);
    throw std::invalid_argument(msg.str());
  }
  if (alpha == cplx{-1.0, 0.0}) {
    throw std::invalid_argument("alpha = -1 is excluded (h_alpha degenerates to the constant -1)");
  }
}

cplx h_alpha(const AlphaParam& alpha, cplx z) {
  if (z == cplx{1.0}) {
    throw std::domain_error("h_alpha: z = 1 is a pole");
  }
  return (1.0 + alpha.value() * z) / (1.0 - z);
}

cplx h_alpha_inv(const AlphaParam& alpha, cplx w) {
  if (w + alpha.value() == cplx{0.0}) {
    throw std::domain_error("h_alpha_inv: w = -alpha is not in the range of h_alpha");
  }
  return (w - 1.0) / (w + alpha.value());
}

double halfplane_contains(const AlphaParam& alpha, cplx w) {
  const cplx a = alpha.value();
  return 2.0 * ((1.0 + std::conj(a)) * w).real() - (1.0 - std::norm(a));
}

TaylorPoly member_from_schwarz(const AlphaParam& alpha, const DiskFunction& omega, int deg) {
  const auto report = is_schwarz(omega);
  if (!report.is_schwarz) {
    std::ostringstream msg;
    msg << "member_from_schwarz: omega is not a Schwarz function (|omega(0)| = " << report.value_at_zero
        << ", sup = " << report.sup << ")";
    throw std::invalid_argument(msg.str());
  }
  auto w = to_taylor(omega, deg);
  // omega(0) is zero up to tolerance; pin it so the constant term is exactly 1.
  auto cs = w.coeffs();
  cs[0] = 0.0;
  w = TaylorPoly(std::move(cs));
  const auto numer = TaylorPoly::constant(1.0, deg) + alpha.value() * w;
  const auto denom = TaylorPoly::constant(1.0, deg) - w;
  return divide(numer, denom, deg);
}

TaylorPoly schwarz_from_member(const AlphaParam& alpha, const TaylorPoly& f, int deg) {
  if (std::abs(f.coeff(0) - 1.0) > kDefaultTol) {
    std::ostringstream msg;
    msg << "schwarz_from_member: f(0) must equal 1, got " << f.coeff(0);
    throw std::invalid_argument(msg.str());
  }
  const auto f_deg = f.truncated(deg);
  const auto numer = f_deg - TaylorPoly::constant(1.0, deg);
  const auto denom = f_deg + TaylorPoly::constant(alpha.value(), deg);
  if (denom.coeff(0) == cplx{0.0}) {
    throw std::domain_error("schwarz_from_member: f + alpha has vanishing constant term");
  }
  auto w = divide(numer, denom, deg);
  auto cs = w.coeffs();
  cs[0] = 0.0;
  return TaylorPoly(std::move(cs));
}

DiskGrid member_grid() { return DiskGrid::interior(16, 256, 0.9); }

MembershipReport check_membership(const AlphaParam& alpha, const TaylorPoly& f, const DiskGrid& grid,
                                  double tol) {
  MembershipReport report;
  report.value_at_zero = f(cplx{0.0});
  report.worst_halfplane_slack = std::numeric_limits<double>::infinity();
  for (const auto& z : grid.samples()) {
    const double slack = halfplane_contains(alpha, f(z));
    if (slack < report.worst_halfplane_slack) {
      report.worst_halfplane_slack = slack;
      report.witness = z;
    }
  }
  report.is_member = std::abs(report.value_at_zero - 1.0) <= tol && report.worst_halfplane_slack > -tol;
  return report;
}

CoefficientBoundReport coefficient_bound_check(const AlphaParam& alpha, const TaylorPoly& f) {
  CoefficientBoundReport report;
  const double bound = std::abs(1.0 + alpha.value());
  report.max_excess = -bound;
  for (int n = 1; n <= f.degree(); ++n) {
    const double excess = std::abs(f.coeff(n)) - bound;
    if (excess > report.max_excess || n == 1) {
      report.max_excess = excess;
      report.worst_index = n;
    }
  }
  return report;
}

GrowthReport growth_bound_check(const AlphaParam& alpha, const TaylorPoly& f, const DiskGrid& grid) {
  GrowthReport report;
  report.lower_slack = std::numeric_limits<double>::infinity();
  report.upper_slack = std::numeric_limits<double>::infinity();
  const double a = std::abs(alpha.value());
  for (const auto& z : grid.samples()) {
    const double r = std::abs(z);
    const double value = std::abs(f(z));
    const double lower = (1.0 - a * r) / (1.0 + r);
    const double upper = (1.0 + a * r) / (1.0 - r);
    if (value - lower < report.lower_slack) {
      report.lower_slack = value - lower;
      report.lower_witness = z;
    }
    if (upper - value < report.upper_slack) {
      report.upper_slack = upper - value;
      report.upper_witness = z;
    }
  }
  return report;
}

TaylorPoly extreme_point(const AlphaParam& alpha, cplx lambda, int deg) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "extreme_point: lambda must be unimodular, got |lambda| = " << std::abs(lambda);
    throw std::invalid_argument(msg.str());
  }
  if (deg < 0) {
    throw std::invalid_argument("extreme_point: truncation degree must be nonnegative");
  }
  std::vector<cplx> cs(static_cast<std::size_t>(deg) + 1);
  cs[0] = 1.0;
  const cplx scale = 1.0 + alpha.value();
  cplx power{1.0};
  for (int n = 1; n <= deg; ++n) {
    power *= lambda;
    cs[static_cast<std::size_t>(n)] = scale * power;
  }
  return TaylorPoly(std::move(cs));
}

std::vector<double> hardy_mean_profile(const TaylorPoly& f, double p, const std::vector<double>& radii) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("hardy_mean_profile: exponent p must lie in (0,1)");
  }
  const auto angles = equispaced_angles(kHardyQuadraturePoints);
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw std::invalid_argument("hardy_mean_profile: radii must lie in [0,1)");
    }
    // Periodic integrand: the trapezoid rule is the plain mean.
    double sum = 0.0;
    for (double t : angles) {
      sum += std::pow(std::abs(f(std::polar(r, t))), p);
    }
    out.push_back(sum / static_cast<double>(angles.size()));
  }
  return out;
}

AlphaParam random_alpha(std::uint64_t seed, double gap) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const double r = std::sqrt(unit(rng));
    const double t = 2.0 * std::numbers::pi * unit(rng);
    const cplx a = std::polar(r, t);
    if (std::abs(a + 1.0) >= gap) {
      return AlphaParam(a);
    }
  }
}

}  // namespace wcomp
