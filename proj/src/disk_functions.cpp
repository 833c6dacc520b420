#include "wcomp/disk_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "wcomp/numerics.hpp"

namespace wcomp {

namespace {

void require_degree(int deg, const char* what) {
  if (deg < 0) {
    throw std::invalid_argument(std::string(what) + ": truncation degree must be nonnegative, got " +
                                std::to_string(deg));
  }
}

double modulus_on_circle(const DiskFunction& f, double theta) {
  return std::abs(eval(f, std::polar(1.0, theta)));
}

}  // namespace

// ---------------------------------------------------------------- TaylorPoly

TaylorPoly::TaylorPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_.push_back(cplx{0.0});
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("TaylorPoly: non-finite coefficient");
    }
  }
}

TaylorPoly TaylorPoly::constant(cplx c, int deg) {
  require_degree(deg, "TaylorPoly::constant");
  std::vector<cplx> cs(static_cast<std::size_t>(deg) + 1, cplx{0.0});
  cs[0] = c;
  return TaylorPoly(std::move(cs));
}

TaylorPoly TaylorPoly::identity(int deg) {
  if (deg < 1) {
    throw std::invalid_argument("TaylorPoly::identity: degree must be at least 1");
  }
  std::vector<cplx> cs(static_cast<std::size_t>(deg) + 1, cplx{0.0});
  cs[1] = 1.0;
  return TaylorPoly(std::move(cs));
}

cplx TaylorPoly::coeff(int k) const {
  if (k < 0 || k > degree()) {
    return cplx{0.0};
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx TaylorPoly::operator()(cplx z) const {
  cplx acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

TaylorPoly TaylorPoly::truncated(int deg) const {
  require_degree(deg, "TaylorPoly::truncated");
  std::vector<cplx> cs(static_cast<std::size_t>(deg) + 1, cplx{0.0});
  const auto n = std::min(cs.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, cs.begin());
  return TaylorPoly(std::move(cs));
}

TaylorPoly& TaylorPoly::operator+=(const TaylorPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), cplx{0.0});
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

TaylorPoly& TaylorPoly::operator-=(const TaylorPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), cplx{0.0});
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] -= rhs.coeffs_[k];
  }
  return *this;
}

TaylorPoly& TaylorPoly::operator*=(cplx s) {
  for (auto& c : coeffs_) {
    c *= s;
  }
  return *this;
}

// ----------------------------------------------------------- BlaschkeProduct

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, double rotation)
    : zeros_(std::move(zeros)), rotation_(rotation) {
  if (!std::isfinite(rotation_)) {
    throw std::invalid_argument("BlaschkeProduct: rotation must be finite");
  }
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    if (!(std::abs(zeros_[k]) < 1.0)) {
      throw std::invalid_argument("BlaschkeProduct: zero #" + std::to_string(k) +
                                  " lies outside the open unit disk");
    }
  }
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx acc = std::polar(1.0, rotation_);
  for (const auto& a : zeros_) {
    acc *= (z - a) / (1.0 - std::conj(a) * z);
  }
  return acc;
}

TaylorPoly BlaschkeProduct::to_taylor(int deg) const {
  require_degree(deg, "BlaschkeProduct::to_taylor");
  auto acc = TaylorPoly::constant(std::polar(1.0, rotation_), deg);
  for (const auto& a : zeros_) {
    // (z - a) * sum_k (conj(a) z)^k
    std::vector<cplx> factor(static_cast<std::size_t>(deg) + 1, cplx{0.0});
    const cplx ac = std::conj(a);
    cplx geometric{1.0};
    factor[0] = -a;
    for (int k = 1; k <= deg; ++k) {
      // coefficient of z^k: ac^{k-1} - a * ac^k
      const cplx next = geometric * ac;
      factor[static_cast<std::size_t>(k)] = geometric - a * next;
      geometric = next;
    }
    acc = multiply(acc, TaylorPoly(std::move(factor)), deg);
  }
  return acc;
}

// ------------------------------------------------------------------ DiskGrid

DiskGrid DiskGrid::make(int n_interior, int n_angles, int k_max, double r_max) {
  if (n_interior < 0 || n_angles < 1 || k_max < 0) {
    throw std::invalid_argument("DiskGrid::make: counts must be nonnegative with at least one angle");
  }
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw std::invalid_argument("DiskGrid::make: r_max must lie in (0,1)");
  }
  DiskGrid grid;
  for (int i = 0; i < n_interior; ++i) {
    grid.radii.push_back(r_max * static_cast<double>(i) / static_cast<double>(n_interior));
  }
  grid.angles = equispaced_angles(n_angles);
  for (int k = 1; k <= k_max; ++k) {
    grid.boundary_radii.push_back(1.0 - std::ldexp(1.0, -k));
  }
  return grid;
}

DiskGrid DiskGrid::circle(int n_angles) {
  DiskGrid grid;
  grid.angles = equispaced_angles(n_angles);
  return grid;
}

DiskGrid DiskGrid::interior(int n_radii, int n_angles, double r_max) {
  if (n_radii < 1 || n_angles < 1 || !(r_max >= 0.0 && r_max < 1.0)) {
    throw std::invalid_argument("DiskGrid::interior: need n_radii, n_angles >= 1 and r_max in [0,1)");
  }
  DiskGrid grid;
  for (int i = 0; i < n_radii; ++i) {
    grid.radii.push_back(n_radii == 1 ? r_max : r_max * static_cast<double>(i) / (n_radii - 1));
  }
  grid.angles = equispaced_angles(n_angles);
  return grid;
}

std::vector<double> DiskGrid::all_radii() const {
  std::vector<double> out = radii;
  out.insert(out.end(), boundary_radii.begin(), boundary_radii.end());
  return out;
}

std::vector<cplx> DiskGrid::samples() const {
  std::vector<cplx> out;
  out.reserve(sample_count());
  for (double r : all_radii()) {
    for (double t : angles) {
      out.push_back(std::polar(r, t));
    }
  }
  return out;
}

void DiskGrid::validate() const {
  const auto rs = all_radii();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (!(rs[i] >= 0.0 && rs[i] < 1.0)) {
      throw std::invalid_argument("DiskGrid: radius " + std::to_string(rs[i]) + " outside [0,1)");
    }
  }
  if (!std::is_sorted(radii.begin(), radii.end()) ||
      !std::is_sorted(boundary_radii.begin(), boundary_radii.end())) {
    throw std::invalid_argument("DiskGrid: radii must be ascending");
  }
  for (double t : angles) {
    if (!(t >= 0.0 && t < 2.0 * std::numbers::pi)) {
      throw std::invalid_argument("DiskGrid: angle " + std::to_string(t) + " outside [0, 2pi)");
    }
  }
  if (std::adjacent_find(angles.begin(), angles.end(), std::greater_equal<>()) != angles.end()) {
    throw std::invalid_argument("DiskGrid: angles must be strictly ascending");
  }
}

// ---------------------------------------------------------------- operations

cplx eval(const DiskFunction& f, cplx z) {
  return std::visit([z](const auto& g) { return g(z); }, f);
}

TaylorPoly to_taylor(const DiskFunction& f, int deg) {
  if (const auto* p = std::get_if<TaylorPoly>(&f)) {
    return p->truncated(deg);
  }
  return std::get<BlaschkeProduct>(f).to_taylor(deg);
}

TaylorPoly compose(const TaylorPoly& outer, const TaylorPoly& inner, int deg) {
  require_degree(deg, "compose");
  const auto in = inner.truncated(deg);
  auto acc = TaylorPoly::constant(outer.coeff(outer.degree()), deg);
  for (int k = outer.degree() - 1; k >= 0; --k) {
    acc = multiply(acc, in, deg);
    acc = acc + TaylorPoly::constant(outer.coeff(k), deg);
  }
  return acc;
}

TaylorPoly multiply(const TaylorPoly& f, const TaylorPoly& g, int deg) {
  require_degree(deg, "multiply");
  std::vector<cplx> out(static_cast<std::size_t>(deg) + 1, cplx{0.0});
  const int nf = std::min(f.degree(), deg);
  for (int i = 0; i <= nf; ++i) {
    const cplx fi = f.coeffs()[static_cast<std::size_t>(i)];
    if (fi == cplx{0.0}) {
      continue;
    }
    const int ng = std::min(g.degree(), deg - i);
    for (int j = 0; j <= ng; ++j) {
      out[static_cast<std::size_t>(i + j)] += fi * g.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return TaylorPoly(std::move(out));
}

TaylorPoly reciprocal(const TaylorPoly& f, int deg) {
  require_degree(deg, "reciprocal");
  const cplx f0 = f.coeff(0);
  if (f0 == cplx{0.0}) {
    throw std::domain_error("reciprocal: constant term vanishes");
  }
  std::vector<cplx> out(static_cast<std::size_t>(deg) + 1, cplx{0.0});
  out[0] = 1.0 / f0;
  for (int n = 1; n <= deg; ++n) {
    cplx acc{0.0};
    for (int k = 1; k <= std::min(n, f.degree()); ++k) {
      acc += f.coeff(k) * out[static_cast<std::size_t>(n - k)];
    }
    out[static_cast<std::size_t>(n)] = -acc / f0;
  }
  return TaylorPoly(std::move(out));
}

TaylorPoly divide(const TaylorPoly& f, const TaylorPoly& g, int deg) {
  return multiply(f, reciprocal(g, deg), deg);
}

double coeff_distance(const TaylorPoly& f, const TaylorPoly& g) {
  double worst = 0.0;
  const int n = std::max(f.degree(), g.degree());
  for (int k = 0; k <= n; ++k) {
    worst = std::max(worst, std::abs(f.coeff(k) - g.coeff(k)));
  }
  return worst;
}

double sup_norm(const DiskFunction& f, const DiskGrid& grid) {
  const auto& angles = grid.angles;
  if (angles.empty()) {
    throw std::invalid_argument("sup_norm: grid has no angles");
  }
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double v = modulus_on_circle(f, angles[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (angles.size() < 2) {
    return best_value;
  }
  const double two_pi = 2.0 * std::numbers::pi;
  const std::size_t n = angles.size();
  double lo = angles[(best + n - 1) % n];
  double hi = angles[(best + 1) % n];
  if (lo > angles[best]) lo -= two_pi;
  if (hi < angles[best]) hi += two_pi;
  const auto refined = golden_section_max([&](double t) { return modulus_on_circle(f, t); }, lo, hi, kGoldenSteps);
  return std::max(best_value, refined.value);
}

double sup_norm(const DiskFunction& f) {
  static const DiskGrid circle = DiskGrid::circle(kSupNormAngles);
  return sup_norm(f, circle);
}

SchwarzReport is_schwarz(const DiskFunction& f, const DiskGrid& grid, double tol) {
  SchwarzReport report;
  report.value_at_zero = std::abs(eval(f, cplx{0.0}));
  report.sup = sup_norm(f, grid);
  report.is_schwarz = report.value_at_zero <= tol && report.sup <= 1.0 + tol;
  return report;
}

SchwarzReport is_schwarz(const DiskFunction& f, double tol) {
  static const DiskGrid circle = DiskGrid::circle(kSupNormAngles);
  return is_schwarz(f, circle, tol);
}

TaylorPoly random_schwarz(std::uint64_t seed, int deg, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) {
    throw std::invalid_argument("random_schwarz: margin must lie in (0,1)");
  }
  if (deg < 1) {
    throw std::invalid_argument("random_schwarz: degree must be at least 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> cs(static_cast<std::size_t>(deg) + 1, cplx{0.0});
  for (int k = 1; k <= deg; ++k) {
    cs[static_cast<std::size_t>(k)] = cplx{normal(rng), normal(rng)} / static_cast<double>(k);
  }
  TaylorPoly g(std::move(cs));
  const double s = sup_norm(g);
  if (s == 0.0) {
    return TaylorPoly::identity(deg) * (1.0 - margin);
  }
  return g * ((1.0 - margin) / s);
}

BlaschkeProduct random_blaschke(std::uint64_t seed, int n_zeros, double max_modulus) {
  if (n_zeros < 1) {
    throw std::invalid_argument("random_blaschke: need at least one zero");
  }
  if (!(max_modulus >= 0.0 && max_modulus < 1.0)) {
    throw std::invalid_argument("random_blaschke: max_modulus must lie in [0,1)");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> zeros{cplx{0.0}};
  for (int k = 1; k < n_zeros; ++k) {
    zeros.push_back(std::polar(max_modulus * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng)));
  }
  return BlaschkeProduct(std::move(zeros), 2.0 * std::numbers::pi * unit(rng));
}

}  // namespace wcomp
